#include "parhiggs/verystable.hpp"

#include <sstream>
#include <stdexcept>

#include "parhiggs/forms.hpp"
#include "parhiggs/generators.hpp"

namespace parhiggs {

namespace {

PolyMat combine(const std::vector<PolyMat>& basis, const std::vector<Rational>& coords) {
    PolyMat acc = Rational(0) * basis.front();
    for (std::size_t i = 0; i < basis.size(); ++i) acc = acc + coords[i] * basis[i];
    return acc;
}

// gamma coefficients of s_i(c1 Phi1 + c2 Phi2) = sum_b gamma_b c1^{i-b} c2^b,
// recovered by exact interpolation at t = 0, 1, -1, 2, -2, ...
std::vector<std::vector<Poly>> pencil_char_forms(const PolyMat& phi1, const PolyMat& phi2) {
    const int n = phi1.rows();
    std::vector<Rational> ts;
    for (int k = 0; static_cast<int>(ts.size()) < n + 1; ++k) {
        ts.push_back(Rational(k == 0 ? 0 : (k % 2 == 1 ? (k + 1) / 2 : -(k / 2))));
    }
    std::vector<std::vector<Poly>> samples;  // samples[j] = char_poly(Phi1 + t_j Phi2)
    samples.reserve(ts.size());
    for (const auto& t : ts) samples.push_back(char_poly(phi1 + t * phi2));

    std::vector<std::vector<Poly>> gamma(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        RatMat vand(i + 1, i + 1);
        for (int j = 0; j <= i; ++j) {
            Rational pw(1);
            for (int b = 0; b <= i; ++b) {
                vand.at(j, b) = pw;
                pw *= ts[static_cast<std::size_t>(j)];
            }
        }
        const auto inv = vand.inverse();
        if (!inv) throw std::logic_error("pencil_char_forms: singular Vandermonde matrix");
        std::vector<Poly> g(static_cast<std::size_t>(i) + 1);
        for (int b = 0; b <= i; ++b)
            for (int j = 0; j <= i; ++j)
                g[static_cast<std::size_t>(b)] +=
                    inv->at(b, j) * samples[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
        gamma[static_cast<std::size_t>(i - 1)] = std::move(g);
    }
    return gamma;
}

NilpotentLocusResult decide_pencil(const std::vector<PolyMat>& basis) {
    NilpotentLocusResult res;
    res.method = "pencil-gcd-k2";
    const auto gamma = pencil_char_forms(basis[0], basis[1]);

    std::vector<BinaryForm> forms;
    for (std::size_t i = 1; i <= gamma.size(); ++i) {
        const auto& g = gamma[i - 1];
        int zmax = -1;
        for (const auto& p : g) zmax = std::max(zmax, p.degree());
        for (int m = 0; m <= zmax; ++m) {
            // coefficient of u^k v^{i-k} is gamma_{i-k}(z^m)
            std::vector<Rational> c(i + 1, Rational(0));
            for (std::size_t b = 0; b < g.size(); ++b) c[i - b] = g[b].coeff(m);
            BinaryForm f;
            f.hom_degree = static_cast<int>(i);
            f.p = Poly(std::move(c));
            if (!f.is_zero()) forms.push_back(std::move(f));
        }
    }

    const auto dec = decide_binary_system(forms);
    res.empty_over_closure = dec.empty;
    if (dec.empty) {
        res.verdict = LocusVerdict::Trivial;
        return res;
    }
    if (dec.rational_point) {
        res.witness_coords = *dec.rational_point;
        res.witness = combine(basis, res.witness_coords);
        res.verdict = LocusVerdict::Witness;
        return res;
    }
    res.verdict = LocusVerdict::Inconclusive;
    res.detail =
        "nilpotent locus is nonempty over the algebraic closure (common factor of the pencil "
        "forms) but no rational witness was found";
    return res;
}

NilpotentLocusResult decide_quadric(const std::vector<PolyMat>& basis, int height) {
    NilpotentLocusResult res;
    res.method = "resultant-k3";
    // Rank-2 traceless span: nilpotency is s_2(c1,c2,c3) = 0; polarize the
    // quadratic form s_2 exactly.
    std::vector<Poly> diag(3);
    for (int i = 0; i < 3; ++i) diag[static_cast<std::size_t>(i)] = char_poly(basis[static_cast<std::size_t>(i)])[1];
    std::vector<std::vector<Poly>> cross(3, std::vector<Poly>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Poly sij = char_poly(basis[static_cast<std::size_t>(i)] + basis[static_cast<std::size_t>(j)])[1];
            cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                sij - diag[static_cast<std::size_t>(i)] - diag[static_cast<std::size_t>(j)];
        }
    int zmax = -1;
    for (const auto& p : diag) zmax = std::max(zmax, p.degree());
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            zmax = std::max(zmax, cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].degree());

    std::vector<Quad3> quadrics;
    for (int m = 0; m <= zmax; ++m) {
        Quad3 q;
        q.a[0] = diag[0].coeff(m);
        q.a[1] = cross[0][1].coeff(m);
        q.a[2] = cross[0][2].coeff(m);
        q.a[3] = diag[1].coeff(m);
        q.a[4] = cross[1][2].coeff(m);
        q.a[5] = diag[2].coeff(m);
        if (!q.is_zero()) quadrics.push_back(q);
    }

    const auto dec = decide_quadric_system_p2(quadrics, height);
    res.empty_over_closure = dec.empty;
    if (dec.empty) {
        res.verdict = LocusVerdict::Trivial;
        return res;
    }
    if (dec.rational_point) {
        res.witness_coords = *dec.rational_point;
        res.witness = combine(basis, res.witness_coords);
        res.verdict = LocusVerdict::Witness;
        return res;
    }
    res.verdict = LocusVerdict::Inconclusive;
    res.detail =
        "nilpotent locus is nonempty over the algebraic closure (Macaulay rank deficit) but no "
        "rational witness was found up to the search height";
    return res;
}

NilpotentLocusResult decide_randomized(const std::vector<PolyMat>& basis, const LocusOptions& opts) {
    NilpotentLocusResult res;
    res.method = "randomized-search";
    const std::size_t k = basis.size();

    auto try_coords = [&](const std::vector<Rational>& coords) -> bool {
        bool all_zero = true;
        for (const auto& c : coords)
            if (!c.is_zero()) all_zero = false;
        if (all_zero) return false;
        const PolyMat cand = combine(basis, coords);
        if (cand.is_zero() || !nilpotency_check(cand)) return false;
        res.witness_coords = coords;
        res.witness = cand;
        res.verdict = LocusVerdict::Witness;
        return true;
    };

    // Structured probes first: basis directions and pairwise sums/differences.
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> c(k, Rational(0));
        c[i] = Rational(1);
        ++res.budget_used;
        if (try_coords(c)) return res;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (int sgn : {1, -1}) {
                std::vector<Rational> c(k, Rational(0));
                c[i] = Rational(1);
                c[j] = Rational(sgn);
                ++res.budget_used;
                if (try_coords(c)) return res;
            }

    SplitMix64 rng(opts.seed);
    for (int it = 0; it < opts.sample_budget; ++it) {
        std::vector<Rational> c(k, Rational(0));
        for (auto& x : c) x = Rational(rng.small_int(6));
        ++res.budget_used;
        if (try_coords(c)) return res;
    }
    res.verdict = LocusVerdict::Inconclusive;
    std::ostringstream os;
    os << "randomized search exhausted (" << res.budget_used << " samples, seed " << opts.seed
       << ") without finding a nilpotent element";
    res.detail = os.str();
    return res;
}

}  // namespace

NilpotentLocusResult nilpotent_locus_decide(const SectionSpace& w, const LocusOptions& opts) {
    NilpotentLocusResult res;
    const auto& basis = w.basis;
    const std::size_t k = basis.size();

    if (k == 0) {
        res.verdict = LocusVerdict::Trivial;
        res.method = "exhaustive-k0";
        res.empty_over_closure = true;
        return res;
    }
    if (k == 1) {
        res.method = "univariate-gcd-k1";
        if (nilpotency_check(basis[0])) {
            res.verdict = LocusVerdict::Witness;
            res.witness = basis[0];
            res.witness_coords = {Rational(1)};
            res.empty_over_closure = false;
        } else {
            // Every nonzero multiple of a non-nilpotent field is non-nilpotent.
            res.verdict = LocusVerdict::Trivial;
            res.empty_over_closure = true;
        }
        return res;
    }
    if (k == 2) return decide_pencil(basis);
    if (k == 3 && basis[0].rows() == 2) {
        bool traceless = true;
        for (const auto& b : basis)
            if (!b.trace().is_zero()) traceless = false;
        if (traceless) return decide_quadric(basis, opts.point_search_height);
    }
    return decide_randomized(basis, opts);
}

std::vector<PolyMat> scaling_fiber_witness(const PolyMat& phi) {
    if (phi.is_zero()) throw std::invalid_argument("scaling_fiber_witness: zero Higgs field");
    if (!nilpotency_check(phi))
        throw std::invalid_argument("scaling_fiber_witness: field is not nilpotent");
    static const std::vector<Rational> scales = {
        Rational(1),     Rational(-1), Rational(2),  Rational(-2), Rational(3),
        Rational(-3),    Rational(1, 2), Rational(-1, 2), Rational(5), Rational(7)};
    std::vector<PolyMat> orbit;
    orbit.reserve(scales.size());
    for (const auto& t : scales) {
        PolyMat m = t * phi;
        if (m.is_zero() || !nilpotency_check(m))
            throw std::logic_error("scaling_fiber_witness: orbit element failed verification");
        for (const auto& prev : orbit)
            if (prev == m) throw std::logic_error("scaling_fiber_witness: orbit elements collide");
        orbit.push_back(std::move(m));
    }
    return orbit;
}

VeryStabilityReport very_stability_verdict(const ParabolicBundle& e, const PairingForm& p,
                                           const LocusOptions& opts) {
    VeryStabilityReport rep;
    const SectionSpace w_st = compatible_higgs_space(e, p, SectionMode::Strong);
    const SectionSpace w = compatible_higgs_space(e, p, SectionMode::Parabolic);
    rep.dim_strong = w_st.dimension();
    rep.dim_parabolic = w.dimension();
    rep.strong = nilpotent_locus_decide(w_st, opts);
    rep.parabolic = nilpotent_locus_decide(w, opts);

    switch (rep.strong.verdict) {
        case LocusVerdict::Trivial:
            rep.certificate = {
                "strongly very stable: the only nilpotent strongly parabolic compatible Higgs "
                "field is 0",
                "finite: the restricted Hitchin map is given by homogeneous polynomials with "
                "zero fiber {0}, and such a map is finite",
                "proper: finite morphisms are proper",
                "quasi-finite: finite morphisms have finite fibers"};
            break;
        case LocusVerdict::Witness:
            rep.certificate = {
                "not strongly very stable: a nonzero nilpotent strongly parabolic compatible "
                "Higgs field exists",
                "not quasi-finite: the scaling orbit of the witness is an infinite subset of "
                "the zero fiber of the restricted Hitchin map",
                "not finite and not proper: both would imply quasi-finiteness"};
            rep.fiber_sample = scaling_fiber_witness(*rep.strong.witness);
            break;
        case LocusVerdict::Inconclusive:
            rep.certificate = {"inconclusive: " + rep.strong.detail};
            break;
    }
    return rep;
}

SerreReport serre_duality_check(const ParabolicBundle& e, const PairingForm& p) {
    SerreReport rep;
    const int n = e.rank();
    const int ell = p.target_degree;
    const int d = e.degree();

    rep.dim_strong = compatible_higgs_space(e, p, SectionMode::Strong).dimension();
    rep.h0 = compatible_higgs_space(e, p, SectionMode::Parabolic, 0).dimension();

    const bool antisym = p.symmetry == PairingSymmetry::Antisymmetric;
    rep.sheaf_rank = antisym ? n * (n + 1) / 2 : n * (n - 1) / 2;
    // deg(Sym^2 E (x) O(-ell)) resp. deg(Lambda^2 E (x) O(-ell)); zero when n*ell = 2d.
    int deg_bundle = antisym ? (n + 1) * d - n * (n + 1) / 2 * ell
                             : (n - 1) * d - n * (n - 1) / 2 * ell;

    // Exact per-point count of independent flag conditions on the compatible
    // endomorphism fiber.
    for (int q = 0; q < e.curve.count(); ++q) {
        const RatMat omega_p = p.omega.eval(e.curve.points[static_cast<std::size_t>(q)]);
        const RatMat& f = e.flags[static_cast<std::size_t>(q)];
        const auto finv_opt = f.inverse();
        if (!finv_opt) throw std::invalid_argument("flag matrix not invertible");
        const RatMat& finv = *finv_opt;

        // Row space over A in Q^{n x n}: first the Lie-algebra condition
        // A^T omega + omega A = 0, then additionally flag preservation.
        auto lie_rows = [&](RatMat& sys, int& row) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    for (int k = 0; k < n; ++k) {
                        sys.at(row, k * n + a) += omega_p.at(k, b);
                        sys.at(row, k * n + b) += omega_p.at(a, k);
                    }
                    ++row;
                }
        };
        RatMat lie(n * n, n * n);
        int row = 0;
        lie_rows(lie, row);
        const int dim_fiber = n * n - lie.rank();

        RatMat both(n * n + n * (n - 1) / 2, n * n);
        row = 0;
        lie_rows(both, row);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        both.at(row, i * n + j) += finv.at(a, i) * f.at(j, b);
                ++row;
            }
        const int dim_preserving = n * n - both.rank();
        rep.conditions_per_point.push_back(dim_fiber - dim_preserving);
        deg_bundle -= dim_fiber - dim_preserving;
    }

    rep.sheaf_degree = deg_bundle;
    rep.chi = rep.sheaf_degree + rep.sheaf_rank;
    rep.h1 = rep.h0 - rep.chi;
    rep.equal = (rep.h1 == rep.dim_strong);
    return rep;
}

long long moduli_dimension(const ModuliDimParams& params) {
    const long long m = params.m, g = params.g, r = params.r;
    if (m < 1 || g < 0 || r < 0)
        throw std::invalid_argument("moduli_dimension: need m >= 1, g >= 0, r >= 0");
    switch (params.group) {
        case GroupKind::Sp:
        case GroupKind::SOOdd:
            return 2 * m * (2 * m + 1) * (g - 1) + 2 * m * m * r;
        case GroupKind::SOEven:
            return 2 * m * (2 * m - 1) * (g - 1) + 2 * m * r * (m - 1);
        default:
            throw std::invalid_argument("moduli_dimension: group must be Sp, SO(2m) or SO(2m+1)");
    }
}

}  // namespace parhiggs
