#include "parhiggs/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "parhiggs/forms.hpp"

namespace parhiggs {

std::vector<LineCandidate> line_subbundle_candidates(const ParabolicBundle& e,
                                                     const Rational& threshold) {
    if (e.rank() != 2) throw std::invalid_argument("line_subbundle_candidates: rank-2 only");
    const int a = e.splitting[0], b = e.splitting[1];
    const int r = e.curve.count();
    if (r > 20)
        throw std::invalid_argument("line_subbundle_candidates: incidence enumeration supports at most 20 points");

    Rational max_weight_sum(0);
    for (int p = 0; p < r; ++p) max_weight_sum += e.weights[static_cast<std::size_t>(p)][1];
    // Smallest degree that could still reach the threshold with every weight maximal.
    int e_min = b;
    while (Rational(e_min) + max_weight_sum >= threshold) --e_min;
    ++e_min;

    std::vector<int> degrees;
    for (int d = b; d >= e_min; --d) degrees.push_back(d);
    if (a > b && Rational(a) + max_weight_sum >= threshold) degrees.push_back(a);

    std::vector<LineCandidate> out;
    for (int d : degrees) {
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            LineCandidate cand;
            cand.degree = d;
            cand.value = Rational(d);
            cand.pattern.resize(static_cast<std::size_t>(r));
            for (int p = 0; p < r; ++p) {
                const bool deep = (mask >> p) & 1u;
                cand.pattern[static_cast<std::size_t>(p)] = deep;
                cand.value += e.weights[static_cast<std::size_t>(p)][deep ? 1 : 0];
            }
            if (cand.value >= threshold) out.push_back(std::move(cand));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const LineCandidate& x, const LineCandidate& y) { return x.value > y.value; });
    return out;
}

SubbundleData saturate(const std::vector<Poly>& section, const ParabolicBundle& e) {
    bool all_zero = true;
    for (const auto& s : section)
        if (!s.is_zero()) all_zero = false;
    if (all_zero) throw std::invalid_argument("saturate: zero section");
    if (section.size() != static_cast<std::size_t>(e.rank()))
        throw std::invalid_argument("saturate: section length does not match rank");

    Poly content;
    for (const auto& s : section) content = poly_gcd(content, s);
    SubbundleData f;
    f.section.reserve(section.size());
    for (const auto& s : section)
        f.section.push_back(s.is_zero() ? Poly() : Poly::exact_div(s, content));

    bool first = true;
    for (std::size_t i = 0; i < f.section.size(); ++i) {
        if (f.section[i].is_zero()) continue;
        const int slack = e.splitting[i] - f.section[i].degree();
        if (first || slack < f.degree) f.degree = slack;
        first = false;
    }
    f.incidence = subbundle_incidence(e, f.section);
    f.induced_weights = induced_subbundle_weights(e, f.section);
    return f;
}

Rational subbundle_pardeg(const SubbundleData& f) {
    Rational d(f.degree);
    for (const auto& w : f.induced_weights) d += w;
    return d;
}

bool invariance_check(const PolyMat& phi, const SubbundleData& f) {
    if (phi.rows() != 2 || phi.cols() != 2 || f.section.size() != 2)
        throw std::invalid_argument("invariance_check: rank-2 only");
    const Poly img0 = phi.at(0, 0) * f.section[0] + phi.at(0, 1) * f.section[1];
    const Poly img1 = phi.at(1, 0) * f.section[0] + phi.at(1, 1) * f.section[1];
    return (img0 * f.section[1] - img1 * f.section[0]).is_zero();
}

namespace {

// Sections of degree >= e in O(a) + O(b), as coefficient vectors
// (u_0..u_{a-e}, v_0..v_{b-e}).
struct SectionVars {
    int a, b, e;
    int u_len, v_len;

    explicit SectionVars(const ParabolicBundle& bundle, int degree)
        : a(bundle.splitting[0]), b(bundle.splitting[1]), e(degree) {
        u_len = std::max(0, a - e + 1);
        v_len = std::max(0, b - e + 1);
    }
    int count() const { return u_len + v_len; }
    std::vector<Poly> realize(const std::vector<Rational>& x) const {
        std::vector<Rational> uc(x.begin(), x.begin() + u_len);
        std::vector<Rational> vc(x.begin() + u_len, x.end());
        return {Poly(std::move(uc)), Poly(std::move(vc))};
    }
};

Poly invariance_poly(const PolyMat& phi, const std::vector<Poly>& s) {
    const Poly img0 = phi.at(0, 0) * s[0] + phi.at(0, 1) * s[1];
    const Poly img1 = phi.at(1, 0) * s[0] + phi.at(1, 1) * s[1];
    return img0 * s[1] - img1 * s[0];
}

Poly isotropy_poly(const PolyMat& omega, const std::vector<Poly>& s) {
    Poly acc;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!omega.at(i, j).is_zero()) acc += s[static_cast<std::size_t>(i)] * omega.at(i, j) * s[static_cast<std::size_t>(j)];
    return acc;
}

// Quadratic conditions a candidate section must satisfy: Phi-invariance and,
// for symmetric pairings, isotropy.
std::vector<Poly> quadratic_conditions(const PairingForm& p, const PolyMat* phi,
                                       const std::vector<Poly>& s) {
    std::vector<Poly> cond;
    if (phi != nullptr) cond.push_back(invariance_poly(*phi, s));
    if (p.symmetry == PairingSymmetry::Symmetric) cond.push_back(isotropy_poly(p.omega, s));
    return cond;
}

bool conditions_hold(const std::vector<Poly>& cond) {
    for (const auto& c : cond)
        if (!c.is_zero()) return false;
    return true;
}

// Existence of a nonzero section in the span of `gens` satisfying the
// quadratic conditions. Exact for spans of dimension <= 3; falls back to a
// deterministic grid beyond that.
std::optional<std::vector<Poly>> solve_quadratic_on_span(
    const PairingForm& p, const PolyMat* phi, const std::vector<std::vector<Poly>>& gens,
    bool* complete) {
    const std::size_t k = gens.size();
    auto section_at = [&](const std::vector<Rational>& coords) {
        std::vector<Poly> s{Poly(), Poly()};
        for (std::size_t i = 0; i < k; ++i) {
            s[0] += coords[i] * gens[i][0];
            s[1] += coords[i] * gens[i][1];
        }
        return s;
    };

    if (k == 1) {
        if (conditions_hold(quadratic_conditions(p, phi, gens[0]))) return gens[0];
        return std::nullopt;
    }
    if (k == 2) {
        std::vector<BinaryForm> forms;
        const auto q11 = quadratic_conditions(p, phi, gens[0]);
        const auto q22 = quadratic_conditions(p, phi, gens[1]);
        const auto qs = quadratic_conditions(p, phi, section_at({Rational(1), Rational(1)}));
        for (std::size_t t = 0; t < q11.size(); ++t) {
            const Poly q12 = qs[t] - q11[t] - q22[t];
            const int zmax = std::max({q11[t].degree(), q12.degree(), q22[t].degree()});
            for (int m = 0; m <= zmax; ++m) {
                BinaryForm f;
                f.hom_degree = 2;
                f.p = Poly(std::vector<Rational>{q22[t].coeff(m), q12.coeff(m), q11[t].coeff(m)});
                if (!f.is_zero()) forms.push_back(std::move(f));
            }
        }
        const auto dec = decide_binary_system(forms);
        if (dec.empty) return std::nullopt;
        if (dec.rational_point)
            return section_at({(*dec.rational_point)[0], (*dec.rational_point)[1]});
        *complete = false;
        return std::nullopt;
    }
    if (k == 3) {
        std::vector<Quad3> quadrics;
        std::vector<std::vector<Poly>> diag(3), cross(6);
        for (int i = 0; i < 3; ++i)
            diag[static_cast<std::size_t>(i)] = quadratic_conditions(p, phi, gens[static_cast<std::size_t>(i)]);
        const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        std::vector<std::vector<Poly>> cross_cond(3);
        for (int t = 0; t < 3; ++t) {
            std::vector<Rational> coords(3, Rational(0));
            coords[static_cast<std::size_t>(pairs[t][0])] = Rational(1);
            coords[static_cast<std::size_t>(pairs[t][1])] = Rational(1);
            auto qq = quadratic_conditions(p, phi, section_at(coords));
            for (std::size_t c = 0; c < qq.size(); ++c)
                qq[c] = qq[c] - diag[static_cast<std::size_t>(pairs[t][0])][c] -
                        diag[static_cast<std::size_t>(pairs[t][1])][c];
            cross_cond[static_cast<std::size_t>(t)] = std::move(qq);
        }
        const std::size_t ncond = diag[0].size();
        for (std::size_t c = 0; c < ncond; ++c) {
            int zmax = -1;
            for (int i = 0; i < 3; ++i) zmax = std::max(zmax, diag[static_cast<std::size_t>(i)][c].degree());
            for (int t = 0; t < 3; ++t) zmax = std::max(zmax, cross_cond[static_cast<std::size_t>(t)][c].degree());
            for (int m = 0; m <= zmax; ++m) {
                Quad3 q;
                q.a[0] = diag[0][c].coeff(m);
                q.a[1] = cross_cond[0][c].coeff(m);
                q.a[2] = cross_cond[1][c].coeff(m);
                q.a[3] = diag[1][c].coeff(m);
                q.a[4] = cross_cond[2][c].coeff(m);
                q.a[5] = diag[2][c].coeff(m);
                if (!q.is_zero()) quadrics.push_back(q);
            }
        }
        const auto dec = decide_quadric_system_p2(quadrics);
        if (dec.empty) return std::nullopt;
        if (dec.rational_point) return section_at(*dec.rational_point);
        *complete = false;
        return std::nullopt;
    }

    // Deterministic grid over the first few rationals; sound but not complete.
    const long grid[] = {0, 1, -1, 2, -2, 3, -3};
    std::vector<Rational> coords(k, Rational(0));
    const std::size_t grid_n = sizeof(grid) / sizeof(grid[0]);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= grid_n;
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            coords[i] = Rational(grid[c % grid_n]);
            c /= grid_n;
        }
        const auto s = section_at(coords);
        if (s[0].is_zero() && s[1].is_zero()) continue;
        if (conditions_hold(quadratic_conditions(p, phi, s))) return s;
    }
    *complete = false;
    return std::nullopt;
}

}  // namespace

StabilityVerdict stability_decide_rank2(const ParabolicBundle& e, const PairingForm& p,
                                        const PolyMat* phi) {
    if (e.rank() != 2) throw std::invalid_argument("stability_decide_rank2: rank-2 only");
    StabilityVerdict verdict;
    verdict.bundle_slope = parabolic_slope(e);
    const Rational mu = verdict.bundle_slope;
    const int r = e.curve.count();

    std::optional<SubbundleData> best;
    Rational best_pardeg;
    bool complete = true;

    auto consider = [&](const SubbundleData& f) {
        if (phi != nullptr && !invariance_check(*phi, f)) return;
        if (p.symmetry == PairingSymmetry::Symmetric && !isotropic_check(f, p)) return;
        const Rational pd = subbundle_pardeg(f);
        if (pd < mu) return;
        if (!best || pd > best_pardeg) {
            best = f;
            best_pardeg = pd;
        }
    };

    for (const auto& cand : line_subbundle_candidates(e, mu)) {
        if (cand.degree > e.splitting[1]) {
            // Only the first summand realizes this degree.
            consider(saturate({Poly::constant(1), Poly()}, e));
            continue;
        }
        SectionVars vars(e, cand.degree);
        if (vars.count() == 0) continue;
        RatMat sys(std::max(1, r), vars.count());
        int row = 0;
        for (int q = 0; q < r; ++q) {
            if (!cand.pattern[static_cast<std::size_t>(q)]) continue;
            // s(point) must lie in the deep flag step: first flag coordinate zero.
            const auto inv = e.flags[static_cast<std::size_t>(q)].inverse();
            if (!inv) throw std::invalid_argument("flag matrix not invertible");
            const Rational& pt = e.curve.points[static_cast<std::size_t>(q)];
            Rational pw(1);
            for (int mdeg = 0; mdeg < vars.u_len; ++mdeg) {
                sys.at(row, mdeg) = inv->at(0, 0) * pw;
                pw *= pt;
            }
            pw = Rational(1);
            for (int mdeg = 0; mdeg < vars.v_len; ++mdeg) {
                sys.at(row, vars.u_len + mdeg) = inv->at(0, 1) * pw;
                pw *= pt;
            }
            ++row;
        }
        const auto kernel = kernel_basis(sys);
        if (kernel.empty()) continue;

        const bool need_quadratic =
            (phi != nullptr) || (p.symmetry == PairingSymmetry::Symmetric);
        if (!need_quadratic) {
            for (const auto& x : kernel) consider(saturate(vars.realize(x), e));
            continue;
        }
        std::vector<std::vector<Poly>> gens;
        gens.reserve(kernel.size());
        for (const auto& x : kernel) gens.push_back(vars.realize(x));
        bool branch_complete = true;
        const auto found = solve_quadratic_on_span(p, phi, gens, &branch_complete);
        if (found) consider(saturate(*found, e));
        if (!branch_complete) complete = false;
    }

    verdict.search_complete = complete;
    if (!complete)
        verdict.note =
            "a quadratic existence decision fell back to grid sampling; Stable verdicts on this "
            "instance are not certified";
    if (!best) {
        verdict.kind = StabilityKind::Stable;
        return verdict;
    }
    verdict.witness = best;
    verdict.witness_pardeg = best_pardeg;
    verdict.kind = (best_pardeg > mu) ? StabilityKind::Unstable : StabilityKind::StrictlySemistable;
    return verdict;
}

}  // namespace parhiggs
