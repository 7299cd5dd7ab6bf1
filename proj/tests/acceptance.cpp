// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exit code is the number of failed criteria.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "parhiggs/report.hpp"
#include "parhiggs/stability.hpp"
#include "parhiggs/verystable.hpp"
#include "oracles.hpp"

using namespace parhiggs;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
    int failures = 0;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "    FAILED: " << what << "\n";
        }
    }
};

// ---------------------------------------------------------------------------
// 1. Equivariance: hitchin_image(t Phi) = base_scale(t, hitchin_image(Phi)),
//    100 seeded instances per group over m in {1,2}, r in {3..6}, < 30 s.
bool criterion_equivariance(Check& c) {
    const auto start = Clock::now();
    for (GroupKind g : {GroupKind::GL, GroupKind::Sp, GroupKind::SOEven, GroupKind::SOOdd}) {
        // gather the nonempty configurations over the (m, r) grid
        struct Config {
            oracles::GroupSetup setup;
            SectionSpace space;
        };
        std::vector<Config> configs;
        for (int m : {1, 2}) {
            for (int r : {3, 4, 5, 6}) {
                auto setup = oracles::make_group_setup(g, m, r, 1000 + 17 * m + r);
                if (g == GroupKind::GL) {
                    configs.push_back({std::move(setup), SectionSpace{}});
                    continue;
                }
                auto space =
                    compatible_higgs_space(setup.bundle, setup.pairing, SectionMode::Parabolic);
                if (space.dimension() > 0) configs.push_back({std::move(setup), std::move(space)});
            }
        }
        c.require(!configs.empty(), group_name(g, 0) + ": no usable configuration");
        if (configs.empty()) continue;

        SplitMix64 rng(0xACCE11ULL + static_cast<std::uint64_t>(g));
        int done = 0;
        for (std::size_t i = 0; done < 100; i = (i + 1) % configs.size()) {
            auto& cfg = configs[i];
            PolyMat phi = (g == GroupKind::GL)
                              ? oracles::random_polymat(rng, cfg.setup.bundle.rank(),
                                                        cfg.setup.bundle.curve.twist())
                              : random_element(rng, cfg.space);
            Rational t(0);
            while (t.is_zero()) t = random_rational(rng, 7, 4);
            const bool ok = equivariance_check(phi, t, g,
                                               g == GroupKind::GL ? nullptr : &cfg.setup.pairing);
            if (!ok) {
                c.require(false, group_name(g, cfg.setup.bundle.rank()) + ": instance " +
                                     std::to_string(done) + " violated equivariance");
                return c.failures == 0;
            }
            ++done;
        }
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s exceeds 30 s");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 2. Parity and Pfaffian identities: odd characteristic coefficients vanish;
//    SO(2m) has s_2m = pf^2; SO(2m+1) characteristic polynomials are divisible
//    by x. 50 seeded instances per group, exact, < 30 s.
bool criterion_parity_pfaffian(Check& c) {
    const auto start = Clock::now();
    for (GroupKind g : {GroupKind::Sp, GroupKind::SOEven, GroupKind::SOOdd}) {
        std::vector<std::pair<oracles::GroupSetup, SectionSpace>> configs;
        for (int m : {1, 2}) {
            for (int r : {4, 5}) {
                auto setup = oracles::make_group_setup(g, m, r, 2000 + 13 * m + r);
                auto space =
                    compatible_higgs_space(setup.bundle, setup.pairing, SectionMode::Parabolic);
                if (space.dimension() > 0) configs.emplace_back(std::move(setup), std::move(space));
            }
        }
        SplitMix64 rng(0xBEEF00ULL + static_cast<std::uint64_t>(g));
        int done = 0;
        for (std::size_t i = 0; done < 50; i = (i + 1) % configs.size()) {
            auto& [setup, space] = configs[i];
            const PolyMat phi = random_element(rng, space);
            const auto s = char_poly(phi);
            for (std::size_t k = 0; k < s.size(); k += 2)
                if (!s[k].is_zero()) {
                    c.require(false, group_name(g, phi.rows()) + ": odd coefficient s_" +
                                         std::to_string(k + 1) + " nonzero");
                    return c.failures == 0;
                }
            if (g == GroupKind::SOEven) {
                const auto image = hitchin_image(phi, g, &setup.pairing);
                const Poly& pf = image.coefficients.back();
                if (!(pf * pf == s.back())) {
                    c.require(false, "SO(2m): pf^2 != s_2m");
                    return c.failures == 0;
                }
            }
            if (g == GroupKind::SOOdd && !s.back().is_zero()) {
                c.require(false, "SO(2m+1): char poly not divisible by x");
                return c.failures == 0;
            }
            ++done;
        }
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s exceeds 30 s");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 3. Nilpotent cone: nilpotency_check(Phi) <=> hitchin_image(Phi) = 0, both
//    directions, on strictly triangular, diagonalizable, and random fields.
//    Matrix nilpotency (Phi^n = 0) is the independent arbiter.
bool criterion_nilpotent_cone(Check& c) {
    std::vector<PolyMat> suite;
    {
        PolyMat tri(3, 3);  // strictly triangular
        tri.at(0, 1) = Poly::variable();
        tri.at(0, 2) = Poly::constant(2);
        tri.at(1, 2) = Poly::variable() * Poly::variable();
        suite.push_back(tri);

        SplitMix64 rng(33);
        const RatMat gq = random_invertible(rng, 3);  // conjugated triangular
        const auto ginv = *gq.inverse();
        PolyMat conj(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Poly acc;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        acc += (gq.at(i, k) * ginv.at(l, j)) * tri.at(k, l);
                conj.at(i, j) = acc;
            }
        suite.push_back(conj);

        PolyMat diag(2, 2);  // diagonalizable, nonzero image
        diag.at(0, 1) = Poly::constant(1);
        diag.at(1, 0) = Poly::variable();
        suite.push_back(diag);

        PolyMat dd(3, 3);
        dd.at(0, 0) = Poly::variable();
        dd.at(1, 1) = -Poly::variable();
        suite.push_back(dd);

        suite.push_back(PolyMat(4, 4));  // zero field
        for (int it = 0; it < 20; ++it)
            suite.push_back(oracles::random_polymat(rng, 2 + static_cast<int>(rng.below(3)), 2));
    }
    for (const auto& phi : suite) {
        PolyMat power = phi;
        for (int k = 1; k < phi.rows(); ++k) power = power * phi;
        const bool truly_nilpotent = power.is_zero();
        const bool check = nilpotency_check(phi);
        const bool image_zero = hitchin_image(phi, GroupKind::GL).is_zero();
        c.require(check == truly_nilpotent, "nilpotency_check disagrees with matrix power");
        c.require(image_zero == truly_nilpotent, "hitchin_image zero-ness disagrees");
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 4. Strong vanishing: every strong-mode field over the corpus setups has all
//    Hitchin coefficients vanishing at all marked points.
bool criterion_strong_vanishing(Check& c) {
    SplitMix64 rng(44);
    int fields = 0;
    for (GroupKind g : {GroupKind::Sp, GroupKind::SOEven, GroupKind::SOOdd}) {
        for (int m : {1, 2}) {
            for (int r : {4, 5, 6}) {
                const auto setup = oracles::make_group_setup(g, m, r, 4000 + 29 * m + r);
                const auto strong =
                    compatible_higgs_space(setup.bundle, setup.pairing, SectionMode::Strong);
                for (const auto& b : strong.basis) {
                    const auto image = hitchin_image(b, g, &setup.pairing);
                    c.require(strong_vanishing_check(image, setup.bundle.curve),
                              group_name(g, b.rows()) + " r=" + std::to_string(r) +
                                  ": strong basis image does not vanish on D");
                    ++fields;
                }
                if (strong.dimension() > 0) {
                    const PolyMat phi = random_element(rng, strong);
                    const auto image = hitchin_image(phi, g, &setup.pairing);
                    c.require(strong_vanishing_check(image, setup.bundle.curve),
                              "random strong combination does not vanish on D");
                    ++fields;
                }
            }
        }
    }
    c.require(fields > 10, "corpus produced too few strong fields");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 5. Serre duality: dim W_st = r - 3 = h^1 for r = 3..8, exact, < 10 s.
bool criterion_serre(Check& c) {
    const auto start = Clock::now();
    const PairingForm p = standard_pairing(2, PairingSymmetry::Antisymmetric);
    for (int r = 3; r <= 8; ++r) {
        const auto rep = serre_duality_check(oracles::generic_sp2_bundle(r, 7000 + r), p);
        c.require(rep.dim_strong == r - 3,
                  "r=" + std::to_string(r) + ": dim W_st = " + std::to_string(rep.dim_strong));
        c.require(rep.h1 == r - 3, "r=" + std::to_string(r) + ": h1 = " + std::to_string(rep.h1));
        c.require(rep.equal, "r=" + std::to_string(r) + ": Serre identity failed");
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s exceeds 10 s");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 6. Very-stability verdicts: generic r=4 strongly very stable with the
//    finiteness certificate; the flag-aligned fixture yields a witness whose
//    scaling orbit has 10 distinct exact elements of the zero fiber; k <= 2
//    decisions agree with the grid/gcd oracle on 20 seeded instances.
bool criterion_very_stability(Check& c) {
    const PairingForm p = standard_pairing(2, PairingSymmetry::Antisymmetric);
    {
        const auto rep = very_stability_verdict(oracles::generic_sp2_bundle(4, 4242), p);
        c.require(rep.strongly_very_stable(), "generic r=4 not strongly very stable");
        bool has_finite = false;
        for (const auto& line : rep.certificate)
            if (line.find("finite") != std::string::npos) has_finite = true;
        c.require(has_finite, "finiteness certificate missing");
    }
    {
        ParabolicBundle e;
        for (int q = 0; q < 4; ++q) {
            const Rational pt(q % 2 == 0 ? q / 2 : -(q + 1) / 2);
            e.curve.points.push_back(pt);
            RatMat f = RatMat::identity(2);
            f.at(0, 1) = pt;
            e.flags.push_back(f);
            e.weights.push_back({Rational(1, 4), Rational(3, 4)});
        }
        e.splitting = {0, 0};
        const auto rep = very_stability_verdict(e, p);
        c.require(rep.strong.verdict == LocusVerdict::Witness,
                  "flag-aligned fixture did not produce a witness");
        c.require(rep.fiber_sample.size() == 10, "scaling orbit does not have 10 elements");
        for (std::size_t i = 0; i < rep.fiber_sample.size(); ++i) {
            c.require(nilpotency_check(rep.fiber_sample[i]), "orbit element not in the zero fiber");
            for (std::size_t j = i + 1; j < rep.fiber_sample.size(); ++j)
                c.require(!(rep.fiber_sample[i] == rep.fiber_sample[j]), "orbit elements collide");
        }
    }
    // k <= 2 agreement with the grid/gcd brute-force oracle
    int instances = 0;
    for (std::uint64_t seed = 1; instances < 20; ++seed) {
        const int r = 3 + static_cast<int>(seed % 3);  // r in {3,4,5}: k in {0,1,2}
        ParabolicBundle e =
            (seed % 5 == 0) ? [&] {  // mix in kernel-aligned degenerate flags
                ParabolicBundle d = oracles::generic_sp2_bundle(r, 100 + seed);
                for (int q = 0; q < r; ++q) {
                    RatMat f = RatMat::identity(2);
                    f.at(0, 1) = d.curve.points[q];
                    d.flags[q] = f;
                }
                return d;
            }()
                            : oracles::generic_sp2_bundle(r, 100 + seed);
        const auto w = compatible_higgs_space(e, p, SectionMode::Strong);
        if (w.dimension() > 2) continue;
        const auto res = nilpotent_locus_decide(w);
        bool oracle_trivial = true;
        if (w.dimension() == 1) {
            oracle_trivial = !oracles::generator_nilpotent_oracle(w.basis[0]);
        } else if (w.dimension() == 2) {
            const auto oracle = oracles::pencil_oracle_rank2(w.basis[0], w.basis[1]);
            c.require(oracle.gcd_routes_agree, "gcd routes disagree");
            oracle_trivial = oracle.trivial;
            if (!oracle.grid_witnesses.empty())
                c.require(res.verdict != LocusVerdict::Trivial,
                          "grid found a witness but the decision said Trivial");
        }
        c.require((res.verdict == LocusVerdict::Trivial) == oracle_trivial,
                  "k<=2 decision disagrees with the oracle (seed " + std::to_string(seed) + ")");
        if (res.verdict == LocusVerdict::Witness) {
            c.require(!res.witness->is_zero() && nilpotency_check(*res.witness),
                      "witness fails verification");
        }
        ++instances;
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 7. Strongly very stable => stable, on 20 seeded rank-2 instances.
bool criterion_svs_implies_stable(Check& c) {
    const PairingForm p = standard_pairing(2, PairingSymmetry::Antisymmetric);
    int svs_count = 0;
    for (int i = 0; i < 20; ++i) {
        const int r = 4 + (i % 2);
        ParabolicBundle e = oracles::generic_sp2_bundle(r, 500 + 31 * i);
        if (i % 7 == 3) e.splitting = {1, -1};  // throw in unstable splittings
        const auto rep = very_stability_verdict(e, p);
        if (rep.strong.verdict != LocusVerdict::Trivial) continue;
        ++svs_count;
        const auto st = stability_decide_rank2(e, p, nullptr);
        c.require(st.kind == StabilityKind::Stable,
                  "instance " + std::to_string(i) +
                      " is strongly very stable but not stable (verdict " +
                      stability_name(st.kind) + ")");
    }
    c.require(svs_count >= 5, "too few strongly-very-stable instances in the sample");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 8. Dimension formulas: frozen values and the Sp/SO(2m+1) equality.
bool criterion_dimensions(Check& c) {
    c.require(moduli_dimension({GroupKind::Sp, 1, 2, 1}) == 8, "Sp(2), g=2, r=1 != 8");
    c.require(moduli_dimension({GroupKind::SOEven, 2, 2, 1}) == 16, "SO(4), g=2, r=1 != 16");
    c.require(moduli_dimension({GroupKind::SOOdd, 1, 2, 0}) == 6, "SO(3), g=2, r=0 != 6");
    SplitMix64 rng(88);
    for (int it = 0; it < 10; ++it) {
        const int m = 1 + static_cast<int>(rng.below(5));
        const int g = static_cast<int>(rng.below(6));
        const int r = static_cast<int>(rng.below(7));
        c.require(moduli_dimension({GroupKind::Sp, m, g, r}) ==
                      moduli_dimension({GroupKind::SOOdd, m, g, r}),
                  "Sp/SO(2m+1) dimension equality failed");
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 9. Rank-2 stability agrees with the exhaustive oracle on >= 30 instances
//    with splitting degrees in [-3,3] and r <= 5.
bool criterion_stability_oracle(Check& c) {
    SplitMix64 rng(0x57AB);
    int tested = 0;
    while (tested < 30) {
        const int r = 1 + static_cast<int>(rng.below(5));
        const int a = 3 - static_cast<int>(rng.below(5));
        const int b = std::max(-3, a - static_cast<int>(rng.below(4)));
        ParabolicBundle e;
        for (int q = 0; q < r; ++q)
            e.curve.points.push_back(Rational(q % 2 == 0 ? q / 2 : -(q + 1) / 2));
        e.splitting = {a, b};
        for (int q = 0; q < r; ++q) {
            e.flags.push_back(random_invertible(rng, 2));
            e.weights.push_back(rng.below(2) == 0
                                    ? std::vector<Rational>{Rational(0), Rational(1, 2)}
                                    : std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
        }
        PairingForm p;
        p.symmetry = PairingSymmetry::Antisymmetric;
        p.target_degree = a + b;
        p.omega = PolyMat(2, 2);
        p.omega.at(0, 1) = Poly::constant(1);
        p.omega.at(1, 0) = Poly::constant(-1);

        const auto fast = stability_decide_rank2(e, p, nullptr);
        const auto slow = oracles::brute_force_stability(e, p, nullptr);
        c.require(fast.kind == slow,
                  "instance " + std::to_string(tested) + ": " + stability_name(fast.kind) +
                      " vs oracle " + stability_name(slow));
        ++tested;
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 10. Determinism: two corpus runs give byte-identical reports.
bool criterion_determinism(Check& c) {
    const fs::path base = fs::temp_directory_path() / "parhiggs_acceptance";
    fs::remove_all(base);
    std::vector<std::string> runs[2];
    for (int run = 0; run < 2; ++run) {
        const fs::path dir = base / ("run" + std::to_string(run));
        const auto files = emit_examples(dir.string());
        for (const auto& name : files) {
            const JobConfig cfg = load_config((dir / name).string());
            const auto t0 = Clock::now();
            runs[run].push_back(run_report(cfg));
            c.require(seconds_since(t0) < 60.0, name + " took over 60 s");
        }
    }
    c.require(runs[0].size() == runs[1].size(), "corpus sizes differ");
    for (std::size_t i = 0; i < std::min(runs[0].size(), runs[1].size()); ++i)
        c.require(runs[0][i] == runs[1][i], "report " + std::to_string(i) + " differs between runs");
    c.require(runs[0].size() >= 6, "corpus has fewer than 6 instances");
    fs::remove_all(base);
    return c.failures == 0;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "equivariance of the Hitchin maps (100 instances/group, < 30 s)", criterion_equivariance},
        {2, "parity and Pfaffian identities (50 instances/group, < 30 s)", criterion_parity_pfaffian},
        {3, "nilpotent cone: nilpotency <=> zero Hitchin image", criterion_nilpotent_cone},
        {4, "strong vanishing of coefficients at marked points", criterion_strong_vanishing},
        {5, "Serre duality dimensions for r = 3..8 (< 10 s)", criterion_serre},
        {6, "very-stability verdicts and the k <= 2 oracle", criterion_very_stability},
        {7, "strongly very stable implies stable (20 instances)", criterion_svs_implies_stable},
        {8, "moduli dimension formulas", criterion_dimensions},
        {9, "rank-2 stability vs exhaustive oracle (30 instances)", criterion_stability_oracle},
        {10, "byte-identical corpus reports", criterion_determinism},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check c;
        bool ok = false;
        std::string bail;
        try {
            ok = criterion.run(c);
        } catch (const std::exception& err) {
            ok = false;
            bail = err.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
                  << criterion.name << "\n";
        if (!ok) {
            ++failed;
            std::cout << c.detail.str();
            if (!bail.empty()) std::cout << "    exception: " << bail << "\n";
        }
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << " (" << failed
              << " of " << criteria.size() << " failed)\n";
    return failed;
}
