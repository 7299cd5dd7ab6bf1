#ifndef PARHIGGS_VERYSTABLE_HPP
#define PARHIGGS_VERYSTABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parhiggs/hitchin.hpp"

namespace parhiggs {

enum class LocusVerdict { Trivial, Witness, Inconclusive };

inline const char* verdict_name(LocusVerdict v) {
    switch (v) {
        case LocusVerdict::Trivial: return "Trivial";
        case LocusVerdict::Witness: return "Witness";
        default: return "Inconclusive";
    }
}

struct LocusOptions {
    std::uint64_t seed = 9001;
    int sample_budget = 200;
    int point_search_height = 8;
};

/// Decision about the nilpotent locus of a space of Higgs fields.
/// A Witness is always a verified nonzero nilpotent element of the span;
/// `empty_over_closure`, when set by an exact method, records the locus
/// status over the algebraic closure even if no rational witness was found.
struct NilpotentLocusResult {
    LocusVerdict verdict = LocusVerdict::Trivial;
    std::string method;  // exhaustive-k0 | univariate-gcd-k1 | pencil-gcd-k2 | resultant-k3 | randomized-search
    std::optional<PolyMat> witness;
    std::vector<Rational> witness_coords;  // coordinates in the input basis
    std::optional<bool> empty_over_closure;
    std::string detail;
    int budget_used = 0;
};

/// Decides whether the span of W contains a nonzero globally nilpotent field.
/// Exact for dim W <= 2 (any rank) and dim W = 3 on rank-2 bundles with
/// traceless basis; otherwise a seeded deterministic search with explicit
/// budget, reporting Inconclusive when exhausted.
NilpotentLocusResult nilpotent_locus_decide(const SectionSpace& w, const LocusOptions& opts = {});

/// Ten distinct nonzero rational multiples of a nonzero nilpotent field, each
/// verified to lie in the zero fiber of the Hitchin map. Rejects zero or
/// non-nilpotent input.
std::vector<PolyMat> scaling_fiber_witness(const PolyMat& phi);

/// Very-stability verdict for a symplectic/orthogonal parabolic bundle:
/// nilpotent-locus decisions on both the strongly parabolic and the parabolic
/// compatible spaces, with the finiteness-certificate chain.
struct VeryStabilityReport {
    int dim_strong = 0;
    int dim_parabolic = 0;
    NilpotentLocusResult strong;
    NilpotentLocusResult parabolic;
    std::vector<std::string> certificate;
    std::vector<PolyMat> fiber_sample;  // scaling orbit of the strong witness, when present

    bool strongly_very_stable() const { return strong.verdict == LocusVerdict::Trivial; }
    bool very_stable() const { return parabolic.verdict == LocusVerdict::Trivial; }
};

VeryStabilityReport very_stability_verdict(const ParabolicBundle& e, const PairingForm& p,
                                           const LocusOptions& opts = {});

/// Two independent computations of the same number: dim W_st directly, and h^1
/// of the parabolic compatible endomorphism sheaf via the genus-0 Euler
/// characteristic (chi = deg + rank, with the per-point flag-condition count
/// computed exactly). Equality is the parabolic Serre-duality identity.
struct SerreReport {
    int dim_strong = 0;
    int h0 = 0;
    int sheaf_rank = 0;
    int sheaf_degree = 0;  // deg of the compatible endomorphism sheaf including flag conditions
    int chi = 0;
    int h1 = 0;
    bool equal = false;
    std::vector<int> conditions_per_point;
};

SerreReport serre_duality_check(const ParabolicBundle& e, const PairingForm& p);

struct ModuliDimParams {
    GroupKind group = GroupKind::Sp;  // Sp, SOEven or SOOdd
    int m = 1;
    int g = 0;
    int r = 0;
};

/// Closed-form dimension of the strongly parabolic Higgs moduli space with
/// full flags: 2m(2m+1)(g-1) + 2m^2 r for Sp(2m) and SO(2m+1), and
/// 2m(2m-1)(g-1) + 2mr(m-1) for SO(2m).
long long moduli_dimension(const ModuliDimParams& params);

}  // namespace parhiggs

#endif
