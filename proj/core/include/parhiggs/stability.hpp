#ifndef PARHIGGS_STABILITY_HPP
#define PARHIGGS_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "parhiggs/pairing.hpp"

namespace parhiggs {

/// Candidate (degree, incidence pattern) for a violating line subbundle.
struct LineCandidate {
    int degree = 0;
    std::vector<bool> pattern;  // per marked point: does the line sit in the deep flag step
    Rational value;             // degree + attainable weight sum for this pattern
};

/// All candidates with value >= threshold and realizable degree (e <= d_2, or
/// e = d_1 through the first summand when d_1 > d_2). Finite by the weight
/// bounds.
std::vector<LineCandidate> line_subbundle_candidates(const ParabolicBundle& e,
                                                     const Rational& threshold);

/// Divides out the polynomial content of a section, recomputes the line
/// degree from the cap slack, and attaches flag incidence and induced weights.
/// Rejects the zero section.
SubbundleData saturate(const std::vector<Poly>& section, const ParabolicBundle& e);

Rational subbundle_pardeg(const SubbundleData& f);

/// det[Phi s | s] == 0 identically, for a line spanned by the (saturated)
/// section s of F inside a rank-2 bundle.
bool invariance_check(const PolyMat& phi, const SubbundleData& f);

enum class StabilityKind { Stable, StrictlySemistable, Unstable };

inline const char* stability_name(StabilityKind k) {
    switch (k) {
        case StabilityKind::Stable: return "Stable";
        case StabilityKind::StrictlySemistable: return "StrictlySemistable";
        default: return "Unstable";
    }
}

struct StabilityVerdict {
    StabilityKind kind = StabilityKind::Stable;
    std::optional<SubbundleData> witness;  // present iff kind != Stable
    Rational witness_pardeg;
    Rational bundle_slope;
    bool search_complete = true;  // false when an invariance decision fell back to sampling
    std::string note;
};

/// Exact (semi)stability decision for a rank-2 symplectic/orthogonal parabolic
/// bundle, optionally with a Higgs field restricting the test to
/// Phi-invariant lines. Isotropy is automatic for antisymmetric pairings and
/// imposed as an extra quadratic condition for symmetric ones.
StabilityVerdict stability_decide_rank2(const ParabolicBundle& e, const PairingForm& p,
                                        const PolyMat* phi = nullptr);

}  // namespace parhiggs

#endif
