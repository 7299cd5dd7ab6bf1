#ifndef PARHIGGS_PARABOLIC_HPP
#define PARHIGGS_PARABOLIC_HPP

#include <string>
#include <vector>

#include "parhiggs/polymatrix.hpp"

namespace parhiggs {

/// Structured check result; never throws, lists every violation found.
struct Diagnostics {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Genus-0 curve with marked points in the affine chart. K(D) has degree r - 2.
struct MarkedCurve {
    std::vector<Rational> points;
    int count() const { return static_cast<int>(points.size()); }
    int twist() const { return count() - 2; }
};

/// Parabolic bundle on the marked genus-0 curve. The underlying bundle is
/// O(d_1) + ... + O(d_n) in a fixed global polynomial frame; fibers over marked
/// points are identified with Q^n by evaluation in this frame.
///
/// Flags are given per point by an invertible n x n matrix whose trailing k
/// columns span the flag step E_{p,n-k+1}; weights ascend strictly in [0,1).
/// point_twists records per-point underlying-degree shifts produced by the
/// dual/tensor constructions (elementary modifications); plain bundles have
/// all-zero twists.
struct ParabolicBundle {
    MarkedCurve curve;
    std::vector<int> splitting;                   // d_1 >= ... >= d_n
    std::vector<RatMat> flags;                    // one per marked point
    std::vector<std::vector<Rational>> weights;   // one ascending list per point
    std::vector<int> point_twists;                // one per point; empty means all zero

    int rank() const { return static_cast<int>(splitting.size()); }
    int degree() const;
    int twist_at(int p) const {
        return point_twists.empty() ? 0 : point_twists[static_cast<std::size_t>(p)];
    }
};

Diagnostics validate(const ParabolicBundle& e);

Rational parabolic_degree(const ParabolicBundle& e);
Rational parabolic_slope(const ParabolicBundle& e);

/// Saturated line subbundle of a rank-n bundle, spanned by a polynomial
/// section with coprime entries.
struct SubbundleData {
    int degree = 0;
    std::vector<Poly> section;            // length n, no common polynomial factor
    std::vector<int> incidence;           // per point: deepest flag index containing the fiber line (1-based)
    std::vector<Rational> induced_weights;  // per point: weight of that step
};

/// Per-point induced weights of the line spanned by `section` (the weight of
/// the deepest flag step containing its fiber). Section must be nonvanishing
/// at every marked point (saturated).
std::vector<Rational> induced_subbundle_weights(const ParabolicBundle& e,
                                                const std::vector<Poly>& section);
std::vector<int> subbundle_incidence(const ParabolicBundle& e, const std::vector<Poly>& section);

enum class SectionMode { Parabolic, Strong };

inline const char* mode_name(SectionMode m) {
    return m == SectionMode::Parabolic ? "parabolic" : "strong";
}

/// Exact basis of a space of twisted endomorphisms cut out by linear conditions.
struct SectionSpace {
    SectionMode mode = SectionMode::Parabolic;
    int twist = 0;
    std::vector<PolyMat> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

/// Global sections of End(E) (x) O(k) satisfying at each marked point the
/// parabolic condition (flag preserved) or the strong condition (flag strictly
/// lowered). Entry (i,j) is a polynomial of degree <= d_i - d_j + k.
SectionSpace hom_section_space(const ParabolicBundle& e, int twist, SectionMode mode);

/// Maruyama-Yokogawa parabolic dual: reversed negated splitting, annihilator
/// flags, weights 0 -> 0 and a -> 1-a reversed, with the per-point
/// underlying-degree shift -(number of nonzero weights) recorded in
/// point_twists. Satisfies pardeg(E) + pardeg(dual(E)) = 0.
ParabolicBundle dual_structure(const ParabolicBundle& e);

/// Parabolic tensor product: splitting {d_i + d'_j}, weights a + a' with carry
/// (sums reaching 1 drop by 1 and shift the underlying degree by +1 at p),
/// flags induced componentwise and ordered by reduced weight. Colliding
/// reduced weights are kept as repeated entries (a merged-step encoding).
ParabolicBundle tensor_structure(const ParabolicBundle& e, const ParabolicBundle& f);

/// Linear system on the monomial coefficients of a capped n x n Poly matrix.
/// Shared by the section-space and compatibility computations.
class EndoCoeffSystem {
public:
    EndoCoeffSystem(const ParabolicBundle& e, int twist);

    int var_count() const { return var_count_; }

    /// Flag conditions of the given mode at every marked point.
    void add_flag_conditions(SectionMode mode);
    /// Rows forcing Phi^T * omega + omega * Phi = 0 identically.
    void add_pairing_conditions(const PolyMat& omega);

    SectionSpace solve(SectionMode mode) const;
    /// Matrix realized by a coefficient vector (e.g. a kernel element).
    PolyMat realize(const std::vector<Rational>& coeffs) const;

private:
    int var_index(int i, int j, int m) const;

    const ParabolicBundle& e_;
    int twist_;
    int n_;
    std::vector<int> caps_;        // row-major entry caps
    std::vector<int> var_offset_;  // per entry, -1 when the entry is forced zero
    int var_count_;
    std::vector<std::vector<Rational>> rows_;
};

}  // namespace parhiggs

#endif
