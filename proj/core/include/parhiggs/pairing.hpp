#ifndef PARHIGGS_PAIRING_HPP
#define PARHIGGS_PAIRING_HPP

#include <optional>

#include "parhiggs/parabolic.hpp"

namespace parhiggs {

enum class PairingSymmetry { Antisymmetric, Symmetric };

inline const char* symmetry_name(PairingSymmetry s) {
    return s == PairingSymmetry::Antisymmetric ? "antisymmetric" : "symmetric";
}

/// Bilinear form omega : E (x) E -> O(ell) with trivial parabolic structure on
/// the target. Entry (i,j) has degree <= ell - d_i - d_j; nondegeneracy means
/// det(omega) is a nonzero constant.
struct PairingForm {
    PolyMat omega;
    PairingSymmetry symmetry = PairingSymmetry::Antisymmetric;
    int target_degree = 0;
};

/// The antidiagonal symplectic form (+1 above the antidiagonal center, -1
/// below) resp. the antidiagonal symmetric form, both constant with ell = 0.
/// These are compatible with the standard coordinate flag. Exception: the
/// symmetric form on rank 2 is the identity (a rational split 2x2 symmetric
/// form has non-square determinant, which would break the Pfaffian slot).
PairingForm standard_pairing(int rank, PairingSymmetry symmetry);

/// Verifies that (E, omega) is a symplectic/orthogonal parabolic bundle:
/// symmetry tag, entry degree caps, det(omega) a nonzero rational, the degree
/// identity n*ell = 2*deg(E), weight self-duality through dual_structure, and
/// the per-point flag condition omega_p(E_{p,i}, E_{p,j}) = 0 whenever
/// alpha_i(p) + alpha_j(p) > 1.
Diagnostics check_pairing_iso(const ParabolicBundle& e, const PairingForm& p);

/// Basis of {Phi in hom_section_space(e, twist, mode) : Phi^T omega + omega Phi = 0}.
/// For antisymmetric omega this cuts out Sym^2(E) (x) L^dual (omega Phi
/// symmetric), for symmetric omega the Lambda^2 condition.
SectionSpace compatible_higgs_space(const ParabolicBundle& e, const PairingForm& p,
                                    SectionMode mode,
                                    std::optional<int> twist = std::nullopt);

/// Compatible Higgs field with its flag-condition mode.
struct HiggsField {
    PolyMat matrix;
    SectionMode mode = SectionMode::Parabolic;
};

/// Both formulations of compatibility: the categorical identity through the
/// induced dual Higgs field Phi^dual = -Phi^T, and the matrix identity
/// Phi^T omega + omega Phi = 0. They must agree.
struct CompatibilityReport {
    bool categorical = false;
    bool matrix = false;
    bool agree() const { return categorical == matrix; }
    bool compatible() const { return categorical && matrix; }
};

CompatibilityReport compatibility_check(const PolyMat& phi, const PairingForm& p);

/// True iff the pairing restricts to zero on the line spanned by F.
bool isotropic_check(const SubbundleData& f, const PairingForm& p);

}  // namespace parhiggs

#endif
