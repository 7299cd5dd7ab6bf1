#ifndef PARHIGGS_HITCHIN_HPP
#define PARHIGGS_HITCHIN_HPP

#include <string>
#include <vector>

#include "parhiggs/pairing.hpp"

namespace parhiggs {

enum class GroupKind { GL, Sp, SOEven, SOOdd };

std::string group_name(GroupKind g, int rank);

/// Point of the Hitchin base. Coefficient slots by group:
///   GL(n):      s_1, ..., s_n
///   Sp(2m):     s_2, s_4, ..., s_2m
///   SO(2m):     s_2, ..., s_{2m-2}, p_m  (Pfaffian slot last)
///   SO(2m+1):   s_2, s_4, ..., s_2m
/// Slot k scales with weight weights()[k] under the base C*-action.
struct HitchinPoint {
    GroupKind group = GroupKind::GL;
    int rank = 0;
    std::vector<Poly> coefficients;

    bool has_pfaffian_slot() const { return group == GroupKind::SOEven; }
    std::vector<int> scaling_weights() const;
    bool is_zero() const;

    friend bool operator==(const HitchinPoint& a, const HitchinPoint& b) {
        return a.group == b.group && a.rank == b.rank && a.coefficients == b.coefficients;
    }
};

/// Hitchin image of a Higgs field. For Sp/SO the odd characteristic
/// coefficients must vanish identically (they do for every compatible field);
/// a violation throws, signalling an incompatible input. SO(2m) needs the
/// pairing to form the Pfaffian slot p_m = pfaffian(B Phi)/c with c the
/// positive rational square root of det(B); p_m^2 = s_2m is asserted.
HitchinPoint hitchin_image(const PolyMat& phi, GroupKind group,
                           const PairingForm* pairing = nullptr);

/// C*-action on the base: slot of weight w scales by t^w. Rejects t = 0.
HitchinPoint base_scale(const Rational& t, const HitchinPoint& a);

/// hitchin_image(t Phi) == base_scale(t, hitchin_image(Phi)), exactly.
bool equivariance_check(const PolyMat& phi, const Rational& t, GroupKind group,
                        const PairingForm* pairing = nullptr);

/// All characteristic coefficients vanish identically (global nilpotency;
/// equivalent to hitchin_image = 0).
bool nilpotency_check(const PolyMat& phi);

/// Evaluation at each marked point, conjugated into the flag basis, is
/// strictly lower triangular.
bool residue_nilpotency_check(const PolyMat& phi, const ParabolicBundle& e);
std::vector<bool> residue_nilpotency_by_point(const PolyMat& phi, const ParabolicBundle& e);

/// Every coefficient (Pfaffian slot included) vanishes at every marked point.
bool strong_vanishing_check(const HitchinPoint& a, const MarkedCurve& d);

}  // namespace parhiggs

#endif
