#include "parhiggs/hitchin.hpp"

#include <sstream>
#include <stdexcept>

namespace parhiggs {

std::string group_name(GroupKind g, int rank) {
    std::ostringstream os;
    switch (g) {
        case GroupKind::GL: os << "GL(" << rank << ")"; break;
        case GroupKind::Sp: os << "Sp(" << rank << ")"; break;
        case GroupKind::SOEven:
        case GroupKind::SOOdd: os << "SO(" << rank << ")"; break;
    }
    return os.str();
}

std::vector<int> HitchinPoint::scaling_weights() const {
    std::vector<int> w;
    switch (group) {
        case GroupKind::GL:
            for (int i = 1; i <= rank; ++i) w.push_back(i);
            break;
        case GroupKind::Sp:
        case GroupKind::SOOdd: {
            const int m = rank / 2;
            for (int i = 1; i <= m; ++i) w.push_back(2 * i);
            break;
        }
        case GroupKind::SOEven: {
            const int m = rank / 2;
            for (int i = 1; i <= m - 1; ++i) w.push_back(2 * i);
            w.push_back(m);
            break;
        }
    }
    return w;
}

bool HitchinPoint::is_zero() const {
    for (const auto& c : coefficients)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

Rational rational_pow(const Rational& t, int k) {
    Rational acc(1);
    for (int i = 0; i < k; ++i) acc *= t;
    return acc;
}

void require_even_rank(int n, GroupKind g) {
    if (n % 2 != 0)
        throw std::invalid_argument(group_name(g, n) + ": rank must be even");
}

void require_odd_vanishing(const std::vector<Poly>& s, const std::string& who) {
    for (std::size_t i = 0; i < s.size(); i += 2) {  // s_1, s_3, ... at even indices
        if (!s[i].is_zero()) {
            std::ostringstream os;
            os << who << ": odd characteristic coefficient s_" << i + 1
               << " is nonzero; the Higgs field is not compatible with the pairing";
            throw std::invalid_argument(os.str());
        }
    }
}

}  // namespace

HitchinPoint hitchin_image(const PolyMat& phi, GroupKind group, const PairingForm* pairing) {
    const int n = phi.rows();
    if (phi.cols() != n) throw std::invalid_argument("hitchin_image: non-square Higgs field");
    const auto s = char_poly(phi);
    HitchinPoint a;
    a.group = group;
    a.rank = n;
    switch (group) {
        case GroupKind::GL:
            a.coefficients = s;
            break;
        case GroupKind::Sp: {
            require_even_rank(n, group);
            require_odd_vanishing(s, "Sp");
            for (int i = 2; i <= n; i += 2) a.coefficients.push_back(s[static_cast<std::size_t>(i - 1)]);
            break;
        }
        case GroupKind::SOOdd: {
            if (n % 2 == 0) throw std::invalid_argument("SO(2m+1): rank must be odd");
            require_odd_vanishing(s, "SO(odd)");  // includes s_n, i.e. x | char poly
            for (int i = 2; i < n; i += 2) a.coefficients.push_back(s[static_cast<std::size_t>(i - 1)]);
            break;
        }
        case GroupKind::SOEven: {
            require_even_rank(n, group);
            require_odd_vanishing(s, "SO(even)");
            if (pairing == nullptr || pairing->symmetry != PairingSymmetry::Symmetric)
                throw std::invalid_argument("SO(2m): a symmetric pairing is required for the Pfaffian slot");
            const Poly det_b = det_poly(pairing->omega);
            if (!det_b.is_constant() || det_b.is_zero())
                throw std::invalid_argument("SO(2m): pairing determinant is not a nonzero constant");
            const auto c = det_b.coeff(0).sqrt_exact();
            if (!c)
                throw std::invalid_argument(
                    "SO(2m): det(B) = " + det_b.coeff(0).str() +
                    " is not a square in Q; the Pfaffian slot is undefined over Q");
            const PolyMat b_phi = pairing->omega * phi;
            if (!b_phi.is_antisymmetric())
                throw std::invalid_argument("SO(2m): B*Phi is not antisymmetric; Phi is incompatible");
            const Poly pf = c->inverse() * pfaffian(b_phi);
            if (pf * pf != s.back())
                throw std::logic_error("SO(2m): Pfaffian square does not match s_2m");
            for (int i = 2; i <= n - 2; i += 2) a.coefficients.push_back(s[static_cast<std::size_t>(i - 1)]);
            a.coefficients.push_back(pf);
            break;
        }
    }
    return a;
}

HitchinPoint base_scale(const Rational& t, const HitchinPoint& a) {
    if (t.is_zero()) throw std::invalid_argument("base_scale: t must be nonzero");
    HitchinPoint out = a;
    const auto w = a.scaling_weights();
    for (std::size_t k = 0; k < out.coefficients.size(); ++k)
        out.coefficients[k] = rational_pow(t, w[k]) * out.coefficients[k];
    return out;
}

bool equivariance_check(const PolyMat& phi, const Rational& t, GroupKind group,
                        const PairingForm* pairing) {
    return hitchin_image(t * phi, group, pairing) == base_scale(t, hitchin_image(phi, group, pairing));
}

bool nilpotency_check(const PolyMat& phi) {
    for (const auto& s : char_poly(phi))
        if (!s.is_zero()) return false;
    return true;
}

std::vector<bool> residue_nilpotency_by_point(const PolyMat& phi, const ParabolicBundle& e) {
    std::vector<bool> out;
    for (int p = 0; p < e.curve.count(); ++p) {
        const auto inv = e.flags[static_cast<std::size_t>(p)].inverse();
        if (!inv) throw std::invalid_argument("flag matrix not invertible");
        const RatMat m = *inv * phi.eval(e.curve.points[static_cast<std::size_t>(p)]) *
                         e.flags[static_cast<std::size_t>(p)];
        bool strict = true;
        for (int a = 0; a < m.rows() && strict; ++a)
            for (int b = a; b < m.cols(); ++b)
                if (!m.at(a, b).is_zero()) {
                    strict = false;
                    break;
                }
        out.push_back(strict);
    }
    return out;
}

bool residue_nilpotency_check(const PolyMat& phi, const ParabolicBundle& e) {
    for (bool ok : residue_nilpotency_by_point(phi, e))
        if (!ok) return false;
    return true;
}

bool strong_vanishing_check(const HitchinPoint& a, const MarkedCurve& d) {
    for (const auto& c : a.coefficients)
        for (const auto& p : d.points)
            if (!c.eval(p).is_zero()) return false;
    return true;
}

}  // namespace parhiggs
