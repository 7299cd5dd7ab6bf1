#include "parhiggs/pairing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace parhiggs {

PairingForm standard_pairing(int rank, PairingSymmetry symmetry) {
    PairingForm p;
    p.symmetry = symmetry;
    p.target_degree = 0;
    p.omega = PolyMat(rank, rank);
    if (symmetry == PairingSymmetry::Antisymmetric) {
        if (rank % 2 != 0)
            throw std::invalid_argument("standard antisymmetric pairing needs even rank");
        for (int i = 0; i < rank / 2; ++i) {
            p.omega.at(i, rank - 1 - i) = Poly::constant(1);
            p.omega.at(rank - 1 - i, i) = Poly::constant(-1);
        }
    } else if (rank == 2) {
        p.omega = PolyMat::identity(2);
    } else {
        for (int i = 0; i < rank; ++i) p.omega.at(i, rank - 1 - i) = Poly::constant(1);
    }
    return p;
}

Diagnostics check_pairing_iso(const ParabolicBundle& e, const PairingForm& p) {
    Diagnostics diag;
    auto note = [&diag](const std::string& msg) { diag.violations.push_back(msg); };
    const int n = e.rank();
    const int ell = p.target_degree;

    if (p.omega.rows() != n || p.omega.cols() != n) {
        note("pairing matrix shape does not match bundle rank");
        return diag;
    }
    if (p.symmetry == PairingSymmetry::Antisymmetric) {
        if (!p.omega.is_antisymmetric()) note("pairing tagged antisymmetric but omega^T != -omega");
        if (n % 2 != 0) note("antisymmetric pairing on odd rank is always degenerate");
    } else if (!p.omega.is_symmetric()) {
        note("pairing tagged symmetric but omega^T != omega");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int cap = ell - e.splitting[static_cast<std::size_t>(i)] -
                            e.splitting[static_cast<std::size_t>(j)];
            if (!p.omega.at(i, j).is_zero() && p.omega.at(i, j).degree() > cap) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") violates its degree cap " << cap;
                note(os.str());
            }
        }

    const Poly det = det_poly(p.omega);
    if (det.is_zero()) {
        note("pairing determinant vanishes identically");
    } else if (!det.is_constant()) {
        note("pairing determinant is not constant: det = " + det.str());
        for (const auto& root : rational_roots(det))
            note("det vanishes at z = " + root.str());
    }

    if (n * ell != 2 * e.degree()) {
        std::ostringstream os;
        os << "degree identity fails: n*ell = " << n * ell << " but 2*deg(E) = " << 2 * e.degree();
        note(os.str());
    }

    // Weight self-duality, read off through the parabolic dual.
    const ParabolicBundle dual = dual_structure(e);
    for (int q = 0; q < e.curve.count(); ++q) {
        auto a = e.weights[static_cast<std::size_t>(q)];
        auto b = dual.weights[static_cast<std::size_t>(q)];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            std::ostringstream os;
            os << "weights at point " << q << " are not self-dual";
            note(os.str());
        }
    }

    // Flag condition: omega_p(E_{p,i}, E_{p,j}) = 0 whenever alpha_i + alpha_j > 1.
    for (int q = 0; q < e.curve.count(); ++q) {
        const RatMat& f = e.flags[static_cast<std::size_t>(q)];
        const RatMat omega_p = p.omega.eval(e.curve.points[static_cast<std::size_t>(q)]);
        const RatMat t = f.transpose() * omega_p * f;
        const auto& w = e.weights[static_cast<std::size_t>(q)];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (w[static_cast<std::size_t>(a)] + w[static_cast<std::size_t>(b)] <= Rational(1))
                    continue;
                if (!t.at(a, b).is_zero()) {
                    std::ostringstream os;
                    os << "flag steps " << a + 1 << "," << b + 1 << " at point " << q
                       << " must pair to zero (weight sum exceeds 1)";
                    note(os.str());
                }
            }
    }
    return diag;
}

SectionSpace compatible_higgs_space(const ParabolicBundle& e, const PairingForm& p,
                                    SectionMode mode, std::optional<int> twist) {
    const int k = twist.value_or(e.curve.twist());
    EndoCoeffSystem sys(e, k);
    sys.add_flag_conditions(mode);
    sys.add_pairing_conditions(p.omega);
    return sys.solve(mode);
}

CompatibilityReport compatibility_check(const PolyMat& phi, const PairingForm& p) {
    if (phi.rows() != phi.cols() || phi.rows() != p.omega.rows())
        throw std::invalid_argument("compatibility_check: shape mismatch");
    CompatibilityReport rep;
    const PolyMat omega_t = p.omega.transpose();
    // (Id (x) Phi^dual) o phi~ = (phi~ (x) Id) o Phi with Phi^dual = -Phi^T and
    // phi~ given by omega^T.
    const PolyMat lhs = Rational(-1) * (phi.transpose() * omega_t);
    const PolyMat rhs = omega_t * phi;
    rep.categorical = (lhs - rhs).is_zero();
    rep.matrix = (phi.transpose() * p.omega + p.omega * phi).is_zero();
    return rep;
}

bool isotropic_check(const SubbundleData& f, const PairingForm& p) {
    const int n = p.omega.rows();
    if (static_cast<int>(f.section.size()) != n)
        throw std::invalid_argument("isotropic_check: section length does not match pairing rank");
    Poly acc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Poly& o = p.omega.at(i, j);
            if (o.is_zero()) continue;
            acc += f.section[static_cast<std::size_t>(i)] * o * f.section[static_cast<std::size_t>(j)];
        }
    return acc.is_zero();
}

}  // namespace parhiggs
