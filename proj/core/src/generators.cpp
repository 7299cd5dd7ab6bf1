#include "parhiggs/generators.hpp"

#include <stdexcept>

namespace parhiggs {

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

long SplitMix64::small_int(long range) {
    return static_cast<long>(below(static_cast<std::uint64_t>(2 * range + 1))) - range;
}

Rational random_rational(SplitMix64& rng, long num_range, long den_range) {
    const long num = rng.small_int(num_range);
    const long den = static_cast<long>(rng.below(static_cast<std::uint64_t>(den_range))) + 1;
    return Rational(num, den);
}

RatMat random_invertible(SplitMix64& rng, int n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, 6, 4);
        if (m.rank() == n) return m;
    }
    throw std::runtime_error("random_invertible: could not draw an invertible matrix");
}

RatMat random_isometry(SplitMix64& rng, const RatMat& omega_p, PairingSymmetry symmetry) {
    const int n = omega_p.rows();
    const auto omega_inv = omega_p.inverse();
    if (!omega_inv) throw std::invalid_argument("random_isometry: degenerate form");
    for (int attempt = 0; attempt < 64; ++attempt) {
        // A = omega^{-1} S with S symmetric (symplectic) resp. antisymmetric
        // (orthogonal) lies in the Lie algebra; Cayley then lands in the group.
        RatMat s(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = (symmetry == PairingSymmetry::Antisymmetric ? i : i + 1); j < n; ++j) {
                const Rational v = random_rational(rng, 3, 2);
                s.at(i, j) = v;
                s.at(j, i) = (symmetry == PairingSymmetry::Antisymmetric) ? v : -v;
            }
        const RatMat a = *omega_inv * s;
        const RatMat id = RatMat::identity(n);
        const auto inv = (id + a).inverse();
        if (!inv) continue;
        RatMat g = (id - a) * *inv;
        if (g.rank() == n) return g;
    }
    throw std::runtime_error("random_isometry: Cayley transform failed repeatedly");
}

std::vector<RatMat> generic_flags(SplitMix64& rng, int rank, int points,
                                  const PairingForm* pairing) {
    std::vector<RatMat> flags;
    flags.reserve(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p) {
        if (pairing == nullptr) {
            flags.push_back(random_invertible(rng, rank));
        } else {
            // Constant standard forms only reach this path; evaluate at 0.
            flags.push_back(random_isometry(rng, pairing->omega.eval(Rational(0)),
                                            pairing->symmetry));
        }
    }
    return flags;
}

std::vector<Rational> standard_selfdual_weights(int rank, PairingSymmetry symmetry) {
    switch (rank) {
        case 1: return {Rational(0)};
        case 2:
            if (symmetry == PairingSymmetry::Symmetric) return {Rational(0), Rational(1, 2)};
            return {Rational(1, 4), Rational(3, 4)};
        case 3: return {Rational(0), Rational(1, 4), Rational(3, 4)};
        case 4:
            return {Rational(1, 8), Rational(1, 4), Rational(3, 4), Rational(7, 8)};
        case 5:
            return {Rational(0), Rational(1, 8), Rational(1, 4), Rational(3, 4), Rational(7, 8)};
        case 6:
            return {Rational(1, 12), Rational(1, 6), Rational(1, 3), Rational(2, 3),
                    Rational(5, 6), Rational(11, 12)};
        default:
            throw std::invalid_argument("standard_selfdual_weights: rank out of table range");
    }
}

PolyMat random_element(SplitMix64& rng, const SectionSpace& space) {
    if (space.basis.empty()) throw std::invalid_argument("random_element: empty section space");
    PolyMat acc = Rational(0) * space.basis.front();
    bool nonzero = false;
    while (!nonzero) {
        for (const auto& b : space.basis) {
            const long c = rng.small_int(5);
            if (c != 0) {
                acc = acc + Rational(c) * b;
                nonzero = true;
            }
        }
    }
    return acc;
}

}  // namespace parhiggs
