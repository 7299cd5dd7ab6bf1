#ifndef PARHIGGS_GENERATORS_HPP
#define PARHIGGS_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "parhiggs/pairing.hpp"

namespace parhiggs {

/// splitmix64; used everywhere randomness is needed so that runs are
/// reproducible across platforms (no std::random distributions).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Integer in [-range, range].
    long small_int(long range);

private:
    std::uint64_t state_;
};

/// Rational with numerator in [-num_range, num_range] and denominator in [1, den_range].
Rational random_rational(SplitMix64& rng, long num_range, long den_range);

/// Random invertible n x n matrix with small rational entries.
RatMat random_invertible(SplitMix64& rng, int n);

/// Random element of the isometry group of the constant form omega_p, built by
/// the Cayley transform of a random Lie-algebra element.
RatMat random_isometry(SplitMix64& rng, const RatMat& omega_p, PairingSymmetry symmetry);

/// Seeded full flags for a bundle: unconstrained random invertible matrices
/// when `pairing` is null, otherwise isometry translates of the standard
/// coordinate flag (so the pairing's flag conditions hold automatically).
std::vector<RatMat> generic_flags(SplitMix64& rng, int rank, int points,
                                  const PairingForm* pairing);

/// Self-dual weight tables used by generic instances, one strictly ascending
/// list per rank (rank 2 symmetric pairings use the (0, 1/2) pattern).
std::vector<Rational> standard_selfdual_weights(int rank, PairingSymmetry symmetry);

/// Random element of a section space (random small-rational combination of the
/// basis).
PolyMat random_element(SplitMix64& rng, const SectionSpace& space);

}  // namespace parhiggs

#endif
