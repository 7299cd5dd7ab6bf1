#ifndef PARHIGGS_FORMS_HPP
#define PARHIGGS_FORMS_HPP

#include <array>
#include <optional>
#include <vector>

#include "parhiggs/poly.hpp"

namespace parhiggs {

/// Homogeneous binary form f(u,v) of degree hom_degree over Q, stored
/// dehomogenized as p(u) = f(u,1). The root (1:0) corresponds to
/// deg p < hom_degree.
struct BinaryForm {
    int hom_degree = 0;
    Poly p;

    bool is_zero() const { return p.is_zero(); }
    bool vanishes_at_infinity() const { return p.degree() < hom_degree; }
    Rational eval(const Rational& u, const Rational& v) const;
};

/// Outcome of a projective common-zero decision. `empty` refers to the zero
/// locus over the algebraic closure and is always exact; `rational_point` is a
/// verified common zero when one with rational coordinates was found;
/// `search_complete` records whether absence of a rational point is certified.
struct ProjectiveDecision {
    bool empty = false;
    std::optional<std::vector<Rational>> rational_point;
    bool search_complete = true;
};

/// Common projective zero of binary forms, decided exactly by gcd (affine
/// chart) together with the (1:0) check.
ProjectiveDecision decide_binary_system(const std::vector<BinaryForm>& forms);

/// Quadratic form in three variables: q = a11 c1^2 + a12 c1 c2 + a13 c1 c3 +
/// a22 c2^2 + a23 c2 c3 + a33 c3^2.
struct Quad3 {
    std::array<Rational, 6> a{};  // order 11, 12, 13, 22, 23, 33

    bool is_zero() const;
    Rational eval(const Rational& c1, const Rational& c2, const Rational& c3) const;
};

/// Emptiness in P^2 of a system of quadratic forms, decided exactly:
/// at most two nonzero quadrics always intersect (projective dimension
/// theorem); for three or more, V = {} over the closure iff the degree-4
/// Macaulay matrix has full rank 15 (effective Nullstellensatz bound for
/// quadrics in P^2). A rational witness is searched up to the given height.
ProjectiveDecision decide_quadric_system_p2(const std::vector<Quad3>& quadrics,
                                            int search_height = 8);

}  // namespace parhiggs

#endif
