#ifndef PARHIGGS_POLY_HPP
#define PARHIGGS_POLY_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "parhiggs/rational.hpp"

namespace parhiggs {

/// Univariate polynomial over Q in the affine coordinate z.
/// Invariant: empty coefficient list <=> zero polynomial; last stored coefficient nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
    static Poly variable() { return monomial(1, 1); }
    static Poly monomial(const Rational& a, int k);
    /// prod (z - r) over the given roots
    static Poly from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of z^k (0 beyond the stored range).
    const Rational& coeff(int k) const {
        static const Rational zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact quotient; throws if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "z") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0,0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

bool poly_divides(const Poly& d, const Poly& p);

/// All rational roots of p (p != 0), found via the rational-root theorem on the
/// primitive integer model. `complete` is set to false when the coefficient
/// factorizations exceed the trial-division bound, in which case the returned
/// list is still sound but possibly not exhaustive.
std::vector<Rational> rational_roots(const Poly& p, bool* complete = nullptr);

}  // namespace parhiggs

#endif
