#include "parhiggs/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace parhiggs {

Poly Poly::monomial(const Rational& a, int k) {
    if (a.is_zero()) return Poly();
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = a;
    return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p = Poly::constant(1);
    for (const auto& r : roots) p = p * Poly(std::vector<Rational>{-r, Rational(1)});
    return p;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return leading().inverse() * *this;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].add_mul(a.c_[i], b.c_[j]);
    }
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly operator-(const Poly& a) { return Rational(-1) * a; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const Rational factor = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = factor;
        rem -= Poly::monomial(factor, shift) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly::exact_div: nonzero remainder");
    return q;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool poly_divides(const Poly& d, const Poly& p) {
    if (d.is_zero()) return p.is_zero();
    return Poly::divmod(p, d).second.is_zero();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = coeff(k);
        if (a.is_zero()) continue;
        if (!first) os << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) os << "-";
        first = false;
        const Rational mag = a.abs();
        if (k == 0 || !mag.is_one()) os << mag.str();
        if (k > 0) {
            if (!mag.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

// Positive divisors of |n|, or empty when trial division past the bound leaves
// an unfactored cofactor.
std::vector<mpz_class> bounded_divisors(const mpz_class& n_in, bool* complete) {
    mpz_class n = ::abs(n_in);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    mpz_class d = 2;
    const mpz_class bound = 1000000;
    while (n > 1 && d <= bound && d * d <= n) {
        if (n % d == 0) {
            unsigned mult = 0;
            while (n % d == 0) {
                n /= d;
                ++mult;
            }
            factors.emplace_back(d, mult);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) {
        if (d > bound && !mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            *complete = false;
            return {};
        }
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, mult] : factors) {
        const std::size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pw *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p, bool* complete) {
    bool dummy = true;
    if (complete == nullptr) complete = &dummy;
    *complete = true;
    std::vector<Rational> roots;
    if (p.is_zero() || p.is_constant()) return roots;

    // Strip z-power content, then clear denominators to a primitive integer polynomial.
    Poly q = p;
    if (q.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        int low = 0;
        while (q.coeff(low).is_zero()) ++low;
        std::vector<Rational> shifted(q.coeffs().begin() + low, q.coeffs().end());
        q = Poly(std::move(shifted));
    }
    if (q.is_constant()) return roots;
    mpz_class den_lcm = 1;
    for (const auto& a : q.coeffs()) {
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), a.den().get_mpz_t());
        den_lcm = g;
    }
    std::vector<mpz_class> ic;
    ic.reserve(q.coeffs().size());
    for (const auto& a : q.coeffs()) ic.push_back(a.num() * (den_lcm / a.den()));
    mpz_class content = 0;
    for (const auto& v : ic) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    for (auto& v : ic) v /= content;

    const auto ps = bounded_divisors(ic.front(), complete);
    const auto qs = bounded_divisors(ic.back(), complete);
    if (!*complete) return roots;
    for (const auto& pn : ps) {
        for (const auto& qn : qs) {
            for (int sgn : {1, -1}) {
                const Rational cand(mpq_class(sgn * pn, qn));
                if (q.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace parhiggs
