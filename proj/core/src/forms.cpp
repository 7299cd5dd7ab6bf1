#include "parhiggs/forms.hpp"

#include <numeric>

#include "parhiggs/qmatrix.hpp"

namespace parhiggs {

Rational BinaryForm::eval(const Rational& u, const Rational& v) const {
    // f(u,v) = sum_k p_k u^k v^{d-k}
    Rational acc(0);
    Rational upow(1);
    for (int k = 0; k <= hom_degree; ++k) {
        const Rational& c = p.coeff(k);
        if (!c.is_zero()) {
            Rational vpow(1);
            for (int i = 0; i < hom_degree - k; ++i) vpow *= v;
            acc += c * upow * vpow;
        }
        upow *= u;
    }
    return acc;
}

ProjectiveDecision decide_binary_system(const std::vector<BinaryForm>& forms) {
    ProjectiveDecision out;
    std::vector<BinaryForm> fs;
    for (const auto& f : forms)
        if (!f.is_zero()) fs.push_back(f);
    if (fs.empty()) {
        out.empty = false;
        out.rational_point = std::vector<Rational>{Rational(1), Rational(0)};
        return out;
    }

    bool infinity_common = true;
    for (const auto& f : fs)
        if (!f.vanishes_at_infinity()) {
            infinity_common = false;
            break;
        }
    if (infinity_common) {
        out.empty = false;
        out.rational_point = std::vector<Rational>{Rational(1), Rational(0)};
        return out;
    }

    Poly g = fs.front().p;
    for (std::size_t i = 1; i < fs.size() && !g.is_constant(); ++i) g = poly_gcd(g, fs[i].p);
    if (g.is_constant()) {
        out.empty = true;
        return out;
    }
    out.empty = false;
    bool complete = true;
    const auto roots = rational_roots(g, &complete);
    if (!roots.empty())
        out.rational_point = std::vector<Rational>{roots.front(), Rational(1)};
    out.search_complete = complete || out.rational_point.has_value();
    return out;
}

bool Quad3::is_zero() const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

Rational Quad3::eval(const Rational& c1, const Rational& c2, const Rational& c3) const {
    return a[0] * c1 * c1 + a[1] * c1 * c2 + a[2] * c1 * c3 + a[3] * c2 * c2 + a[4] * c2 * c3 +
           a[5] * c3 * c3;
}

namespace {

// Degree-d monomial exponents in 3 variables, lexicographic.
std::vector<std::array<int, 3>> monomials3(int d) {
    std::vector<std::array<int, 3>> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

int monomial_index(const std::vector<std::array<int, 3>>& basis, const std::array<int, 3>& m) {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == m) return static_cast<int>(k);
    return -1;
}

std::optional<std::vector<Rational>> search_rational_point(const std::vector<Quad3>& qs,
                                                           int height) {
    auto common_zero = [&qs](const Rational& c1, const Rational& c2, const Rational& c3) {
        for (const auto& q : qs)
            if (!q.eval(c1, c2, c3).is_zero()) return false;
        return true;
    };
    // Representatives with first nonzero coordinate 1 cover all of P^2.
    for (int b = -height; b <= height; ++b)
        for (int c = -height; c <= height; ++c)
            if (common_zero(Rational(1), Rational(b), Rational(c)))
                return std::vector<Rational>{Rational(1), Rational(b), Rational(c)};
    for (int c = -height; c <= height; ++c)
        if (common_zero(Rational(0), Rational(1), Rational(c)))
            return std::vector<Rational>{Rational(0), Rational(1), Rational(c)};
    if (common_zero(Rational(0), Rational(0), Rational(1)))
        return std::vector<Rational>{Rational(0), Rational(0), Rational(1)};
    return std::nullopt;
}

}  // namespace

ProjectiveDecision decide_quadric_system_p2(const std::vector<Quad3>& quadrics, int search_height) {
    ProjectiveDecision out;
    std::vector<Quad3> qs;
    for (const auto& q : quadrics)
        if (!q.is_zero()) qs.push_back(q);
    if (qs.empty()) {
        out.empty = false;
        out.rational_point = std::vector<Rational>{Rational(1), Rational(0), Rational(0)};
        return out;
    }

    if (qs.size() >= 3) {
        // Macaulay matrix in degree 4: rows are m * q for deg-2 monomials m.
        const auto deg2 = monomials3(2);
        const auto deg4 = monomials3(4);
        const std::array<std::array<int, 3>, 6> qexp{{{2, 0, 0},
                                                      {1, 1, 0},
                                                      {1, 0, 1},
                                                      {0, 2, 0},
                                                      {0, 1, 1},
                                                      {0, 0, 2}}};
        RatMat mac(static_cast<int>(qs.size() * deg2.size()), static_cast<int>(deg4.size()));
        int row = 0;
        for (const auto& q : qs) {
            for (const auto& m : deg2) {
                for (int t = 0; t < 6; ++t) {
                    if (q.a[static_cast<std::size_t>(t)].is_zero()) continue;
                    const std::array<int, 3> e{m[0] + qexp[static_cast<std::size_t>(t)][0],
                                               m[1] + qexp[static_cast<std::size_t>(t)][1],
                                               m[2] + qexp[static_cast<std::size_t>(t)][2]};
                    mac.at(row, monomial_index(deg4, e)) += q.a[static_cast<std::size_t>(t)];
                }
                ++row;
            }
        }
        if (mac.rank() == static_cast<int>(deg4.size())) {
            out.empty = true;
            return out;
        }
    }

    out.empty = false;
    out.rational_point = search_rational_point(qs, search_height);
    out.search_complete = out.rational_point.has_value();
    return out;
}

}  // namespace parhiggs
