#include "parhiggs/polymatrix.hpp"

#include <stdexcept>

namespace parhiggs {

PolyMat PolyMat::identity(int n) {
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
    return m;
}

PolyMat PolyMat::from_constant(const RatMat& q) {
    PolyMat m(q.rows(), q.cols());
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j)
            if (!q.at(i, j).is_zero()) m.at(i, j) = Poly::constant(q.at(i, j));
    return m;
}

void PolyMat::set_caps(std::vector<int> caps) {
    if (caps.size() != e_.size()) throw std::invalid_argument("PolyMat::set_caps: size mismatch");
    caps_ = std::move(caps);
}

bool PolyMat::respects_caps() const {
    if (caps_.empty()) return true;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].is_zero() && e_[k].degree() > caps_[k]) return false;
    return true;
}

bool PolyMat::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMat::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool PolyMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

PolyMat PolyMat::transpose() const {
    PolyMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat PolyMat::eval(const Rational& x) const {
    RatMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(x);
    return m;
}

Poly PolyMat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMat::trace: non-square matrix");
    Poly t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMat: shape mismatch in sum");
    PolyMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMat: shape mismatch in difference");
    PolyMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMat: shape mismatch in product");
    PolyMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Poly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

PolyMat operator*(const Rational& s, const PolyMat& a) {
    PolyMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = s * a.e_[k];
    return c;
}

PolyMat operator*(const Poly& s, const PolyMat& a) {
    PolyMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = s * a.e_[k];
    return c;
}

std::vector<Poly> char_poly(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
    const int n = m.rows();
    std::vector<Poly> s(static_cast<std::size_t>(n));
    PolyMat a = m;
    for (int k = 1; k <= n; ++k) {
        Poly ck = Rational(-1, k) * a.trace();
        s[static_cast<std::size_t>(k - 1)] = ck;
        if (k == n) break;
        PolyMat shifted = a;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
        a = m * shifted;
    }
    return s;
}

Poly det_poly(const PolyMat& m) {
    const auto s = char_poly(m);
    if (s.empty()) return Poly::constant(1);
    return (m.rows() % 2 == 0) ? s.back() : -s.back();
}

namespace {

Poly pfaffian_rec(const PolyMat& m, std::vector<int>& idx) {
    const std::size_t k = idx.size();
    if (k == 0) return Poly::constant(1);
    Poly acc;
    const int row = idx[0];
    for (std::size_t j = 1; j < k; ++j) {
        const Poly& a = m.at(row, idx[j]);
        if (a.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(k - 2);
        for (std::size_t t = 1; t < k; ++t)
            if (t != j) rest.push_back(idx[t]);
        Poly sub = pfaffian_rec(m, rest);
        if (j % 2 == 1)
            acc += a * sub;
        else
            acc -= a * sub;
    }
    return acc;
}

}  // namespace

Poly pfaffian(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: non-square matrix");
    if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    if (!m.is_antisymmetric()) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
    std::vector<int> idx(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return pfaffian_rec(m, idx);
}

}  // namespace parhiggs
