#include "parhiggs/qmatrix.hpp"

#include <stdexcept>

namespace parhiggs {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in sum");
    RatMat c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in difference");
    RatMat c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

RatMat operator*(const Rational& s, const RatMat& a) {
    RatMat c = a;
    for (auto& x : c.a_) x *= s;
    return c;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> RatMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i) {
            if (!at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        const Rational inv = at(row, col).inverse();
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            const Rational f = at(i, col);
            for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMat::rank() const {
    RatMat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

Rational RatMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::det: non-square matrix");
    RatMat m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        const Rational inv = m.at(col, col).inverse();
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: non-square matrix");
    RatMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Rational(1);
    }
    const auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
    RatMat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat::apply: size mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMat& a) {
    RatMat m = a;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(a.cols()), Rational(0));
        v[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        // Normalize the leading entry to +1 (reduced echelon form of the kernel).
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (!x.is_one()) {
                const Rational inv = x.inverse();
                for (auto& y : v) y *= inv;
            }
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace parhiggs
