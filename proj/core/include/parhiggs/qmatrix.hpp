#ifndef PARHIGGS_QMATRIX_HPP
#define PARHIGGS_QMATRIX_HPP

#include <optional>
#include <vector>

#include "parhiggs/rational.hpp"

namespace parhiggs {

/// Dense matrix over Q.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatMat transpose() const;
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const Rational& s, const RatMat& a);
    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const;

    /// In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<int> rref();

    int rank() const;
    Rational det() const;
    std::optional<RatMat> inverse() const;

    /// Column vector product A * v.
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Basis of the right kernel {v : A v = 0} in reduced echelon form, ordered by
/// free-column position (deterministic).
std::vector<std::vector<Rational>> kernel_basis(const RatMat& a);

}  // namespace parhiggs

#endif
