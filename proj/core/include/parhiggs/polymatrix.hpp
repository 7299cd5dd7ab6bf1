#ifndef PARHIGGS_POLYMATRIX_HPP
#define PARHIGGS_POLYMATRIX_HPP

#include <optional>
#include <vector>

#include "parhiggs/poly.hpp"
#include "parhiggs/qmatrix.hpp"

namespace parhiggs {

/// Dense matrix over Q[z], with optional per-entry degree caps.
/// A negative cap forces the entry to be zero.
class PolyMat {
public:
    PolyMat() : rows_(0), cols_(0) {}
    PolyMat(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static PolyMat identity(int n);
    static PolyMat from_constant(const RatMat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    void set_caps(std::vector<int> caps);  // row-major, rows*cols entries
    const std::vector<int>& caps() const { return caps_; }
    bool has_caps() const { return !caps_.empty(); }
    int cap(int i, int j) const { return caps_[static_cast<std::size_t>(i) * cols_ + j]; }
    /// True when every entry respects its cap (vacuously true without caps).
    bool respects_caps() const;

    bool is_zero() const;
    bool is_antisymmetric() const;
    bool is_symmetric() const;

    PolyMat transpose() const;
    RatMat eval(const Rational& x) const;
    Poly trace() const;

    friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator*(const Rational& s, const PolyMat& a);
    friend PolyMat operator*(const Poly& s, const PolyMat& a);
    friend bool operator==(const PolyMat& a, const PolyMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<Poly> e_;
    std::vector<int> caps_;
};

/// Coefficients (s_1, ..., s_n) of det(x I - M) = x^n + s_1 x^{n-1} + ... + s_n,
/// computed by the Faddeev-LeVerrier recurrence (divisions only by integers,
/// so every intermediate stays polynomial).
std::vector<Poly> char_poly(const PolyMat& m);

/// Determinant of a square PolyMat, via char_poly: det = (-1)^n s_n.
Poly det_poly(const PolyMat& m);

/// Pfaffian of an antisymmetric 2m x 2m matrix, by recursive expansion
/// along the first row. pf(M)^2 = det(M).
Poly pfaffian(const PolyMat& m);

}  // namespace parhiggs

#endif
