#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ratpull/rational.hpp"

namespace ratpull {

using RatVector = std::vector<Rational>;

/// Default upper bound on matrix rows/cols; RATPULL_MAX_DIM overrides it.
inline constexpr std::size_t kDefaultMaxDimension = 64;

/// Current dimension cap, read from RATPULL_MAX_DIM on every call.
std::size_t max_dimension();

/// Dense row-major matrix of exact rationals. Immutable once built: every
/// operation below returns a fresh matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  /// Zero matrix. Throws DimensionCap when either side exceeds max_dimension().
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Throws DimensionMismatch on ragged input.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;

  /// Top-left k x k block.
  RatMatrix leading_block(std::size_t k) const;
  /// Principal submatrix on the given (sorted) index set.
  RatMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix transpose(const RatMatrix& m);
RatMatrix scale(const Rational& c, const RatMatrix& m);
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix subtract(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
/// M * v with v a column vector.
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
/// v * M with v a row vector.
RatVector vec_mat(const RatVector& v, const RatMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& v);
RatVector add(const RatVector& a, const RatVector& b);

/// Exact determinant by Bareiss fraction-free elimination on an integer lift
/// (each row multiplied by the lcm of its denominators). Throws NonSquare.
Rational det(const RatMatrix& m);

/// Gauss-Jordan with the first nonzero pivot in each column.
/// Throws NonSquare, or Singular when det(m) = 0.
RatMatrix inverse(const RatMatrix& m);

/// Returns x with x * m = v. Throws NonSquare, DimensionMismatch, Singular.
RatVector solve_left(const RatVector& v, const RatMatrix& m);

/// Returns x with m * x = v. Throws NonSquare, DimensionMismatch, Singular.
RatVector solve_right(const RatMatrix& m, const RatVector& v);

}  // namespace ratpull
