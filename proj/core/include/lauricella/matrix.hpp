#ifndef LAURICELLA_MATRIX_HPP
#define LAURICELLA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lauricella/scalar.hpp"

namespace lauricella {

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar());

  static Matrix identity(std::size_t n, const Scalar& one = Scalar(1));
  static Matrix diagonal(std::span<const Scalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> values);

  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> x);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// First (row, col) where two equally shaped matrices differ, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a,
                                                                    const Matrix& b);

enum class BasisTag { kDelta, kDeltaPrime };

std::string to_string(BasisTag tag);

/// A 2^m x 2^m matrix whose rows and columns follow basis_order(m).
struct RepMatrix {
  int m = 0;
  BasisTag basis = BasisTag::kDelta;
  Matrix entries;
};

/// Coordinates of sum_I x_I Delta_I, indexed by basis_order(m).
struct CycleVector {
  int m = 0;
  std::vector<Scalar> coords;

  CycleVector() = default;
  /// Throws std::invalid_argument unless coords.size() == 2^m.
  CycleVector(int m, std::vector<Scalar> coords);
  static CycleVector zero(int m, const Scalar& zero = Scalar());
  /// D_{1...m} = sum_I Delta_I.
  static CycleVector all_ones(int m, const Scalar& one = Scalar(1));
};

// -- exact linear algebra -------------------------------------------------

/// Determinant by fraction-free (Bareiss) elimination, first-nonzero
/// pivoting. Exact for exact matrices.
Scalar determinant(const Matrix& a);

/// Rank by fraction-free elimination with first-nonzero pivoting.
std::size_t rank(const Matrix& a);

/// Inverse by Gauss-Jordan elimination; throws DivisionByZero if singular.
Matrix inverse(const Matrix& a);

/// Solves a * x = b (b may have several columns); throws DivisionByZero if
/// a is singular.
Matrix solve(const Matrix& a, const Matrix& b);

/// Random element of the kernel of the row functional `w` (w . x = 0),
/// built from `free` coordinates: x_j = free_j for j != pivot, and x_pivot
/// solves the equation. `pivot` must index a nonzero entry of w.
std::vector<Scalar> kernel_vector(std::span<const Scalar> w, std::span<const Scalar> free,
                                  std::size_t pivot);

}  // namespace lauricella

#endif  // LAURICELLA_MATRIX_HPP
