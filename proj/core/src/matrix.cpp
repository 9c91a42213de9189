#include "lauricella/matrix.hpp"

#include <stdexcept>

#include "lauricella/errors.hpp"

namespace lauricella {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Scalar zero_like(const Matrix& a) {
  return a.rows() * a.cols() == 0 ? Scalar() : a(0, 0).constant_like(0);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n, const Scalar& one) {
  Matrix out(n, n, one.constant_like(0));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
  return out;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  const std::size_t n = entries.size();
  Matrix out(n, n, n == 0 ? Scalar() : entries[0].constant_like(0));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = entries[i];
  return out;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> values) {
  require_shape(values.size() == rows_, "set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_shape(a.cols_ == b.rows_, "matrix product: shape mismatch");
  const Scalar zero = zero_like(a);
  Matrix out(a.rows_, b.cols_, zero);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      // Representation matrices are sparse in practice; skipping zeros is
      // exact and saves most of the big-number work.
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> x) {
  require_shape(a.cols_ == x.size(), "matrix-vector product: shape mismatch");
  std::vector<Scalar> out(a.rows_, zero_like(a));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero() || x[k].is_zero()) continue;
      out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < std::min(r, cols_); ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a,
                                                                    const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "first_difference: shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

std::string to_string(BasisTag tag) {
  return tag == BasisTag::kDelta ? "delta" : "delta_prime";
}

CycleVector::CycleVector(int m_, std::vector<Scalar> c) : m(m_), coords(std::move(c)) {
  if (m < 1 || m > 16 || coords.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("cycle vector must have 2^m coordinates");
  }
}

CycleVector CycleVector::zero(int m, const Scalar& zero) {
  return CycleVector(m, std::vector<Scalar>(std::size_t{1} << m, zero));
}

CycleVector CycleVector::all_ones(int m, const Scalar& one) {
  return CycleVector(m, std::vector<Scalar>(std::size_t{1} << m, one));
}

// ------------------------------------------------------------ elimination

namespace {

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps
// and `last_pivot` ends as the determinant for full-rank square input.
std::size_t bareiss(Matrix& a, int& sign, Scalar& last_pivot) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const Scalar one = a(0, 0).constant_like(1);
  Scalar prev = one;
  sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(pivot, c), a(rank, c));
      sign = -sign;
    }
    const Scalar p = a(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Scalar f = a(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        Scalar v = p * a(r, c);
        if (!f.is_zero() && !a(rank, c).is_zero()) v -= f * a(rank, c);
        a(r, c) = prev.is_one() ? v : v / prev;
      }
      a(r, col) = p.constant_like(0);
    }
    prev = p;
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace

Scalar determinant(const Matrix& a) {
  require_shape(a.is_square(), "determinant: matrix must be square");
  if (a.rows() == 0) return Scalar(1);
  Matrix work = a;
  int sign = 1;
  Scalar last;
  const std::size_t r = bareiss(work, sign, last);
  if (r < a.rows()) return a(0, 0).constant_like(0);
  // With no skipped columns, the final pivot is the determinant.
  return sign < 0 ? -work(a.rows() - 1, a.cols() - 1) : work(a.rows() - 1, a.cols() - 1);
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Matrix work = a;
  int sign = 1;
  Scalar last;
  return bareiss(work, sign, last);
}

Matrix solve(const Matrix& a, const Matrix& b) {
  require_shape(a.is_square() && a.rows() == b.rows(), "solve: shape mismatch");
  const std::size_t n = a.rows(), k = b.cols();
  Matrix aug(n, n + k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero("solve: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n + k; ++c) std::swap(aug(pivot, c), aug(col, c));
    }
    const Scalar inv = aug(col, col).inverse();
    for (std::size_t c = col; c < n + k; ++c) {
      if (!aug(col, c).is_zero()) aug(col, c) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col).is_zero()) continue;
      const Scalar f = aug(r, col);
      for (std::size_t c = col; c < n + k; ++c) {
        if (!aug(col, c).is_zero()) aug(r, c) -= f * aug(col, c);
      }
    }
  }
  Matrix out(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

Matrix inverse(const Matrix& a) {
  require_shape(a.is_square() && a.rows() > 0, "inverse: matrix must be square and nonempty");
  return solve(a, Matrix::identity(a.rows(), a(0, 0).constant_like(1)));
}

std::vector<Scalar> kernel_vector(std::span<const Scalar> w, std::span<const Scalar> free,
                                  std::size_t pivot) {
  require_shape(w.size() == free.size() && pivot < w.size(), "kernel_vector: shape mismatch");
  if (w[pivot].is_zero()) throw DivisionByZero("kernel_vector: pivot coefficient is zero");
  std::vector<Scalar> x(free.begin(), free.end());
  Scalar acc = w[pivot].constant_like(0);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j != pivot) acc += w[j] * x[j];
  }
  x[pivot] = -acc / w[pivot];
  return x;
}

}  // namespace lauricella
