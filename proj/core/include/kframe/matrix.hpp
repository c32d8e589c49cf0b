#ifndef KFRAME_MATRIX_HPP
#define KFRAME_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace kframe {

using complex = std::complex<double>;
using Vector = std::vector<complex>;

/// Dense complex matrix, row-major. Immutable by convention once built;
/// 0x0, 0xn and nx0 matrices are legal everywhere.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, complex(0.0, 0.0)) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& d);
  static Matrix diagonal_complex(const Vector& d);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix adjoint() const;
  Matrix conj() const;

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix drop_column(std::size_t j) const;
  Matrix top_rows(std::size_t n) const;
  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

  Vector apply(const Vector& v) const;

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(complex s, const Matrix& a);

/// Block-diagonal stacking, [A 0; 0 B].
Matrix block_diag(const Matrix& a, const Matrix& b);

// vector helpers
complex dot_hermitian(const Vector& x, const Vector& y);  // sum x_n conj(y_n)
double norm2(const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(complex s, const Vector& v);
bool all_finite(const Vector& v);

}  // namespace kframe

#endif
