#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace twodist {

using Vector = std::vector<double>;

// Dense row-major real matrix. Sizes here are small (tens of rows), so
// operations are written plainly without blocking.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  static Matrix diagonal(std::span<const double> d);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> values() const noexcept { return data_; }
  std::span<double> values() noexcept { return data_; }

  Vector col(std::size_t j) const;
  void set_col(std::size_t j, std::span<const double> v);
  Vector row(std::size_t i) const;
  Vector diag() const;

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

// aᵀ·b without materialising the transpose.
Matrix transpose_times(const Matrix& a, const Matrix& b);
// aᵀ·m·a, symmetrised.
Matrix congruence(const Matrix& a, const Matrix& m);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double sum(std::span<const double> a);
double max_abs(std::span<const double> a);
double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double frobenius(const Matrix& m);
double trace(const Matrix& m);
bool is_symmetric(const Matrix& m, double tol = 0.0);
bool all_finite(const Matrix& m);
Matrix symmetrized(const Matrix& m);

// Matrix whose columns are the given columns of m.
Matrix select_cols(const Matrix& m, std::span<const std::size_t> cols);

}  // namespace twodist
