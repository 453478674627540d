#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "entwine/scalar.hpp"

namespace entwine::la {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field field, std::size_t n);
Vec unit_vec(Field field, std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix. A linear map V -> W is stored as a dim(W) x dim(V)
/// matrix, so the image of basis vector j is column j and composition g∘f is
/// the product G * F.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zero(Field field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }
  static Mat identity(Field field, std::size_t n);
  /// Builds a single column from `v`.
  static Mat column(const Vec& v);
  static Mat from_rows(Field field, const std::vector<std::vector<long>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> entries() const { return data_; }
  std::span<Scalar> entries() { return data_; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_col(std::size_t c, std::span<const Scalar> v);

  Mat transpose() const;
  bool is_zero() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Vec operator*(const Mat& a, std::span<const Scalar> v);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Tensor product of linear maps under the leftmost-slowest flattening.
Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<Mat> factors);

/// Horizontal / vertical concatenation.
Mat hstack(const std::vector<Mat>& blocks);
Mat vstack(const std::vector<Mat>& blocks);

/// Matrix whose columns are the given vectors (all of length `rows`).
Mat from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace entwine::la
