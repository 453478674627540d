#include "entwine/mat.hpp"

#include <ostream>
#include <stdexcept>

namespace entwine::la {

Vec zero_vec(Field field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec unit_vec(Field field, std::size_t n, std::size_t k) {
  Vec v = zero_vec(field, n);
  v.at(k) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Mat Mat::column(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("Mat::column of an empty vector");
  Mat m(v.front().field(), v.size(), 1);
  m.set_col(0, v);
  return m;
}

Mat Mat::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Mat m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

Vec Mat::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Mat::set_col(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw std::invalid_argument("set_col: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const { return la::is_zero(data_); }

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Mat out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j).add_product(aik, bkj);
      }
    }
  }
  return out;
}

Vec operator*(const Mat& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: length mismatch");
  Vec out = zero_vec(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i].add_product(a(i, k), v[k]);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
  }
  return out;
}

Mat kron(std::initializer_list<Mat> factors) {
  if (factors.size() == 0) throw std::invalid_argument("kron of no factors");
  auto it = factors.begin();
  Mat out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

Mat hstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack of no blocks");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  Mat out(blocks.front().field(), blocks.front().rows(), cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of no blocks");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks.front().cols()) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Mat out(blocks.front().field(), rows, blocks.front().cols());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

Mat from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
  Mat out(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) out.set_col(c, cols[c]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

}  // namespace entwine::la
