#include "entwine/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace entwine::la {

Echelon row_reduce(Mat a) {
  Echelon e;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));
    }
    const Scalar inv = a(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(lead, k).is_zero()) a(r, k) -= factor * a(lead, k);
      }
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Mat& a) { return row_reduce(a).rank(); }

namespace {

std::vector<Vec> kernel_from_echelon(const Echelon& e, std::size_t cols) {
  const Field field = e.reduced.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(field, cols, free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vec> kernel_basis(const Mat& a) { return kernel_from_echelon(row_reduce(a), a.cols()); }

AffineSolution solve_affine(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve_affine: matrix has " + std::to_string(a.rows()) + " rows but right side has " +
                                std::to_string(b.size()) + " entries");
  }
  const Field field = a.field();
  Mat augmented = hstack({a, b.empty() ? Mat(field, 0, 1) : Mat::column(b)});
  Echelon e = row_reduce(std::move(augmented));
  AffineSolution sol;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return sol;  // pivot in the b column
  sol.consistent = true;
  sol.particular = zero_vec(field, a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, a.cols());
  sol.kernel = kernel_from_echelon(e, a.cols());
  return sol;
}

Inversion is_bijective(const Mat& a) {
  Inversion inv;
  const std::size_t r = rank(a);
  inv.rank_defect = std::max(a.rows(), a.cols()) - r;
  if (!a.is_square() || inv.rank_defect != 0) return inv;
  const std::size_t n = a.rows();
  Echelon e = row_reduce(hstack({a, Mat::identity(a.field(), n)}));
  inv.inverse = Mat(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.inverse(i, j) = e.reduced(i, n + j);
  inv.bijective = true;
  return inv;
}

std::vector<Vec> column_space(const Mat& a) {
  std::vector<Vec> out;
  for (auto p : row_reduce(a).pivots) out.push_back(a.col(p));
  return out;
}

bool independent(Field field, std::size_t length, const std::vector<Vec>& vs) {
  if (vs.empty()) return true;
  return rank(from_columns(field, length, vs)) == vs.size();
}

}  // namespace entwine::la
