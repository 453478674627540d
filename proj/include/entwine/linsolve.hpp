#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "entwine/mat.hpp"

namespace entwine::la {

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Mat a);
std::size_t rank(const Mat& a);

/// Basis of {x : A x = 0}. Exactly cols(A) - rank(A) vectors, one per free
/// column, each with a 1 in its free coordinate.
std::vector<Vec> kernel_basis(const Mat& a);

struct AffineSolution {
  bool consistent = false;
  Vec particular;            // valid only when consistent
  std::vector<Vec> kernel;   // basis of the homogeneous solutions
};

/// Solves A x = b. Throws std::invalid_argument on a dimension mismatch.
AffineSolution solve_affine(const Mat& a, const Vec& b);

struct Inversion {
  bool bijective = false;
  Mat inverse;                 // valid only when bijective
  std::size_t rank_defect = 0; // max(rows, cols) - rank
};

Inversion is_bijective(const Mat& a);

/// Basis of the column space, chosen among the columns of `a`.
std::vector<Vec> column_space(const Mat& a);

/// True when the given vectors are linearly independent.
bool independent(Field field, std::size_t length, const std::vector<Vec>& vs);

}  // namespace entwine::la
