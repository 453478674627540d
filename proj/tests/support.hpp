#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "entwine/linsolve.hpp"
#include "entwine/structures.hpp"

// Seeded generators shared by the test binaries. Coefficients come from
// rng() % k so runs are identical on every platform.
namespace entwine::testing {

using Rng = std::mt19937_64;

inline Scalar small(Field f, Rng& rng, long spread = 3) {
  return Scalar(f, static_cast<long>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread);
}

inline Scalar nonzero(Field f, Rng& rng, long spread = 3) {
  for (;;) {
    Scalar s = small(f, rng, spread);
    if (!s.is_zero()) return s;
  }
}

inline Vec random_vec(Field f, std::size_t n, Rng& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(small(f, rng));
  return v;
}

inline Mat random_mat(Field f, std::size_t rows, std::size_t cols, Rng& rng, unsigned density_percent = 100) {
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 100 < density_percent) m(r, c) = small(f, rng);
  return m;
}

inline Mat random_invertible(Field f, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m = random_mat(f, n, n, rng);
    if (la::is_bijective(m).bijective) return m;
  }
}

/// Calls visit on every vector of GF(p)^n.
inline void for_each_vector(Field f, std::size_t n, const std::function<void(const Vec&)>& visit) {
  const std::uint64_t p = f.characteristic();
  Vec v = la::zero_vec(f, n);
  std::vector<std::uint64_t> digits(n, 0);
  for (;;) {
    visit(v);
    std::size_t i = 0;
    while (i < n && digits[i] == p - 1) {
      digits[i] = 0;
      v[i] = Scalar::zero(f);
      ++i;
    }
    if (i == n) return;
    ++digits[i];
    v[i] = Scalar(f, static_cast<long>(digits[i]));
  }
}

/// Adds a nonzero amount to one entry of m.
inline void perturb_entry(Mat& m, Rng& rng) {
  const std::size_t r = rng() % m.rows(), c = rng() % m.cols();
  m(r, c) += nonzero(m.field(), rng);
}

}  // namespace entwine::testing
