#include <doctest.h>

#include <stdexcept>

#include "entwine/linsolve.hpp"
#include "entwine/mat.hpp"
#include "entwine/tensor_index.hpp"
#include "support.hpp"

using namespace entwine;
using namespace entwine::la;
using entwine::testing::Rng;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::of_characteristic(2);
const Field F3 = Field::of_characteristic(3);
const Field F7 = Field::of_characteristic(7);
const Field BIG = Field::of_characteristic(2147483647);

}  // namespace

TEST_CASE("field construction") {
  CHECK(Field::of_characteristic(0) == Q);
  CHECK_THROWS_AS(Field::of_characteristic(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_characteristic(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_characteristic(4294967311ULL), std::invalid_argument);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
}

TEST_CASE("scalar text form") {
  CHECK(Scalar::parse(Q, "3/6").str() == "1/2");
  CHECK(Scalar::parse(Q, "-4/2").str() == "-2");
  CHECK(Scalar::parse(Q, "0/5").str() == "0");
  CHECK(Scalar::parse(F7, "1/3").str() == "5");
  CHECK(Scalar::parse(F7, "-1").str() == "6");
  CHECK_THROWS(Scalar::parse(F7, "1/7"));
  CHECK_THROWS(Scalar::parse(Q, "1/0"));
  CHECK_THROWS(Scalar::parse(Q, "x"));
  CHECK_THROWS(Scalar::parse(Q, ""));
}

TEST_CASE("scalar arithmetic is exact") {
  const Scalar third = Scalar::parse(Q, "1/3");
  CHECK(third + third + third == Scalar::one(Q));
  CHECK((Scalar(Q, 2L) / Scalar(Q, 6L)).str() == "1/3");
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F7), std::domain_error);
  // (p-1)² ≡ 1 without 64-bit overflow.
  const Scalar m1 = -Scalar::one(BIG);
  CHECK(m1 * m1 == Scalar::one(BIG));
  CHECK(Scalar(F2, 1L) + Scalar(F2, 1L) == Scalar::zero(F2));
}

TEST_CASE("field axioms on seeded samples") {
  for (Field f : {Q, F2, F3, F7, BIG}) {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      const Scalar a = testing::small(f, rng, 50), b = testing::small(f, rng, 50), c = testing::small(f, rng, 50);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
      Scalar d = c;
      d.add_product(a, b);
      CHECK(d == c + a * b);
    }
  }
}

TEST_CASE("GF(7) inverses match a multiplication table") {
  for (long a = 1; a < 7; ++a) {
    long found = 0;
    for (long b = 1; b < 7; ++b)
      if ((a * b) % 7 == 1) found = b;
    CHECK(Scalar(F7, a).inverse() == Scalar(F7, found));
  }
}

TEST_CASE("tensor index flattening") {
  TensorIndex idx({2, 3, 4});
  CHECK(idx.size() == 24);
  CHECK(idx.flatten({1, 2, 3}) == 23);
  CHECK(idx.flatten({1, 0, 0}) == 12);
  for (std::size_t f = 0; f < idx.size(); ++f) CHECK(idx.flatten(idx.unflatten(f)) == f);
  CHECK_THROWS_AS(idx.flatten({2, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(idx.flatten({0, 0}), std::out_of_range);
}

TEST_CASE("kron follows the flattening and the mixed product rule") {
  Rng rng(5);
  const Mat a = testing::random_mat(Q, 2, 3, rng), b = testing::random_mat(Q, 3, 2, rng);
  const Mat k = kron(a, b);
  TensorIndex rows({2, 3}), cols({3, 2});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 2; ++s) CHECK(k(rows.flatten({i, r}), cols.flatten({j, s})) == a(i, j) * b(r, s));

  const Mat c = testing::random_mat(Q, 3, 2, rng), d = testing::random_mat(Q, 2, 4, rng);
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  CHECK(kron({a, b, c}) == kron(kron(a, b), c));
}

TEST_CASE("matrix basics") {
  const Mat m = Mat::from_rows(Q, {{1, 2}, {3, 4}});
  CHECK(m.transpose()(0, 1) == Scalar(Q, 3L));
  CHECK(m * Mat::identity(Q, 2) == m);
  CHECK((m - m).is_zero());
  CHECK(hstack({m, m}).cols() == 4);
  CHECK(vstack({m, m}).rows() == 4);
  CHECK_THROWS(m * Mat::identity(Q, 3));
}

TEST_CASE("kernel over GF(2) and GF(3) agrees with brute force") {
  for (Field f : {F2, F3}) {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
      const Mat a = testing::random_mat(f, rows, cols, rng, 60);
      std::size_t count = 0;
      testing::for_each_vector(f, cols, [&](const Vec& v) { count += is_zero(a * v); });
      const std::vector<Vec> ker = kernel_basis(a);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < ker.size(); ++i) expected *= f.characteristic();
      CHECK(count == expected);
      CHECK(ker.size() + rank(a) == cols);
      for (const Vec& v : ker) CHECK(is_zero(a * v));
      CHECK(independent(f, cols, ker));
    }
  }
}

TEST_CASE("affine solve consistency agrees with brute force over GF(2)") {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const Mat a = testing::random_mat(F2, rows, cols, rng, 50);
    const Vec b = testing::random_vec(F2, rows, rng);
    bool exists = false;
    testing::for_each_vector(F2, cols, [&](const Vec& v) { exists = exists || a * v == b; });
    const AffineSolution s = solve_affine(a, b);
    CHECK(s.consistent == exists);
    if (s.consistent) CHECK(a * s.particular == b);
  }
  CHECK_THROWS_AS(solve_affine(Mat(F2, 2, 2), la::zero_vec(F2, 3)), std::invalid_argument);
}

TEST_CASE("affine solve over the rationals") {
  Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const Mat a = testing::random_mat(Q, rows, cols, rng, 70);
    const Vec x = testing::random_vec(Q, cols, rng);
    const Vec b = a * x;
    const AffineSolution s = solve_affine(a, b);
    REQUIRE(s.consistent);
    CHECK(a * s.particular == b);
    CHECK(s.kernel.size() == cols - rank(a));
    for (const Vec& k : s.kernel) CHECK(is_zero(a * k));
  }
  // x + y = 1 and x + y = 2 have no common solution.
  const Mat a = Mat::from_rows(Q, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve_affine(a, {Scalar(Q, 1L), Scalar(Q, 2L)}).consistent);
}

TEST_CASE("inversion") {
  Rng rng(31);
  for (Field f : {Q, F7}) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 5;
      const Mat m = testing::random_mat(f, n, n, rng);
      const Inversion inv = is_bijective(m);
      CHECK(inv.bijective == (rank(m) == n));
      if (inv.bijective) {
        CHECK(m * inv.inverse == Mat::identity(f, n));
        CHECK(inv.inverse * m == Mat::identity(f, n));
      } else {
        CHECK(inv.rank_defect == n - rank(m));
      }
    }
  }
  // Rectangular maps are never bijective.
  CHECK_FALSE(is_bijective(Mat::from_rows(Q, {{1, 0, 0}, {0, 1, 0}})).bijective);
  // 2x2 inverse by the adjugate formula.
  const Mat m = Mat::from_rows(Q, {{2, 1}, {7, 4}});
  CHECK(is_bijective(m).inverse == Mat::from_rows(Q, {{4, -1}, {-7, 2}}));
}

TEST_CASE("column space") {
  const Mat m = Mat::from_rows(Q, {{1, 2, 3}, {2, 4, 6}});
  CHECK(column_space(m).size() == 1);
  CHECK(rank(Mat::identity(F2, 4)) == 4);
}
