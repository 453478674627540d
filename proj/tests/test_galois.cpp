#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/diagram.hpp"
#include "entwine/frobenius.hpp"
#include "entwine/galois.hpp"
#include "support.hpp"

using namespace entwine;
using entwine::testing::Rng;

namespace {

const Field Q = Field::rationals();

ComoduleAlgebra trivial_coaction(const FiniteAlgebra& a) {
  ComoduleAlgebra ca{a, ground_coalgebra(a.field), Mat::identity(a.field, a.dim)};
  return ca;
}

// ρ(e_i) = e_i ⊗ g_i over group-like C: B = A, never Galois.
ComoduleAlgebra literal_grading(Field f) {
  ComoduleAlgebra ca{catalog::split_algebra(f), grouplike_coalgebra(f, 2), Mat(f, 4, 2)};
  ca.map(0 * 2 + 0, 0) = Scalar::one(f);
  ca.map(1 * 2 + 1, 1) = Scalar::one(f);
  return ca;
}

// Counts b with ρ(b·a) = (b⊗1)·ρ(a) for every basis a by enumerating GF(p)^n.
std::size_t brute_force_coinvariants(const ComoduleAlgebra& ca) {
  const Field f = ca.algebra.field;
  const std::size_t n = ca.algebra.dim, m = ca.coalgebra.dim;
  std::size_t count = 0;
  testing::for_each_vector(f, n, [&](const Vec& b) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Vec ba = ca.algebra.multiply(b, la::unit_vec(f, n, i));
      const Vec lhs = ca.map * ba;
      Vec rhs = la::zero_vec(f, n * m);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < m; ++q) {
          const Scalar& c = ca.coact(i, j, q);
          if (c.is_zero()) continue;
          const Vec bj = ca.algebra.multiply(b, la::unit_vec(f, n, j));
          for (std::size_t k = 0; k < n; ++k) rhs[k * m + q].add_product(c, bj[k]);
        }
      ok = lhs == rhs;
    }
    count += ok;
  });
  return count;
}

std::size_t power(std::size_t p, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= p;
  return r;
}

}  // namespace

TEST_CASE("coinvariants of small comodule algebras") {
  CHECK(coinvariants(trivial_coaction(upper_triangular_algebra(Q))).size() == 3);
  const DoiHopfDatum z2 = self_datum(cyclic_group_bialgebra(Q, 2));
  const std::vector<Vec> b = coinvariants(z2.comodule_algebra);
  REQUIRE(b.size() == 1);
  // Solved by hand: ρ(b·g) = (b⊗1)ρ(g) forces b ∈ k·1.
  CHECK(b[0][1].is_zero());
  const std::vector<Vec> bq = coinvariants(catalog::split_comodule_algebra(Q));
  REQUIRE(bq.size() == 1);
  CHECK(bq[0][0] == bq[0][1]);
  CHECK(coinvariants(literal_grading(Q)).size() == 2);
}

TEST_CASE("coinvariant dimension matches enumeration over GF(3)") {
  const Field f = Field::of_characteristic(3);
  const catalog::Catalog c = catalog::load(f);
  std::vector<catalog::Named<ComoduleAlgebra>> cases = c.comodule_algebras;
  cases.push_back({"literal", literal_grading(f)});
  cases.push_back({"trivial-ut2", trivial_coaction(upper_triangular_algebra(f))});
  for (const auto& [name, ca] : cases) {
    CAPTURE(name);
    CHECK(power(3, coinvariants(ca).size()) == brute_force_coinvariants(ca));
  }
}

TEST_CASE("tensor product over the coinvariants") {
  const FiniteAlgebra z2 = cyclic_group_bialgebra(Q, 2).algebra;
  const Quotient over_k = build_quotient(z2, {z2.unit});
  CHECK(over_k.dim == 4);
  CHECK(over_k.projection == Mat::identity(Q, 4));

  const FiniteAlgebra ut2 = upper_triangular_algebra(Q);
  std::vector<Vec> all;
  for (std::size_t i = 0; i < 3; ++i) all.push_back(la::unit_vec(Q, 3, i));
  const Quotient over_a = build_quotient(ut2, all);
  CHECK(over_a.dim == 3);
  CHECK(over_a.projection * over_a.section == Mat::identity(Q, 3));
}

TEST_CASE("canonical entwining equals the Doi-Hopf entwining") {
  for (Field f : {Q, Field::of_characteristic(3), Field::of_characteristic(5)}) {
    const catalog::Catalog c = catalog::load(f);
    for (const auto& [name, d] : c.data) {
      CAPTURE(name);
      const GaloisResult r = canonical_entwining(d.comodule_algebra);
      REQUIRE(r.galois);
      CHECK(r.checks.ok());
      CHECK(r.entwining.map == build_doi_hopf(d).map);
      CHECK(validate_entwining(r.entwining).ok());
      CHECK(validate_entwined_module(algebra_as_entwined_module(r.entwining, d.comodule_algebra)).ok());
      CHECK(diagram::check_entwined_module(algebra_as_entwined_module(r.entwining, d.comodule_algebra)).ok());
    }
  }
}

TEST_CASE("trivial coaction is Galois with the flip") {
  const ComoduleAlgebra ca = trivial_coaction(upper_triangular_algebra(Q));
  const GaloisResult r = canonical_entwining(ca);
  CHECK(r.galois);
  CHECK(r.entwining.map == build_flip(ca.algebra, ca.coalgebra).map);
}

TEST_CASE("literal grading is not Galois") {
  const GaloisResult r = canonical_entwining(literal_grading(Q));
  CHECK_FALSE(r.galois);
  CHECK(r.data.quotient.dim == 2);
  CHECK(r.rank_defect == 2);
}

TEST_CASE("invalid coaction is rejected") {
  ComoduleAlgebra ca = literal_grading(Q);
  ca.map(1, 0) = Scalar::one(Q);
  CHECK_THROWS_AS(canonical_entwining(ca), InvalidStructure);
}

TEST_CASE("Galois integral check agrees with integral membership") {
  const catalog::Catalog c = catalog::load(Q);
  Rng rng(41);
  for (const auto& [name, ca] : c.comodule_algebras) {
    CAPTURE(name);
    const GaloisResult r = canonical_entwining(ca);
    REQUIRE(r.galois);
    const std::size_t d = ca.algebra.dim * ca.coalgebra.dim;
    std::vector<Vec> probes;
    for (std::size_t i = 0; i < d; ++i) probes.push_back(la::unit_vec(Q, d, i));
    for (const Vec& x : entwining_integrals(r.entwining)) probes.push_back(x);
    for (int t = 0; t < 5; ++t) probes.push_back(testing::random_vec(Q, d, rng));
    for (const Vec& x : probes) CHECK(galois_integral_check(ca, r, x) == check_entwining_integral(r.entwining, x).ok());
  }
}

TEST_CASE("kZ/2 Hopf-Galois: 1⊗1 + g⊗g") {
  const ComoduleAlgebra ca = self_datum(cyclic_group_bialgebra(Q, 2)).comodule_algebra;
  const GaloisResult r = canonical_entwining(ca);
  Vec x = la::zero_vec(Q, 4);
  x[0] = Scalar::one(Q);
  x[3] = Scalar::one(Q);
  CHECK(galois_integral_check(ca, r, x) == check_entwining_integral(r.entwining, x).ok());
  CHECK(galois_integral_check(ca, r, x) == diagram::check_entwining_integral(r.entwining, x).ok());
}
