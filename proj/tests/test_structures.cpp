#include <doctest.h>

#include <algorithm>
#include <set>

#include "entwine/catalog.hpp"
#include "entwine/diagram.hpp"
#include "entwine/structures.hpp"
#include "support.hpp"

using namespace entwine;
using entwine::testing::Rng;

namespace {

const Field Q = Field::rationals();

std::set<std::string> names(const ValidationReport& r) {
  const auto v = r.axioms();
  return {v.begin(), v.end()};
}

// Both evaluators must reach the same verdict and blame the same axioms.
void agree(const ValidationReport& element, const ValidationReport& diagram) {
  CHECK(element.ok() == diagram.ok());
  CHECK(names(element) == names(diagram));
}

Vec basis(Field f, std::size_t n, std::size_t k) { return la::unit_vec(f, n, k); }

}  // namespace

TEST_CASE("catalog structures pass both evaluators") {
  for (Field f : {Q, Field::of_characteristic(2), Field::of_characteristic(3), Field::of_characteristic(5)}) {
    CAPTURE(f.name());
    const catalog::Catalog c = catalog::load(f);
    for (const auto& [name, a] : c.algebras) {
      CAPTURE(name);
      CHECK(validate_algebra(a).ok());
      CHECK(diagram::check_algebra(a).ok());
    }
    for (const auto& [name, x] : c.coalgebras) {
      CAPTURE(name);
      CHECK(validate_coalgebra(x).ok());
      CHECK(diagram::check_coalgebra(x).ok());
    }
    for (const auto& [name, h] : c.bialgebras) {
      CAPTURE(name);
      CHECK(validate_bialgebra(h).ok());
      CHECK(diagram::check_bialgebra(h).ok());
    }
    for (const auto& [name, e] : c.entwinings) {
      CAPTURE(name);
      CHECK(validate_entwining(e).ok());
      CHECK(diagram::check_entwining(e).ok());
    }
    for (const auto& [name, d] : c.data) {
      CAPTURE(name);
      CHECK(validate_doi_hopf(d).ok());
      CHECK(diagram::check_module_coalgebra(d.module_coalgebra).ok());
      CHECK(diagram::check_comodule_algebra(d.bialgebra, d.comodule_algebra).ok());
    }
  }
}

TEST_CASE("perturbed structures are classified alike by both evaluators") {
  const catalog::Catalog c = catalog::load(Q);
  Rng rng(101);
  std::size_t rejected = 0, total = 0;
  for (const auto& [name, e] : c.entwinings) {
    for (int t = 0; t < 20; ++t) {
      Entwining p = e;
      switch (rng() % 3) {
        case 0: testing::perturb_entry(p.map, rng); break;
        case 1: testing::perturb_entry(p.algebra.product, rng); break;
        default: testing::perturb_entry(p.coalgebra.coproduct, rng); break;
      }
      const ValidationReport element = validate_entwining(p);
      agree(element, diagram::check_entwining(p));
      rejected += !element.ok();
      ++total;
    }
  }
  // A single nonzero change to μ, Δ or ψ can only survive by accident; most must be caught.
  CHECK(rejected * 10 >= total * 9);
}

TEST_CASE("a non-associative product is blamed at the offending triple") {
  FiniteAlgebra a = upper_triangular_algebra(Q);
  a.set_mult(1, 0, 1, Scalar::one(Q));  // E12·E11 = E12, so (E12·E22)·E11 ≠ E12·(E22·E11)
  const ValidationReport r = validate_algebra(a);
  CHECK_FALSE(r.ok());
  const auto axioms = r.axioms();
  CHECK(std::find(axioms.begin(), axioms.end(), "associativity") != axioms.end());
  agree(r, diagram::check_algebra(a));
}

TEST_CASE("group algebra and Sweedler relations by direct multiplication") {
  const FiniteBialgebra z3 = cyclic_group_bialgebra(Q, 3);
  const Vec g = basis(Q, 3, 1);
  CHECK(z3.algebra.multiply(z3.algebra.multiply(g, g), g) == z3.algebra.unit);

  const FiniteBialgebra h = sweedler_bialgebra(Q);
  const Vec one = basis(Q, 4, 0), gg = basis(Q, 4, 1), x = basis(Q, 4, 2), gx = basis(Q, 4, 3);
  CHECK(h.algebra.unit == one);
  CHECK(h.algebra.multiply(gg, gg) == one);
  CHECK(la::is_zero(h.algebra.multiply(x, x)));
  CHECK(h.algebra.multiply(gg, x) == gx);
  Vec minus_gx = gx;
  for (auto& s : minus_gx) s = -s;
  CHECK(h.algebra.multiply(x, gg) == minus_gx);
  // Δ(x) = x⊗1 + g⊗x
  CHECK(h.coalgebra.comult(2, 2, 0) == Scalar::one(Q));
  CHECK(h.coalgebra.comult(2, 1, 2) == Scalar::one(Q));
  CHECK(h.coalgebra.counit[2].is_zero());
}

TEST_CASE("flip is an entwining for any algebra and coalgebra") {
  const catalog::Catalog c = catalog::load(Q);
  for (const auto& [an, a] : c.algebras)
    for (const auto& [cn, x] : c.coalgebras) {
      CAPTURE(an);
      CAPTURE(cn);
      CHECK(validate_entwining(build_flip(a, x)).ok());
    }
}

TEST_CASE("Doi-Hopf construction rejects an invalid datum") {
  DoiHopfDatum d = self_datum(cyclic_group_bialgebra(Q, 2));
  d.comodule_algebra.map(0, 0) += Scalar::one(Q);
  CHECK_FALSE(validate_doi_hopf(d).ok());
  CHECK_THROWS_AS(build_doi_hopf(d), InvalidStructure);
}

TEST_CASE("Doi-Hopf entwining for a group algebra, by hand") {
  // ψ(g^p ⊗ g^i) = g^i ⊗ g^{p+i} for C = H = kZ/3 acting on itself.
  const Entwining e = build_doi_hopf(self_datum(cyclic_group_bialgebra(Q, 3)));
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t q = 0; q < 3; ++q)
          CHECK(e.psi(p, i, j, q) == Scalar(Q, (j == i && q == (p + i) % 3) ? 1L : 0L));
}

TEST_CASE("trivial datum gives the flip") {
  const FiniteAlgebra a = upper_triangular_algebra(Q);
  const FiniteCoalgebra c = grouplike_coalgebra(Q, 2);
  CHECK(build_doi_hopf(trivial_datum(a, c)).map == build_flip(a, c).map);
}

TEST_CASE("dual algebras of a coalgebra") {
  const FiniteCoalgebra h4 = sweedler_bialgebra(Q).coalgebra;
  const FiniteAlgebra op = dual_opposite_algebra(h4), conv = convolution_algebra(h4);
  CHECK(validate_algebra(op).ok());
  CHECK(validate_algebra(conv).ok());
  CHECK(op.unit == h4.counit);
  // H4 is not cocommutative, so the two products differ, and op is conv with factors swapped.
  CHECK_FALSE(op.product == conv.product);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(op.mult(i, j, k) == conv.mult(j, i, k));
  CHECK(diagram::dual_op_product(h4) == op.product);
  CHECK(diagram::convolution_product(h4) == conv.product);
}

TEST_CASE("hit actions") {
  const FiniteCoalgebra c = sweedler_bialgebra(Q).coalgebra;
  Rng rng(3);
  const Vec elem = testing::random_vec(Q, 4, rng);
  CHECK(left_hit(c, c.counit, elem) == elem);
  CHECK(right_hit(c, c.counit, elem) == elem);
  // ⇀ is a left and ↼ a right action of the convolution algebra.
  const FiniteAlgebra conv = convolution_algebra(c);
  const Vec xi = testing::random_vec(Q, 4, rng), eta = testing::random_vec(Q, 4, rng);
  CHECK(left_hit(c, xi, left_hit(c, eta, elem)) == left_hit(c, conv.multiply(xi, eta), elem));
  CHECK(right_hit(c, xi, right_hit(c, eta, elem)) == right_hit(c, conv.multiply(eta, xi), elem));
}

TEST_CASE("regular and dual modules") {
  const catalog::Catalog c = catalog::load(Q);
  for (const auto& [name, a] : c.algebras) {
    CAPTURE(name);
    CHECK(validate_right_module(a, regular_module(a)).ok());
    CHECK(validate_right_module(a, dual_module(a)).ok());
    CHECK(diagram::check_right_module(a, dual_module(a)).ok());
  }
  for (const auto& [name, x] : c.coalgebras) {
    CAPTURE(name);
    CHECK(validate_right_comodule(x, regular_comodule(x)).ok());
    CHECK(validate_right_comodule(x, dual_comodule(x)).ok());
    CHECK(diagram::check_right_comodule(x, dual_comodule(x)).ok());
  }
}

TEST_CASE("entwining morphisms") {
  const Entwining e = build_doi_hopf(self_datum(cyclic_group_bialgebra(Q, 2)));
  const Mat ia = Mat::identity(Q, 2), ic = Mat::identity(Q, 2);
  CHECK(validate_entwining_morphism(e, e, ia, ic).ok());
  // The flip is a different entwining on the same pair, so the identity does not intertwine.
  const Entwining flip = build_flip(e.algebra, e.coalgebra);
  CHECK_FALSE(validate_entwining_morphism(e, flip, ia, ic).ok());
}
