#include <doctest.h>

#include <stdexcept>

#include "entwine/catalog.hpp"
#include "entwine/diagram.hpp"
#include "entwine/frobenius.hpp"
#include "entwine/smash.hpp"
#include "support.hpp"

using namespace entwine;
using entwine::testing::Rng;

namespace {

const Field Q = Field::rationals();

std::size_t power(std::size_t p, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= p;
  return r;
}

// |Z(A)| over GF(p) by testing every element against every basis vector.
std::size_t centralizer_size(const FiniteAlgebra& a) {
  std::size_t count = 0;
  testing::for_each_vector(a.field, a.dim, [&](const Vec& z) {
    bool central = true;
    for (std::size_t i = 0; i < a.dim && central; ++i) {
      const Vec e = la::unit_vec(a.field, a.dim, i);
      central = a.multiply(z, e) == a.multiply(e, z);
    }
    count += central;
  });
  return count;
}

Vec ones(Field f, std::size_t n) { return Vec(n, Scalar::one(f)); }

}  // namespace

TEST_CASE("psi-bar of the flip and over C = k") {
  const FiniteAlgebra a = upper_triangular_algebra(Q);
  const FiniteCoalgebra c = grouplike_coalgebra(Q, 2);
  CHECK(build_psi_bar(build_flip(a, c)).map == diagram::swap(Q, 3, 2));
  CHECK(build_psi_bar(build_flip(a, ground_coalgebra(Q))).map == Mat::identity(Q, 3));
}

TEST_CASE("psi-bar satisfies its defining square and is unique") {
  for (Field f : {Q, Field::of_characteristic(3)}) {
    const catalog::Catalog c = catalog::load(f);
    for (const auto& [name, e] : c.entwinings) {
      CAPTURE(name);
      const PsiBar bar = build_psi_bar(e);
      CHECK(check_psi_bar(e, bar).ok());
      CHECK(bar.map == diagram::psi_bar(e));
      const PsiBarSolution sol = solve_psi_bar(e);
      CHECK(sol.consistent);
      CHECK(sol.kernel_dim == 0);
      CHECK(sol.particular.map == bar.map);
    }
  }
}

TEST_CASE("a wrong psi-bar is detected") {
  const Entwining e = catalog::entwining(catalog::load(Q), "z2-hopf");
  PsiBar bar = build_psi_bar(e);
  Rng rng(2);
  testing::perturb_entry(bar.map, rng);
  CHECK_FALSE(check_psi_bar(e, bar).ok());
}

TEST_CASE("smash products are associative algebras") {
  const catalog::Catalog c = catalog::load(Q);
  for (const auto& [name, e] : c.entwinings) {
    CAPTURE(name);
    const SmashAlgebra x = build_smash(e);
    CHECK(x.algebra.dim == e.n() * e.m());
    CHECK(validate_algebra(x.algebra).ok());
    CHECK(diagram::check_algebra(x.algebra).ok());
    CHECK(x.algebra.product == diagram::smash_product(e));
    CHECK(check_smash_embeddings(e, x).ok());
  }
}

TEST_CASE("degenerate smash products") {
  const FiniteAlgebra a = upper_triangular_algebra(Q);
  CHECK(build_smash(build_flip(a, ground_coalgebra(Q))).algebra.product == a.product);

  // Flip: (ξ⊗a)(ξ'⊗a') = ξξ' ⊗ aa' in C^{*op}⊗A.
  const FiniteCoalgebra c = sweedler_bialgebra(Q).coalgebra;
  const SmashAlgebra x = build_smash(build_flip(a, c));
  const FiniteAlgebra b = dual_opposite_algebra(c);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t s = 0; s < 3; ++s)
              CHECK(x.algebra.mult(x.index(k, i), x.index(l, j), x.index(r, s)) == b.mult(k, l, r) * a.mult(i, j, s));
}

TEST_CASE("kZ/2 smash product is 4-dimensional and associative on all 64 triples") {
  const Entwining e = catalog::entwining(catalog::load(Q), "z2-hopf");
  const SmashAlgebra x = build_smash(e);
  CHECK(x.algebra.dim == 4);
  std::size_t triples = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        const Vec u = la::unit_vec(Q, 4, i), v = la::unit_vec(Q, 4, j), w = la::unit_vec(Q, 4, k);
        CHECK(x.algebra.multiply(x.algebra.multiply(u, v), w) == x.algebra.multiply(u, x.algebra.multiply(v, w)));
        ++triples;
      }
  CHECK(triples == 64);
}

TEST_CASE("integrals over C = k are the centre, with a brute-force oracle") {
  const Field f = Field::of_characteristic(5);
  for (const FiniteAlgebra& a : {cyclic_group_bialgebra(f, 2).algebra, upper_triangular_algebra(f),
                                 sweedler_bialgebra(f).algebra, catalog::split_algebra(f)}) {
    const Entwining e = build_flip(a, ground_coalgebra(f));
    const std::size_t z = centralizer_size(a);
    CHECK(power(5, entwining_integrals(e).size()) == z);
    CHECK(power(5, smash_integrals(e).size()) == z);
  }
  CHECK(entwining_integrals(build_flip(cyclic_group_bialgebra(Q, 2).algebra, ground_coalgebra(Q))).size() == 2);
  CHECK(entwining_integrals(build_flip(upper_triangular_algebra(Q), ground_coalgebra(Q))).size() == 1);
}

TEST_CASE("integrals over A = k are all of C") {
  const Entwining e = build_flip(ground_algebra(Q), grouplike_coalgebra(Q, 3));
  CHECK(entwining_integrals(e).size() == 3);
  CHECK(smash_integrals(e).size() == 3);
}

TEST_CASE("both integral notions agree") {
  for (Field f : {Q, Field::of_characteristic(2), Field::of_characteristic(3)}) {
    const catalog::Catalog c = catalog::load(f);
    for (const auto& [name, e] : c.entwinings) {
      CAPTURE(name);
      const std::vector<Mat> smash = smash_integrals(e);
      const std::vector<Vec> ent = entwining_integrals(e);
      CHECK(smash.size() == ent.size());
      for (const Mat& l : smash) {
        CHECK(check_smash_integral(e, l).ok());
        CHECK(diagram::check_smash_integral(e, l).ok());
        CHECK(check_entwining_integral(e, flatten_hom(l)).ok());
        CHECK(unflatten_hom(flatten_hom(l), e.n(), e.m()) == l);
      }
      for (const Vec& x : ent) {
        CHECK(diagram::check_entwining_integral(e, x).ok());
        CHECK(check_smash_integral(e, unflatten_hom(x, e.n(), e.m())).ok());
      }
    }
  }
}

TEST_CASE("theta and eta on every integral") {
  const catalog::Catalog c = catalog::load(Q);
  for (const auto& [name, e] : c.entwinings) {
    CAPTURE(name);
    const SmashAlgebra x = build_smash(e);
    for (const Mat& l : smash_integrals(e)) {
      CHECK(check_theta(e, x, l).ok());
      CHECK(check_eta(e, x, l).ok());
    }
  }
}

TEST_CASE("phi_x for C = k and x = 1⊗1 is the identity") {
  const Entwining e = build_flip(upper_triangular_algebra(Q), ground_coalgebra(Q));
  const FrobeniusOutcome out = frobenius_via_integral(e, e.algebra.unit);
  CHECK(out.found);
  CHECK(out.certificate.map == Mat::identity(Q, 3));
}

TEST_CASE("group-like flip with x = 1⊗(g1+g2)") {
  const Entwining e = build_flip(cyclic_group_bialgebra(Q, 2).algebra, grouplike_coalgebra(Q, 2));
  Vec x = la::zero_vec(Q, 4);
  x[0 * 2 + 0] = Scalar::one(Q);
  x[0 * 2 + 1] = Scalar::one(Q);
  const FrobeniusOutcome out = frobenius_via_integral(e, x);
  REQUIRE(out.found);
  // ξ_k⇀g_i = δ_ik g_i, so φ(ξ_k⊗a) = a⊗g_k: the swap C^*⊗A -> A⊗C.
  CHECK(out.certificate.map == diagram::swap(Q, 2, 2));
  CHECK(out.certificate.map * out.certificate.inverse == Mat::identity(Q, 4));
  CHECK(out.certificate.siblings.ok());
  CHECK(out.certificate.map == diagram::phi_x(e, x));
}

TEST_CASE("x = 0 fails with full rank defect, a non-integral is refused") {
  const Entwining e = build_flip(cyclic_group_bialgebra(Q, 2).algebra, grouplike_coalgebra(Q, 2));
  const FrobeniusOutcome out = frobenius_via_integral(e, la::zero_vec(Q, 4));
  CHECK_FALSE(out.found);
  CHECK(out.rank_defect == 4);
  const Entwining h = catalog::entwining(catalog::load(Q), "z2-hopf");
  Vec bad = la::zero_vec(Q, 4);
  bad[1] = Scalar::one(Q);  // 1⊗g is not an integral here
  REQUIRE_FALSE(check_entwining_integral(h, bad).ok());
  CHECK_THROWS_AS(frobenius_via_integral(h, bad), std::invalid_argument);
}

TEST_CASE("integral search") {
  const catalog::Catalog c = catalog::load(Q);
  const FrobeniusOutcome trivial = frobenius_search(catalog::entwining(c, "trivial-k"), 1, 4);
  CHECK(trivial.found);
  CHECK(trivial.candidates_tried == 1);
  const FrobeniusOutcome kc = frobenius_search(catalog::entwining(c, "k-groupdim2-flip"), 1, 4);
  REQUIRE(kc.found);
  CHECK(kc.certificate.witness == ones(Q, 2));
}

TEST_CASE("element search on group-like coalgebras") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const Entwining e = build_flip(ground_algebra(Q), grouplike_coalgebra(Q, n));
    const FrobeniusOutcome out = frobenius_element_search(e, 0, 8);
    REQUIRE(out.found);
    CHECK(out.certificate.witness == ones(Q, n));
    CHECK(out.certificate.form == Mat::identity(Q, n));
    CHECK(out.certificate.siblings.ok());
  }
}

TEST_CASE("C = k, e = 1: the form is the product on k") {
  const Entwining e = build_flip(upper_triangular_algebra(Q), ground_coalgebra(Q));
  const FrobeniusOutcome out = frobenius_element_search(e, 0, 4);
  REQUIRE(out.found);
  CHECK(out.certificate.witness == ones(Q, 1));
  CHECK(out.certificate.form == Mat::identity(Q, 1));
}

TEST_CASE("e = g1 gives a degenerate form with a radical") {
  const Entwining e = build_flip(ground_algebra(Q), grouplike_coalgebra(Q, 3));
  const Vec g1 = la::unit_vec(Q, 3, 0);
  CHECK(la::rank(left_hit_matrix(e.coalgebra, g1)) == 1);
  const FormVerdict v = frobenius_form_check(e, form_from_element(e.coalgebra, g1));
  CHECK_FALSE(v.report.ok());
  CHECK(v.radical.size() == 2);
  for (const Vec& r : v.radical) CHECK(la::is_zero(form_from_element(e.coalgebra, g1) * r));
}

TEST_CASE("form and element constructions invert each other") {
  const catalog::Catalog c = catalog::load(Q);
  Rng rng(8);
  for (const auto& [name, e] : c.entwinings) {
    CAPTURE(name);
    const Vec elem = testing::random_vec(Q, e.m(), rng);
    CHECK(element_from_form(e.coalgebra, form_from_element(e.coalgebra, elem)) == elem);
    CHECK(form_from_element(e.coalgebra, elem) == diagram::left_hit(e.coalgebra, elem));
  }
}

TEST_CASE("no one-sided successes across the criteria") {
  for (Field f : {Q, Field::of_characteristic(3)}) {
    const catalog::Catalog c = catalog::load(f);
    for (const auto& [name, e] : c.entwinings) {
      CAPTURE(name);
      const FrobeniusOutcome by_integral = frobenius_search(e, 5, 16);
      if (by_integral.found) {
        CHECK(by_integral.certificate.siblings.ok());
        CHECK(check_intertwining(e, build_smash(e), by_integral.certificate.map).ok());
      }
      const FrobeniusOutcome by_element = frobenius_element_search(e, 5, 16);
      if (by_element.found) {
        const Vec& elem = by_element.certificate.witness;
        CHECK(by_element.certificate.siblings.ok());
        CHECK(diagram::check_frobenius_element(e, elem).ok());
        CHECK(diagram::check_frobenius_map(e, elem).ok());
        CHECK(diagram::check_frobenius_form(e, by_element.certificate.form).ok());
        CHECK(check_form(e, by_element.certificate.form).ok());
      }
      const FrobeniusOutcome by_form = frobenius_form_search(e, 5, 16);
      CHECK(by_form.found == by_element.found);
    }
  }
}

TEST_CASE("Sweedler: the form diagram holds on a derived form") {
  const Entwining e = catalog::entwining(catalog::load(Q), "sweedler-h4");
  const FrobeniusOutcome out = frobenius_element_search(e, 0, 8);
  REQUIRE(out.found);
  CHECK(check_form(e, out.certificate.form).ok());
  CHECK(diagram::check_frobenius_form(e, out.certificate.form).ok());
}
