#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/diagram.hpp"
#include "entwine/maschke.hpp"
#include "support.hpp"

using namespace entwine;
using entwine::testing::Rng;

namespace {

const Field Q = Field::rationals();

EntwinedModule regular_induced(const Entwining& e) { return induce_from_module(e, regular_module(e.algebra)); }

}  // namespace

TEST_CASE("integral map over C = k is forced to be the unit") {
  const Entwining e = build_flip(upper_triangular_algebra(Q), ground_coalgebra(Q));
  const MapSolution s = find_integral_map(e);
  REQUIRE(s.exists);
  CHECK(s.solution_dim == 0);
  CHECK(s.map == Mat::column(e.algebra.unit));
  CHECK(s.verification.ok());
  CHECK(diagram::check_integral_map(e, s.map).ok());
}

TEST_CASE("integral map over A = k is re-verified by the diagram evaluator") {
  const Entwining e = build_flip(ground_algebra(Q), grouplike_coalgebra(Q, 3));
  const MapSolution s = find_integral_map(e);
  REQUIRE(s.exists);
  CHECK(check_integral_map(e, s.map).ok());
  CHECK(diagram::check_integral_map(e, s.map).ok());
}

TEST_CASE("cointegral map over A = k and over C = k") {
  const Entwining ak = build_flip(ground_algebra(Q), grouplike_coalgebra(Q, 2));
  const MapSolution s = find_cointegral_map(ak);
  REQUIRE(s.exists);
  // φ(ε_A⊗c) = ε(c)
  CHECK(s.map == ak.coalgebra.counit_map());

  const Entwining kz2 = build_flip(cyclic_group_bialgebra(Q, 2).algebra, ground_coalgebra(Q));
  const MapSolution t = find_cointegral_map(kz2);
  REQUIRE(t.exists);
  // Σ_i a_i φ(a_i^*⊗1) = 1_A, expanded by hand.
  Mat sum(Q, 2, 1);
  for (std::size_t i = 0; i < 2; ++i) sum += Mat::column(kz2.algebra.multiply(la::unit_vec(Q, 2, i), t.map.col(i)));
  CHECK(sum == kz2.algebra.unit_map());
  CHECK(diagram::check_cointegral_map(kz2, t.map).ok());
}

TEST_CASE("Hopf datum over the rationals has both maps, verified twice") {
  const Entwining e = catalog::entwining(catalog::load(Q), "z2-hopf");
  const MapSolution im = find_integral_map(e);
  REQUIRE(im.exists);
  CHECK(im.verification.ok());
  CHECK(diagram::check_integral_map(e, im.map).ok());
  const MapSolution cm = find_cointegral_map(e);
  REQUIRE(cm.exists);
  CHECK(cm.verification.ok());
  CHECK(diagram::check_cointegral_map(e, cm.map).ok());
  CHECK(check_cointegral_lifted_map(e, cointegral_lifted_map(e, cm.map)).ok());
}

TEST_CASE("a perturbed map fails both evaluators") {
  const Entwining e = catalog::entwining(catalog::load(Q), "sweedler-h4");
  const MapSolution im = find_integral_map(e), cm = find_cointegral_map(e);
  REQUIRE(im.exists);
  REQUIRE(cm.exists);
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    Mat p = im.map;
    testing::perturb_entry(p, rng);
    CHECK(check_integral_map(e, p).ok() == diagram::check_integral_map(e, p).ok());
    Mat q = cm.map;
    testing::perturb_entry(q, rng);
    CHECK(check_cointegral_map(e, q).ok() == diagram::check_cointegral_map(e, q).ok());
  }
}

TEST_CASE("solver results agree with the diagram evaluator on the whole catalog") {
  for (Field f : {Q, Field::of_characteristic(2), Field::of_characteristic(3)}) {
    const catalog::Catalog c = catalog::load(f);
    for (const auto& [name, e] : c.entwinings) {
      CAPTURE(f.name());
      CAPTURE(name);
      const MapSolution im = find_integral_map(e);
      if (im.exists) {
        CHECK(im.verification.ok());
        CHECK(diagram::check_integral_map(e, im.map).ok());
      } else {
        CHECK_FALSE(im.failure.empty());
      }
      const MapSolution cm = find_cointegral_map(e);
      if (cm.exists) {
        CHECK(cm.verification.ok());
        CHECK(diagram::check_cointegral_map(e, cm.map).ok());
      } else {
        CHECK_FALSE(cm.failure.empty());
      }
    }
  }
}

TEST_CASE("known boundary cases") {
  const Field f2 = Field::of_characteristic(2);
  const catalog::Catalog c2 = catalog::load(f2);
  // Hopf modules are free whatever the characteristic.
  CHECK(find_integral_map(catalog::entwining(c2, "z2-hopf")).exists);
  // Classical Maschke fails for kZ/2 in characteristic 2.
  const MapSolution m = find_cointegral_map(catalog::entwining(c2, "z2-flip-k"));
  CHECK_FALSE(m.exists);
  CHECK(m.failure.find("inconsistent") != std::string::npos);
  // Upper-triangular matrices are not semisimple in any characteristic.
  CHECK_FALSE(find_cointegral_map(catalog::entwining(catalog::load(Q), "ut2-flip-k")).exists);
  // Over C = k the integral map always exists.
  CHECK(find_integral_map(catalog::entwining(c2, "ut2-flip-k")).exists);
}

TEST_CASE("identity splittings lift to the identity") {
  const catalog::Catalog c = catalog::load(Q);
  for (const auto& [name, e] : c.entwinings) {
    CAPTURE(name);
    const EntwinedModule m = regular_induced(e);
    const Mat id = Mat::identity(Q, m.dim);
    if (const MapSolution im = find_integral_map(e); im.exists) {
      CHECK(lift_with_integral_map(m, m, id, im.map) == id);
      CHECK(diagram::integral_lift(m, m, id, im.map) == id);
    }
    if (const MapSolution cm = find_cointegral_map(e); cm.exists) {
      CHECK(lift_with_cointegral_map(m, m, id, cm.map) == id);
      CHECK(diagram::cointegral_lift(m, m, id, cm.map) == id);
    }
  }
}

TEST_CASE("over C = k every A-linear splitting is already a morphism") {
  const catalog::Catalog c = catalog::load(Q);
  for (const auto& [name, a] : c.algebras) {
    CAPTURE(name);
    const Entwining e = build_flip(a, ground_coalgebra(Q));
    const MapSolution im = find_integral_map(e);
    REQUIRE(im.exists);
    const EntwinedModule m = regular_induced(e);
    const EntwinedModule other = induce_from_module(e, dual_module(a));
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      for (SplitKind kind : {SplitKind::section, SplitKind::retraction}) {
        const SplitProblem pr = make_split_problem(m, other, kind, MapKind::integral, seed);
        const SplitCertificate cert = split(pr, MapKind::integral, im.map);
        CHECK(cert.ok());
        CHECK(cert.g_tilde == cert.g);
      }
  }
}

TEST_CASE("over A = k every colinear splitting is already a morphism") {
  const Entwining e = build_flip(ground_algebra(Q), grouplike_coalgebra(Q, 3));
  const MapSolution cm = find_cointegral_map(e);
  REQUIRE(cm.exists);
  const EntwinedModule m = induce_from_comodule(e, regular_comodule(e.coalgebra));
  const EntwinedModule other = induce_from_comodule(e, dual_comodule(e.coalgebra));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const SplitProblem pr = make_split_problem(m, other, SplitKind::section, MapKind::cointegral, seed);
    const SplitCertificate cert = split(pr, MapKind::cointegral, cm.map);
    CHECK(cert.ok());
    CHECK(cert.g_tilde == cert.g);
  }
}

TEST_CASE("Hopf datum: a perturbed section is corrected") {
  const Entwining e = catalog::entwining(catalog::load(Q), "z2-hopf");
  const MapSolution im = find_integral_map(e), cm = find_cointegral_map(e);
  REQUIRE(im.exists);
  REQUIRE(cm.exists);
  // M = H as a Hopf module, N = M⊕M.
  const EntwinedModule h = induce_from_comodule(e, RightComodule{1, Mat::column(la::unit_vec(Q, 2, 0))});
  std::size_t nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    for (MapKind via : {MapKind::integral, MapKind::cointegral})
      for (SplitKind kind : {SplitKind::section, SplitKind::retraction}) {
        const SplitProblem pr = make_split_problem(h, h, kind, via, seed);
        const SplitCertificate cert = split(pr, via, via == MapKind::integral ? im.map : cm.map);
        CHECK(cert.preconditions.ok());
        CHECK(cert.checks.ok());
        nontrivial += !(cert.g_tilde == cert.g);
        const Mat lifted = via == MapKind::integral ? diagram::integral_lift(pr.target, pr.source, pr.g, im.map)
                                                    : diagram::cointegral_lift(pr.target, pr.source, pr.g, cm.map);
        CHECK(lifted == cert.g_tilde);
      }
  CHECK(nontrivial > 0);
}

TEST_CASE("split refuses bad preconditions") {
  const Entwining e = catalog::entwining(catalog::load(Q), "z2-hopf");
  const MapSolution im = find_integral_map(e);
  const EntwinedModule m = regular_induced(e);
  SplitProblem pr = make_split_problem(m, m, SplitKind::section, MapKind::integral, 1);
  pr.g = Mat(Q, pr.g.rows(), pr.g.cols());  // no longer splits f
  const SplitCertificate cert = split(pr, MapKind::integral, im.map);
  CHECK_FALSE(cert.preconditions.ok());
  CHECK_FALSE(cert.ok());
  SplitProblem wrong = pr;
  wrong.f = Mat(Q, 1, 1);
  CHECK_THROWS_AS(split(wrong, MapKind::integral, im.map), std::invalid_argument);
}

TEST_CASE("lifts of morphisms are the morphisms themselves") {
  const catalog::Catalog c = catalog::load(Q);
  for (const catalog::Morphism& mor : catalog::morphisms(c, 8)) {
    CAPTURE(mor.source);
    CAPTURE(mor.target);
    const EntwinedModule* s = nullptr;
    const EntwinedModule* t = nullptr;
    for (const auto& m : c.modules) {
      if (m.name == mor.source) s = &m.value;
      if (m.name == mor.target) t = &m.value;
    }
    REQUIRE(s);
    REQUIRE(t);
    REQUIRE(is_morphism(mor.map, *s, *t).ok());
    if (const MapSolution im = find_integral_map(s->entwining); im.exists)
      CHECK(lift_with_integral_map(*s, *t, mor.map, im.map) == mor.map);
    if (const MapSolution cm = find_cointegral_map(s->entwining); cm.exists)
      CHECK(lift_with_cointegral_map(*s, *t, mor.map, cm.map) == mor.map);
  }
}
