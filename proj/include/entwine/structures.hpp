#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "entwine/linsolve.hpp"
#include "entwine/mat.hpp"

namespace entwine {

using la::Field;
using la::Mat;
using la::Scalar;
using la::Vec;

/// One failed identity: the axiom's name and the basis tuple where the two
/// sides differ.
struct Failure {
  std::string axiom;
  std::vector<std::size_t> tuple;
};

struct ValidationReport {
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void add(std::string axiom, std::vector<std::size_t> tuple) {
    failures.push_back({std::move(axiom), std::move(tuple)});
  }
  void append(const ValidationReport& other, const std::string& prefix = {});
  /// Distinct axiom names in order of first failure.
  std::vector<std::string> axioms() const;
};

/// Thrown when an operation's structural precondition does not hold.
class InvalidStructure : public std::runtime_error {
 public:
  InvalidStructure(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Algebra by structure constants: e_i·e_j = Σ_k mult(i,j,k) e_k.
/// `product` is the linear map A⊗A -> A (n x n²), `unit` the coordinates of 1_A.
struct FiniteAlgebra {
  Field field;
  std::size_t dim = 0;
  Mat product;
  Vec unit;
  std::vector<std::string> labels;

  FiniteAlgebra() = default;
  FiniteAlgebra(Field f, std::size_t n);

  const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const { return product(k, i * dim + j); }
  void set_mult(std::size_t i, std::size_t j, std::size_t k, Scalar c) { product(k, i * dim + j) = std::move(c); }
  Vec multiply(const Vec& x, const Vec& y) const;
  Mat unit_map() const { return Mat::column(unit); }
  /// Matrix of a ↦ x·a (left) and a ↦ a·x (right).
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
};

/// Coalgebra by structure constants: Δ(c_i) = Σ_{j,k} comult(i,j,k) c_j⊗c_k.
/// `coproduct` is C -> C⊗C (m² x m), `counit` the values ε(c_i).
struct FiniteCoalgebra {
  Field field;
  std::size_t dim = 0;
  Mat coproduct;
  Vec counit;
  std::vector<std::string> labels;

  FiniteCoalgebra() = default;
  FiniteCoalgebra(Field f, std::size_t m);

  const Scalar& comult(std::size_t i, std::size_t j, std::size_t k) const { return coproduct(j * dim + k, i); }
  void set_comult(std::size_t i, std::size_t j, std::size_t k, Scalar c) { coproduct(j * dim + k, i) = std::move(c); }
  Mat counit_map() const;
};

struct FiniteBialgebra {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
};

/// ψ: C⊗A -> A⊗C with ψ(c_p⊗a_i) = Σ_{j,q} psi(p,i,j,q) a_j⊗c_q.
/// `map` is (n·m) x (m·n): rows indexed by (j,q), columns by (p,i).
struct Entwining {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  Mat map;

  Field field() const { return algebra.field; }
  std::size_t n() const { return algebra.dim; }
  std::size_t m() const { return coalgebra.dim; }
  const Scalar& psi(std::size_t p, std::size_t i, std::size_t j, std::size_t q) const {
    return map(j * m() + q, p * n() + i);
  }
  void set_psi(std::size_t p, std::size_t i, std::size_t j, std::size_t q, Scalar c) {
    map(j * m() + q, p * n() + i) = std::move(c);
  }
};

/// Right H-module coalgebra: c_p·h_h = Σ_q action(p,h,q) c_q. `map` is C⊗H -> C.
struct ModuleCoalgebra {
  FiniteBialgebra bialgebra;
  FiniteCoalgebra coalgebra;
  Mat map;

  const Scalar& act(std::size_t p, std::size_t h, std::size_t q) const {
    return map(q, p * bialgebra.algebra.dim + h);
  }
};

/// Right comodule algebra: ρ(a_i) = Σ_{j,q} coact(i,j,q) a_j⊗c_q. `map` is A -> A⊗C.
/// For a Doi-Hopf datum the coalgebra is the bialgebra's underlying coalgebra.
struct ComoduleAlgebra {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  Mat map;

  const Scalar& coact(std::size_t i, std::size_t j, std::size_t q) const {
    return map(j * coalgebra.dim + q, i);
  }
};

struct DoiHopfDatum {
  FiniteBialgebra bialgebra;
  ModuleCoalgebra module_coalgebra;
  ComoduleAlgebra comodule_algebra;
};

/// Right A-module: e_m·a_i = Σ action(m,i,m2) e_m2 stored as M⊗A -> M.
struct RightModule {
  std::size_t dim = 0;
  Mat map;
  const Scalar& act(std::size_t m, std::size_t i, std::size_t m2, std::size_t n) const { return map(m2, m * n + i); }
};

/// Right C-comodule: ρ(e_m) = Σ coaction(m,m2,p) e_m2⊗c_p stored as M -> M⊗C.
struct RightComodule {
  std::size_t dim = 0;
  Mat map;
};

// --- validators (element-form; every failing basis tuple is reported) ---

ValidationReport validate_algebra(const FiniteAlgebra& a);
ValidationReport validate_coalgebra(const FiniteCoalgebra& c);
ValidationReport validate_bialgebra(const FiniteBialgebra& h);
ValidationReport validate_entwining(const Entwining& e);
ValidationReport validate_module_coalgebra(const ModuleCoalgebra& mc);
/// Comodule axioms only (coassociative, counital).
ValidationReport validate_comodule_structure(const ComoduleAlgebra& ca);
/// Comodule axioms plus ρ multiplicative and unital, as needed over a bialgebra.
ValidationReport validate_comodule_algebra(const FiniteBialgebra& h, const ComoduleAlgebra& ca);
ValidationReport validate_doi_hopf(const DoiHopfDatum& d);
ValidationReport validate_right_module(const FiniteAlgebra& a, const RightModule& m);
ValidationReport validate_right_comodule(const FiniteCoalgebra& c, const RightComodule& v);

/// Checks (f⊗g)∘ψ = ψ'∘(g⊗f) together with f an algebra map and g a coalgebra map.
ValidationReport validate_entwining_morphism(const Entwining& source, const Entwining& target, const Mat& algebra_map,
                                             const Mat& coalgebra_map);

// --- constructions ---

Entwining build_flip(const FiniteAlgebra& a, const FiniteCoalgebra& c);
/// ψ(c⊗a) = a_(0) ⊗ c·a_(1). Throws InvalidStructure when the datum fails validation.
Entwining build_doi_hopf(const DoiHopfDatum& d);

/// B = C^{*op}: ⟨c, bb'⟩ = ⟨c_(2), b⟩⟨c_(1), b'⟩ on the coordinate dual basis; unit ε.
FiniteAlgebra dual_opposite_algebra(const FiniteCoalgebra& c);
/// Convolution algebra C^*: ⟨c, ξξ'⟩ = ⟨c_(1), ξ⟩⟨c_(2), ξ'⟩.
FiniteAlgebra convolution_algebra(const FiniteCoalgebra& c);

/// ξ⇀c = c_(1)⟨c_(2), ξ⟩.
Vec left_hit(const FiniteCoalgebra& c, const Vec& xi, const Vec& elem);
/// c↼ξ = ⟨c_(1), ξ⟩c_(2).
Vec right_hit(const FiniteCoalgebra& c, const Vec& xi, const Vec& elem);
/// Matrix of ξ ↦ ξ⇀e (C^* -> C) and of ξ ↦ e↼ξ.
Mat left_hit_map(const FiniteCoalgebra& c, const Vec& e);
Mat right_hit_map(const FiniteCoalgebra& c, const Vec& e);

/// Regular right module A_A and the dual right module A^* (⟨a', a^*·a⟩ = ⟨aa', a^*⟩).
RightModule regular_module(const FiniteAlgebra& a);
RightModule dual_module(const FiniteAlgebra& a);
/// Regular right comodule C^C and C^* with ξ_(0)⟨ξ_(1), ξ'⟩ = ξ'ξ (convolution).
RightComodule regular_comodule(const FiniteCoalgebra& c);
RightComodule dual_comodule(const FiniteCoalgebra& c);

// --- common examples ---

FiniteAlgebra ground_algebra(Field f);
FiniteCoalgebra ground_coalgebra(Field f);
/// kG for the cyclic group of the given order, basis g^0, ..., g^{order-1}.
FiniteBialgebra cyclic_group_bialgebra(Field f, std::size_t order);
/// Group-like coalgebra: Δ(g_i) = g_i⊗g_i, ε(g_i) = 1.
FiniteCoalgebra grouplike_coalgebra(Field f, std::size_t n);
/// Upper-triangular 2x2 matrices, basis E11, E12, E22.
FiniteAlgebra upper_triangular_algebra(Field f);
/// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx with g² = 1,
/// x² = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x. Requires characteristic ≠ 2.
FiniteBialgebra sweedler_bialgebra(Field f);
/// H as a right module coalgebra over itself (right multiplication) and as a
/// right comodule algebra over itself (coproduct).
DoiHopfDatum self_datum(const FiniteBialgebra& h);
/// Datum over the one-dimensional bialgebra k with trivial (co)actions.
DoiHopfDatum trivial_datum(const FiniteAlgebra& a, const FiniteCoalgebra& c);

}  // namespace entwine
