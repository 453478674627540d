#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entwine/entmod.hpp"
#include "entwine/smash.hpp"
#include "entwine/structures.hpp"

namespace entwine {

// Hom(B, A) is identified with A⊗C: λ is the n x m matrix with λ(ξ_k) = Σ_j λ(j,k) a_j,
// flattened as j·m + k. Integrals x ∈ A⊗C use the same coordinates.

/// Basis of Int(B#ψ̄A), each λ an n x m matrix.
std::vector<Mat> smash_integrals(const Entwining& e);
/// Basis of {x ∈ A⊗C : a·x = x·a}, x with coordinates i·m + p.
std::vector<Vec> entwining_integrals(const Entwining& e);

ValidationReport check_smash_integral(const Entwining& e, const Mat& lambda);
ValidationReport check_entwining_integral(const Entwining& e, const Vec& x);

Vec flatten_hom(const Mat& lambda);
Mat unflatten_hom(const Vec& v, std::size_t n, std::size_t m);

/// Matrix of f ↦ f·x on Hom(B, A) for the basis element x = ξ_k⊗a_i of X.
Mat hom_right_action(const Entwining& e, const SmashAlgebra& x, std::size_t k, std::size_t i);
/// Matrix of f ↦ a_t·f on Hom(B, A).
Mat hom_left_action(const Entwining& e, std::size_t t);

/// θ(λ): X -> Hom(B, A), x ↦ λ·x, as an (n·m) x (m·n) matrix.
Mat theta(const Entwining& e, const SmashAlgebra& x, const Mat& lambda);
/// θ(λ) is left A-linear and right X-linear, and θ̃(θ(λ)) = θ(λ)(1_X) = λ.
ValidationReport check_theta(const Entwining& e, const SmashAlgebra& x, const Mat& lambda);
/// η: Hom_A(X, A) -> Hom(B, A) restricted to the image of η⁻¹: η⁻¹(λ) is right A-linear and η∘η⁻¹ = id.
ValidationReport check_eta(const Entwining& e, const SmashAlgebra& x, const Mat& lambda);

/// φ_x(ξ⊗a) = Σ a_i ψ(ξ⇀c_i⊗a), (n·m) x (m·n).
Mat phi_from_integral(const Entwining& e, const Vec& x);
/// φ_x is a morphism of (A,A)-bimodules and right C-comodules C^*⊗A -> A⊗C.
ValidationReport check_intertwining(const Entwining& e, const SmashAlgebra& x, const Mat& phi);

/// e with ψ(e⊗a) = a⊗e for all a.
std::vector<Vec> invariant_elements(const Entwining& e);
ValidationReport check_invariant_element(const Entwining& e, const Vec& elem);
/// Φ(s, k): coefficient of c_s in ξ_k⇀e.
Mat left_hit_matrix(const FiniteCoalgebra& c, const Vec& elem);
Mat right_hit_matrix(const FiniteCoalgebra& c, const Vec& elem);
/// Gram matrix [ξ_k, ξ_l] = ⟨φ(ξ_l), ξ_k⟩.
Mat form_from_element(const FiniteCoalgebra& c, const Vec& elem);
/// e = Σ_n [ε, ξ_n] c_n.
Vec element_from_form(const FiniteCoalgebra& c, const Mat& gram);
/// Comodule map property and ψ̄-square for φ = ξ ↦ ξ⇀e.
ValidationReport check_element_map(const Entwining& e, const Vec& elem);
/// Associativity for the convolution product, nondegeneracy and the ψ̄ diagram.
ValidationReport check_form(const Entwining& e, const Mat& gram);

enum class Criterion { integral, element, form };
std::string criterion_name(Criterion c);

struct FrobeniusCertificate {
  Criterion via = Criterion::integral;
  Vec witness;   // x ∈ A⊗C, or e ∈ C
  Mat form;      // Gram matrix, for the element and form criteria
  Mat map;       // φ_x or ξ ↦ ξ⇀e
  Mat inverse;
  ValidationReport siblings;  // identities of the equivalent criteria on derived witnesses
};

struct FrobeniusOutcome {
  bool found = false;
  std::size_t space_dim = 0;
  std::size_t candidates_tried = 0;
  std::size_t rank_defect = 0;  // of the last candidate tried
  FrobeniusCertificate certificate;
};

/// Throws std::invalid_argument when x is not an integral.
FrobeniusOutcome frobenius_via_integral(const Entwining& e, const Vec& x);
/// Basis of the integral space first, then the sum of the basis, then `trials` seeded random combinations.
FrobeniusOutcome frobenius_search(const Entwining& e, std::uint64_t seed, std::size_t trials);
FrobeniusOutcome frobenius_element_search(const Entwining& e, std::uint64_t seed, std::size_t trials);

/// Element search followed by the form criterion on the form derived from e.
FrobeniusOutcome frobenius_form_search(const Entwining& e, std::uint64_t seed, std::size_t trials);

struct FormVerdict {
  ValidationReport report;
  std::vector<Vec> radical;  // nonempty iff degenerate
  Vec element;               // reverse construction
  ValidationReport element_report;
};
FormVerdict frobenius_form_check(const Entwining& e, const Mat& gram);

}  // namespace entwine
