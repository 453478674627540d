#pragma once

#include <cstddef>
#include <vector>

#include "entwine/smash.hpp"
#include "entwine/structures.hpp"

namespace entwine {

/// Right A-module, right C-comodule M with ρ^M(m·a) = m_(0)·a_α ⊗ m_(1)^α.
/// `action` is M⊗A -> M (d x d·n); `coaction` is M -> M⊗C (d·m x d).
struct EntwinedModule {
  Entwining entwining;
  std::size_t dim = 0;
  Mat action;
  Mat coaction;

  const Scalar& act(std::size_t m, std::size_t i, std::size_t m2) const {
    return action(m2, m * entwining.n() + i);
  }
  const Scalar& coact(std::size_t m, std::size_t m2, std::size_t p) const {
    return coaction(m2 * entwining.m() + p, m);
  }
};

ValidationReport validate_entwined_module(const EntwinedModule& mod);

/// M⊗C with coaction M⊗Δ and action (m⊗c)·a = m·ψ(c⊗a).
EntwinedModule induce_from_module(const Entwining& e, const RightModule& mod);
/// V⊗A with action V⊗μ and coaction v⊗a ↦ v_(0)⊗ψ(v_(1)⊗a).
EntwinedModule induce_from_comodule(const Entwining& e, const RightComodule& v);

/// f: M -> N as a dim(N) x dim(M) matrix. Empty report iff f is A-linear and C-colinear.
ValidationReport is_morphism(const Mat& f, const EntwinedModule& source, const EntwinedModule& target);
ValidationReport is_a_linear(const Mat& f, const EntwinedModule& source, const EntwinedModule& target);
ValidationReport is_c_colinear(const Mat& f, const EntwinedModule& source, const EntwinedModule& target);

/// Bases of Hom_A(M, N), Hom^C(M, N) and Hom_A^C(M, N), as dim(N) x dim(M) matrices.
std::vector<Mat> a_linear_maps(const EntwinedModule& source, const EntwinedModule& target);
std::vector<Mat> c_colinear_maps(const EntwinedModule& source, const EntwinedModule& target);
std::vector<Mat> module_morphisms(const EntwinedModule& source, const EntwinedModule& target);

/// M ⊕ N with M occupying the first dim(M) coordinates.
EntwinedModule direct_sum(const EntwinedModule& first, const EntwinedModule& second);

/// The structure of M carried along an invertible t: M -> M'. Throws
/// std::invalid_argument when t is not invertible.
EntwinedModule transport(const EntwinedModule& mod, const Mat& t);

/// Right module over the smash algebra X: `action` is M⊗X -> M (d x d·dim X).
struct SmashModule {
  std::size_t dim = 0;
  Mat action;
};

ValidationReport validate_smash_module(const SmashAlgebra& x, const SmashModule& mod);

/// m·(ξ⊗a) = m_(0)·a ⟨m_(1), ξ⟩.
SmashModule to_smash_module(const EntwinedModule& mod, const SmashAlgebra& x);
/// A-action through a ↦ ε⊗a and coaction from m_(0)⟨m_(1), ξ⟩ = m·(ξ⊗1_A).
/// Throws InvalidStructure when the input is not a valid X-module.
EntwinedModule from_smash_module(const SmashModule& mod, const Entwining& e, const SmashAlgebra& x);

/// f: M -> N is X-linear for the given X-module structures.
ValidationReport is_smash_linear(const Mat& f, const SmashModule& source, const SmashModule& target,
                                 const SmashAlgebra& x);

}  // namespace entwine
