#pragma once

#include "entwine/structures.hpp"

namespace entwine {

/// ψ̄: A⊗C^* -> C^*⊗A, the companion of ψ under the evaluation pairing:
/// (A⊗ev_C)(ψ(c⊗a)⊗ξ) = (ev_C⊗A)(c⊗ψ̄(a⊗ξ)). Stored as an (m·n) x (n·m)
/// matrix with rows (l, j) for ξ_l⊗a_j and columns (i, k) for a_i⊗ξ_k.
struct PsiBar {
  std::size_t n = 0;
  std::size_t m = 0;
  Mat map;

  const Scalar& at(std::size_t i, std::size_t k, std::size_t l, std::size_t j) const {
    return map(l * n + j, i * m + k);
  }
};

/// ψ̄(a⊗ξ) = Σ_n ξ_n ⊗ (A⊗ev_C)(ψ(c_n⊗a)⊗ξ) over the coordinate dual basis.
PsiBar build_psi_bar(const Entwining& e);

/// Exhaustive check of the defining square on all basis triples (c_p, a_i, ξ_k).
ValidationReport check_psi_bar(const Entwining& e, const PsiBar& bar);

/// The defining square read as a linear system in the unknown entries of ψ̄.
struct PsiBarSolution {
  bool consistent = false;
  std::size_t kernel_dim = 0;
  PsiBar particular;
};
PsiBarSolution solve_psi_bar(const Entwining& e);

/// X = B #_ψ̄ A on B⊗A, B = C^{*op}, product (b⊗a)(b'⊗a') = b ψ̄(a⊗b') a'.
/// Basis vector ξ_k⊗a_i has index k·n + i.
struct SmashAlgebra {
  FiniteAlgebra algebra;
  FiniteAlgebra b;  // C^{*op}
  PsiBar psi_bar;
  Mat embed_a;      // a ↦ ε⊗a
  Mat embed_b;      // b ↦ b⊗1_A

  std::size_t n() const { return psi_bar.n; }
  std::size_t m() const { return psi_bar.m; }
  std::size_t index(std::size_t k, std::size_t i) const { return k * n() + i; }
};

SmashAlgebra build_smash(const Entwining& e);

/// Both embeddings are unital and multiplicative.
ValidationReport check_smash_embeddings(const Entwining& e, const SmashAlgebra& x);

}  // namespace entwine
