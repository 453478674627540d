#pragma once

#include <string>
#include <vector>

#include "entwine/entmod.hpp"
#include "entwine/smash.hpp"
#include "entwine/structures.hpp"

// Second, independent route for every identity in the library: each side is
// composed from structure maps with kron and matrix products, never from
// index sums. The element-form checks elsewhere and these must agree.
namespace entwine::diagram {

Mat id(Field f, std::size_t n);
/// V⊗W -> W⊗V for dim V = a, dim W = b.
Mat swap(Field f, std::size_t a, std::size_t b);
/// Evaluation pairing on V⊗V^* (or V^*⊗V) in coordinate bases: 1 x d².
Mat ev(Field f, std::size_t d);
/// Coevaluation k -> V⊗V^*: d² x 1.
Mat coev(Field f, std::size_t d);
/// A vector as a map k -> V.
Mat point(const Vec& v);

/// Adds one failure per column where lhs and rhs differ; the tuple is the
/// column index unflattened over `dims`.
void compare(ValidationReport& rep, const Mat& lhs, const Mat& rhs, const std::string& axiom,
             const std::vector<std::size_t>& dims);

ValidationReport check_algebra(const FiniteAlgebra& a);
ValidationReport check_coalgebra(const FiniteCoalgebra& c);
ValidationReport check_bialgebra(const FiniteBialgebra& h);
ValidationReport check_entwining(const Entwining& e);
ValidationReport check_module_coalgebra(const ModuleCoalgebra& mc);
ValidationReport check_comodule_algebra(const FiniteBialgebra& h, const ComoduleAlgebra& ca);
ValidationReport check_right_module(const FiniteAlgebra& a, const RightModule& m);
ValidationReport check_right_comodule(const FiniteCoalgebra& c, const RightComodule& v);
ValidationReport check_entwined_module(const EntwinedModule& mod);
ValidationReport check_morphism(const Mat& f, const EntwinedModule& source, const EntwinedModule& target);

/// μ of C^{*op} and of the convolution algebra C^*, as transposes of Δ.
Mat dual_op_product(const FiniteCoalgebra& c);
Mat convolution_product(const FiniteCoalgebra& c);
/// Coaction C^* -> C^*⊗C of the dual comodule.
Mat dual_coaction(const FiniteCoalgebra& c);

/// ψ̄ = (C^*⊗A⊗ev)(C^*⊗ψ⊗C^*)(coev⊗A⊗C^*).
Mat psi_bar(const Entwining& e);
/// Product of X = C^{*op} #_ψ̄ A on C^*⊗A.
Mat smash_product(const Entwining& e);

/// λ: C^* -> A (n x m) satisfies a·λ(b) = λ(b_ψ̄)·a^ψ̄.
ValidationReport check_smash_integral(const Entwining& e, const Mat& lambda);
/// x ∈ A⊗C (coordinates i·m + p) with a·x = x^1 ψ(x^2⊗a), compared as maps A -> A⊗C.
ValidationReport check_entwining_integral(const Entwining& e, const Vec& x);
/// φ_x: C^*⊗A -> A⊗C built from x.
Mat phi_x(const Entwining& e, const Vec& x);

/// Normalised integral map φ: C -> C^*⊗A ((m·n) x m), all three identities.
ValidationReport check_integral_map(const Entwining& e, const Mat& phi);
/// Normalised cointegral map φ: A^*⊗C -> A (n x (n·m)), all three identities.
ValidationReport check_cointegral_map(const Entwining& e, const Mat& phi);

/// Averages a linear g: from -> to (dim(to) x dim(from)) into a morphism of entwined modules.
Mat integral_lift(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi);
Mat cointegral_lift(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi);

/// Frobenius element e ∈ C: ψ(e⊗a) = a⊗e for all a.
ValidationReport check_frobenius_element(const Entwining& e, const Vec& elem);
/// ξ ↦ ξ⇀e and ξ ↦ e↼ξ as maps C^* -> C.
Mat left_hit(const FiniteCoalgebra& c, const Vec& elem);
Mat right_hit(const FiniteCoalgebra& c, const Vec& elem);
/// All conditions on φ_e = (ξ ↦ ξ⇀e): bijective, C-colinear from C^*, and ψ(φ⊗A)ψ̄ = A⊗φ;
/// plus bijectivity of ξ ↦ e↼ξ.
ValidationReport check_frobenius_map(const Entwining& e, const Vec& elem);
/// Bilinear form on C^* (Gram matrix m x m): associative for convolution,
/// nondegenerate and compatible with ψ̄.
ValidationReport check_frobenius_form(const Entwining& e, const Mat& gram);

}  // namespace entwine::diagram
