#pragma once

#include <vector>

#include "entwine/entmod.hpp"
#include "entwine/structures.hpp"

namespace entwine {

/// Basis of B = {b : ρ(b·a) = b·ρ(a) for all a}.
std::vector<Vec> coinvariants(const ComoduleAlgebra& ca);

/// A⊗_B A as a quotient of A⊗A: `projection` is q x n², `section` is n² x q
/// with projection·section = I.
struct Quotient {
  std::size_t dim = 0;
  Mat projection;
  Mat section;
};

Quotient build_quotient(const FiniteAlgebra& a, const std::vector<Vec>& b);

struct GaloisData {
  std::vector<Vec> b_basis;
  Quotient quotient;
  Mat can_lift;     // a⊗a' ↦ aρ(a') on A⊗A, (n·m) x n²
  Mat can;          // on the quotient, (n·m) x q
  Mat can_inverse;  // valid only when can is bijective
  Mat tau;          // column p is can⁻¹(1⊗c_p), q x m
};

struct GaloisResult {
  bool galois = false;
  std::size_t rank_defect = 0;
  GaloisData data;
  Entwining entwining;       // valid only when galois
  ValidationReport checks;   // entwining axioms, A as entwined module, equivariance of can
};

/// Throws InvalidStructure when ρ is not a coassociative counital coaction.
GaloisResult canonical_entwining(const ComoduleAlgebra& ca);

/// Left A-linearity and right C-colinearity of can.
ValidationReport check_can_equivariance(const ComoduleAlgebra& ca, const GaloisData& g);

/// A with action μ and coaction ρ over a given entwining.
EntwinedModule algebra_as_entwined_module(const Entwining& e, const ComoduleAlgebra& ca);

/// x^τ = Σ a_i τ(c_i) as a vector of A⊗_B A.
Vec x_tau(const ComoduleAlgebra& ca, const GaloisData& g, const Vec& x);
/// True iff a·x^τ = x^τ·a for every basis a.
bool galois_integral_check(const ComoduleAlgebra& ca, const GaloisResult& r, const Vec& x);

}  // namespace entwine
