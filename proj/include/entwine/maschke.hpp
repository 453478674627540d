#pragma once

#include <cstdint>
#include <string>

#include "entwine/entmod.hpp"
#include "entwine/structures.hpp"

namespace entwine {

// Integral map φ: C -> C^*⊗A is an (m·n) x m matrix, row k·n + i for ξ_k⊗a_i.
// Cointegral map φ: A^*⊗C -> A is an n x (n·m) matrix, column k·m + p for a_k^*⊗c_p.

struct MapSolution {
  bool exists = false;
  Mat map;                       // one solution, valid when exists
  std::size_t homogeneous_dim = 0;  // solutions of the two linear conditions
  std::size_t solution_dim = 0;     // dimension of the affine solution set, when exists
  std::string failure;              // why no solution exists
  ValidationReport verification;    // element-form re-check of the returned map
};

MapSolution find_integral_map(const Entwining& e);
MapSolution find_cointegral_map(const Entwining& e);

ValidationReport check_integral_map(const Entwining& e, const Mat& phi);
ValidationReport check_cointegral_map(const Entwining& e, const Mat& phi);

/// φ̃ = (C⊗φ)(ψ̂⊗C)(A^*⊗Δ): A^*⊗C -> C⊗A, with ψ̂(a_k^*⊗c_p) = Σ ψ(p,i,k,q) c_q⊗a_i^*.
Mat cointegral_lifted_map(const Entwining& e, const Mat& phi);
/// Right A-linear, right C-colinear and left C-colinear.
ValidationReport check_cointegral_lifted_map(const Entwining& e, const Mat& lifted);

/// g: from -> to, dim(to) x dim(from). Returns g̃ with the same shape.
Mat lift_with_integral_map(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi);
Mat lift_with_cointegral_map(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi);

enum class MapKind { integral, cointegral };
enum class SplitKind { section, retraction };
std::string map_kind_name(MapKind k);
std::string split_kind_name(SplitKind k);

/// f: source -> target a morphism. For a section g: target -> source with f∘g = id;
/// for a retraction g: target -> source with g∘f = id. g must be A-linear
/// (integral maps) or C-colinear (cointegral maps).
struct SplitProblem {
  EntwinedModule source;
  EntwinedModule target;
  Mat f;
  Mat g;
  SplitKind kind = SplitKind::section;
};

struct SplitCertificate {
  MapKind via = MapKind::integral;
  SplitKind kind = SplitKind::section;
  Mat f;
  Mat g;
  Mat g_tilde;
  Mat phi;
  ValidationReport preconditions;
  ValidationReport checks;
  bool ok() const { return preconditions.ok() && checks.ok(); }
};

/// Throws std::invalid_argument on shape mismatch. Precondition failures are
/// reported in the certificate and no lift is attempted.
SplitCertificate split(const SplitProblem& problem, MapKind via, const Mat& phi);

/// M ⊕ M' with f the projection (section case) or the inclusion (retraction
/// case) and g the canonical splitting plus a random A-linear (integral) or
/// C-colinear (cointegral) correction through M'.
SplitProblem make_split_problem(const EntwinedModule& m, const EntwinedModule& complement, SplitKind kind, MapKind via,
                                std::uint64_t seed);

}  // namespace entwine
