#pragma once

#include <string>
#include <vector>

#include "entwine/entmod.hpp"
#include "entwine/json_io.hpp"
#include "entwine/structures.hpp"

namespace entwine::catalog {

template <class T>
struct Named {
  std::string name;
  T value;
};

/// Every built-in example over one field. Entries that need 2 to be
/// invertible are left out in characteristic 2.
struct Catalog {
  Field field;
  std::vector<Named<FiniteAlgebra>> algebras;
  std::vector<Named<FiniteCoalgebra>> coalgebras;
  std::vector<Named<FiniteBialgebra>> bialgebras;
  std::vector<Named<DoiHopfDatum>> data;
  /// Comodule algebras over a bialgebra's coalgebra, meant as Hopf-Galois extensions of their coinvariants.
  std::vector<Named<ComoduleAlgebra>> comodule_algebras;
  std::vector<Named<Entwining>> entwinings;
  std::vector<Named<EntwinedModule>> modules;
};

/// Builds and validates everything; throws InvalidStructure if any entry fails.
Catalog load(Field f = Field::rationals());

const Entwining& entwining(const Catalog& c, const std::string& name);

/// A-modules and C-comodules used to induce entwined modules: regular and dual.
std::vector<Named<RightModule>> modules_of(const FiniteAlgebra& a);
std::vector<Named<RightComodule>> comodules_of(const FiniteCoalgebra& c);

/// Entwined-module morphisms between catalog modules over the same entwining.
struct Morphism {
  std::string source;
  std::string target;
  Mat map;
};
std::vector<Morphism> morphisms(const Catalog& c, std::size_t max_dim);

struct Entry {
  std::string name;
  std::string kind;
  std::string note;
  io::json data;

  std::string file_name() const { return name + "." + kind + ".json"; }
};

std::vector<Entry> entries(const Catalog& c);

/// Kronecker-delta algebra k⊕k with orthogonal idempotents e1, e2.
FiniteAlgebra split_algebra(Field f);
/// k⊕k as a kZ/2-comodule algebra whose coinvariants are k·1.
ComoduleAlgebra split_comodule_algebra(Field f);

}  // namespace entwine::catalog
