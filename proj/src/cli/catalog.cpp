#include "entwine/catalog.hpp"

#include <stdexcept>

#include "entwine/galois.hpp"

namespace entwine::catalog {

namespace {

void require(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) throw InvalidStructure("catalog entry " + what + " fails validation", r);
}

Scalar half(Field f) { return Scalar::one(f) / Scalar(f, 2L); }

}  // namespace

FiniteAlgebra split_algebra(Field f) {
  FiniteAlgebra a(f, 2);
  a.set_mult(0, 0, 0, Scalar::one(f));
  a.set_mult(1, 1, 1, Scalar::one(f));
  a.unit = {Scalar::one(f), Scalar::one(f)};
  a.labels = {"e1", "e2"};
  return a;
}

ComoduleAlgebra split_comodule_algebra(Field f) {
  if (f.characteristic() == 2) throw std::invalid_argument("the split comodule algebra needs 2 invertible");
  ComoduleAlgebra ca;
  ca.algebra = split_algebra(f);
  ca.coalgebra = cyclic_group_bialgebra(f, 2).coalgebra;
  ca.map = Mat(f, 4, 2);
  const Scalar h = half(f);
  // ρ(e1) = ½(e1⊗1 + e2⊗1 + e1⊗g − e2⊗g), ρ(e2) = ½(e1⊗1 + e2⊗1 − e1⊗g + e2⊗g)
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      ca.map(j * 2 + 0, i) = h;
      ca.map(j * 2 + 1, i) = i == j ? h : -h;
    }
  }
  return ca;
}

std::vector<Named<RightModule>> modules_of(const FiniteAlgebra& a) {
  return {{"regular-a", regular_module(a)}, {"dual-a", dual_module(a)}};
}

std::vector<Named<RightComodule>> comodules_of(const FiniteCoalgebra& c) {
  return {{"regular-c", regular_comodule(c)}, {"dual-c", dual_comodule(c)}};
}

Catalog load(Field f) {
  Catalog c;
  c.field = f;
  const bool two_invertible = f.characteristic() != 2;

  const FiniteBialgebra k = cyclic_group_bialgebra(f, 1);
  const FiniteBialgebra z2 = cyclic_group_bialgebra(f, 2);
  const FiniteBialgebra z3 = cyclic_group_bialgebra(f, 3);
  std::vector<Named<FiniteBialgebra>> hopf = {{"trivial-k", k}, {"z2-hopf", z2}, {"z3-hopf", z3}};
  if (two_invertible) hopf.push_back({"sweedler-h4", sweedler_bialgebra(f)});

  c.algebras = {{"k", k.algebra}, {"kz2", z2.algebra}, {"kz3", z3.algebra}, {"ut2", upper_triangular_algebra(f)}};
  c.coalgebras = {{"k", k.coalgebra}, {"kz2", z2.coalgebra}, {"kz3", z3.coalgebra},
                  {"grouplike2", grouplike_coalgebra(f, 2)}};
  c.bialgebras = {{"k", k}, {"kz2", z2}, {"kz3", z3}};
  if (two_invertible) {
    const FiniteBialgebra h4 = sweedler_bialgebra(f);
    c.algebras.push_back({"h4", h4.algebra});
    c.algebras.push_back({"qxq", split_algebra(f)});
    c.coalgebras.push_back({"h4", h4.coalgebra});
    c.bialgebras.push_back({"h4", h4});
  }

  for (const auto& [name, h] : hopf) {
    DoiHopfDatum d = self_datum(h);
    c.data.push_back({name, d});
    c.comodule_algebras.push_back({name, d.comodule_algebra});
    c.entwinings.push_back({name, build_doi_hopf(d)});
  }
  if (two_invertible) {
    DoiHopfDatum d = self_datum(z2);
    d.comodule_algebra = split_comodule_algebra(f);
    c.data.push_back({"qxq-galois", d});
    c.comodule_algebras.push_back({"qxq-galois", d.comodule_algebra});
    const GaloisResult g = canonical_entwining(d.comodule_algebra);
    if (!g.galois) throw InvalidStructure("qxq-galois is not Galois", g.checks);
    c.entwinings.push_back({"qxq-galois", g.entwining});
  }
  c.entwinings.push_back({"groupdim2-flip", build_flip(z2.algebra, grouplike_coalgebra(f, 2))});
  c.entwinings.push_back({"k-groupdim2-flip", build_flip(k.algebra, grouplike_coalgebra(f, 2))});
  c.entwinings.push_back({"z2-flip-k", build_flip(z2.algebra, k.coalgebra)});
  c.entwinings.push_back({"ut2-flip-k", build_flip(upper_triangular_algebra(f), k.coalgebra)});

  for (const auto& [name, e] : c.entwinings) {
    for (const auto& [mname, mod] : modules_of(e.algebra))
      c.modules.push_back({name + ".induced-" + mname, induce_from_module(e, mod)});
    for (const auto& [vname, v] : comodules_of(e.coalgebra))
      c.modules.push_back({name + ".induced-" + vname, induce_from_comodule(e, v)});
  }

  for (const auto& [name, a] : c.algebras) require(validate_algebra(a), "algebra " + name);
  for (const auto& [name, x] : c.coalgebras) require(validate_coalgebra(x), "coalgebra " + name);
  for (const auto& [name, h] : c.bialgebras) require(validate_bialgebra(h), "bialgebra " + name);
  for (const auto& [name, d] : c.data) require(validate_doi_hopf(d), "doi-hopf " + name);
  for (const auto& [name, ca] : c.comodule_algebras)
    require(validate_comodule_structure(ca), "comodule-algebra " + name);
  for (const auto& [name, e] : c.entwinings) require(validate_entwining(e), "entwining " + name);
  for (const auto& [name, m] : c.modules) require(validate_entwined_module(m), "entwined-module " + name);
  return c;
}

const Entwining& entwining(const Catalog& c, const std::string& name) {
  for (const auto& e : c.entwinings)
    if (e.name == name) return e.value;
  throw std::out_of_range("no catalog entwining named " + name);
}

std::vector<Morphism> morphisms(const Catalog& c, std::size_t max_dim) {
  std::vector<Morphism> out;
  for (const auto& [ename, e] : c.entwinings) {
    std::vector<const Named<EntwinedModule>*> mods;
    for (const auto& m : c.modules)
      if (m.name.rfind(ename + ".", 0) == 0 && m.value.dim <= max_dim) mods.push_back(&m);
    for (const auto* s : mods) {
      for (const auto* t : mods) {
        const std::vector<Mat> basis = module_morphisms(s->value, t->value);
        Mat sum = Mat::zero(c.field, t->value.dim, s->value.dim);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (i < 2) out.push_back({s->name, t->name, basis[i]});
          sum += basis[i] * Scalar(c.field, static_cast<long>(i + 1));
        }
        if (basis.size() > 2) out.push_back({s->name, t->name, sum});
      }
    }
  }
  return out;
}

std::vector<Entry> entries(const Catalog& c) {
  std::vector<Entry> out;
  for (const auto& [name, a] : c.algebras) out.push_back({name, "algebra", "", io::to_json(a)});
  for (const auto& [name, x] : c.coalgebras) out.push_back({name, "coalgebra", "", io::to_json(x)});
  for (const auto& [name, h] : c.bialgebras) out.push_back({name, "bialgebra", "", io::to_json(h)});
  for (const auto& [name, d] : c.data)
    out.push_back({name, "doi-hopf", "H acting on C = H by right multiplication and coacting on A", io::to_json(d)});
  for (const auto& [name, ca] : c.comodule_algebras)
    out.push_back({name, "comodule-algebra", "Hopf-Galois over its coinvariants", io::to_json(ca)});
  for (const auto& [name, e] : c.entwinings) {
    std::string note;
    if (name.find("flip") != std::string::npos) note = "flip entwining c⊗a ↦ a⊗c";
    else if (name == "qxq-galois") note = "canonical entwining of a coalgebra-Galois extension";
    else note = "entwining of a Doi-Hopf datum";
    out.push_back({name, "entwining", note, io::to_json(e)});
  }
  for (const auto& [name, m] : c.modules) out.push_back({name, "entwined-module", "induced module", io::to_json(m)});
  return out;
}

}  // namespace entwine::catalog
