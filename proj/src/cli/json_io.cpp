#include "entwine/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "entwine/tensor_index.hpp"

namespace entwine::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object while looking for \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing member \"" + std::string(key) + "\"");
  return *it;
}

std::size_t dim_of(const json& j) {
  const json& d = member(j, "dim");
  if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long>() >= 0))
    throw ParseError("\"dim\" must be a non-negative integer");
  const auto v = d.get<std::size_t>();
  if (v == 0) throw ParseError("\"dim\" must be positive");
  return v;
}

// Writes every nonzero entry as [i1, ..., ir, "c"], indices in lexicographic order.
json sparse(const std::vector<std::size_t>& dims, const std::function<const Scalar&(const std::vector<std::size_t>&)>& at) {
  json out = json::array();
  const la::TensorIndex idx(dims);
  for (std::size_t flat = 0; flat < idx.size(); ++flat) {
    const auto multi = idx.unflatten(flat);
    const Scalar& s = at(multi);
    if (s.is_zero()) continue;
    json entry = json::array();
    for (std::size_t i : multi) entry.push_back(i);
    entry.push_back(s.str());
    out.push_back(std::move(entry));
  }
  return out;
}

void read_sparse(const json& j, const std::vector<std::size_t>& dims, Field f, const std::string& what,
                 const std::function<void(const std::vector<std::size_t>&, Scalar)>& set) {
  if (!j.is_array()) throw ParseError("\"" + what + "\" must be an array of sparse entries");
  std::set<std::vector<std::size_t>> seen;
  for (const json& entry : j) {
    if (!entry.is_array() || entry.size() != dims.size() + 1)
      throw ParseError("\"" + what + "\" entries need " + std::to_string(dims.size()) + " indices and a coefficient");
    std::vector<std::size_t> multi;
    for (std::size_t r = 0; r < dims.size(); ++r) {
      if (!entry[r].is_number_integer()) throw ParseError("\"" + what + "\" index is not an integer");
      const long v = entry[r].get<long>();
      if (v < 0 || static_cast<std::size_t>(v) >= dims[r]) throw ParseError("\"" + what + "\" index out of range");
      multi.push_back(static_cast<std::size_t>(v));
    }
    if (!seen.insert(multi).second) throw ParseError("\"" + what + "\" repeats an entry");
    set(multi, scalar_from_json(entry.back(), f));
  }
}

std::vector<std::string> labels_from(const json& j) {
  std::vector<std::string> out;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw ParseError("\"labels\" must be an array of strings");
    for (const json& l : *it) {
      if (!l.is_string()) throw ParseError("\"labels\" must be an array of strings");
      out.push_back(l.get<std::string>());
    }
  }
  return out;
}

void put_labels(json& j, const std::vector<std::string>& labels) {
  if (!labels.empty()) j["labels"] = labels;
}

void expect_kind(const json& j, const std::string& kind) {
  if (auto it = j.find("kind"); it != j.end() && *it != kind)
    throw ParseError("expected kind \"" + kind + "\", found " + it->dump());
}

json resolve(const json& j, const ParseContext& ctx, std::filesystem::path& base) {
  base = ctx.base_dir;
  if (!j.is_string()) return j;
  const std::filesystem::path p = ctx.base_dir / j.get<std::string>();
  base = p.parent_path();
  return read_file(p);
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(Field f) { return json{{"char", f.characteristic()}}; }

Field field_from_json(const json& j, const ParseContext& ctx) {
  if (ctx.field) return *ctx.field;
  const json& c = member(member(j, "field"), "char");
  if (!c.is_number_integer() || c.get<long>() < 0) throw ParseError("\"char\" must be a non-negative integer");
  try {
    return Field::of_characteristic(c.get<std::uint64_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, Field f) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<long long>()));
  } catch (const std::exception& e) {
    throw ParseError("bad scalar " + j.dump() + ": " + e.what());
  }
  throw ParseError("scalar must be a string or an integer, found " + j.dump());
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(s.str());
  return out;
}

Vec vec_from_json(const json& j, Field f, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    throw ParseError("expected a vector of length " + std::to_string(expected) + ", found " + j.dump().substr(0, 80));
  Vec out;
  for (const json& s : j) out.push_back(scalar_from_json(s, f));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Mat mat_from_json(const json& j, Field f, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  Mat out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = vec_from_json(j[r], f, cols);
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = row[c];
  }
  return out;
}

json to_json(const ValidationReport& r) {
  json out = json::array();
  for (const Failure& f : r.failures) out.push_back(json{{"axiom", f.axiom}, {"tuple", f.tuple}});
  return out;
}

json to_json(const FiniteAlgebra& a) {
  json j{{"kind", "algebra"}, {"field", to_json(a.field)}, {"dim", a.dim}, {"unit", to_json(a.unit)}};
  j["mult"] = sparse({a.dim, a.dim, a.dim}, [&](const auto& x) -> const Scalar& { return a.mult(x[0], x[1], x[2]); });
  put_labels(j, a.labels);
  return j;
}

json to_json(const FiniteCoalgebra& c) {
  json j{{"kind", "coalgebra"}, {"field", to_json(c.field)}, {"dim", c.dim}, {"counit", to_json(c.counit)}};
  j["comult"] = sparse({c.dim, c.dim, c.dim}, [&](const auto& x) -> const Scalar& { return c.comult(x[0], x[1], x[2]); });
  put_labels(j, c.labels);
  return j;
}

json to_json(const FiniteBialgebra& h) {
  return json{{"kind", "bialgebra"}, {"algebra", to_json(h.algebra)}, {"coalgebra", to_json(h.coalgebra)}};
}

json to_json(const Entwining& e) {
  json j{{"kind", "entwining"}, {"algebra", to_json(e.algebra)}, {"coalgebra", to_json(e.coalgebra)}};
  j["psi"] = sparse({e.m(), e.n(), e.n(), e.m()},
                    [&](const auto& x) -> const Scalar& { return e.psi(x[0], x[1], x[2], x[3]); });
  return j;
}

json to_json(const ModuleCoalgebra& mc) {
  json j{{"coalgebra", to_json(mc.coalgebra)}};
  j["action"] = sparse({mc.coalgebra.dim, mc.bialgebra.algebra.dim, mc.coalgebra.dim},
                       [&](const auto& x) -> const Scalar& { return mc.act(x[0], x[1], x[2]); });
  return j;
}

json to_json(const ComoduleAlgebra& ca) {
  json j{{"kind", "comodule-algebra"}, {"algebra", to_json(ca.algebra)}, {"coalgebra", to_json(ca.coalgebra)}};
  j["coaction"] = sparse({ca.algebra.dim, ca.algebra.dim, ca.coalgebra.dim},
                         [&](const auto& x) -> const Scalar& { return ca.coact(x[0], x[1], x[2]); });
  return j;
}

json to_json(const DoiHopfDatum& d) {
  json ca = to_json(d.comodule_algebra);
  ca.erase("kind");
  ca.erase("coalgebra");
  return json{{"kind", "doi-hopf"},
              {"bialgebra", to_json(d.bialgebra)},
              {"module_coalgebra", to_json(d.module_coalgebra)},
              {"comodule_algebra", ca}};
}

json to_json(const EntwinedModule& m) {
  json j{{"kind", "entwined-module"}, {"entwining", to_json(m.entwining)}, {"dim", m.dim}};
  const std::size_t n = m.entwining.n(), c = m.entwining.m();
  j["action"] = sparse({m.dim, n, m.dim}, [&](const auto& x) -> const Scalar& { return m.act(x[0], x[1], x[2]); });
  j["coaction"] = sparse({m.dim, m.dim, c}, [&](const auto& x) -> const Scalar& { return m.coact(x[0], x[1], x[2]); });
  return j;
}

FiniteAlgebra algebra_from_json(const json& j, const ParseContext& ctx) {
  expect_kind(j, "algebra");
  const Field f = field_from_json(j, ctx);
  const std::size_t n = dim_of(j);
  FiniteAlgebra a(f, n);
  read_sparse(member(j, "mult"), {n, n, n}, f, "mult",
              [&](const auto& x, Scalar s) { a.set_mult(x[0], x[1], x[2], std::move(s)); });
  a.unit = vec_from_json(member(j, "unit"), f, n);
  a.labels = labels_from(j);
  return a;
}

FiniteCoalgebra coalgebra_from_json(const json& j, const ParseContext& ctx) {
  expect_kind(j, "coalgebra");
  const Field f = field_from_json(j, ctx);
  const std::size_t m = dim_of(j);
  FiniteCoalgebra c(f, m);
  read_sparse(member(j, "comult"), {m, m, m}, f, "comult",
              [&](const auto& x, Scalar s) { c.set_comult(x[0], x[1], x[2], std::move(s)); });
  c.counit = vec_from_json(member(j, "counit"), f, m);
  c.labels = labels_from(j);
  return c;
}

FiniteBialgebra bialgebra_from_json(const json& j, const ParseContext& ctx) {
  expect_kind(j, "bialgebra");
  FiniteBialgebra h{algebra_from_json(member(j, "algebra"), ctx), coalgebra_from_json(member(j, "coalgebra"), ctx)};
  if (h.algebra.field != h.coalgebra.field) throw ParseError("algebra and coalgebra fields differ");
  return h;
}

Entwining entwining_from_json(const json& raw, const ParseContext& ctx) {
  std::filesystem::path base;
  const json j = resolve(raw, ctx, base);
  expect_kind(j, "entwining");
  ParseContext inner = ctx;
  inner.base_dir = base;
  Entwining e;
  e.algebra = algebra_from_json(member(j, "algebra"), inner);
  e.coalgebra = coalgebra_from_json(member(j, "coalgebra"), inner);
  if (e.algebra.field != e.coalgebra.field) throw ParseError("algebra and coalgebra fields differ");
  const std::size_t n = e.n(), m = e.m();
  e.map = Mat(e.field(), n * m, m * n);
  read_sparse(member(j, "psi"), {m, n, n, m}, e.field(), "psi",
              [&](const auto& x, Scalar s) { e.set_psi(x[0], x[1], x[2], x[3], std::move(s)); });
  return e;
}

ModuleCoalgebra module_coalgebra_from_json(const json& j, const FiniteBialgebra& h, const ParseContext& ctx) {
  ModuleCoalgebra mc;
  mc.bialgebra = h;
  mc.coalgebra = coalgebra_from_json(member(j, "coalgebra"), ctx);
  const std::size_t m = mc.coalgebra.dim, hd = h.algebra.dim;
  mc.map = Mat(mc.coalgebra.field, m, m * hd);
  read_sparse(member(j, "action"), {m, hd, m}, mc.coalgebra.field, "action",
              [&](const auto& x, Scalar s) { mc.map(x[2], x[0] * hd + x[1]) = std::move(s); });
  return mc;
}

namespace {

ComoduleAlgebra comodule_algebra_with(const json& j, FiniteCoalgebra c, const ParseContext& ctx) {
  ComoduleAlgebra ca;
  ca.algebra = algebra_from_json(member(j, "algebra"), ctx);
  ca.coalgebra = std::move(c);
  if (ca.algebra.field != ca.coalgebra.field) throw ParseError("algebra and coalgebra fields differ");
  const std::size_t n = ca.algebra.dim, m = ca.coalgebra.dim;
  ca.map = Mat(ca.algebra.field, n * m, n);
  read_sparse(member(j, "coaction"), {n, n, m}, ca.algebra.field, "coaction",
              [&](const auto& x, Scalar s) { ca.map(x[1] * m + x[2], x[0]) = std::move(s); });
  return ca;
}

}  // namespace

ComoduleAlgebra comodule_algebra_from_json(const json& j, const ParseContext& ctx) {
  expect_kind(j, "comodule-algebra");
  return comodule_algebra_with(j, coalgebra_from_json(member(j, "coalgebra"), ctx), ctx);
}

DoiHopfDatum doi_hopf_from_json(const json& j, const ParseContext& ctx) {
  expect_kind(j, "doi-hopf");
  DoiHopfDatum d;
  d.bialgebra = bialgebra_from_json(member(j, "bialgebra"), ctx);
  d.module_coalgebra = module_coalgebra_from_json(member(j, "module_coalgebra"), d.bialgebra, ctx);
  d.comodule_algebra = comodule_algebra_with(member(j, "comodule_algebra"), d.bialgebra.coalgebra, ctx);
  return d;
}

EntwinedModule entwined_module_from_json(const json& raw, const ParseContext& ctx) {
  std::filesystem::path base;
  const json j = resolve(raw, ctx, base);
  expect_kind(j, "entwined-module");
  ParseContext inner = ctx;
  inner.base_dir = base;
  EntwinedModule mod;
  mod.entwining = entwining_from_json(member(j, "entwining"), inner);
  mod.dim = dim_of(j);
  const std::size_t n = mod.entwining.n(), m = mod.entwining.m(), d = mod.dim;
  const Field f = mod.entwining.field();
  mod.action = Mat(f, d, d * n);
  mod.coaction = Mat(f, d * m, d);
  read_sparse(member(j, "action"), {d, n, d}, f, "action",
              [&](const auto& x, Scalar s) { mod.action(x[2], x[0] * n + x[1]) = std::move(s); });
  read_sparse(member(j, "coaction"), {d, d, m}, f, "coaction",
              [&](const auto& x, Scalar s) { mod.coaction(x[1] * m + x[2], x[0]) = std::move(s); });
  return mod;
}

std::string kind_of(const json& j) {
  if (!j.is_object()) throw ParseError("top-level JSON must be an object");
  auto it = j.find("kind");
  if (it == j.end() || !it->is_string()) throw ParseError("missing \"kind\"");
  return it->get<std::string>();
}

}  // namespace entwine::io
