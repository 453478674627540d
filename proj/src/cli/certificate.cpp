#include "entwine/certificate.hpp"

#include "entwine/diagram.hpp"

namespace entwine::cert {

namespace {

using la::kron;

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw io::ParseError("certificate lacks \"" + std::string(key) + "\"");
  return *it;
}

json module_json(const EntwinedModule& m) { return io::to_json(m); }

json vecs(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const Vec& v : vs) out.push_back(io::to_json(v));
  return out;
}

std::vector<Vec> vecs_from(const json& j, Field f, std::size_t len) {
  if (!j.is_array()) throw io::ParseError("expected an array of vectors");
  std::vector<Vec> out;
  for (const json& v : j) out.push_back(io::vec_from_json(v, f, len));
  return out;
}

void equal(ValidationReport& rep, const Mat& a, const Mat& b, const std::string& what) {
  if (!(a == b)) rep.add(what, {});
}

void check_inverse(ValidationReport& rep, const Mat& map, const Mat& inverse) {
  const Field f = map.field();
  if (!(map * inverse == Mat::identity(f, map.rows())) || !(inverse * map == Mat::identity(f, map.cols())))
    rep.add("inverse", {});
}

ValidationReport only(const ValidationReport& r, const std::string& axiom) {
  ValidationReport out;
  for (const Failure& x : r.failures)
    if (x.axiom == axiom) out.failures.push_back(x);
  return out;
}

Recheck recheck_frobenius(const json& c, const io::ParseContext& ctx) {
  Recheck r;
  const Entwining e = io::entwining_from_json(member(c, "entwining"), ctx);
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m();
  const std::string via = member(c, "via").get<std::string>();
  if (via == "integral") {
    const Vec x = io::vec_from_json(member(c, "witness"), f, n * m);
    const Mat map = io::mat_from_json(member(c, "map"), f, n * m, m * n);
    const Mat inverse = io::mat_from_json(member(c, "inverse"), f, m * n, n * m);
    r.failures.append(diagram::check_entwining_integral(e, x));
    equal(r.failures, map, diagram::phi_x(e, x), "map recomputed from witness");
    check_inverse(r.failures, map, inverse);
  } else if (via == "element" || via == "form") {
    const Vec elem = io::vec_from_json(member(c, "witness"), f, m);
    const Mat map = io::mat_from_json(member(c, "map"), f, m, m);
    const Mat inverse = io::mat_from_json(member(c, "inverse"), f, m, m);
    const Mat gram = io::mat_from_json(member(c, "form"), f, m, m);
    r.failures.append(diagram::check_frobenius_element(e, elem));
    equal(r.failures, map, diagram::left_hit(e.coalgebra, elem), "map recomputed from witness");
    r.failures.append(diagram::check_frobenius_map(e, elem));
    check_inverse(r.failures, map, inverse);
    // [ξ_k, ξ_l] = ⟨ξ_l⇀e, ξ_k⟩ is the (k, l) entry of the hit matrix.
    equal(r.failures, gram, map, "form recomputed from witness");
    r.failures.append(diagram::check_frobenius_form(e, gram));
    const Vec back = (diagram::point(e.coalgebra.counit).transpose() * gram).row(0);
    if (!(back == elem)) r.failures.add("element recovered from form", {});
  } else {
    throw io::ParseError("unknown criterion \"" + via + "\"");
  }
  return r;
}

Recheck recheck_integrals(const json& c, const io::ParseContext& ctx) {
  Recheck r;
  const Entwining e = io::entwining_from_json(member(c, "entwining"), ctx);
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m();
  const std::vector<Vec> basis = vecs_from(member(c, "basis"), f, n * m);
  const bool smash = member(c, "kind") == "smash";
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const ValidationReport one = smash ? diagram::check_smash_integral(e, unflatten_hom(basis[b], n, m))
                                       : diagram::check_entwining_integral(e, basis[b]);
    if (!one.ok()) r.failures.add("integral", {b});
  }
  if (!la::independent(f, n * m, basis)) r.failures.add("basis independent", {});
  if (member(c, "dim") != basis.size()) r.failures.add("dimension matches basis", {});
  return r;
}

Recheck recheck_map(const json& c, const io::ParseContext& ctx, bool integral) {
  Recheck r;
  const Entwining e = io::entwining_from_json(member(c, "entwining"), ctx);
  const std::size_t n = e.n(), m = e.m();
  if (integral) {
    r.failures = diagram::check_integral_map(e, io::mat_from_json(member(c, "map"), e.field(), m * n, m));
  } else {
    r.failures = diagram::check_cointegral_map(e, io::mat_from_json(member(c, "map"), e.field(), n, n * m));
  }
  return r;
}

Recheck recheck_split(const json& c, const io::ParseContext& ctx) {
  Recheck r;
  const EntwinedModule source = io::entwined_module_from_json(member(c, "source"), ctx);
  const EntwinedModule target = io::entwined_module_from_json(member(c, "target"), ctx);
  if (!(source.entwining.map == target.entwining.map)) throw io::ParseError("source and target use different entwinings");
  const Entwining& e = source.entwining;
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m(), ds = source.dim, dt = target.dim;
  const bool integral = member(c, "via") == "integral";
  const bool section = member(c, "kind") == "section";
  const Mat fm = io::mat_from_json(member(c, "f"), f, dt, ds);
  const Mat g = io::mat_from_json(member(c, "g"), f, ds, dt);
  const Mat gt = io::mat_from_json(member(c, "g_tilde"), f, ds, dt);
  const Mat phi = integral ? io::mat_from_json(member(c, "phi"), f, m * n, m)
                           : io::mat_from_json(member(c, "phi"), f, n, n * m);

  r.failures.append(integral ? diagram::check_integral_map(e, phi) : diagram::check_cointegral_map(e, phi), "phi: ");
  r.failures.append(diagram::check_entwined_module(source), "source: ");
  r.failures.append(diagram::check_entwined_module(target), "target: ");
  r.failures.append(diagram::check_morphism(fm, source, target), "f: ");
  r.failures.append(only(diagram::check_morphism(g, target, source), integral ? "A-linear" : "C-colinear"), "g: ");
  const auto splits = [&](const Mat& x) {
    return section ? fm * x == Mat::identity(f, dt) : x * fm == Mat::identity(f, ds);
  };
  if (!splits(g)) r.failures.add("g: splits f", {});
  const Mat lifted = integral ? diagram::integral_lift(target, source, g, phi) : diagram::cointegral_lift(target, source, g, phi);
  equal(r.failures, gt, lifted, "g_tilde recomputed from g and phi");
  r.failures.append(diagram::check_morphism(gt, target, source), "g_tilde: ");
  if (!splits(gt)) r.failures.add("g_tilde: splits f", {});
  return r;
}

Recheck recheck_galois(const json& c, const io::ParseContext& ctx) {
  Recheck r;
  const ComoduleAlgebra ca = io::comodule_algebra_from_json(member(c, "comodule_algebra"), ctx);
  const Entwining e = io::entwining_from_json(member(c, "entwining"), ctx);
  const Field f = e.field();
  const std::size_t n = ca.algebra.dim, m = ca.coalgebra.dim;
  if (!(e.algebra.product == ca.algebra.product) || !(e.coalgebra.coproduct == ca.coalgebra.coproduct))
    r.failures.add("entwining over the same algebra and coalgebra", {});
  r.failures.append(diagram::check_entwining(e), "entwining: ");
  EntwinedModule a{e, n, ca.algebra.product, ca.map};
  r.failures.append(diagram::check_entwined_module(a), "A as entwined module: ");
  const std::vector<Vec> b = vecs_from(member(c, "b_basis"), f, n);
  const Mat id_n = diagram::id(f, n);
  for (std::size_t t = 0; t < b.size(); ++t) {
    const Mat lhs = ca.map * ca.algebra.product * kron(diagram::point(b[t]), id_n);
    const Mat rhs = kron(ca.algebra.product, diagram::id(f, m)) * kron(diagram::point(b[t]), ca.map);
    if (!(lhs == rhs)) r.failures.add("coinvariant", {t});
  }
  if (!la::independent(f, n, b)) r.failures.add("coinvariant basis independent", {});
  return r;
}

Recheck recheck_smash(const json& c, const io::ParseContext& ctx) {
  Recheck r;
  const Entwining e = io::entwining_from_json(member(c, "entwining"), ctx);
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m(), d = n * m;
  const Mat bar = io::mat_from_json(member(c, "psi_bar"), f, m * n, n * m);
  equal(r.failures, bar, diagram::psi_bar(e), "psi_bar recomputed");
  FiniteAlgebra x = io::algebra_from_json(member(c, "algebra"), ctx);
  if (x.dim != d) throw io::ParseError("smash algebra has the wrong dimension");
  equal(r.failures, x.product, diagram::smash_product(e), "product recomputed");
  r.failures.append(diagram::check_algebra(x), "smash algebra: ");
  return r;
}

}  // namespace

json frobenius(const Entwining& e, const FrobeniusOutcome& out) {
  const FrobeniusCertificate& c = out.certificate;
  json j{{"type", "frobenius"},
         {"via", criterion_name(c.via)},
         {"entwining", io::to_json(e)},
         {"witness", io::to_json(c.witness)},
         {"map", io::to_json(c.map)},
         {"inverse", io::to_json(c.inverse)},
         {"siblings", io::to_json(c.siblings)}};
  if (c.via != Criterion::integral) j["form"] = io::to_json(c.form);
  return j;
}

json smash_integrals(const Entwining& e, const std::vector<Mat>& basis) {
  std::vector<Vec> flat;
  for (const Mat& l : basis) flat.push_back(flatten_hom(l));
  return json{{"type", "integral-space"}, {"kind", "smash"}, {"entwining", io::to_json(e)},
              {"dim", basis.size()}, {"basis", vecs(flat)}};
}

json entwining_integrals(const Entwining& e, const std::vector<Vec>& basis) {
  return json{{"type", "integral-space"}, {"kind", "entwining"}, {"entwining", io::to_json(e)},
              {"dim", basis.size()}, {"basis", vecs(basis)}};
}

json map(const Entwining& e, MapKind kind, const MapSolution& sol) {
  return json{{"type", map_kind_name(kind) + "-map"},
              {"entwining", io::to_json(e)},
              {"map", io::to_json(sol.map)},
              {"homogeneous_dim", sol.homogeneous_dim},
              {"solution_dim", sol.solution_dim}};
}

json split(const SplitProblem& p, const SplitCertificate& c) {
  return json{{"type", "split"},
              {"via", map_kind_name(c.via)},
              {"kind", split_kind_name(c.kind)},
              {"source", module_json(p.source)},
              {"target", module_json(p.target)},
              {"f", io::to_json(c.f)},
              {"g", io::to_json(c.g)},
              {"g_tilde", io::to_json(c.g_tilde)},
              {"phi", io::to_json(c.phi)}};
}

json galois(const ComoduleAlgebra& ca, const GaloisResult& r) {
  return json{{"type", "galois"},
              {"comodule_algebra", io::to_json(ca)},
              {"entwining", io::to_json(r.entwining)},
              {"b_basis", vecs(r.data.b_basis)}};
}

json smash(const Entwining& e, const SmashAlgebra& x) {
  return json{{"type", "smash"},
              {"entwining", io::to_json(e)},
              {"psi_bar", io::to_json(x.psi_bar.map)},
              {"algebra", io::to_json(x.algebra)}};
}

json entwining(const Entwining& e) { return json{{"type", "entwining"}, {"entwining", io::to_json(e)}}; }

Recheck recheck(const json& doc, const io::ParseContext& ctx) {
  if (!doc.is_object()) throw io::ParseError("expected a JSON object");
  const json* c = &doc;
  if (doc.contains("certificate")) c = &doc["certificate"];
  else if (!doc.contains("type") && doc.value("kind", "") == "entwining")
    return recheck(entwining(io::entwining_from_json(doc, ctx)), ctx);
  if (!c->is_object() || !c->contains("type")) throw io::ParseError("no certificate to recheck");
  const std::string type = (*c)["type"].get<std::string>();
  Recheck r;
  if (type == "frobenius") r = recheck_frobenius(*c, ctx);
  else if (type == "integral-space") r = recheck_integrals(*c, ctx);
  else if (type == "integral-map") r = recheck_map(*c, ctx, true);
  else if (type == "cointegral-map") r = recheck_map(*c, ctx, false);
  else if (type == "split") r = recheck_split(*c, ctx);
  else if (type == "galois") r = recheck_galois(*c, ctx);
  else if (type == "smash") r = recheck_smash(*c, ctx);
  else if (type == "entwining") r.failures = diagram::check_entwining(io::entwining_from_json(member(*c, "entwining"), ctx));
  else throw io::ParseError("unknown certificate type \"" + type + "\"");
  r.type = type;
  r.accepted = r.failures.ok();
  return r;
}

}  // namespace entwine::cert
