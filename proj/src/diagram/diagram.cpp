#include "entwine/diagram.hpp"

#include "entwine/tensor_index.hpp"

namespace entwine::diagram {

using la::kron;

namespace {

bool shape(ValidationReport& rep, const Mat& a, std::size_t rows, std::size_t cols, const std::string& what) {
  if (a.rows() == rows && a.cols() == cols) return true;
  rep.add(what + " shape", {a.rows(), a.cols()});
  return false;
}

Mat one(Field f) { return Mat::identity(f, 1); }

}  // namespace

Mat id(Field f, std::size_t n) { return Mat::identity(f, n); }

Mat swap(Field f, std::size_t a, std::size_t b) {
  Mat s(f, b * a, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) s(j * a + i, i * b + j) = Scalar::one(f);
  return s;
}

Mat ev(Field f, std::size_t d) {
  Mat e(f, 1, d * d);
  for (std::size_t k = 0; k < d; ++k) e(0, k * d + k) = Scalar::one(f);
  return e;
}

Mat coev(Field f, std::size_t d) { return ev(f, d).transpose(); }

Mat point(const Vec& v) { return Mat::column(v); }

void compare(ValidationReport& rep, const Mat& lhs, const Mat& rhs, const std::string& axiom,
             const std::vector<std::size_t>& dims) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.add(axiom + " shape", {lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()});
    return;
  }
  const la::TensorIndex idx(dims);
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    bool same = true;
    for (std::size_t r = 0; r < lhs.rows() && same; ++r) same = lhs(r, c) == rhs(r, c);
    if (!same) rep.add(axiom, idx.size() == lhs.cols() ? idx.unflatten(c) : std::vector<std::size_t>{c});
  }
}

ValidationReport check_algebra(const FiniteAlgebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dim;
  const Field f = a.field;
  if (!shape(rep, a.product, n, n * n, "product") || a.unit.size() != n) {
    if (a.unit.size() != n) rep.add("unit shape", {a.unit.size()});
    return rep;
  }
  const Mat& mu = a.product;
  const Mat I = id(f, n), u = point(a.unit);
  compare(rep, mu * kron(mu, I), mu * kron(I, mu), "associativity", {n, n, n});
  compare(rep, mu * kron(u, I), I, "left unit", {n});
  compare(rep, mu * kron(I, u), I, "right unit", {n});
  return rep;
}

ValidationReport check_coalgebra(const FiniteCoalgebra& c) {
  ValidationReport rep;
  const std::size_t m = c.dim;
  const Field f = c.field;
  if (!shape(rep, c.coproduct, m * m, m, "coproduct") || c.counit.size() != m) {
    if (c.counit.size() != m) rep.add("counit shape", {c.counit.size()});
    return rep;
  }
  const Mat& d = c.coproduct;
  const Mat I = id(f, m), eps = c.counit_map();
  compare(rep, kron(d, I) * d, kron(I, d) * d, "coassociativity", {m});
  compare(rep, kron(eps, I) * d, I, "left counit", {m});
  compare(rep, kron(I, eps) * d, I, "right counit", {m});
  return rep;
}

ValidationReport check_bialgebra(const FiniteBialgebra& h) {
  ValidationReport rep = check_algebra(h.algebra);
  rep.append(check_coalgebra(h.coalgebra));
  const std::size_t n = h.algebra.dim;
  if (h.coalgebra.dim != n) {
    rep.add("bialgebra dimensions", {n, h.coalgebra.dim});
    return rep;
  }
  const Field f = h.algebra.field;
  const Mat& mu = h.algebra.product;
  const Mat& d = h.coalgebra.coproduct;
  const Mat I = id(f, n), u = point(h.algebra.unit), eps = h.coalgebra.counit_map();
  compare(rep, d * mu, kron(mu, mu) * kron({I, swap(f, n, n), I}) * kron(d, d), "coproduct multiplicative", {n, n});
  compare(rep, eps * mu, kron(eps, eps), "counit multiplicative", {n, n});
  compare(rep, d * u, kron(u, u), "coproduct unital", {1});
  compare(rep, eps * u, one(f), "counit unital", {1});
  return rep;
}

ValidationReport check_entwining(const Entwining& e) {
  ValidationReport rep = check_algebra(e.algebra);
  rep.append(check_coalgebra(e.coalgebra));
  const std::size_t n = e.n(), m = e.m();
  if (!rep.ok() || !shape(rep, e.map, n * m, m * n, "psi")) return rep;
  const Field f = e.field();
  const Mat& psi = e.map;
  const Mat& mu = e.algebra.product;
  const Mat& d = e.coalgebra.coproduct;
  const Mat In = id(f, n), Im = id(f, m), u = point(e.algebra.unit), eps = e.coalgebra.counit_map();
  compare(rep, psi * kron(Im, mu), kron(mu, Im) * kron(In, psi) * kron(psi, In), "psi multiplicative", {m, n, n});
  compare(rep, psi * kron(Im, u), kron(u, Im), "psi unital", {m});
  compare(rep, kron(In, d) * psi, kron(psi, Im) * kron(Im, psi) * kron(d, In), "psi comultiplicative", {m, n});
  compare(rep, kron(In, eps) * psi, kron(eps, In), "psi counital", {m, n});
  return rep;
}

ValidationReport check_module_coalgebra(const ModuleCoalgebra& mc) {
  ValidationReport rep = check_bialgebra(mc.bialgebra);
  rep.append(check_coalgebra(mc.coalgebra));
  const std::size_t m = mc.coalgebra.dim, h = mc.bialgebra.algebra.dim;
  if (!rep.ok() || !shape(rep, mc.map, m, m * h, "action")) return rep;
  const Field f = mc.coalgebra.field;
  const Mat& act = mc.map;
  const Mat Im = id(f, m), Ih = id(f, h);
  compare(rep, act * kron(act, Ih), act * kron(Im, mc.bialgebra.algebra.product), "action associative", {m, h, h});
  compare(rep, act * kron(Im, point(mc.bialgebra.algebra.unit)), Im, "action unital", {m});
  compare(rep, mc.coalgebra.coproduct * act,
          kron(act, act) * kron({Im, swap(f, m, h), Ih}) * kron(mc.coalgebra.coproduct, mc.bialgebra.coalgebra.coproduct),
          "action comultiplicative", {m, h});
  compare(rep, mc.coalgebra.counit_map() * act, kron(mc.coalgebra.counit_map(), mc.bialgebra.coalgebra.counit_map()),
          "action counital", {m, h});
  return rep;
}

ValidationReport check_comodule_algebra(const FiniteBialgebra& hb, const ComoduleAlgebra& ca) {
  ValidationReport rep = check_bialgebra(hb);
  rep.append(check_algebra(ca.algebra));
  const std::size_t n = ca.algebra.dim, h = hb.algebra.dim;
  if (!rep.ok() || !shape(rep, ca.map, n * h, n, "coaction")) return rep;
  const Field f = ca.algebra.field;
  const Mat& rho = ca.map;
  const Mat& mu = ca.algebra.product;
  const Mat In = id(f, n), Ih = id(f, h), u = point(ca.algebra.unit);
  compare(rep, kron(rho, Ih) * rho, kron(In, hb.coalgebra.coproduct) * rho, "coaction coassociative", {n});
  compare(rep, kron(In, hb.coalgebra.counit_map()) * rho, In, "coaction counital", {n});
  compare(rep, rho * mu, kron(mu, hb.algebra.product) * kron({In, swap(f, h, n), Ih}) * kron(rho, rho),
          "coaction multiplicative", {n, n});
  compare(rep, rho * u, kron(u, point(hb.algebra.unit)), "coaction unital", {1});
  return rep;
}

ValidationReport check_right_module(const FiniteAlgebra& a, const RightModule& mod) {
  ValidationReport rep;
  const std::size_t n = a.dim, d = mod.dim;
  if (!shape(rep, mod.map, d, d * n, "action")) return rep;
  const Field f = a.field;
  const Mat Id = id(f, d);
  compare(rep, mod.map * kron(mod.map, id(f, n)), mod.map * kron(Id, a.product), "action associative", {d, n, n});
  compare(rep, mod.map * kron(Id, point(a.unit)), Id, "action unital", {d});
  return rep;
}

ValidationReport check_right_comodule(const FiniteCoalgebra& c, const RightComodule& v) {
  ValidationReport rep;
  const std::size_t m = c.dim, d = v.dim;
  if (!shape(rep, v.map, d * m, d, "coaction")) return rep;
  const Field f = c.field;
  const Mat Id = id(f, d);
  compare(rep, kron(v.map, id(f, m)) * v.map, kron(Id, c.coproduct) * v.map, "coaction coassociative", {d});
  compare(rep, kron(Id, c.counit_map()) * v.map, Id, "coaction counital", {d});
  return rep;
}

ValidationReport check_entwined_module(const EntwinedModule& mod) {
  const Entwining& e = mod.entwining;
  const std::size_t n = e.n(), m = e.m(), d = mod.dim;
  ValidationReport rep = check_right_module(e.algebra, {d, mod.action});
  rep.append(check_right_comodule(e.coalgebra, {d, mod.coaction}));
  if (!rep.ok()) return rep;
  const Field f = e.field();
  compare(rep, mod.coaction * mod.action,
          kron(mod.action, id(f, m)) * kron(id(f, d), e.map) * kron(mod.coaction, id(f, n)), "entwined compatibility",
          {d, n});
  return rep;
}

ValidationReport check_morphism(const Mat& g, const EntwinedModule& s, const EntwinedModule& t) {
  ValidationReport rep;
  if (!shape(rep, g, t.dim, s.dim, "map")) return rep;
  const Field f = s.entwining.field();
  const std::size_t n = s.entwining.n(), m = s.entwining.m();
  compare(rep, g * s.action, t.action * kron(g, id(f, n)), "A-linear", {s.dim, n});
  compare(rep, t.coaction * g, kron(g, id(f, m)) * s.coaction, "C-colinear", {s.dim});
  return rep;
}

Mat dual_op_product(const FiniteCoalgebra& c) { return c.coproduct.transpose() * swap(c.field, c.dim, c.dim); }

Mat convolution_product(const FiniteCoalgebra& c) { return c.coproduct.transpose(); }

Mat dual_coaction(const FiniteCoalgebra& c) {
  const Field f = c.field;
  const std::size_t m = c.dim;
  const Mat Im = id(f, m);
  return kron({Im, Im, ev(f, m)}) * kron({Im, c.coproduct, Im}) * kron(coev(f, m), Im);
}

Mat psi_bar(const Entwining& e) {
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m();
  const Mat In = id(f, n), Im = id(f, m);
  return kron({Im, In, ev(f, m)}) * kron({Im, e.map, Im}) * kron({coev(f, m), In, Im});
}

Mat smash_product(const Entwining& e) {
  const Field f = e.field();
  return kron(dual_op_product(e.coalgebra), e.algebra.product) * kron({id(f, e.m()), psi_bar(e), id(f, e.n())});
}

ValidationReport check_smash_integral(const Entwining& e, const Mat& lambda) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (!shape(rep, lambda, n, m, "integral")) return rep;
  const Field f = e.field();
  const Mat& mu = e.algebra.product;
  compare(rep, mu * kron(id(f, n), lambda), mu * kron(lambda, id(f, n)) * psi_bar(e), "smash integral", {n, m});
  return rep;
}

ValidationReport check_entwining_integral(const Entwining& e, const Vec& x) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (x.size() != n * m) {
    rep.add("integral shape", {x.size()});
    return rep;
  }
  const Field f = e.field();
  const Mat xc = point(x), In = id(f, n), Im = id(f, m);
  const Mat mu = kron(e.algebra.product, Im);
  compare(rep, mu * kron(In, xc), mu * kron(In, e.map) * kron(xc, In), "entwining integral", {n});
  return rep;
}

Mat phi_x(const Entwining& e, const Vec& x) {
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m();
  const Mat In = id(f, n), Im = id(f, m);
  const Mat hit = kron(Im, ev(f, m)) * kron(e.coalgebra.coproduct, Im) * swap(f, m, m);
  return kron(e.algebra.product, Im) * kron(In, e.map) * kron({In, hit, In}) * kron({In, swap(f, m, m), In}) *
         kron({point(x), Im, In});
}

ValidationReport check_integral_map(const Entwining& e, const Mat& phi) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (!shape(rep, phi, m * n, m, "integral map")) return rep;
  const Field f = e.field();
  const Mat In = id(f, n), Im = id(f, m), E = ev(f, m);
  const Mat& psi = e.map;
  const Mat& mu = e.algebra.product;
  const Mat& d = e.coalgebra.coproduct;
  compare(rep, mu * kron({In, E, In}) * kron(psi, phi) * kron(Im, psi), kron(E, mu) * kron({Im, phi, In}),
          "integral map A-linear", {m, m, n});
  compare(rep, kron({E, In, Im}) * kron({Im, phi, Im}) * kron(Im, d), psi * kron({Im, E, In}) * kron(d, phi),
          "integral map C-colinear", {m, m});
  compare(rep, kron(E, In) * kron(Im, phi) * d, point(e.algebra.unit) * e.coalgebra.counit_map(),
          "integral map normalised", {m});
  return rep;
}

ValidationReport check_cointegral_map(const Entwining& e, const Mat& phi) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (!shape(rep, phi, n, n * m, "cointegral map")) return rep;
  const Field f = e.field();
  const Mat In = id(f, n), Im = id(f, m), C = coev(f, n);
  const Mat& psi = e.map;
  const Mat& mu = e.algebra.product;
  const Mat& d = e.coalgebra.coproduct;
  compare(rep, kron(In, psi) * kron(psi, phi) * kron({Im, C, Im}) * d, kron({In, phi, Im}) * kron(C, d),
          "cointegral map C-colinear", {m});
  compare(rep, kron(In, mu) * kron({In, phi, In}) * kron({C, Im, In}), kron(mu, phi) * kron({In, C, Im}) * psi,
          "cointegral map A-linear", {m, n});
  compare(rep, mu * kron(In, phi) * kron(C, Im), point(e.algebra.unit) * e.coalgebra.counit_map(),
          "cointegral map normalised", {m});
  return rep;
}

Mat integral_lift(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi) {
  const Field f = from.entwining.field();
  const std::size_t n = from.entwining.n(), m = from.entwining.m();
  return to.action * kron({id(f, to.dim), ev(f, m), id(f, n)}) * kron(to.coaction * g, phi) * from.coaction;
}

Mat cointegral_lift(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi) {
  const Field f = from.entwining.field();
  const std::size_t n = from.entwining.n(), m = from.entwining.m();
  return to.action * kron(g * from.action, phi) * kron({id(f, from.dim), coev(f, n), id(f, m)}) * from.coaction;
}

ValidationReport check_frobenius_element(const Entwining& e, const Vec& elem) {
  ValidationReport rep;
  const std::size_t n = e.n();
  if (elem.size() != e.m()) {
    rep.add("element shape", {elem.size()});
    return rep;
  }
  const Field f = e.field();
  compare(rep, e.map * kron(point(elem), id(f, n)), kron(id(f, n), point(elem)), "frobenius element", {n});
  return rep;
}

Mat left_hit(const FiniteCoalgebra& c, const Vec& elem) {
  const Field f = c.field;
  return kron(id(f, c.dim), ev(f, c.dim)) * kron(c.coproduct * point(elem), id(f, c.dim));
}

Mat right_hit(const FiniteCoalgebra& c, const Vec& elem) {
  const Field f = c.field;
  return kron(ev(f, c.dim), id(f, c.dim)) * kron(id(f, c.dim), c.coproduct * point(elem));
}

ValidationReport check_frobenius_map(const Entwining& e, const Vec& elem) {
  ValidationReport rep = check_frobenius_element(e, elem);
  if (!rep.ok()) return rep;
  const Field f = e.field();
  const std::size_t n = e.n(), m = e.m();
  const Mat phi = left_hit(e.coalgebra, elem);
  if (!la::is_bijective(phi).bijective) rep.add("phi_e bijective", {});
  compare(rep, e.coalgebra.coproduct * phi, kron(phi, id(f, m)) * dual_coaction(e.coalgebra), "phi_e C-colinear", {m});
  compare(rep, e.map * kron(phi, id(f, n)) * psi_bar(e), kron(id(f, n), phi), "phi_e psi compatible", {n, m});
  if (!la::is_bijective(right_hit(e.coalgebra, elem)).bijective) rep.add("right hit bijective", {});
  return rep;
}

ValidationReport check_frobenius_form(const Entwining& e, const Mat& gram) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (!shape(rep, gram, m, m, "form")) return rep;
  const Field f = e.field();
  Mat form(f, 1, m * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) form(0, k * m + l) = gram(k, l);
  const Mat Im = id(f, m), In = id(f, n), conv = convolution_product(e.coalgebra), bar = psi_bar(e);
  compare(rep, form * kron(conv, Im), form * kron(Im, conv), "form associative", {m, m, m});
  if (!la::is_bijective(gram).bijective) rep.add("form nondegenerate", {});
  const Mat sw = swap(f, m, m);
  compare(rep, kron(In, form), kron(form * sw, In) * kron(Im, bar) * kron(bar, Im) * kron(In, sw), "form psi compatible",
          {n, m, m});
  return rep;
}

}  // namespace entwine::diagram
