#include "entwine/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace entwine {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& name) {
  require(m.rows() == rows && m.cols() == cols,
          name + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
              std::to_string(rows) + "x" + std::to_string(cols));
}

void check_algebra_shape(const FiniteAlgebra& a) {
  require_shape(a.product, a.dim, a.dim * a.dim, "algebra product");
  require(a.unit.size() == a.dim, "algebra unit has wrong length");
}

void check_coalgebra_shape(const FiniteCoalgebra& c) {
  require_shape(c.coproduct, c.dim * c.dim, c.dim, "coproduct");
  require(c.counit.size() == c.dim, "counit has wrong length");
}

Scalar delta(Field f, std::size_t a, std::size_t b) { return Scalar(f, a == b ? 1L : 0L); }

}  // namespace

void ValidationReport::append(const ValidationReport& other, const std::string& prefix) {
  for (const auto& f : other.failures) failures.push_back({prefix + f.axiom, f.tuple});
}

std::vector<std::string> ValidationReport::axioms() const {
  std::vector<std::string> out;
  for (const auto& f : failures) {
    if (std::find(out.begin(), out.end(), f.axiom) == out.end()) out.push_back(f.axiom);
  }
  return out;
}

FiniteAlgebra::FiniteAlgebra(Field f, std::size_t n)
    : field(f), dim(n), product(f, n, n * n), unit(la::zero_vec(f, n)) {}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
  require(x.size() == dim && y.size() == dim, "multiply: wrong vector length");
  Vec out = la::zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) out[k].add_product(xy, mult(i, j, k));
    }
  }
  return out;
}

Mat FiniteAlgebra::left_mult(const Vec& x) const {
  Mat out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.set_col(j, multiply(x, la::unit_vec(field, dim, j)));
  return out;
}

Mat FiniteAlgebra::right_mult(const Vec& x) const {
  Mat out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.set_col(j, multiply(la::unit_vec(field, dim, j), x));
  return out;
}

FiniteCoalgebra::FiniteCoalgebra(Field f, std::size_t m)
    : field(f), dim(m), coproduct(f, m * m, m), counit(la::zero_vec(f, m)) {}

Mat FiniteCoalgebra::counit_map() const {
  Mat out(field, 1, dim);
  for (std::size_t i = 0; i < dim; ++i) out(0, i) = counit[i];
  return out;
}

ValidationReport validate_algebra(const FiniteAlgebra& a) {
  check_algebra_shape(a);
  ValidationReport rep;
  const std::size_t n = a.dim;
  const Field f = a.field;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < n; ++t) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t l = 0; l < n; ++l) {
            lhs.add_product(a.mult(i, j, l), a.mult(l, k, t));
            rhs.add_product(a.mult(j, k, l), a.mult(i, l, t));
          }
          if (!(lhs == rhs)) {
            rep.add("associativity", {i, j, k});
            break;
          }
        }
      }
  for (std::size_t j = 0; j < n; ++j) {
    bool left_ok = true, right_ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      Scalar left = Scalar::zero(f), right = Scalar::zero(f);
      for (std::size_t i = 0; i < n; ++i) {
        left.add_product(a.unit[i], a.mult(i, j, k));
        right.add_product(a.unit[i], a.mult(j, i, k));
      }
      left_ok = left_ok && left == delta(f, j, k);
      right_ok = right_ok && right == delta(f, j, k);
    }
    if (!left_ok) rep.add("left unit", {j});
    if (!right_ok) rep.add("right unit", {j});
  }
  return rep;
}

ValidationReport validate_coalgebra(const FiniteCoalgebra& c) {
  check_coalgebra_shape(c);
  ValidationReport rep;
  const std::size_t m = c.dim;
  const Field f = c.field;
  for (std::size_t i = 0; i < m; ++i) {
    bool coassoc = true;
    for (std::size_t x = 0; x < m && coassoc; ++x)
      for (std::size_t y = 0; y < m && coassoc; ++y)
        for (std::size_t z = 0; z < m && coassoc; ++z) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t l = 0; l < m; ++l) {
            lhs.add_product(c.comult(i, l, z), c.comult(l, x, y));
            rhs.add_product(c.comult(i, x, l), c.comult(l, y, z));
          }
          coassoc = lhs == rhs;
        }
    if (!coassoc) rep.add("coassociativity", {i});
    bool left_ok = true, right_ok = true;
    for (std::size_t k = 0; k < m; ++k) {
      Scalar left = Scalar::zero(f), right = Scalar::zero(f);
      for (std::size_t j = 0; j < m; ++j) {
        left.add_product(c.counit[j], c.comult(i, j, k));
        right.add_product(c.counit[j], c.comult(i, k, j));
      }
      left_ok = left_ok && left == delta(f, i, k);
      right_ok = right_ok && right == delta(f, i, k);
    }
    if (!left_ok) rep.add("left counit", {i});
    if (!right_ok) rep.add("right counit", {i});
  }
  return rep;
}

ValidationReport validate_bialgebra(const FiniteBialgebra& h) {
  ValidationReport rep;
  const auto& a = h.algebra;
  const auto& c = h.coalgebra;
  require(a.dim == c.dim && a.field == c.field, "bialgebra: algebra and coalgebra differ in dimension or field");
  rep.append(validate_algebra(a));
  rep.append(validate_coalgebra(c));
  const std::size_t n = a.dim;
  const Field f = a.field;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t l = 0; l < n; ++l) lhs.add_product(a.mult(i, j, l), c.comult(l, x, y));
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              if (c.comult(i, p, q).is_zero()) continue;
              for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                  if (c.comult(j, r, s).is_zero()) continue;
                  rhs.add_product(c.comult(i, p, q) * c.comult(j, r, s), a.mult(p, r, x) * a.mult(q, s, y));
                }
            }
          ok = lhs == rhs;
        }
      if (!ok) rep.add("coproduct multiplicative", {i, j});
      Scalar eps = Scalar::zero(f);
      for (std::size_t l = 0; l < n; ++l) eps.add_product(a.mult(i, j, l), c.counit[l]);
      if (!(eps == c.counit[i] * c.counit[j])) rep.add("counit multiplicative", {i, j});
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t i = 0; i < n; ++i) lhs.add_product(a.unit[i], c.comult(i, x, y));
      if (!(lhs == a.unit[x] * a.unit[y])) rep.add("coproduct unital", {x, y});
    }
  Scalar eps1 = Scalar::zero(f);
  for (std::size_t i = 0; i < n; ++i) eps1.add_product(a.unit[i], c.counit[i]);
  if (!eps1.is_one()) rep.add("counit unital", {});
  return rep;
}

ValidationReport validate_entwining(const Entwining& e) {
  check_algebra_shape(e.algebra);
  check_coalgebra_shape(e.coalgebra);
  require(e.algebra.field == e.coalgebra.field, "entwining: algebra and coalgebra over different fields");
  const std::size_t n = e.n(), m = e.m();
  require_shape(e.map, n * m, m * n, "entwining map");
  const Field f = e.field();
  const auto& A = e.algebra;
  const auto& C = e.coalgebra;
  ValidationReport rep = validate_algebra(A);
  rep.append(validate_coalgebra(C));
  if (!rep.ok()) return rep;

  // ψ(c_p ⊗ a_i a_k) = Σ ψ(c_p⊗a_i)_{j1,q1} ψ(c_q1⊗a_k)_{j2,q} a_j1 a_j2 ⊗ c_q
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
          for (std::size_t q = 0; q < m && ok; ++q) {
            Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
            for (std::size_t l = 0; l < n; ++l) lhs.add_product(A.mult(i, k, l), e.psi(p, l, j, q));
            for (std::size_t j1 = 0; j1 < n; ++j1)
              for (std::size_t q1 = 0; q1 < m; ++q1) {
                const Scalar& first = e.psi(p, i, j1, q1);
                if (first.is_zero()) continue;
                for (std::size_t j2 = 0; j2 < n; ++j2) rhs.add_product(first * e.psi(q1, k, j2, q), A.mult(j1, j2, j));
              }
            ok = lhs == rhs;
          }
        if (!ok) rep.add("psi multiplicative", {p, i, k});
      }

  // ψ(c_p ⊗ 1) = 1 ⊗ c_p
  for (std::size_t p = 0; p < m; ++p) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t q = 0; q < m && ok; ++q) {
        Scalar lhs = Scalar::zero(f);
        for (std::size_t i = 0; i < n; ++i) lhs.add_product(A.unit[i], e.psi(p, i, j, q));
        ok = lhs == (p == q ? A.unit[j] : Scalar::zero(f));
      }
    if (!ok) rep.add("psi unital", {p});
  }

  // (A⊗Δ)ψ(c_p⊗a_i) = Σ Δ(c_p)_{s,t} ψ(c_s ⊗ ψ(c_t⊗a_i)_A) ⊗ ψ(c_t⊗a_i)_C
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t x = 0; x < m && ok; ++x)
          for (std::size_t y = 0; y < m && ok; ++y) {
            Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
            for (std::size_t q = 0; q < m; ++q) lhs.add_product(e.psi(p, i, j, q), C.comult(q, x, y));
            for (std::size_t s = 0; s < m; ++s)
              for (std::size_t t = 0; t < m; ++t) {
                const Scalar& d = C.comult(p, s, t);
                if (d.is_zero()) continue;
                for (std::size_t j1 = 0; j1 < n; ++j1) rhs.add_product(d * e.psi(t, i, j1, y), e.psi(s, j1, j, x));
              }
            ok = lhs == rhs;
          }
      if (!ok) rep.add("psi comultiplicative", {p, i});
    }

  // (A⊗ε)ψ(c_p⊗a_i) = ε(c_p) a_i
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        Scalar lhs = Scalar::zero(f);
        for (std::size_t q = 0; q < m; ++q) lhs.add_product(e.psi(p, i, j, q), C.counit[q]);
        ok = lhs == (i == j ? C.counit[p] : Scalar::zero(f));
      }
      if (!ok) rep.add("psi counital", {p, i});
    }
  return rep;
}

ValidationReport validate_module_coalgebra(const ModuleCoalgebra& mc) {
  const auto& H = mc.bialgebra;
  const auto& C = mc.coalgebra;
  const std::size_t h = H.algebra.dim, m = C.dim;
  check_coalgebra_shape(C);
  require_shape(mc.map, m, m * h, "module coalgebra action");
  const Field f = C.field;
  ValidationReport rep;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t a = 0; a < h; ++a) {
      for (std::size_t b = 0; b < h; ++b) {
        bool ok = true;
        for (std::size_t r = 0; r < m && ok; ++r) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t q = 0; q < m; ++q) lhs.add_product(mc.act(p, a, q), mc.act(q, b, r));
          for (std::size_t l = 0; l < h; ++l) rhs.add_product(H.algebra.mult(a, b, l), mc.act(p, l, r));
          ok = lhs == rhs;
        }
        if (!ok) rep.add("action associative", {p, a, b});
      }
      bool ok = true;
      for (std::size_t x = 0; x < m && ok; ++x)
        for (std::size_t y = 0; y < m && ok; ++y) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t q = 0; q < m; ++q) lhs.add_product(mc.act(p, a, q), C.comult(q, x, y));
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
              if (C.comult(p, s, t).is_zero()) continue;
              for (std::size_t u = 0; u < h; ++u)
                for (std::size_t v = 0; v < h; ++v) {
                  const Scalar& dh = H.coalgebra.comult(a, u, v);
                  if (dh.is_zero()) continue;
                  rhs.add_product(C.comult(p, s, t) * dh, mc.act(s, u, x) * mc.act(t, v, y));
                }
            }
          ok = lhs == rhs;
        }
      if (!ok) rep.add("action comultiplicative", {p, a});
      Scalar eps = Scalar::zero(f);
      for (std::size_t q = 0; q < m; ++q) eps.add_product(mc.act(p, a, q), C.counit[q]);
      if (!(eps == C.counit[p] * H.coalgebra.counit[a])) rep.add("action counital", {p, a});
    }
  for (std::size_t p = 0; p < m; ++p) {
    bool ok = true;
    for (std::size_t r = 0; r < m && ok; ++r) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t a = 0; a < h; ++a) lhs.add_product(H.algebra.unit[a], mc.act(p, a, r));
      ok = lhs == delta(f, p, r);
    }
    if (!ok) rep.add("action unital", {p});
  }
  return rep;
}

ValidationReport validate_comodule_structure(const ComoduleAlgebra& ca) {
  RightComodule v{ca.algebra.dim, ca.map};
  return validate_right_comodule(ca.coalgebra, v);
}

ValidationReport validate_comodule_algebra(const FiniteBialgebra& H, const ComoduleAlgebra& ca) {
  ValidationReport rep = validate_comodule_structure(ca);
  const auto& A = ca.algebra;
  const std::size_t n = A.dim, h = H.algebra.dim;
  require(ca.coalgebra.dim == h, "comodule algebra: coalgebra is not the bialgebra's");
  const Field f = A.field;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t z = 0; z < h && ok; ++z) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t l = 0; l < n; ++l) lhs.add_product(A.mult(i, k, l), ca.coact(l, j, z));
          for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t h1 = 0; h1 < h; ++h1) {
              if (ca.coact(i, j1, h1).is_zero()) continue;
              for (std::size_t j2 = 0; j2 < n; ++j2)
                for (std::size_t h2 = 0; h2 < h; ++h2) {
                  if (ca.coact(k, j2, h2).is_zero()) continue;
                  rhs.add_product(ca.coact(i, j1, h1) * ca.coact(k, j2, h2),
                                  A.mult(j1, j2, j) * H.algebra.mult(h1, h2, z));
                }
            }
          ok = lhs == rhs;
        }
      if (!ok) rep.add("coaction multiplicative", {i, k});
    }
  bool ok = true;
  for (std::size_t j = 0; j < n && ok; ++j)
    for (std::size_t z = 0; z < h && ok; ++z) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t i = 0; i < n; ++i) lhs.add_product(A.unit[i], ca.coact(i, j, z));
      ok = lhs == A.unit[j] * H.algebra.unit[z];
    }
  if (!ok) rep.add("coaction unital", {});
  return rep;
}

ValidationReport validate_doi_hopf(const DoiHopfDatum& d) {
  ValidationReport rep;
  rep.append(validate_bialgebra(d.bialgebra), "bialgebra: ");
  rep.append(validate_coalgebra(d.module_coalgebra.coalgebra), "coalgebra: ");
  rep.append(validate_module_coalgebra(d.module_coalgebra), "module coalgebra: ");
  rep.append(validate_algebra(d.comodule_algebra.algebra), "algebra: ");
  rep.append(validate_comodule_algebra(d.bialgebra, d.comodule_algebra), "comodule algebra: ");
  return rep;
}

ValidationReport validate_right_module(const FiniteAlgebra& a, const RightModule& mod) {
  const std::size_t n = a.dim, d = mod.dim;
  require_shape(mod.map, d, d * n, "module action");
  const Field f = a.field;
  ValidationReport rep;
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        for (std::size_t r = 0; r < d && ok; ++r) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t l = 0; l < d; ++l) lhs.add_product(mod.act(m, i, l, n), mod.act(l, k, r, n));
          for (std::size_t s = 0; s < n; ++s) rhs.add_product(a.mult(i, k, s), mod.act(m, s, r, n));
          ok = lhs == rhs;
        }
        if (!ok) rep.add("action associative", {m, i, k});
      }
    bool ok = true;
    for (std::size_t r = 0; r < d && ok; ++r) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t i = 0; i < n; ++i) lhs.add_product(a.unit[i], mod.act(m, i, r, n));
      ok = lhs == delta(f, m, r);
    }
    if (!ok) rep.add("action unital", {m});
  }
  return rep;
}

ValidationReport validate_right_comodule(const FiniteCoalgebra& c, const RightComodule& v) {
  const std::size_t m = c.dim, d = v.dim;
  require_shape(v.map, d * m, d, "comodule coaction");
  const Field f = c.field;
  auto co = [&](std::size_t i, std::size_t j, std::size_t q) -> const Scalar& { return v.map(j * m + q, i); };
  ValidationReport rep;
  for (std::size_t i = 0; i < d; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j)
      for (std::size_t x = 0; x < m && ok; ++x)
        for (std::size_t y = 0; y < m && ok; ++y) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t l = 0; l < d; ++l) lhs.add_product(co(i, l, y), co(l, j, x));
          for (std::size_t q = 0; q < m; ++q) rhs.add_product(co(i, j, q), c.comult(q, x, y));
          ok = lhs == rhs;
        }
    if (!ok) rep.add("coaction coassociative", {i});
    ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t q = 0; q < m; ++q) lhs.add_product(co(i, j, q), c.counit[q]);
      ok = lhs == delta(f, i, j);
    }
    if (!ok) rep.add("coaction counital", {i});
  }
  return rep;
}

ValidationReport validate_entwining_morphism(const Entwining& s, const Entwining& t, const Mat& fa, const Mat& gc) {
  require_shape(fa, t.n(), s.n(), "algebra map");
  require_shape(gc, t.m(), s.m(), "coalgebra map");
  ValidationReport rep;
  const Mat lhs_mult = fa * s.algebra.product;
  const Mat rhs_mult = t.algebra.product * kron(fa, fa);
  for (std::size_t c = 0; c < lhs_mult.cols(); ++c) {
    if (lhs_mult.col(c) != rhs_mult.col(c)) rep.add("algebra map multiplicative", {c / s.n(), c % s.n()});
  }
  if (fa * s.algebra.unit != t.algebra.unit) rep.add("algebra map unital", {});
  const Mat lhs_co = kron(gc, gc) * s.coalgebra.coproduct;
  const Mat rhs_co = t.coalgebra.coproduct * gc;
  for (std::size_t c = 0; c < lhs_co.cols(); ++c) {
    if (lhs_co.col(c) != rhs_co.col(c)) rep.add("coalgebra map comultiplicative", {c});
  }
  if (t.coalgebra.counit_map() * gc != s.coalgebra.counit_map()) rep.add("coalgebra map counital", {});
  const Mat lhs = kron(fa, gc) * s.map;
  const Mat rhs = t.map * kron(gc, fa);
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    if (lhs.col(c) != rhs.col(c)) rep.add("intertwines psi", {c / s.n(), c % s.n()});
  }
  return rep;
}

Entwining build_flip(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  require(a.field == c.field, "build_flip: field mismatch");
  Entwining e{a, c, Mat(a.field, a.dim * c.dim, c.dim * a.dim)};
  for (std::size_t p = 0; p < c.dim; ++p)
    for (std::size_t i = 0; i < a.dim; ++i) e.set_psi(p, i, i, p, Scalar::one(a.field));
  return e;
}

Entwining build_doi_hopf(const DoiHopfDatum& d) {
  if (auto rep = validate_doi_hopf(d); !rep.ok()) throw InvalidStructure("invalid Doi-Hopf datum", rep);
  const auto& A = d.comodule_algebra.algebra;
  const auto& C = d.module_coalgebra.coalgebra;
  const std::size_t h = d.bialgebra.algebra.dim;
  Entwining e{A, C, Mat(A.field, A.dim * C.dim, C.dim * A.dim)};
  for (std::size_t p = 0; p < C.dim; ++p)
    for (std::size_t i = 0; i < A.dim; ++i)
      for (std::size_t j = 0; j < A.dim; ++j)
        for (std::size_t q = 0; q < C.dim; ++q) {
          Scalar s = Scalar::zero(A.field);
          for (std::size_t z = 0; z < h; ++z)
            s.add_product(d.comodule_algebra.coact(i, j, z), d.module_coalgebra.act(p, z, q));
          e.set_psi(p, i, j, q, std::move(s));
        }
  return e;
}

FiniteAlgebra dual_opposite_algebra(const FiniteCoalgebra& c) {
  FiniteAlgebra b(c.field, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j)
      for (std::size_t p = 0; p < c.dim; ++p) b.set_mult(i, j, p, c.comult(p, j, i));
  b.unit = c.counit;
  return b;
}

FiniteAlgebra convolution_algebra(const FiniteCoalgebra& c) {
  FiniteAlgebra b(c.field, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j)
      for (std::size_t p = 0; p < c.dim; ++p) b.set_mult(i, j, p, c.comult(p, i, j));
  b.unit = c.counit;
  return b;
}

Vec left_hit(const FiniteCoalgebra& c, const Vec& xi, const Vec& elem) { return left_hit_map(c, elem) * xi; }

Vec right_hit(const FiniteCoalgebra& c, const Vec& xi, const Vec& elem) { return right_hit_map(c, elem) * xi; }

Mat left_hit_map(const FiniteCoalgebra& c, const Vec& e) {
  require(e.size() == c.dim, "left_hit: element has wrong length");
  Mat out(c.field, c.dim, c.dim);
  for (std::size_t k = 0; k < c.dim; ++k)
    for (std::size_t s = 0; s < c.dim; ++s)
      for (std::size_t p = 0; p < c.dim; ++p) out(s, k).add_product(e[p], c.comult(p, s, k));
  return out;
}

Mat right_hit_map(const FiniteCoalgebra& c, const Vec& e) {
  require(e.size() == c.dim, "right_hit: element has wrong length");
  Mat out(c.field, c.dim, c.dim);
  for (std::size_t k = 0; k < c.dim; ++k)
    for (std::size_t t = 0; t < c.dim; ++t)
      for (std::size_t p = 0; p < c.dim; ++p) out(t, k).add_product(e[p], c.comult(p, k, t));
  return out;
}

RightModule regular_module(const FiniteAlgebra& a) { return {a.dim, a.product}; }

RightModule dual_module(const FiniteAlgebra& a) {
  RightModule mod{a.dim, Mat(a.field, a.dim, a.dim * a.dim)};
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) mod.map(j, k * a.dim + i) = a.mult(i, j, k);
  return mod;
}

RightComodule regular_comodule(const FiniteCoalgebra& c) { return {c.dim, c.coproduct}; }

RightComodule dual_comodule(const FiniteCoalgebra& c) {
  const std::size_t m = c.dim;
  RightComodule v{m, Mat(c.field, m * m, m)};
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t q = 0; q < m; ++q) v.map(l * m + q, k) = c.comult(l, q, k);
  return v;
}

FiniteAlgebra ground_algebra(Field f) {
  FiniteAlgebra a(f, 1);
  a.set_mult(0, 0, 0, Scalar::one(f));
  a.unit[0] = Scalar::one(f);
  a.labels = {"1"};
  return a;
}

FiniteCoalgebra ground_coalgebra(Field f) {
  FiniteCoalgebra c(f, 1);
  c.set_comult(0, 0, 0, Scalar::one(f));
  c.counit[0] = Scalar::one(f);
  c.labels = {"1"};
  return c;
}

FiniteBialgebra cyclic_group_bialgebra(Field f, std::size_t order) {
  require(order >= 1, "cyclic group of order 0");
  FiniteAlgebra a(f, order);
  FiniteCoalgebra c(f, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) a.set_mult(i, j, (i + j) % order, Scalar::one(f));
    c.set_comult(i, i, i, Scalar::one(f));
    c.counit[i] = Scalar::one(f);
    const std::string label = i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
    a.labels.push_back(label);
    c.labels.push_back(label);
  }
  a.unit[0] = Scalar::one(f);
  return {a, c};
}

FiniteCoalgebra grouplike_coalgebra(Field f, std::size_t n) {
  FiniteCoalgebra c(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    c.set_comult(i, i, i, Scalar::one(f));
    c.counit[i] = Scalar::one(f);
    c.labels.push_back("g" + std::to_string(i + 1));
  }
  return c;
}

FiniteAlgebra upper_triangular_algebra(Field f) {
  FiniteAlgebra a(f, 3);
  const Scalar one = Scalar::one(f);
  a.set_mult(0, 0, 0, one);  // E11 E11 = E11
  a.set_mult(0, 1, 1, one);  // E11 E12 = E12
  a.set_mult(1, 2, 1, one);  // E12 E22 = E12
  a.set_mult(2, 2, 2, one);  // E22 E22 = E22
  a.unit[0] = one;
  a.unit[2] = one;
  a.labels = {"E11", "E12", "E22"};
  return a;
}

FiniteBialgebra sweedler_bialgebra(Field f) {
  require(f.characteristic() != 2, "Sweedler's Hopf algebra needs characteristic other than 2");
  const Scalar one = Scalar::one(f), minus = -Scalar::one(f);
  FiniteAlgebra a(f, 4);
  enum { E = 0, G = 1, X = 2, GX = 3 };
  for (std::size_t j = 0; j < 4; ++j) {
    a.set_mult(E, j, j, one);
    a.set_mult(j, E, j, one);
  }
  a.set_mult(G, G, E, one);
  a.set_mult(G, X, GX, one);
  a.set_mult(G, GX, X, one);
  a.set_mult(X, G, GX, minus);
  a.set_mult(GX, G, X, minus);
  a.unit[E] = one;
  a.labels = {"1", "g", "x", "gx"};

  FiniteCoalgebra c(f, 4);
  c.set_comult(E, E, E, one);
  c.set_comult(G, G, G, one);
  c.set_comult(X, X, E, one);
  c.set_comult(X, G, X, one);
  c.set_comult(GX, GX, G, one);
  c.set_comult(GX, E, GX, one);
  c.counit[E] = one;
  c.counit[G] = one;
  c.labels = a.labels;
  return {a, c};
}

DoiHopfDatum self_datum(const FiniteBialgebra& h) {
  ModuleCoalgebra mc{h, h.coalgebra, h.algebra.product};
  ComoduleAlgebra ca{h.algebra, h.coalgebra, h.coalgebra.coproduct};
  return {h, mc, ca};
}

DoiHopfDatum trivial_datum(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  const Field f = a.field;
  FiniteBialgebra k{ground_algebra(f), ground_coalgebra(f)};
  ModuleCoalgebra mc{k, c, Mat::identity(f, c.dim)};
  ComoduleAlgebra ca{a, k.coalgebra, Mat::identity(f, a.dim)};
  return {k, mc, ca};
}

}  // namespace entwine
