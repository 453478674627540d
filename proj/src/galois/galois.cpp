#include "entwine/galois.hpp"

#include <algorithm>

namespace entwine {

namespace {

using la::kron;

Mat right_mult_on_quotient(const FiniteAlgebra& a, const Quotient& q, std::size_t i) {
  const Mat r = a.right_mult(la::unit_vec(a.field, a.dim, i));
  return q.projection * kron(Mat::identity(a.field, a.dim), r) * q.section;
}

Mat left_mult_on_quotient(const FiniteAlgebra& a, const Quotient& q, std::size_t i) {
  const Mat l = a.left_mult(la::unit_vec(a.field, a.dim, i));
  return q.projection * kron(l, Mat::identity(a.field, a.dim)) * q.section;
}

}  // namespace

std::vector<Vec> coinvariants(const ComoduleAlgebra& ca) {
  const FiniteAlgebra& a = ca.algebra;
  const std::size_t n = a.dim, m = ca.coalgebra.dim;
  Mat sys(a.field, n * n * m, n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < m; ++q, ++row)
        for (std::size_t s = 0; s < n; ++s) {
          // ρ(a_s a_i) - a_s ρ(a_i), coefficient of a_j⊗c_q
          Scalar v = Scalar::zero(a.field);
          for (std::size_t l = 0; l < n; ++l) v.add_product(a.mult(s, i, l), ca.coact(l, j, q));
          for (std::size_t j1 = 0; j1 < n; ++j1) v -= ca.coact(i, j1, q) * a.mult(s, j1, j);
          sys(row, s) = v;
        }
  return la::kernel_basis(sys);
}

Quotient build_quotient(const FiniteAlgebra& a, const std::vector<Vec>& b) {
  const std::size_t n = a.dim;
  const Field f = a.field;
  std::vector<Vec> relations;
  for (const Vec& bv : b) {
    const Mat lb = a.left_mult(bv), rb = a.right_mult(bv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec r = la::zero_vec(f, n * n);
        for (std::size_t k = 0; k < n; ++k) {
          r[k * n + j] += rb(k, i);  // (a_i b)⊗a_j
          r[i * n + k] -= lb(k, j);  // a_i⊗(b a_j)
        }
        relations.push_back(std::move(r));
      }
  }
  Quotient q;
  std::vector<Vec> rows;
  if (relations.empty()) {
    for (std::size_t k = 0; k < n * n; ++k) rows.push_back(la::unit_vec(f, n * n, k));
  } else {
    rows = la::kernel_basis(la::from_columns(f, n * n, relations).transpose());
  }
  q.dim = rows.size();
  q.projection = la::from_columns(f, n * n, rows).transpose();
  q.section = Mat(f, n * n, q.dim);
  if (q.dim == 0) return q;
  const la::Echelon ech = la::row_reduce(q.projection);
  Mat square(f, q.dim, q.dim);
  for (std::size_t r = 0; r < q.dim; ++r)
    for (std::size_t c = 0; c < q.dim; ++c) square(r, c) = q.projection(r, ech.pivots[c]);
  const Mat inv = la::is_bijective(square).inverse;
  for (std::size_t c = 0; c < q.dim; ++c)
    for (std::size_t r = 0; r < q.dim; ++r) q.section(ech.pivots[c], r) = inv(c, r);
  return q;
}

ValidationReport check_can_equivariance(const ComoduleAlgebra& ca, const GaloisData& g) {
  ValidationReport rep;
  const FiniteAlgebra& a = ca.algebra;
  const std::size_t n = a.dim, m = ca.coalgebra.dim;
  const Field f = a.field;
  const Mat Im = Mat::identity(f, m), In = Mat::identity(f, n);
  if (!(g.can_lift == g.can * g.quotient.projection)) rep.add("can well defined", {});
  for (std::size_t i = 0; i < n; ++i) {
    const Mat l = a.left_mult(la::unit_vec(f, n, i));
    if (!(g.can * left_mult_on_quotient(a, g.quotient, i) == kron(l, Im) * g.can)) rep.add("can left A-linear", {i});
  }
  const Mat co_q = kron(g.quotient.projection, Im) * kron(In, ca.map) * g.quotient.section;
  if (!(kron(g.can, Im) * co_q == kron(In, ca.coalgebra.coproduct) * g.can)) rep.add("can right C-colinear", {});
  return rep;
}

EntwinedModule algebra_as_entwined_module(const Entwining& e, const ComoduleAlgebra& ca) {
  return EntwinedModule{e, ca.algebra.dim, ca.algebra.product, ca.map};
}

GaloisResult canonical_entwining(const ComoduleAlgebra& ca) {
  if (auto rep = validate_algebra(ca.algebra); !rep.ok()) throw InvalidStructure("invalid algebra", rep);
  if (auto rep = validate_coalgebra(ca.coalgebra); !rep.ok()) throw InvalidStructure("invalid coalgebra", rep);
  if (auto rep = validate_comodule_structure(ca); !rep.ok()) throw InvalidStructure("invalid coaction", rep);
  const FiniteAlgebra& a = ca.algebra;
  const std::size_t n = a.dim, m = ca.coalgebra.dim;
  const Field f = a.field;

  GaloisResult res;
  GaloisData& g = res.data;
  g.b_basis = coinvariants(ca);
  g.quotient = build_quotient(a, g.b_basis);
  g.can_lift = Mat(f, n * m, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t q = 0; q < m; ++q) {
          const Scalar& c = ca.coact(j, j1, q);
          if (c.is_zero()) continue;
          for (std::size_t l = 0; l < n; ++l) g.can_lift(l * m + q, i * n + j).add_product(c, a.mult(i, j1, l));
        }
  g.can = g.can_lift * g.quotient.section;
  const la::Inversion inv = la::is_bijective(g.can);
  res.rank_defect = inv.rank_defect;
  res.galois = inv.bijective;
  res.checks.append(check_can_equivariance(ca, g));
  if (!res.galois) return res;

  g.can_inverse = inv.inverse;
  g.tau = Mat(f, g.quotient.dim, m);
  for (std::size_t p = 0; p < m; ++p) {
    Vec one_c = la::zero_vec(f, n * m);
    for (std::size_t i = 0; i < n; ++i) one_c[i * m + p] = a.unit[i];
    g.tau.set_col(p, g.can_inverse * one_c);
  }
  Entwining& e = res.entwining;
  e.algebra = a;
  e.coalgebra = ca.coalgebra;
  e.map = Mat(f, n * m, m * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat step = g.can * right_mult_on_quotient(a, g.quotient, i);
    for (std::size_t p = 0; p < m; ++p) e.map.set_col(p * n + i, step * g.tau.col(p));
  }
  res.checks.append(validate_entwining(e), "canonical entwining: ");
  res.checks.append(validate_entwined_module(algebra_as_entwined_module(e, ca)), "A as entwined module: ");
  return res;
}

Vec x_tau(const ComoduleAlgebra& ca, const GaloisData& g, const Vec& x) {
  const FiniteAlgebra& a = ca.algebra;
  const std::size_t n = a.dim, m = ca.coalgebra.dim;
  Vec out = la::zero_vec(a.field, g.quotient.dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      if (x[i * m + p].is_zero()) continue;
      const Vec v = left_mult_on_quotient(a, g.quotient, i) * g.tau.col(p);
      for (std::size_t r = 0; r < out.size(); ++r) out[r].add_product(x[i * m + p], v[r]);
    }
  return out;
}

bool galois_integral_check(const ComoduleAlgebra& ca, const GaloisResult& r, const Vec& x) {
  if (!r.galois) return false;
  const Vec xt = x_tau(ca, r.data, x);
  for (std::size_t t = 0; t < ca.algebra.dim; ++t) {
    if (left_mult_on_quotient(ca.algebra, r.data.quotient, t) * xt !=
        right_mult_on_quotient(ca.algebra, r.data.quotient, t) * xt)
      return false;
  }
  return true;
}

}  // namespace entwine
