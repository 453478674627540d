#include "entwine/frobenius.hpp"

#include <random>
#include <stdexcept>

namespace entwine {

namespace {

using la::kron;

std::vector<Vec> candidates(Field f, const std::vector<Vec>& basis, std::size_t len, std::uint64_t seed,
                            std::size_t trials) {
  std::vector<Vec> out = basis;
  if (basis.empty()) return out;
  if (basis.size() > 1) {
    Vec sum = la::zero_vec(f, len);
    for (const Vec& b : basis)
      for (std::size_t r = 0; r < len; ++r) sum[r] += b[r];
    out.push_back(std::move(sum));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec v = la::zero_vec(f, len);
    for (const Vec& b : basis) {
      const Scalar c(f, static_cast<long>(rng() % 7) - 3);
      for (std::size_t r = 0; r < len; ++r) v[r].add_product(c, b[r]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Mat> smash_integrals(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const PsiBar bar = build_psi_bar(e);
  const FiniteAlgebra& a = e.algebra;
  Mat sys(f, n * m * n, n * m);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t row = (t * m + k) * n + s;
        for (std::size_t j = 0; j < n; ++j) sys(row, j * m + k) += a.mult(t, j, s);
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t i = 0; i < n; ++i) {
            const Scalar& pb = bar.at(t, k, l, i);
            if (pb.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) sys(row, j * m + l) -= pb * a.mult(j, i, s);
          }
      }
  std::vector<Mat> out;
  for (const Vec& v : la::kernel_basis(sys)) out.push_back(unflatten_hom(v, n, m));
  return out;
}

std::vector<Vec> entwining_integrals(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const FiniteAlgebra& a = e.algebra;
  Mat sys(f, n * n * m, n * m);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < m; ++q) {
        const std::size_t row = (t * n + j) * m + q;
        for (std::size_t i = 0; i < n; ++i) sys(row, i * m + q) += a.mult(t, i, j);
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t j1 = 0; j1 < n; ++j1) {
            const Scalar& ps = e.psi(p, t, j1, q);
            if (ps.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) sys(row, i * m + p) -= ps * a.mult(i, j1, j);
          }
      }
  return la::kernel_basis(sys);
}

ValidationReport check_smash_integral(const Entwining& e, const Mat& lambda) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (lambda.rows() != n || lambda.cols() != m) {
    rep.add("integral shape", {lambda.rows(), lambda.cols()});
    return rep;
  }
  const PsiBar bar = build_psi_bar(e);
  const FiniteAlgebra& a = e.algebra;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t k = 0; k < m; ++k) {
      bool ok = true;
      for (std::size_t s = 0; s < n && ok; ++s) {
        Scalar lhs = Scalar::zero(e.field()), rhs = Scalar::zero(e.field());
        for (std::size_t j = 0; j < n; ++j) lhs.add_product(a.mult(t, j, s), lambda(j, k));
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs.add_product(bar.at(t, k, l, i) * lambda(j, l), a.mult(j, i, s));
        ok = lhs == rhs;
      }
      if (!ok) rep.add("smash integral", {t, k});
    }
  return rep;
}

ValidationReport check_entwining_integral(const Entwining& e, const Vec& x) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (x.size() != n * m) {
    rep.add("integral shape", {x.size()});
    return rep;
  }
  const FiniteAlgebra& a = e.algebra;
  for (std::size_t t = 0; t < n; ++t) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t q = 0; q < m && ok; ++q) {
        Scalar lhs = Scalar::zero(e.field()), rhs = Scalar::zero(e.field());
        for (std::size_t i = 0; i < n; ++i) lhs.add_product(x[i * m + q], a.mult(t, i, j));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t p = 0; p < m; ++p) {
            if (x[i * m + p].is_zero()) continue;
            for (std::size_t j1 = 0; j1 < n; ++j1) rhs.add_product(x[i * m + p] * e.psi(p, t, j1, q), a.mult(i, j1, j));
          }
        ok = lhs == rhs;
      }
    if (!ok) rep.add("entwining integral", {t});
  }
  return rep;
}

Vec flatten_hom(const Mat& lambda) {
  Vec v;
  v.reserve(lambda.rows() * lambda.cols());
  for (const Scalar& s : lambda.entries()) v.push_back(s);
  return v;
}

Mat unflatten_hom(const Vec& v, std::size_t n, std::size_t m) {
  if (v.size() != n * m) throw std::invalid_argument("vector length does not match n·m");
  Mat out(v.front().field(), n, m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < m; ++k) out(j, k) = v[j * m + k];
  return out;
}

Mat hom_right_action(const Entwining& e, const SmashAlgebra& x, std::size_t k, std::size_t i) {
  const std::size_t n = e.n(), m = e.m();
  const FiniteAlgebra& a = e.algebra;
  Mat out(e.field(), n * m, n * m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t l2 = 0; l2 < m; ++l2)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& pb = x.psi_bar.at(i, l, l2, j);
        if (pb.is_zero()) continue;
        for (std::size_t s = 0; s < m; ++s) {
          const Scalar& bm = x.b.mult(k, l2, s);
          if (bm.is_zero()) continue;
          const Scalar c = pb * bm;
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t w = 0; w < n; ++w) {
              const Scalar& am = a.mult(r, j, w);
              if (!am.is_zero()) out(w * m + l, r * m + s).add_product(c, am);
            }
        }
      }
  return out;
}

Mat hom_left_action(const Entwining& e, std::size_t t) {
  const std::size_t n = e.n(), m = e.m();
  Mat out(e.field(), n * m, n * m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t j2 = 0; j2 < n; ++j2)
      for (std::size_t l = 0; l < m; ++l) out(j2 * m + l, j * m + l) = e.algebra.mult(t, j, j2);
  return out;
}

Mat theta(const Entwining& e, const SmashAlgebra& x, const Mat& lambda) {
  const std::size_t n = e.n(), m = e.m();
  const Vec v = flatten_hom(lambda);
  Mat out(e.field(), n * m, m * n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) out.set_col(x.index(k, i), hom_right_action(e, x, k, i) * v);
  return out;
}

ValidationReport check_theta(const Entwining& e, const SmashAlgebra& x, const Mat& lambda) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  const Mat th = theta(e, x, lambda);
  for (std::size_t t = 0; t < n; ++t) {
    const Mat left = x.algebra.left_mult(x.embed_a.col(t));
    if (!(th * left == hom_left_action(e, t) * th)) rep.add("theta left A-linear", {t});
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Mat right = x.algebra.right_mult(la::unit_vec(e.field(), m * n, x.index(k, i)));
      if (!(th * right == hom_right_action(e, x, k, i) * th)) rep.add("theta right X-linear", {k, i});
    }
  if (th * x.algebra.unit != flatten_hom(lambda)) rep.add("theta at unit recovers lambda", {});
  return rep;
}

ValidationReport check_eta(const Entwining& e, const SmashAlgebra& x, const Mat& lambda) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  const FiniteAlgebra& a = e.algebra;
  // g = η(λ): X -> A, g(ξ_k⊗a_i) = λ(ξ_k)a_i
  Mat g(e.field(), n, m * n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t w = 0; w < n; ++w) g(w, x.index(k, i)).add_product(lambda(j, k), a.mult(j, i, w));
  for (std::size_t t = 0; t < n; ++t) {
    const Mat right = x.algebra.right_mult(x.embed_a.col(t));
    if (!(g * right == a.right_mult(la::unit_vec(e.field(), n, t)) * g)) rep.add("eta right A-linear", {t});
  }
  if (!(g * x.embed_b == lambda)) rep.add("eta inverse round trip", {});
  return rep;
}

Mat phi_from_integral(const Entwining& e, const Vec& x) {
  const std::size_t n = e.n(), m = e.m();
  const FiniteAlgebra& a = e.algebra;
  Mat out(e.field(), n * m, m * n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
          if (x[i * m + p].is_zero()) continue;
          for (std::size_t s = 0; s < m; ++s) {
            const Scalar& d = e.coalgebra.comult(p, s, k);
            if (d.is_zero()) continue;
            const Scalar xd = x[i * m + p] * d;
            for (std::size_t j1 = 0; j1 < n; ++j1)
              for (std::size_t q = 0; q < m; ++q) {
                const Scalar& ps = e.psi(s, t, j1, q);
                if (ps.is_zero()) continue;
                const Scalar c = xd * ps;
                for (std::size_t j = 0; j < n; ++j) {
                  const Scalar& am = a.mult(i, j1, j);
                  if (!am.is_zero()) out(j * m + q, k * n + t).add_product(c, am);
                }
              }
          }
        }
  return out;
}

ValidationReport check_intertwining(const Entwining& e, const SmashAlgebra& x, const Mat& phi) {
  const std::size_t n = e.n(), m = e.m();
  const EntwinedModule source = induce_from_comodule(e, dual_comodule(e.coalgebra));
  const EntwinedModule target = induce_from_module(e, regular_module(e.algebra));
  ValidationReport rep = is_morphism(phi, source, target);
  for (std::size_t t = 0; t < n; ++t) {
    const Mat ls = x.algebra.left_mult(x.embed_a.col(t));
    const Mat lt = kron(e.algebra.left_mult(la::unit_vec(e.field(), n, t)), Mat::identity(e.field(), m));
    if (!(phi * ls == lt * phi)) rep.add("left A-linear", {t});
  }
  return rep;
}

std::vector<Vec> invariant_elements(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  Mat sys(e.field(), n * n * m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < m; ++q) {
        const std::size_t row = (i * n + j) * m + q;
        for (std::size_t p = 0; p < m; ++p) sys(row, p) += e.psi(p, i, j, q);
        if (i == j) sys(row, q) -= Scalar::one(e.field());
      }
  return la::kernel_basis(sys);
}

ValidationReport check_invariant_element(const Entwining& e, const Vec& elem) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (elem.size() != m) {
    rep.add("element shape", {elem.size()});
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t q = 0; q < m && ok; ++q) {
        Scalar lhs = Scalar::zero(e.field());
        for (std::size_t p = 0; p < m; ++p) lhs.add_product(elem[p], e.psi(p, i, j, q));
        ok = lhs == (i == j ? elem[q] : Scalar::zero(e.field()));
      }
    if (!ok) rep.add("psi fixes element", {i});
  }
  return rep;
}

Mat left_hit_matrix(const FiniteCoalgebra& c, const Vec& elem) {
  Mat out(c.field, c.dim, c.dim);
  for (std::size_t p = 0; p < c.dim; ++p)
    for (std::size_t s = 0; s < c.dim; ++s)
      for (std::size_t k = 0; k < c.dim; ++k) out(s, k).add_product(elem[p], c.comult(p, s, k));
  return out;
}

Mat right_hit_matrix(const FiniteCoalgebra& c, const Vec& elem) {
  Mat out(c.field, c.dim, c.dim);
  for (std::size_t s = 0; s < c.dim; ++s)
    for (std::size_t k = 0; k < c.dim; ++k)
      for (std::size_t t = 0; t < c.dim; ++t) out(t, k).add_product(elem[s], c.comult(s, k, t));
  return out;
}

Mat form_from_element(const FiniteCoalgebra& c, const Vec& elem) { return left_hit_matrix(c, elem); }

Vec element_from_form(const FiniteCoalgebra& c, const Mat& gram) {
  Vec out = la::zero_vec(c.field, c.dim);
  for (std::size_t nn = 0; nn < c.dim; ++nn)
    for (std::size_t k = 0; k < c.dim; ++k) out[nn].add_product(c.counit[k], gram(k, nn));
  return out;
}

ValidationReport check_element_map(const Entwining& e, const Vec& elem) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  const FiniteCoalgebra& c = e.coalgebra;
  const Mat phi = left_hit_matrix(c, elem);
  for (std::size_t k = 0; k < m; ++k) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b) {
        Scalar lhs = Scalar::zero(e.field()), rhs = Scalar::zero(e.field());
        for (std::size_t s = 0; s < m; ++s) lhs.add_product(phi(s, k), c.comult(s, a, b));
        for (std::size_t l = 0; l < m; ++l) rhs.add_product(phi(a, l), c.comult(l, b, k));
        ok = lhs == rhs;
      }
    if (!ok) rep.add("phi_e C-colinear", {k});
  }
  const PsiBar bar = build_psi_bar(e);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      bool ok = true;
      for (std::size_t j2 = 0; j2 < n && ok; ++j2)
        for (std::size_t q = 0; q < m && ok; ++q) {
          Scalar lhs = Scalar::zero(e.field());
          for (std::size_t l = 0; l < m; ++l)
            for (std::size_t j = 0; j < n; ++j) {
              const Scalar& pb = bar.at(i, k, l, j);
              if (pb.is_zero()) continue;
              for (std::size_t s = 0; s < m; ++s) lhs.add_product(pb * phi(s, l), e.psi(s, j, j2, q));
            }
          ok = lhs == (i == j2 ? phi(q, k) : Scalar::zero(e.field()));
        }
      if (!ok) rep.add("phi_e psi compatible", {i, k});
    }
  return rep;
}

ValidationReport check_form(const Entwining& e, const Mat& gram) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (gram.rows() != m || gram.cols() != m) {
    rep.add("form shape", {gram.rows(), gram.cols()});
    return rep;
  }
  const FiniteCoalgebra& c = e.coalgebra;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t cc = 0; cc < m; ++cc) {
        Scalar lhs = Scalar::zero(e.field()), rhs = Scalar::zero(e.field());
        for (std::size_t p = 0; p < m; ++p) {
          lhs.add_product(c.comult(p, a, b), gram(p, cc));
          rhs.add_product(c.comult(p, b, cc), gram(a, p));
        }
        if (lhs != rhs) rep.add("form associative", {a, b, cc});
      }
  if (!la::is_bijective(gram).bijective) rep.add("form nondegenerate", {});
  const PsiBar bar = build_psi_bar(e);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) {
        bool ok = true;
        for (std::size_t j2 = 0; j2 < n && ok; ++j2) {
          Scalar rhs = Scalar::zero(e.field());
          // ψ̄ carries a past ξ_l first, then past ξ_k
          for (std::size_t l2 = 0; l2 < m; ++l2)
            for (std::size_t j = 0; j < n; ++j) {
              const Scalar& p1 = bar.at(i, l, l2, j);
              if (p1.is_zero()) continue;
              for (std::size_t k2 = 0; k2 < m; ++k2) rhs.add_product(p1 * bar.at(j, k, k2, j2), gram(k2, l2));
            }
          ok = rhs == (i == j2 ? gram(k, l) : Scalar::zero(e.field()));
        }
        if (!ok) rep.add("form psi compatible", {i, k, l});
      }
  return rep;
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::integral: return "integral";
    case Criterion::element: return "element";
    case Criterion::form: return "form";
  }
  return "?";
}

FrobeniusOutcome frobenius_via_integral(const Entwining& e, const Vec& x) {
  if (!check_entwining_integral(e, x).ok()) throw std::invalid_argument("x is not an integral");
  FrobeniusOutcome out;
  out.candidates_tried = 1;
  const Mat phi = phi_from_integral(e, x);
  const la::Inversion inv = la::is_bijective(phi);
  out.rank_defect = inv.rank_defect;
  if (!inv.bijective) return out;
  out.found = true;
  FrobeniusCertificate& cert = out.certificate;
  cert.via = Criterion::integral;
  cert.witness = x;
  cert.map = phi;
  cert.inverse = inv.inverse;
  const SmashAlgebra sx = build_smash(e);
  const Mat lambda = unflatten_hom(x, e.n(), e.m());
  cert.siblings.append(check_intertwining(e, sx, phi));
  cert.siblings.append(check_smash_integral(e, lambda));
  cert.siblings.append(check_theta(e, sx, lambda));
  cert.siblings.append(check_eta(e, sx, lambda));
  const Mat th = theta(e, sx, lambda);
  if (!(th == phi)) cert.siblings.add("theta agrees with phi_x", {});
  if (!la::is_bijective(th).bijective) cert.siblings.add("theta bijective", {});
  return out;
}

FrobeniusOutcome frobenius_search(const Entwining& e, std::uint64_t seed, std::size_t trials) {
  const std::vector<Vec> basis = entwining_integrals(e);
  FrobeniusOutcome last;
  last.space_dim = basis.size();
  for (const Vec& x : candidates(e.field(), basis, e.n() * e.m(), seed, trials)) {
    FrobeniusOutcome o = frobenius_via_integral(e, x);
    o.space_dim = basis.size();
    o.candidates_tried = last.candidates_tried + 1;
    if (o.found) return o;
    last = o;
  }
  return last;
}

FrobeniusOutcome frobenius_element_search(const Entwining& e, std::uint64_t seed, std::size_t trials) {
  const std::vector<Vec> basis = invariant_elements(e);
  FrobeniusOutcome out;
  out.space_dim = basis.size();
  for (const Vec& elem : candidates(e.field(), basis, e.m(), seed, trials)) {
    ++out.candidates_tried;
    const Mat phi = left_hit_matrix(e.coalgebra, elem);
    const la::Inversion inv = la::is_bijective(phi);
    out.rank_defect = inv.rank_defect;
    if (!inv.bijective) continue;
    out.found = true;
    FrobeniusCertificate& cert = out.certificate;
    cert.via = Criterion::element;
    cert.witness = elem;
    cert.map = phi;
    cert.inverse = inv.inverse;
    cert.form = form_from_element(e.coalgebra, elem);
    cert.siblings.append(check_invariant_element(e, elem));
    cert.siblings.append(check_element_map(e, elem));
    if (!la::is_bijective(right_hit_matrix(e.coalgebra, elem)).bijective) cert.siblings.add("right hit bijective", {});
    cert.siblings.append(check_form(e, cert.form));
    if (element_from_form(e.coalgebra, cert.form) != elem) cert.siblings.add("form recovers element", {});
    return out;
  }
  return out;
}

FrobeniusOutcome frobenius_form_search(const Entwining& e, std::uint64_t seed, std::size_t trials) {
  FrobeniusOutcome out = frobenius_element_search(e, seed, trials);
  if (!out.found) return out;
  out.certificate.via = Criterion::form;
  const FormVerdict v = frobenius_form_check(e, out.certificate.form);
  out.certificate.siblings.append(v.report);
  out.certificate.siblings.append(v.element_report);
  return out;
}

FormVerdict frobenius_form_check(const Entwining& e, const Mat& gram) {
  FormVerdict v;
  v.report = check_form(e, gram);
  if (gram.rows() != e.m() || gram.cols() != e.m()) return v;
  v.radical = la::kernel_basis(gram);
  v.element = element_from_form(e.coalgebra, gram);
  v.element_report = check_invariant_element(e, v.element);
  if (!la::is_bijective(left_hit_matrix(e.coalgebra, v.element)).bijective) v.element_report.add("left hit bijective", {});
  return v;
}

}  // namespace entwine
