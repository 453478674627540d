#include "entwine/maschke.hpp"

#include <random>
#include <stdexcept>

namespace entwine {

namespace {

using la::kron;

MapSolution solve(const Mat& linear, const Mat& affine, const Vec& rhs, std::size_t rows, std::size_t cols, Field f) {
  MapSolution out;
  out.homogeneous_dim = la::kernel_basis(linear).size();
  const la::AffineSolution sol = la::solve_affine(la::vstack({linear, affine}), [&] {
    Vec b = la::zero_vec(f, linear.rows());
    b.insert(b.end(), rhs.begin(), rhs.end());
    return b;
  }());
  if (!sol.consistent) {
    out.failure = "normalisation condition inconsistent on the solution space of the two linear conditions";
    return out;
  }
  out.exists = true;
  out.solution_dim = sol.kernel.size();
  out.map = Mat(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.map(r, c) = sol.particular[r * cols + c];
  return out;
}

}  // namespace

std::string map_kind_name(MapKind k) { return k == MapKind::integral ? "integral" : "cointegral"; }
std::string split_kind_name(SplitKind k) { return k == SplitKind::section ? "section" : "retraction"; }

MapSolution find_integral_map(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const FiniteCoalgebra& c = e.coalgebra;
  // F[p][k][i] is entry (k·n + i, p) of φ
  auto unknown = [&](std::size_t p, std::size_t k, std::size_t i) { return (k * n + i) * m + p; };
  const std::size_t u = m * n * m;
  Mat one(f, m * m * n * n, u);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t row = ((p * m + r) * n + i) * n + t;
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < m; ++q) {
              const Scalar& p1 = e.psi(r, i, j, q);
              if (p1.is_zero()) continue;
              for (std::size_t j2 = 0; j2 < n; ++j2)
                for (std::size_t q2 = 0; q2 < m; ++q2) {
                  const Scalar& p2 = e.psi(p, j, j2, q2);
                  if (p2.is_zero()) continue;
                  const Scalar pp = p1 * p2;
                  for (std::size_t i2 = 0; i2 < n; ++i2) {
                    const Scalar& am = a.mult(j2, i2, t);
                    if (!am.is_zero()) one(row, unknown(q, q2, i2)).add_product(pp, am);
                  }
                }
            }
          for (std::size_t i2 = 0; i2 < n; ++i2) one(row, unknown(r, p, i2)) -= a.mult(i2, i, t);
        }
  Mat two(f, m * m * n * m, u);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < m; ++q) {
          const std::size_t row = ((p * m + r) * n + j) * m + q;
          for (std::size_t s = 0; s < m; ++s) two(row, unknown(s, p, j)) += c.comult(r, s, q);
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
              const Scalar& d = c.comult(p, s, t);
              if (d.is_zero()) continue;
              for (std::size_t i = 0; i < n; ++i) two(row, unknown(r, t, i)) -= d * e.psi(s, i, j, q);
            }
        }
  Mat three(f, m * n, u);
  Vec rhs = la::zero_vec(f, m * n);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = p * n + i;
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) three(row, unknown(t, s, i)) += c.comult(p, s, t);
      rhs[row] = c.counit[p] * a.unit[i];
    }
  MapSolution out = solve(la::vstack({one, two}), three, rhs, m * n, m, f);
  if (out.exists) out.verification = check_integral_map(e, out.map);
  return out;
}

ValidationReport check_integral_map(const Entwining& e, const Mat& phi) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (phi.rows() != m * n || phi.cols() != m) {
    rep.add("integral map shape", {phi.rows(), phi.cols()});
    return rep;
  }
  const Field f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const FiniteCoalgebra& c = e.coalgebra;
  auto F = [&](std::size_t p, std::size_t k, std::size_t i) -> const Scalar& { return phi(k * n + i, p); };
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (std::size_t t = 0; t < n && ok; ++t) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < m; ++q)
              for (std::size_t j2 = 0; j2 < n; ++j2)
                for (std::size_t q2 = 0; q2 < m; ++q2)
                  for (std::size_t i2 = 0; i2 < n; ++i2)
                    lhs.add_product(e.psi(r, i, j, q) * e.psi(p, j, j2, q2), F(q, q2, i2) * a.mult(j2, i2, t));
          for (std::size_t i2 = 0; i2 < n; ++i2) rhs.add_product(F(r, p, i2), a.mult(i2, i, t));
          ok = lhs == rhs;
        }
        if (!ok) rep.add("integral map A-linear", {p, r, i});
      }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t q = 0; q < m && ok; ++q) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t s = 0; s < m; ++s) lhs.add_product(c.comult(r, s, q), F(s, p, j));
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
              for (std::size_t i = 0; i < n; ++i) rhs.add_product(c.comult(p, s, t) * F(r, t, i), e.psi(s, i, j, q));
          ok = lhs == rhs;
        }
      if (!ok) rep.add("integral map C-colinear", {p, r});
    }
  for (std::size_t p = 0; p < m; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) lhs.add_product(c.comult(p, s, t), F(t, s, i));
      ok = lhs == c.counit[p] * a.unit[i];
    }
    if (!ok) rep.add("integral map normalised", {p});
  }
  return rep;
}

MapSolution find_cointegral_map(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const FiniteCoalgebra& c = e.coalgebra;
  // G[k][p][i] is entry (i, k·m + p) of φ
  auto unknown = [&](std::size_t k, std::size_t p, std::size_t i) { return i * (n * m) + k * m + p; };
  const std::size_t u = n * n * m;
  Mat one(f, m * n * n * m, u);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t j2 = 0; j2 < n; ++j2)
        for (std::size_t q2 = 0; q2 < m; ++q2) {
          const std::size_t row = ((p * n + j) * n + j2) * m + q2;
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
              const Scalar& d = c.comult(p, s, t);
              if (d.is_zero()) continue;
              for (std::size_t l = 0; l < n; ++l)
                for (std::size_t q = 0; q < m; ++q) {
                  const Scalar& p1 = e.psi(s, l, j, q);
                  if (p1.is_zero()) continue;
                  const Scalar dp = d * p1;
                  for (std::size_t i = 0; i < n; ++i) {
                    const Scalar& p2 = e.psi(q, i, j2, q2);
                    if (!p2.is_zero()) one(row, unknown(l, t, i)).add_product(dp, p2);
                  }
                }
            }
          for (std::size_t s = 0; s < m; ++s) one(row, unknown(j, s, j2)) -= c.comult(p, s, q2);
        }
  Mat two(f, m * n * n * n, u);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t row = ((p * n + i) * n + w) * n + t;
          for (std::size_t i2 = 0; i2 < n; ++i2) two(row, unknown(w, p, i2)) += a.mult(i2, i, t);
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < m; ++q) {
              const Scalar& ps = e.psi(p, i, j, q);
              if (ps.is_zero()) continue;
              for (std::size_t l = 0; l < n; ++l) two(row, unknown(l, q, t)) -= ps * a.mult(j, l, w);
            }
        }
  Mat three(f, m * n, u);
  Vec rhs = la::zero_vec(f, m * n);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t row = p * n + t;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i) three(row, unknown(l, p, i)) += a.mult(l, i, t);
      rhs[row] = c.counit[p] * a.unit[t];
    }
  MapSolution out = solve(la::vstack({one, two}), three, rhs, n, n * m, f);
  if (out.exists) {
    out.verification = check_cointegral_map(e, out.map);
    out.verification.append(check_cointegral_lifted_map(e, cointegral_lifted_map(e, out.map)), "lifted map: ");
  }
  return out;
}

ValidationReport check_cointegral_map(const Entwining& e, const Mat& phi) {
  ValidationReport rep;
  const std::size_t n = e.n(), m = e.m();
  if (phi.rows() != n || phi.cols() != n * m) {
    rep.add("cointegral map shape", {phi.rows(), phi.cols()});
    return rep;
  }
  const Field f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const FiniteCoalgebra& c = e.coalgebra;
  auto G = [&](std::size_t k, std::size_t p, std::size_t i) -> const Scalar& { return phi(i, k * m + p); };
  for (std::size_t p = 0; p < m; ++p) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t j2 = 0; j2 < n && ok; ++j2)
        for (std::size_t q2 = 0; q2 < m && ok; ++q2) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
              for (std::size_t l = 0; l < n; ++l)
                for (std::size_t q = 0; q < m; ++q)
                  for (std::size_t i = 0; i < n; ++i)
                    lhs.add_product(c.comult(p, s, t) * e.psi(s, l, j, q), G(l, t, i) * e.psi(q, i, j2, q2));
          for (std::size_t s = 0; s < m; ++s) rhs.add_product(c.comult(p, s, q2), G(j, s, j2));
          ok = lhs == rhs;
        }
    if (!ok) rep.add("cointegral map C-colinear", {p});
  }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t w = 0; w < n && ok; ++w)
        for (std::size_t t = 0; t < n && ok; ++t) {
          Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
          for (std::size_t i2 = 0; i2 < n; ++i2) lhs.add_product(G(w, p, i2), a.mult(i2, i, t));
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < m; ++q)
              for (std::size_t l = 0; l < n; ++l) rhs.add_product(e.psi(p, i, j, q) * a.mult(j, l, w), G(l, q, t));
          ok = lhs == rhs;
        }
      if (!ok) rep.add("cointegral map A-linear", {p, i});
    }
  for (std::size_t p = 0; p < m; ++p) {
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) {
      Scalar lhs = Scalar::zero(f);
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i) lhs.add_product(G(l, p, i), a.mult(l, i, t));
      ok = lhs == c.counit[p] * a.unit[t];
    }
    if (!ok) rep.add("cointegral map normalised", {p});
  }
  return rep;
}

Mat cointegral_lifted_map(const Entwining& e, const Mat& phi) {
  const std::size_t n = e.n(), m = e.m();
  const FiniteCoalgebra& c = e.coalgebra;
  Mat out(e.field(), m * n, n * m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          const Scalar& d = c.comult(p, s, t);
          if (d.is_zero()) continue;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t q = 0; q < m; ++q) {
              const Scalar& ps = e.psi(s, i, k, q);
              if (ps.is_zero()) continue;
              const Scalar dp = d * ps;
              for (std::size_t w = 0; w < n; ++w) out(q * n + w, k * m + p).add_product(dp, phi(w, i * m + t));
            }
        }
  return out;
}

ValidationReport check_cointegral_lifted_map(const Entwining& e, const Mat& lifted) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const EntwinedModule source = induce_from_module(e, dual_module(e.algebra));
  const EntwinedModule target = induce_from_comodule(e, regular_comodule(e.coalgebra));
  ValidationReport rep = is_morphism(lifted, source, target);
  Mat hat(f, m * n, n * m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < m; ++q) hat(q * n + i, k * m + p) = e.psi(p, i, k, q);
  const Mat left_source = kron(hat, Mat::identity(f, m)) * kron(Mat::identity(f, n), e.coalgebra.coproduct);
  const Mat lhs = kron(Mat::identity(f, m), lifted) * left_source;
  const Mat rhs = kron(e.coalgebra.coproduct, Mat::identity(f, n)) * lifted;
  for (std::size_t col = 0; col < n * m; ++col)
    if (lhs.col(col) != rhs.col(col)) rep.add("left C-colinear", {col / m, col % m});
  return rep;
}

Mat lift_with_integral_map(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi) {
  const std::size_t n = from.entwining.n(), m = from.entwining.m();
  const Field f = from.entwining.field();
  // ρ^N∘g on the image of each m_(0)
  const Mat cog = to.coaction * g;
  Mat out(f, to.dim, from.dim);
  for (std::size_t x = 0; x < from.dim; ++x)
    for (std::size_t x1 = 0; x1 < from.dim; ++x1)
      for (std::size_t p = 0; p < m; ++p) {
        const Scalar& cm = from.coact(x, x1, p);
        if (cm.is_zero()) continue;
        for (std::size_t y1 = 0; y1 < to.dim; ++y1)
          for (std::size_t q = 0; q < m; ++q) {
            const Scalar& cn = cog(y1 * m + q, x1);
            if (cn.is_zero()) continue;
            const Scalar cc = cm * cn;
            for (std::size_t i = 0; i < n; ++i) {
              // pairing ⟨g(m_(0))_(1), m_(1)^(1)⟩ picks ξ_q in φ(c_p)
              const Scalar& ph = phi(q * n + i, p);
              if (ph.is_zero()) continue;
              const Scalar cp = cc * ph;
              for (std::size_t y2 = 0; y2 < to.dim; ++y2) out(y2, x).add_product(cp, to.act(y1, i, y2));
            }
          }
      }
  return out;
}

Mat lift_with_cointegral_map(const EntwinedModule& from, const EntwinedModule& to, const Mat& g, const Mat& phi) {
  const std::size_t n = from.entwining.n(), m = from.entwining.m();
  const Field f = from.entwining.field();
  Mat out(f, to.dim, from.dim);
  for (std::size_t x = 0; x < from.dim; ++x)
    for (std::size_t x0 = 0; x0 < from.dim; ++x0)
      for (std::size_t p = 0; p < m; ++p) {
        const Scalar& cm = from.coact(x, x0, p);
        if (cm.is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) {
          // g(m_(0)·a_l)
          Vec ga = la::zero_vec(f, to.dim);
          for (std::size_t x1 = 0; x1 < from.dim; ++x1) {
            const Scalar& am = from.act(x0, l, x1);
            if (am.is_zero()) continue;
            for (std::size_t y = 0; y < to.dim; ++y) ga[y].add_product(am, g(y, x1));
          }
          for (std::size_t i = 0; i < n; ++i) {
            const Scalar& ph = phi(i, l * m + p);
            if (ph.is_zero()) continue;
            const Scalar cp = cm * ph;
            for (std::size_t y = 0; y < to.dim; ++y) {
              if (ga[y].is_zero()) continue;
              const Scalar cy = cp * ga[y];
              for (std::size_t y2 = 0; y2 < to.dim; ++y2) out(y2, x).add_product(cy, to.act(y, i, y2));
            }
          }
        }
      }
  return out;
}

SplitCertificate split(const SplitProblem& pr, MapKind via, const Mat& phi) {
  const std::size_t ds = pr.source.dim, dt = pr.target.dim;
  if (pr.f.rows() != dt || pr.f.cols() != ds) throw std::invalid_argument("f has the wrong shape");
  if (pr.g.rows() != ds || pr.g.cols() != dt) throw std::invalid_argument("g has the wrong shape");
  const Field f = pr.source.entwining.field();
  SplitCertificate cert;
  cert.via = via;
  cert.kind = pr.kind;
  cert.f = pr.f;
  cert.g = pr.g;
  cert.phi = phi;
  const Entwining& e = pr.source.entwining;
  cert.preconditions.append(via == MapKind::integral ? check_integral_map(e, phi) : check_cointegral_map(e, phi));
  cert.preconditions.append(is_morphism(pr.f, pr.source, pr.target), "f: ");
  cert.preconditions.append(
      via == MapKind::integral ? is_a_linear(pr.g, pr.target, pr.source) : is_c_colinear(pr.g, pr.target, pr.source),
      "g: ");
  if (pr.kind == SplitKind::section) {
    if (!(pr.f * pr.g == Mat::identity(f, dt))) cert.preconditions.add("g: f∘g = id", {});
  } else {
    if (!(pr.g * pr.f == Mat::identity(f, ds))) cert.preconditions.add("g: g∘f = id", {});
  }
  if (!cert.preconditions.ok()) return cert;
  cert.g_tilde = via == MapKind::integral ? lift_with_integral_map(pr.target, pr.source, pr.g, phi)
                                          : lift_with_cointegral_map(pr.target, pr.source, pr.g, phi);
  cert.checks.append(is_morphism(cert.g_tilde, pr.target, pr.source), "lift: ");
  if (pr.kind == SplitKind::section) {
    if (!(pr.f * cert.g_tilde == Mat::identity(f, dt))) cert.checks.add("lift: f∘g̃ = id", {});
  } else {
    if (!(cert.g_tilde * pr.f == Mat::identity(f, ds))) cert.checks.add("lift: g̃∘f = id", {});
  }
  return cert;
}

SplitProblem make_split_problem(const EntwinedModule& m, const EntwinedModule& complement, SplitKind kind, MapKind via,
                                std::uint64_t seed) {
  const Field f = m.entwining.field();
  const std::size_t d = m.dim, dc = complement.dim, total = d + dc;
  const EntwinedModule sum = direct_sum(m, complement);
  std::mt19937_64 rng(seed);
  auto random_combination = [&](const std::vector<Mat>& basis, std::size_t rows, std::size_t cols) {
    Mat h(f, rows, cols);
    for (const Mat& b : basis) h += b * Scalar(f, static_cast<long>(rng() % 7) - 3);
    return h;
  };
  SplitProblem pr;
  pr.kind = kind;
  if (kind == SplitKind::section) {
    // f: M ⊕ M' -> M, g = (id, h) with h: M -> M'
    pr.source = sum;
    pr.target = m;
    pr.f = Mat(f, d, total);
    for (std::size_t i = 0; i < d; ++i) pr.f(i, i) = Scalar::one(f);
    const Mat h = random_combination(via == MapKind::integral ? a_linear_maps(m, complement) : c_colinear_maps(m, complement),
                                     dc, d);
    pr.g = Mat(f, total, d);
    for (std::size_t i = 0; i < d; ++i) pr.g(i, i) = Scalar::one(f);
    for (std::size_t r = 0; r < dc; ++r)
      for (std::size_t c = 0; c < d; ++c) pr.g(d + r, c) = h(r, c);
  } else {
    // f: M -> M ⊕ M', g = (id | h) with h: M' -> M
    pr.source = m;
    pr.target = sum;
    pr.f = Mat(f, total, d);
    for (std::size_t i = 0; i < d; ++i) pr.f(i, i) = Scalar::one(f);
    const Mat h = random_combination(via == MapKind::integral ? a_linear_maps(complement, m) : c_colinear_maps(complement, m),
                                     d, dc);
    pr.g = Mat(f, d, total);
    for (std::size_t i = 0; i < d; ++i) pr.g(i, i) = Scalar::one(f);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < dc; ++c) pr.g(r, d + c) = h(r, c);
  }
  return pr;
}

}  // namespace entwine
