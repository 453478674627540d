#include "entwine/entmod.hpp"

#include <stdexcept>
#include <string>

namespace entwine {

namespace {

RightModule module_part(const EntwinedModule& mod) { return {mod.dim, mod.action}; }
RightComodule comodule_part(const EntwinedModule& mod) { return {mod.dim, mod.coaction}; }

bool shapes_ok(const EntwinedModule& mod, ValidationReport& rep) {
  const std::size_t n = mod.entwining.n(), m = mod.entwining.m(), d = mod.dim;
  if (mod.action.rows() != d || mod.action.cols() != d * n) rep.add("action shape", {mod.action.rows(), mod.action.cols()});
  if (mod.coaction.rows() != d * m || mod.coaction.cols() != d)
    rep.add("coaction shape", {mod.coaction.rows(), mod.coaction.cols()});
  return rep.ok();
}

// Hom(M, N) unknowns are the entries of a dim(N) x dim(M) matrix, row-major.
std::vector<Mat> solve_hom(const Mat& system, std::size_t rows, std::size_t cols, Field f) {
  std::vector<Mat> out;
  for (const Vec& v : la::kernel_basis(system)) {
    Mat g(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) g(r, c) = v[r * cols + c];
    out.push_back(std::move(g));
  }
  return out;
}

Mat a_linear_system(const EntwinedModule& s, const EntwinedModule& t) {
  const std::size_t n = s.entwining.n(), dm = s.dim, dn = t.dim;
  const Field f = s.entwining.field();
  Mat sys(f, dm * n * dn, dn * dm);
  std::size_t row = 0;
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < dn; ++r, ++row) {
        for (std::size_t l = 0; l < dm; ++l) sys(row, r * dm + l) += s.act(m, i, l);
        for (std::size_t l = 0; l < dn; ++l) sys(row, l * dm + m) -= t.act(l, i, r);
      }
  return sys;
}

Mat c_colinear_system(const EntwinedModule& s, const EntwinedModule& t) {
  const std::size_t mc = s.entwining.m(), dm = s.dim, dn = t.dim;
  const Field f = s.entwining.field();
  Mat sys(f, dm * dn * mc, dn * dm);
  std::size_t row = 0;
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t q = 0; q < mc; ++q, ++row) {
        for (std::size_t l = 0; l < dn; ++l) sys(row, l * dm + m) += t.coact(l, r, q);
        for (std::size_t l = 0; l < dm; ++l) sys(row, r * dm + l) -= s.coact(m, l, q);
      }
  return sys;
}

}  // namespace

ValidationReport validate_entwined_module(const EntwinedModule& mod) {
  ValidationReport rep;
  if (!shapes_ok(mod, rep)) return rep;
  const Entwining& e = mod.entwining;
  const std::size_t n = e.n(), mc = e.m(), d = mod.dim;
  rep.append(validate_right_module(e.algebra, module_part(mod)));
  rep.append(validate_right_comodule(e.coalgebra, comodule_part(mod)));
  const Field f = e.field();
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t m2 = 0; m2 < d && ok; ++m2)
        for (std::size_t q = 0; q < mc && ok; ++q) {
          Scalar lhs = Scalar::zero(f);
          for (std::size_t l = 0; l < d; ++l) lhs.add_product(mod.act(m, i, l), mod.coact(l, m2, q));
          Scalar rhs = Scalar::zero(f);
          for (std::size_t m1 = 0; m1 < d; ++m1)
            for (std::size_t p = 0; p < mc; ++p) {
              const Scalar& c = mod.coact(m, m1, p);
              if (c.is_zero()) continue;
              for (std::size_t j = 0; j < n; ++j) {
                const Scalar& ps = e.psi(p, i, j, q);
                if (!ps.is_zero()) rhs.add_product(c * ps, mod.act(m1, j, m2));
              }
            }
          ok = lhs == rhs;
        }
      if (!ok) rep.add("entwined compatibility", {m, i});
    }
  return rep;
}

EntwinedModule induce_from_module(const Entwining& e, const RightModule& v) {
  const std::size_t n = e.n(), mc = e.m(), dv = v.dim;
  const Field f = e.field();
  EntwinedModule out{e, dv * mc, Mat(f, dv * mc, dv * mc * n), Mat(f, dv * mc * mc, dv * mc)};
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t p = 0; p < mc; ++p) {
      const std::size_t col = a * mc + p;
      for (std::size_t s = 0; s < mc; ++s)
        for (std::size_t t = 0; t < mc; ++t) out.coaction((a * mc + s) * mc + t, col) = e.coalgebra.comult(p, s, t);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t q = 0; q < mc; ++q) {
            const Scalar& ps = e.psi(p, i, j, q);
            if (ps.is_zero()) continue;
            for (std::size_t w = 0; w < dv; ++w) {
              const Scalar& av = v.act(a, j, w, n);
              if (!av.is_zero()) out.action(w * mc + q, col * n + i).add_product(ps, av);
            }
          }
    }
  return out;
}

EntwinedModule induce_from_comodule(const Entwining& e, const RightComodule& v) {
  const std::size_t n = e.n(), mc = e.m(), dv = v.dim;
  const Field f = e.field();
  EntwinedModule out{e, dv * n, Mat(f, dv * n, dv * n * n), Mat(f, dv * n * mc, dv * n)};
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t col = a * n + i;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out.action(a * n + l, col * n + k) = e.algebra.mult(i, k, l);
      for (std::size_t w = 0; w < dv; ++w)
        for (std::size_t p = 0; p < mc; ++p) {
          const Scalar& cw = v.map(w * mc + p, a);
          if (cw.is_zero()) continue;
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < mc; ++q) {
              const Scalar& ps = e.psi(p, i, j, q);
              if (!ps.is_zero()) out.coaction((w * n + j) * mc + q, col).add_product(cw, ps);
            }
        }
    }
  return out;
}

ValidationReport is_a_linear(const Mat& f, const EntwinedModule& s, const EntwinedModule& t) {
  ValidationReport rep;
  const std::size_t n = s.entwining.n();
  if (f.rows() != t.dim || f.cols() != s.dim) {
    rep.add("map shape", {f.rows(), f.cols()});
    return rep;
  }
  const Field fld = s.entwining.field();
  for (std::size_t m = 0; m < s.dim; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t r = 0; r < t.dim && ok; ++r) {
        Scalar lhs = Scalar::zero(fld), rhs = Scalar::zero(fld);
        for (std::size_t l = 0; l < s.dim; ++l) lhs.add_product(s.act(m, i, l), f(r, l));
        for (std::size_t l = 0; l < t.dim; ++l) rhs.add_product(f(l, m), t.act(l, i, r));
        ok = lhs == rhs;
      }
      if (!ok) rep.add("A-linear", {m, i});
    }
  return rep;
}

ValidationReport is_c_colinear(const Mat& f, const EntwinedModule& s, const EntwinedModule& t) {
  ValidationReport rep;
  const std::size_t mc = s.entwining.m();
  if (f.rows() != t.dim || f.cols() != s.dim) {
    rep.add("map shape", {f.rows(), f.cols()});
    return rep;
  }
  const Field fld = s.entwining.field();
  for (std::size_t m = 0; m < s.dim; ++m) {
    bool ok = true;
    for (std::size_t r = 0; r < t.dim && ok; ++r)
      for (std::size_t q = 0; q < mc && ok; ++q) {
        Scalar lhs = Scalar::zero(fld), rhs = Scalar::zero(fld);
        for (std::size_t l = 0; l < t.dim; ++l) lhs.add_product(f(l, m), t.coact(l, r, q));
        for (std::size_t l = 0; l < s.dim; ++l) rhs.add_product(s.coact(m, l, q), f(r, l));
        ok = lhs == rhs;
      }
    if (!ok) rep.add("C-colinear", {m});
  }
  return rep;
}

ValidationReport is_morphism(const Mat& f, const EntwinedModule& s, const EntwinedModule& t) {
  ValidationReport rep = is_a_linear(f, s, t);
  if (f.rows() == t.dim && f.cols() == s.dim) rep.append(is_c_colinear(f, s, t));
  return rep;
}

std::vector<Mat> a_linear_maps(const EntwinedModule& s, const EntwinedModule& t) {
  return solve_hom(a_linear_system(s, t), t.dim, s.dim, s.entwining.field());
}

std::vector<Mat> c_colinear_maps(const EntwinedModule& s, const EntwinedModule& t) {
  return solve_hom(c_colinear_system(s, t), t.dim, s.dim, s.entwining.field());
}

std::vector<Mat> module_morphisms(const EntwinedModule& s, const EntwinedModule& t) {
  return solve_hom(la::vstack({a_linear_system(s, t), c_colinear_system(s, t)}), t.dim, s.dim, s.entwining.field());
}

EntwinedModule direct_sum(const EntwinedModule& a, const EntwinedModule& b) {
  const Entwining& e = a.entwining;
  const std::size_t n = e.n(), mc = e.m(), d1 = a.dim, d = a.dim + b.dim;
  const Field f = e.field();
  EntwinedModule out{e, d, Mat(f, d, d * n), Mat(f, d * mc, d)};
  for (std::size_t m = 0; m < d; ++m) {
    const bool first = m < d1;
    const EntwinedModule& src = first ? a : b;
    const std::size_t local = first ? m : m - d1, offset = first ? 0 : d1;
    for (std::size_t l = 0; l < src.dim; ++l) {
      for (std::size_t i = 0; i < n; ++i) out.action(l + offset, m * n + i) = src.act(local, i, l);
      for (std::size_t p = 0; p < mc; ++p) out.coaction((l + offset) * mc + p, m) = src.coact(local, l, p);
    }
  }
  return out;
}

EntwinedModule transport(const EntwinedModule& mod, const Mat& t) {
  const la::Inversion inv = la::is_bijective(t);
  if (!inv.bijective || t.rows() != mod.dim) throw std::invalid_argument("transport needs an invertible map on the module");
  const Field f = mod.entwining.field();
  const Mat in = Mat::identity(f, mod.entwining.n()), im = Mat::identity(f, mod.entwining.m());
  return {mod.entwining, mod.dim, t * mod.action * la::kron(inv.inverse, in), la::kron(t, im) * mod.coaction * inv.inverse};
}

ValidationReport validate_smash_module(const SmashAlgebra& x, const SmashModule& mod) {
  ValidationReport rep;
  const std::size_t dx = x.algebra.dim;
  if (mod.action.rows() != mod.dim || mod.action.cols() != mod.dim * dx) {
    rep.add("action shape", {mod.action.rows(), mod.action.cols()});
    return rep;
  }
  rep.append(validate_right_module(x.algebra, RightModule{mod.dim, mod.action}));
  return rep;
}

SmashModule to_smash_module(const EntwinedModule& mod, const SmashAlgebra& x) {
  const std::size_t n = x.n(), mc = x.m(), d = mod.dim, dx = x.algebra.dim;
  const Field f = mod.entwining.field();
  SmashModule out{d, Mat(f, d, d * dx)};
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t k = 0; k < mc; ++k)
      for (std::size_t m1 = 0; m1 < d; ++m1) {
        const Scalar& c = mod.coact(m, m1, k);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t m2 = 0; m2 < d; ++m2) {
            const Scalar& a = mod.act(m1, i, m2);
            if (!a.is_zero()) out.action(m2, m * dx + x.index(k, i)).add_product(c, a);
          }
      }
  return out;
}

EntwinedModule from_smash_module(const SmashModule& mod, const Entwining& e, const SmashAlgebra& x) {
  if (auto rep = validate_smash_module(x, mod); !rep.ok()) throw InvalidStructure("not a module over the smash algebra", rep);
  const std::size_t n = x.n(), mc = x.m(), d = mod.dim, dx = x.algebra.dim;
  const Field f = e.field();
  EntwinedModule out{e, d, Mat(f, d, d * n), Mat(f, d * mc, d)};
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t m2 = 0; m2 < d; ++m2)
      for (std::size_t k = 0; k < mc; ++k)
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar& v = mod.action(m2, m * dx + x.index(k, i));
          if (v.is_zero()) continue;
          // ε⊗a_i and ξ_k⊗1_A expanded in the basis ξ_k⊗a_i
          out.action(m2, m * n + i).add_product(e.coalgebra.counit[k], v);
          out.coaction(m2 * mc + k, m).add_product(e.algebra.unit[i], v);
        }
  if (auto rep = validate_entwined_module(out); !rep.ok())
    throw InvalidStructure("smash module does not define an entwined module", rep);
  return out;
}

ValidationReport is_smash_linear(const Mat& f, const SmashModule& s, const SmashModule& t, const SmashAlgebra& x) {
  ValidationReport rep;
  if (f.rows() != t.dim || f.cols() != s.dim) {
    rep.add("map shape", {f.rows(), f.cols()});
    return rep;
  }
  const std::size_t dx = x.algebra.dim;
  const Field fld = f.field();
  for (std::size_t m = 0; m < s.dim; ++m)
    for (std::size_t b = 0; b < dx; ++b) {
      bool ok = true;
      for (std::size_t r = 0; r < t.dim && ok; ++r) {
        Scalar lhs = Scalar::zero(fld), rhs = Scalar::zero(fld);
        for (std::size_t l = 0; l < s.dim; ++l) lhs.add_product(s.action(l, m * dx + b), f(r, l));
        for (std::size_t l = 0; l < t.dim; ++l) rhs.add_product(f(l, m), t.action(r, l * dx + b));
        ok = lhs == rhs;
      }
      if (!ok) rep.add("X-linear", {m, b});
    }
  return rep;
}

}  // namespace entwine
