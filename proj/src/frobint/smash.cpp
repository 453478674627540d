#include "entwine/smash.hpp"

namespace entwine {

PsiBar build_psi_bar(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  PsiBar bar{n, m, Mat(e.field(), m * n, n * m)};
  // Pairing ψ(c_l⊗a_i) against ξ_k picks out the c_k coefficient.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < n; ++j) bar.map(l * n + j, i * m + k) = e.psi(l, i, j, k);
  return bar;
}

ValidationReport check_psi_bar(const Entwining& e, const PsiBar& bar) {
  const std::size_t n = e.n(), m = e.m();
  ValidationReport rep;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
          // (A⊗ev)(ψ(c_p⊗a_i)⊗ξ_k) against (ev⊗A)(c_p⊗ψ̄(a_i⊗ξ_k)), coefficient of a_j
          const Scalar& lhs = e.psi(p, i, j, k);
          const Scalar& rhs = bar.at(i, k, p, j);
          ok = lhs == rhs;
        }
        if (!ok) rep.add("psi-bar defining square", {p, i, k});
      }
  return rep;
}

PsiBarSolution solve_psi_bar(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const std::size_t unknowns = m * n * n * m;
  auto unknown = [&](std::size_t i, std::size_t k, std::size_t l, std::size_t j) {
    return (l * n + j) * (n * m) + (i * m + k);
  };
  Mat system(f, m * n * m * n, unknowns);
  Vec rhs = la::zero_vec(f, system.rows());
  std::size_t row = 0;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j, ++row) {
          for (std::size_t l = 0; l < m; ++l) {
            if (l == p) system(row, unknown(i, k, l, j)) += Scalar::one(f);
          }
          rhs[row] = e.psi(p, i, j, k);
        }
  const auto sol = la::solve_affine(system, rhs);
  PsiBarSolution out;
  out.consistent = sol.consistent;
  out.kernel_dim = sol.kernel.size();
  if (sol.consistent) {
    out.particular = PsiBar{n, m, Mat(f, m * n, n * m)};
    for (std::size_t r = 0; r < m * n; ++r)
      for (std::size_t c = 0; c < n * m; ++c) out.particular.map(r, c) = sol.particular[r * (n * m) + c];
  }
  return out;
}

SmashAlgebra build_smash(const Entwining& e) {
  const std::size_t n = e.n(), m = e.m();
  const Field f = e.field();
  const auto& a = e.algebra;
  SmashAlgebra x;
  x.b = dual_opposite_algebra(e.coalgebra);
  x.psi_bar = build_psi_bar(e);
  x.algebra = FiniteAlgebra(f, m * n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          // (ξ_k⊗a_i)(ξ_l⊗a_j) = ξ_k ψ̄(a_i⊗ξ_l) a_j
          const std::size_t left = k * n + i, right = l * n + j;
          for (std::size_t l2 = 0; l2 < m; ++l2)
            for (std::size_t i2 = 0; i2 < n; ++i2) {
              const Scalar& coeff = x.psi_bar.at(i, l, l2, i2);
              if (coeff.is_zero()) continue;
              for (std::size_t s = 0; s < m; ++s) {
                const Scalar& bs = x.b.mult(k, l2, s);
                if (bs.is_zero()) continue;
                const Scalar cb = coeff * bs;
                for (std::size_t t = 0; t < n; ++t) {
                  const Scalar& at = a.mult(i2, j, t);
                  if (!at.is_zero()) x.algebra.product(s * n + t, left * (m * n) + right).add_product(cb, at);
                }
              }
            }
        }
  x.embed_a = Mat(f, m * n, n);
  x.embed_b = Mat(f, m * n, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      x.algebra.unit[k * n + i] = e.coalgebra.counit[k] * a.unit[i];
      x.embed_a(k * n + i, i) = e.coalgebra.counit[k];
      x.embed_b(k * n + i, k) = a.unit[i];
    }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const std::string bl = k < e.coalgebra.labels.size() ? e.coalgebra.labels[k] + "*" : "xi" + std::to_string(k);
      const std::string al = i < a.labels.size() ? a.labels[i] : "a" + std::to_string(i);
      x.algebra.labels.push_back(bl + "#" + al);
    }
  return x;
}

ValidationReport check_smash_embeddings(const Entwining& e, const SmashAlgebra& x) {
  ValidationReport rep;
  auto check = [&](const FiniteAlgebra& sub, const Mat& embed, const std::string& name) {
    const Mat lhs = embed * sub.product;
    const Mat rhs = x.algebra.product * kron(embed, embed);
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (lhs.col(c) != rhs.col(c)) rep.add(name + " embedding multiplicative", {c / sub.dim, c % sub.dim});
    }
    if (embed * sub.unit != x.algebra.unit) rep.add(name + " embedding unital", {});
  };
  check(e.algebra, x.embed_a, "A");
  check(x.b, x.embed_b, "B");
  return rep;
}

}  // namespace entwine
