#include "isodisc/discriminant.hpp"

#include "isodisc/random.hpp"

namespace isodisc {

Index orbit_dim(const LinearAction& action, std::uint64_t seed) {
  SeededRng rng(seed);
  Index best = 0;
  for (int k = 0; k < 3; ++k) best = std::max(best, rank(rho_at(action, rng.vector(action.d, 9))));
  return best;
}

MVPoly discriminant_minors(const LinearAction& action, Index m, std::uint64_t cap) {
  const std::size_t nv = static_cast<std::size_t>(action.d);
  if (m == 0) return MVPoly::constant(nv, Rat(1));
  if (!is_diagonal(action.inner_V) || !is_diagonal(action.inner_g)) {
    throw std::invalid_argument("discriminant_minors: metrics must be diagonal");
  }
  const std::uint64_t rows = binomial(static_cast<unsigned>(action.d), static_cast<unsigned>(m));
  const std::uint64_t cols = binomial(static_cast<unsigned>(action.p), static_cast<unsigned>(m));
  if (rows > cap || cols > cap || rows * cols > cap) {
    throw CapExceeded("discriminant_minors: " + std::to_string(rows) + " x " + std::to_string(cols) +
                      " minors exceed cap; use the characteristic-coefficient route");
  }
  const PolyMatrix rho = rho_symbolic(action);
  const WedgeBasis col_sets(action.p, m, cap);
  PolyAccumulator acc(nv);
  for (Index c = 0; c < col_sets.size(); ++c) {
    Rat col_weight(1);
    const std::vector<Index> cols_idx = col_sets.indices(c);
    for (Index j : cols_idx) col_weight /= action.inner_g(j, j);
    for (const auto& [mask, minor] : maximal_minors(rho, cols_idx)) {
      if (minor.is_zero()) continue;
      Rat w = col_weight;
      for (Index i : mask_indices(mask)) w *= action.inner_V(i, i);
      acc.add_product(w, minor, minor);
    }
  }
  MVPoly delta = std::move(acc).finish();
  delta.assert_homogeneous(static_cast<unsigned>(2 * m));
  return delta;
}

MVPoly discriminant_minors(const LinearAction& action, std::uint64_t seed) {
  return discriminant_minors(action, orbit_dim(action, seed));
}

PolyMatrix symbolic_gram(const LinearAction& action) {
  const PolyMatrix rho = rho_symbolic(action);
  const PolyMatrix sv_rho = action.inner_V * rho;
  return inverse(action.inner_g) * (rho.transpose() * sv_rho);
}

MVPoly discriminant_charcoeff(const LinearAction& action, Index m) {
  const std::size_t nv = static_cast<std::size_t>(action.d);
  if (m == 0) return MVPoly::constant(nv, Rat(1));
  const std::vector<MVPoly> e = char_coeffs_symbolic(symbolic_gram(action));
  for (std::size_t k = static_cast<std::size_t>(m) + 1; k <= e.size(); ++k) {
    if (!e[k - 1].is_zero()) throw std::logic_error("discriminant_charcoeff: e_k nonzero above the orbit dimension");
  }
  MVPoly delta = e[static_cast<std::size_t>(m) - 1];
  delta.assert_homogeneous(static_cast<unsigned>(2 * m));
  return delta;
}

MVPoly discriminant_charcoeff(const LinearAction& action, std::uint64_t seed) {
  return discriminant_charcoeff(action, orbit_dim(action, seed));
}

MVPoly restrict_cartan(const MVPoly& f, const CartanData& cd) {
  if (cd.basis.empty()) throw std::invalid_argument("restrict_cartan: cartan data missing");
  const Index d = static_cast<Index>(f.nvars());
  QMatrix t(d, cd.r);
  for (Index k = 0; k < cd.r; ++k) {
    if (cd.basis[static_cast<std::size_t>(k)].size() != d) throw std::invalid_argument("restrict_cartan: dimension mismatch");
    t.col(k) = cd.basis[static_cast<std::size_t>(k)];
  }
  return f.substitute_linear(t);
}

MVPoly root_product(const CartanData& cd) {
  MVPoly out = MVPoly::constant(static_cast<std::size_t>(cd.r), Rat(1));
  for (const Root& root : cd.roots) out = out * MVPoly::linear(root.functional).pow(static_cast<unsigned>(2 * root.multiplicity));
  return out;
}

}  // namespace isodisc
