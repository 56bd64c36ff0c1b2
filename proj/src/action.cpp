#include "isodisc/action.hpp"

namespace isodisc {

int CartanData::multiplicity_sum() const {
  int s = 0;
  for (const Root& r : roots) s += r.multiplicity;
  return s;
}

std::vector<Index> LinearAction::cartan_coordinates() const {
  if (!cartan) return {};
  std::vector<Index> coords;
  for (const QVector& c : cartan->basis) {
    Index hit = -1;
    for (Index i = 0; i < c.size(); ++i) {
      if (c(i).is_zero()) continue;
      if (hit >= 0 || !c(i).is_one()) return {};
      hit = i;
    }
    if (hit < 0) return {};
    coords.push_back(hit);
  }
  return coords;
}

bool is_positive_definite(const QMatrix& s) {
  if (s.rows() != s.cols()) return false;
  if (!exact_equal(s, s.transpose())) return false;
  QMatrix a = s;
  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rat f = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

namespace {

QMatrix generator_columns(const LinearAction& action) {
  const Index d = action.d;
  QMatrix cols(d * d, action.p);
  for (Index j = 0; j < action.p; ++j) {
    const QMatrix& g = action.generators[static_cast<std::size_t>(j)];
    for (Index c = 0; c < d; ++c)
      for (Index r = 0; r < d; ++r) cols(c * d + r, j) = g(r, c);
  }
  return cols;
}

}  // namespace

std::vector<QMatrix> adjoint_matrices(const LinearAction& action) {
  const Index p = action.p, d = action.d;
  const QMatrix basis = generator_columns(action);
  std::vector<QMatrix> ad(static_cast<std::size_t>(p), QMatrix::Zero(p, p));
  for (Index i = 0; i < p; ++i) {
    for (Index j = i + 1; j < p; ++j) {
      const QMatrix& gi = action.generators[static_cast<std::size_t>(i)];
      const QMatrix& gj = action.generators[static_cast<std::size_t>(j)];
      const QMatrix comm = gi * gj - gj * gi;
      QVector target(d * d);
      for (Index c = 0; c < d; ++c)
        for (Index r = 0; r < d; ++r) target(c * d + r) = comm(r, c);
      const auto coeffs = solve(basis, target);
      if (!coeffs) {
        throw ActionError("commutator of generators " + std::to_string(i) + " and " + std::to_string(j) +
                          " is not in their span");
      }
      ad[static_cast<std::size_t>(i)].col(j) = *coeffs;
      ad[static_cast<std::size_t>(j)].col(i) = -*coeffs;
    }
  }
  return ad;
}

void validate(const LinearAction& action) {
  const Index d = action.d, p = action.p;
  if (static_cast<Index>(action.generators.size()) != p) throw ActionError("generator count does not match p");
  if (action.inner_g.rows() != p || action.inner_g.cols() != p) throw ActionError("inner_g has wrong shape");
  if (action.inner_V.rows() != d || action.inner_V.cols() != d) throw ActionError("inner_V has wrong shape");
  if (!is_positive_definite(action.inner_g)) throw ActionError("inner_g is not symmetric positive definite");
  if (!is_positive_definite(action.inner_V)) throw ActionError("inner_V is not symmetric positive definite");
  for (Index j = 0; j < p; ++j) {
    const QMatrix& g = action.generators[static_cast<std::size_t>(j)];
    if (g.rows() != d || g.cols() != d) throw ActionError("generator " + std::to_string(j) + " has wrong shape");
    const QMatrix skew = g.transpose() * action.inner_V + action.inner_V * g;
    if (!is_zero(skew)) throw ActionError("generator " + std::to_string(j) + " is not skew with respect to inner_V");
  }
  if (p > 0 && rank(generator_columns(action)) != p) throw ActionError("generators are linearly dependent");
  adjoint_matrices(action);
  if (!action.var_names.empty() && static_cast<Index>(action.var_names.size()) != d) {
    throw ActionError("variable name count does not match d");
  }
  if (action.complex_structure) {
    const QMatrix& j = *action.complex_structure;
    if (j.rows() != d || j.cols() != d || !is_zero(QMatrix(j * j + QMatrix::Identity(d, d)))) {
      throw ActionError("complex structure does not square to -I");
    }
    for (Index k = 0; k < p; ++k) {
      const QMatrix& g = action.generators[static_cast<std::size_t>(k)];
      if (!is_zero(QMatrix(g * j - j * g))) {
        throw ActionError("generator " + std::to_string(k) + " does not commute with the complex structure");
      }
    }
  }
  if (action.cartan) {
    const CartanData& cd = *action.cartan;
    if (static_cast<Index>(cd.basis.size()) != cd.r) throw ActionError("cartan basis size does not match r");
    for (std::size_t a = 0; a < cd.basis.size(); ++a) {
      if (cd.basis[a].size() != d) throw ActionError("cartan basis vector has wrong length");
      for (std::size_t b = a + 1; b < cd.basis.size(); ++b) {
        if (!inner_product(cd.basis[a], action.inner_V, cd.basis[b]).is_zero()) {
          throw ActionError("cartan basis is not orthogonal");
        }
      }
    }
    for (const Root& root : cd.roots) {
      if (root.functional.size() != cd.r || is_zero(root.functional) || root.multiplicity < 1) {
        throw ActionError("invalid root in cartan data");
      }
    }
  }
}

PolyMatrix rho_symbolic(const LinearAction& action) {
  const Index d = action.d;
  PolyMatrix out(d, action.p, static_cast<std::size_t>(d));
  for (Index j = 0; j < action.p; ++j) {
    const QMatrix& g = action.generators[static_cast<std::size_t>(j)];
    for (Index i = 0; i < d; ++i) out(i, j) = MVPoly::linear(g.row(i).transpose());
  }
  return out;
}

QMatrix rho_at(const LinearAction& action, const QVector& v) {
  QMatrix out(action.d, action.p);
  for (Index j = 0; j < action.p; ++j) out.col(j) = action.generators[static_cast<std::size_t>(j)] * v;
  return out;
}

bool operator==(const CartanData& a, const CartanData& b) {
  if (a.r != b.r || a.diagram != b.diagram || a.basis.size() != b.basis.size() || a.roots.size() != b.roots.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (!exact_equal(a.basis[i], b.basis[i])) return false;
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    if (!exact_equal(a.roots[i].functional, b.roots[i].functional) || a.roots[i].multiplicity != b.roots[i].multiplicity) {
      return false;
    }
  }
  return true;
}

bool operator==(const LinearAction& a, const LinearAction& b) {
  if (a.name != b.name || a.d != b.d || a.p != b.p || a.var_names != b.var_names) return false;
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t j = 0; j < a.generators.size(); ++j)
    if (!exact_equal(a.generators[j], b.generators[j])) return false;
  if (!exact_equal(a.inner_g, b.inner_g) || !exact_equal(a.inner_V, b.inner_V)) return false;
  if (a.cartan.has_value() != b.cartan.has_value() || (a.cartan && !(*a.cartan == *b.cartan))) return false;
  if (a.complex_structure.has_value() != b.complex_structure.has_value()) return false;
  return !a.complex_structure || exact_equal(*a.complex_structure, *b.complex_structure);
}

}  // namespace isodisc
