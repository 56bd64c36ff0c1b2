#include "isodisc/equivariant.hpp"

#include "isodisc/discriminant.hpp"

#include <algorithm>
#include <unordered_map>

namespace isodisc {

namespace {

// Incrementally grown row-echelon basis of a subspace.
class EchelonSpan {
 public:
  QVector reduce(QVector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat c = v(pivots_[k]);
      if (!c.is_zero()) v -= c * rows_[k];
    }
    return v;
  }

  bool add(const QVector& v) {
    QVector r = reduce(v);
    Index piv = -1;
    for (Index i = 0; i < r.size(); ++i) {
      if (!r(i).is_zero()) { piv = i; break; }
    }
    if (piv < 0) return false;
    const Rat inv = r(piv).inverse();
    r *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<QVector> rows_;
  std::vector<Index> pivots_;
};

bool is_scalar(const QMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (i == j ? !(m(i, j) == m(0, 0)) : !m(i, j).is_zero()) return false;
    }
  return true;
}

// Coordinates of v in the basis formed by the concatenated blocks.
std::vector<QVector> split_along(const std::vector<std::vector<QVector>>& blocks, const QVector& v) {
  std::vector<QVector> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  const auto coeffs = solve(columns(all, v.size()), v);
  if (!coeffs) throw std::logic_error("split_along: vector outside the span of the blocks");
  std::vector<QVector> parts;
  Index off = 0;
  for (const auto& b : blocks) {
    QVector part = QVector::Zero(v.size());
    for (std::size_t k = 0; k < b.size(); ++k) part += (*coeffs)(off + static_cast<Index>(k)) * b[k];
    off += static_cast<Index>(b.size());
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

std::vector<QMatrix> induced_wedge_action(const LinearAction& action, Index k, std::uint64_t cap) {
  const WedgeBasis wb(action.d, k, cap);
  std::vector<QMatrix> out;
  for (const QMatrix& g : action.generators) out.push_back(wedge_derivation(g, wb));
  return out;
}

MVPoly PhiMap::image(const QVector& u) const {
  return from_coefficient_vector(nvars, QVector(matrix * u), monomials);
}

PhiMap phi_matrix(const LinearAction& action, Index m, std::uint64_t cap) {
  const std::uint64_t gdim = binomial(static_cast<unsigned>(action.p), static_cast<unsigned>(m));
  const std::uint64_t vdim = binomial(static_cast<unsigned>(action.d), static_cast<unsigned>(m));
  if (gdim * vdim > cap) {
    throw CapExceeded("phi_matrix: domain dimension " + std::to_string(gdim * vdim) + " exceeds cap");
  }
  PhiMap phi;
  phi.m = m;
  phi.g_wedge = WedgeBasis(action.p, m, cap);
  phi.v_wedge = WedgeBasis(action.d, m, cap);
  phi.nvars = static_cast<std::size_t>(action.d);
  phi.monomials = monomials_of_degree(phi.nvars, static_cast<unsigned>(m));
  std::unordered_map<Monomial, Index, MonomialHash> row_of;
  for (std::size_t k = 0; k < phi.monomials.size(); ++k) row_of.emplace(phi.monomials[k], static_cast<Index>(k));
  phi.matrix = QMatrix::Zero(static_cast<Index>(phi.monomials.size()), phi.domain_dim());

  const PolyMatrix sv_rho = action.inner_V * rho_symbolic(action);
  for (Index j = 0; j < phi.g_wedge.size(); ++j) {
    for (const auto& [mask, minor] : maximal_minors(sv_rho, phi.g_wedge.indices(j))) {
      const Index col = phi.domain_index(j, phi.v_wedge.index_of(mask));
      for (const Term& t : minor.terms()) phi.matrix(row_of.at(t.mono), col) = t.coef;
    }
  }
  return phi;
}

QMatrix domain_inner(const LinearAction& action, const PhiMap& phi) {
  return kron(wedge_gram(action.inner_g, phi.g_wedge), wedge_gram(action.inner_V, phi.v_wedge));
}

std::vector<QMatrix> domain_generators(const LinearAction& action, const PhiMap& phi) {
  const std::vector<QMatrix> ad = adjoint_matrices(action);
  const QMatrix ig = QMatrix::Identity(phi.g_wedge.size(), phi.g_wedge.size());
  const QMatrix iv = QMatrix::Identity(phi.v_wedge.size(), phi.v_wedge.size());
  std::vector<QMatrix> out;
  for (Index i = 0; i < action.p; ++i) {
    const QMatrix on_g = wedge_derivation(ad[static_cast<std::size_t>(i)], phi.g_wedge);
    const QMatrix on_v = wedge_derivation(action.generators[static_cast<std::size_t>(i)], phi.v_wedge);
    out.push_back(kron(on_g, iv) + kron(ig, on_v));
  }
  return out;
}

QMatrix poly_action_matrix(const QMatrix& g, const std::vector<Monomial>& monomials) {
  const std::size_t nv = static_cast<std::size_t>(g.rows());
  QMatrix out(static_cast<Index>(monomials.size()), static_cast<Index>(monomials.size()));
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const MVPoly f = MVPoly::from_terms(nv, {Term{monomials[k], Rat(1)}});
    out.col(static_cast<Index>(k)) = coefficient_vector(-linear_field_derivative(f, g), monomials);
  }
  return out;
}

QVector special_element(const LinearAction& action, const PhiMap& phi) {
  const std::vector<Index> coords = action.cartan_coordinates();
  if (coords.empty()) throw std::invalid_argument("special_element: action is not cartan-adapted");
  std::uint64_t cartan_mask = 0;
  for (Index c : coords) cartan_mask |= std::uint64_t{1} << c;
  const std::uint64_t full = (std::uint64_t{1} << action.d) - 1;
  const std::uint64_t i_mask = full & ~cartan_mask;
  const std::uint64_t j_mask = (std::uint64_t{1} << phi.m) - 1;
  const Index i = phi.v_wedge.index_of(i_mask);
  const Index j = phi.g_wedge.index_of(j_mask);
  if (i < 0 || j < 0) throw std::invalid_argument("special_element: d - r does not equal the orbit dimension");
  QVector theta = QVector::Zero(phi.domain_dim());
  theta(phi.domain_index(j, i)) = Rat(1);
  return theta;
}

CasimirResult casimir(const LinearAction& action, const std::vector<QMatrix>& space_generators, bool normalize) {
  const QMatrix sg_inv = inverse(action.inner_g);
  auto build = [&](const std::vector<QMatrix>& gens) {
    const Index n = gens.front().rows();
    QMatrix omega = QMatrix::Zero(n, n);
    for (Index i = 0; i < action.p; ++i)
      for (Index j = 0; j < action.p; ++j) {
        if (sg_inv(i, j).is_zero()) continue;
        omega += sg_inv(i, j) * (gens[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(j)]);
      }
    return omega;
  };
  CasimirResult out;
  out.omega = build(space_generators);
  out.status = "raw";
  const QMatrix on_v = build(action.generators);
  if (is_scalar(on_v) && !on_v(0, 0).is_zero()) {
    out.kappa = on_v(0, 0);
    if (normalize) {
      out.omega *= out.kappa->inverse();
      out.normalized = true;
      out.status = "normalized";
    }
  } else if (normalize) {
    out.status = "not-scalar-on-V";
  }
  return out;
}

std::vector<QMatrix> central_operators(const LinearAction& action, const std::vector<QMatrix>& space_generators) {
  const Index p = action.p;
  const std::vector<QMatrix> ad = adjoint_matrices(action);
  // Unknown B(a, c) at a * p + c: symmetry plus ad_i^T B + B ad_i = 0.
  QMatrix eqs = QMatrix::Zero((static_cast<Index>(ad.size()) + 1) * p * p, p * p);
  for (Index a = 0; a < p; ++a)
    for (Index c = 0; c < p; ++c) {
      eqs(a * p + c, a * p + c) += Rat(1);
      eqs(a * p + c, c * p + a) -= Rat(1);
    }
  for (std::size_t i = 0; i < ad.size(); ++i)
    for (Index a = 0; a < p; ++a)
      for (Index c = 0; c < p; ++c) {
        const Index row = ((static_cast<Index>(i) + 1) * p + a) * p + c;
        for (Index t = 0; t < p; ++t) {
          if (!ad[i](t, a).is_zero()) eqs(row, t * p + c) += ad[i](t, a);
          if (!ad[i](t, c).is_zero()) eqs(row, a * p + t) += ad[i](t, c);
        }
      }
  const QMatrix sg_inv = inverse(action.inner_g);
  std::vector<QMatrix> out;
  for (const QVector& v : rank_kernel(eqs).kernel) {
    QMatrix form(p, p);
    for (Index a = 0; a < p; ++a)
      for (Index c = 0; c < p; ++c) form(a, c) = v(a * p + c);
    if (is_scalar(QMatrix(sg_inv * form))) continue;
    const QMatrix t = sg_inv * form * sg_inv;
    const Index n = space_generators.front().rows();
    QMatrix op = QMatrix::Zero(n, n);
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < p; ++j) {
        if (t(i, j).is_zero()) continue;
        op += t(i, j) * (space_generators[static_cast<std::size_t>(i)] * space_generators[static_cast<std::size_t>(j)]);
      }
    out.push_back(std::move(op));
  }
  return out;
}

bool is_invariant(const std::vector<QVector>& basis, const std::vector<QMatrix>& generators) {
  EchelonSpan span;
  for (const QVector& b : basis) span.add(b);
  for (const QMatrix& g : generators)
    for (const QVector& b : basis)
      if (!is_zero(span.reduce(g * b))) return false;
  return true;
}

std::vector<Component> casimir_split(const QMatrix& omega, const std::vector<QMatrix>& generators) {
  std::vector<Component> out;
  for (Eigenspace& es : rational_eigenspaces(omega)) {
    if (!is_invariant(es.basis, generators)) throw std::logic_error("casimir_split: eigenspace is not invariant");
    out.push_back(Component{es.eigenvalue, std::move(es.basis)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.eigenvalue < b.eigenvalue;
  });
  return out;
}

std::vector<QVector> generated_submodule(const QVector& seed, const std::vector<QMatrix>& generators) {
  if (is_zero(seed)) return {};
  EchelonSpan span;
  std::vector<QVector> found{seed};
  span.add(seed);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const QMatrix& g : generators) {
      QVector w = g * found[k];
      if (span.add(w)) found.push_back(std::move(w));
    }
  }
  return span_basis(found, seed.size());
}

namespace {

// Rational eigenspaces of `op` restricted to the invariant span of b; empty
// when op is scalar there or its spectrum is not rational.
std::vector<std::vector<QVector>> split_by(const QMatrix& op, const QMatrix& b, const QMatrix& left) {
  const QMatrix x = left * (op * b);
  if (is_scalar(x)) return {};
  std::vector<Eigenspace> spaces;
  try {
    spaces = rational_eigenspaces(x);
  } catch (const SpectrumError&) {
    return {};
  }
  if (spaces.size() < 2) return {};
  std::vector<std::vector<QVector>> out;
  for (const Eigenspace& es : spaces) {
    std::vector<QVector> piece;
    for (const QVector& v : es.basis) piece.push_back(b * v);
    out.push_back(span_basis(piece, b.rows()));
  }
  return out;
}

std::vector<std::vector<QVector>> refine_commutant(const std::vector<QVector>& basis,
                                                   const std::vector<QMatrix>& generators, const QMatrix& inner,
                                                   Index max_dim) {
  const Index k = static_cast<Index>(basis.size());
  if (k <= 1 || k > max_dim) return {basis};
  const QMatrix b = columns(basis, basis.front().size());
  const QMatrix left = inverse(QMatrix(b.transpose() * b)) * b.transpose();
  std::vector<QMatrix> restricted;
  for (const QMatrix& g : generators) restricted.push_back(left * (g * b));

  // Commutant: X Y - Y X = 0 for every restricted generator X.
  const Index p = static_cast<Index>(restricted.size());
  QMatrix eqs = QMatrix::Zero(p * k * k, k * k);
  for (Index i = 0; i < p; ++i) {
    const QMatrix& x = restricted[static_cast<std::size_t>(i)];
    for (Index r = 0; r < k; ++r)
      for (Index c = 0; c < k; ++c) {
        const Index row = (i * k + r) * k + c;
        for (Index t = 0; t < k; ++t) {
          if (!x(r, t).is_zero()) eqs(row, t * k + c) += x(r, t);
          if (!x(t, c).is_zero()) eqs(row, r * k + t) -= x(t, c);
        }
      }
  }
  const RankKernel<Rat> rk = rank_kernel(eqs);
  if (rk.kernel.size() <= 1) return {basis};

  const QMatrix sw = b.transpose() * inner * b;
  const QMatrix sw_inv = inverse(sw);
  for (const QVector& y_vec : rk.kernel) {
    QMatrix y(k, k);
    for (Index t = 0; t < k; ++t)
      for (Index c = 0; c < k; ++c) y(t, c) = y_vec(t * k + c);
    const QMatrix h = y + sw_inv * y.transpose() * sw;
    if (is_scalar(h)) continue;
    std::vector<Eigenspace> spaces;
    try {
      spaces = rational_eigenspaces(h);
    } catch (const SpectrumError&) {
      continue;
    }
    if (spaces.size() < 2) continue;
    std::vector<std::vector<QVector>> out;
    for (const Eigenspace& es : spaces) {
      std::vector<QVector> piece;
      for (const QVector& v : es.basis) piece.push_back(b * v);
      for (auto& sub : refine_commutant(span_basis(piece, b.rows()), generators, inner, max_dim)) {
        out.push_back(std::move(sub));
      }
    }
    return out;
  }
  return {basis};
}

}  // namespace

std::vector<std::vector<QVector>> refine_invariant(const std::vector<QVector>& basis,
                                                   const std::vector<QMatrix>& generators, const QMatrix& inner,
                                                   Index max_dim, const std::vector<QMatrix>& central) {
  if (basis.size() <= 1) return {basis};
  const QMatrix b = columns(basis, basis.front().size());
  const QMatrix left = inverse(QMatrix(b.transpose() * b)) * b.transpose();
  for (const QMatrix& op : central) {
    const auto pieces = split_by(op, b, left);
    if (pieces.empty()) continue;
    std::vector<std::vector<QVector>> out;
    for (const auto& piece : pieces) {
      for (auto& sub : refine_invariant(piece, generators, inner, max_dim, central)) out.push_back(std::move(sub));
    }
    return out;
  }
  return refine_commutant(basis, generators, inner, max_dim);
}

FWResult f_W(const PhiMap& phi, const QMatrix& inner, const std::vector<QVector>& w) {
  const OrthoBasis ob = gram_schmidt_weights(w, inner);
  FWResult out;
  PolyAccumulator acc(phi.nvars);
  for (std::size_t i = 0; i < ob.basis.size(); ++i) {
    MVPoly q = phi.image(ob.basis[i]);
    const Rat weight = ob.weights[i].inverse();
    acc.add_product(weight, q, q);
    out.weights.push_back(weight);
    out.squares.push_back(std::move(q));
  }
  out.poly = std::move(acc).finish();
  return out;
}

SearchContext prepare_search(const LinearAction& action, const SearchOptions& opts) {
  if (!action.polar()) throw NotPolar("sos_search: " + action.name + " is not polar");
  SearchContext ctx;
  ctx.m = orbit_dim(action, opts.seed);
  try {
    ctx.delta = discriminant_minors(action, ctx.m, opts.cap);
  } catch (const std::invalid_argument&) {
    ctx.delta = discriminant_charcoeff(action, ctx.m);
  } catch (const CapExceeded&) {
    ctx.delta = discriminant_charcoeff(action, ctx.m);
  }
  ctx.phi = phi_matrix(action, ctx.m, opts.cap);
  ctx.inner = domain_inner(action, ctx.phi);
  ctx.generators = domain_generators(action, ctx.phi);
  ctx.theta = special_element(action, ctx.phi);
  ctx.casimir = casimir(action, ctx.generators, true);
  ctx.central = central_operators(action, ctx.generators);
  ctx.components = casimir_split(ctx.casimir.omega, ctx.generators);
  std::vector<std::vector<QVector>> blocks;
  for (const Component& c : ctx.components) blocks.push_back(c.basis);
  ctx.theta_parts = split_along(blocks, ctx.theta);
  return ctx;
}

std::vector<Candidate> sos_candidates(const SearchContext& ctx, const SearchOptions& opts) {
  std::vector<Candidate> out;
  for (std::size_t k = 0; k < ctx.components.size(); ++k) {
    const QVector& part = ctx.theta_parts[k];
    if (is_zero(part)) continue;
    const Component& comp = ctx.components[k];
    const auto pieces = refine_invariant(comp.basis, ctx.generators, ctx.inner, opts.refine_max_dim, ctx.central);
    const std::vector<QVector> sub_parts = pieces.size() == 1 ? std::vector<QVector>{part} : split_along(pieces, part);
    for (const QVector& sp : sub_parts) {
      if (is_zero(sp)) continue;
      out.push_back(Candidate{k, comp.eigenvalue, generated_submodule(sp, ctx.generators)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.basis.size() != b.basis.size()) return a.basis.size() < b.basis.size();
    return a.eigenvalue < b.eigenvalue;
  });
  return out;
}

std::optional<SosCertificate> certificate_for(const SearchContext& ctx, const std::vector<QVector>& w,
                                              const Rat& eigenvalue, const SearchOptions& opts,
                                              const std::vector<std::string>& var_names) {
  FWResult fw = f_W(ctx.phi, ctx.inner, w);
  const std::optional<Rat> c = equal_mod_constant(fw.poly, ctx.delta);
  if (!c || c->sign() <= 0) return std::nullopt;
  SosCertificate cert;
  cert.case_label = opts.case_label;
  cert.n = opts.n;
  cert.constant = *c;
  cert.var_names = var_names;
  cert.component_dim = static_cast<Index>(w.size());
  cert.casimir_eigenvalue = eigenvalue;
  for (std::size_t i = 0; i < fw.squares.size(); ++i) {
    if (fw.squares[i].is_zero()) continue;
    cert.squares.push_back(WeightedSquare{fw.weights[i], std::move(fw.squares[i])});
  }
  if (opts.normalize_content) normalize_content(cert);
  if (!verify_certificate(cert, ctx.delta)) throw std::logic_error("certificate_for: certificate failed verification");
  return cert;
}

SosCertificate sos_search(const LinearAction& action, const SearchOptions& opts) {
  const SearchContext ctx = prepare_search(action, opts);
  SearchOptions o = opts;
  if (o.case_label.empty()) o.case_label = action.name;
  for (const Candidate& cand : sos_candidates(ctx, o)) {
    if (auto cert = certificate_for(ctx, cand.basis, cand.eigenvalue, o, action.var_names)) return *cert;
  }
  throw NoComponentFound("sos_search: no invariant component reproduces delta");
}

QVector bracket(const LinearAction& action, Index a, Index b) {
  QVector rhs(action.p);
  for (Index j = 0; j < action.p; ++j) {
    const QMatrix& g = action.generators[static_cast<std::size_t>(j)];
    Rat s(0);
    for (Index k = 0; k < action.d; ++k) {
      if (!action.inner_V(a, k).is_zero() && !g(k, b).is_zero()) s += action.inner_V(a, k) * g(k, b);
    }
    rhs(j) = s;
  }
  return inverse(action.inner_g) * rhs;
}

namespace {

Index maximal_rank_r(const LinearAction& action, std::uint64_t seed) {
  const Index m = orbit_dim(action, seed);
  if (m != action.p) throw std::invalid_argument(action.name + " is not of maximal rank (orbit dimension != dim g)");
  const Index r = action.d - m;
  if (r < 2) throw std::invalid_argument(action.name + " has rank below 2");
  return r;
}

}  // namespace

LinMap a_map(const LinearAction& action, std::uint64_t seed) {
  const Index r = maximal_rank_r(action, seed);
  const WedgeBasis src(action.d, r);
  const WedgeBasis rest(action.d, r - 2);
  std::vector<std::vector<QVector>> br(static_cast<std::size_t>(action.d));
  for (Index a = 0; a < action.d; ++a)
    for (Index b = 0; b < action.d; ++b) br[static_cast<std::size_t>(a)].push_back(bracket(action, a, b));
  LinMap out;
  out.domain = "Lambda^" + std::to_string(r) + " V";
  out.codomain = "g (x) Lambda^" + std::to_string(r - 2) + " V";
  out.matrix = QMatrix::Zero(action.p * rest.size(), src.size());
  for (Index col = 0; col < src.size(); ++col) {
    const std::vector<Index> idx = src.indices(col);
    for (Index a = 0; a < r; ++a)
      for (Index b = a + 1; b < r; ++b) {
        // Sign (-1)^(a+b+1) makes the contraction alternating.
        const Rat sign((a + b + 1) % 2 == 0 ? 1 : -1);
        const QVector& beta = br[static_cast<std::size_t>(idx[a])][static_cast<std::size_t>(idx[b])];
        const std::uint64_t rest_mask = src.mask(col) & ~(std::uint64_t{1} << idx[a]) & ~(std::uint64_t{1} << idx[b]);
        const Index ri = rest.index_of(rest_mask);
        for (Index k = 0; k < action.p; ++k) {
          if (!beta(k).is_zero()) out.matrix(k * rest.size() + ri, col) += sign * beta(k);
        }
      }
  }
  return out;
}

LinMap a_star(const LinearAction& action, const LinMap& a) {
  const Index rest_dim = a.matrix.rows() / action.p;
  Index r = 0;
  while (static_cast<Index>(binomial(static_cast<unsigned>(action.d), static_cast<unsigned>(r))) != a.matrix.cols() ||
         static_cast<Index>(binomial(static_cast<unsigned>(action.d), static_cast<unsigned>(r - 2 < 0 ? 0 : r - 2))) !=
             rest_dim) {
    if (++r > action.d) throw std::invalid_argument("a_star: cannot infer the wedge degree");
  }
  const QMatrix s_src = wedge_gram(action.inner_V, WedgeBasis(action.d, r));
  const QMatrix s_tgt = kron(action.inner_g, wedge_gram(action.inner_V, WedgeBasis(action.d, r - 2)));
  LinMap out;
  out.domain = a.codomain;
  out.codomain = a.domain;
  out.matrix = inverse(s_src) * a.matrix.transpose() * s_tgt;
  return out;
}

QMatrix phi_astar(const LinearAction& action, const QMatrix& astar) {
  const Index m = action.p;
  const Index r = action.d - m;
  const PhiMap phi = phi_matrix(action, m);
  const QMatrix pairing = complement_pairing(action.inner_V, WedgeBasis(action.d, r), phi.v_wedge);
  return phi.matrix * (pairing * astar);
}

bool check_phi_astar_zero(const LinearAction& action, std::uint64_t seed) {
  const LinMap a = a_map(action, seed);
  return is_zero(phi_astar(action, a_star(action, a).matrix));
}

KostantReport kostant_check(const LinearAction& action, std::uint64_t seed) {
  KostantReport rep;
  rep.r = maximal_rank_r(action, seed);
  const CasimirResult cas = casimir(action, induced_wedge_action(action, rep.r), true);
  rep.status = cas.status;
  const std::vector<Eigenspace> spaces = rational_eigenspaces(cas.omega);
  rep.max_eigenvalue = spaces.back().eigenvalue;
  rep.top_dim = spaces.back().dim();
  const LinMap a = a_map(action, seed);
  rep.kernel_a = a.matrix.cols() - rank(a.matrix);
  return rep;
}

}  // namespace isodisc
