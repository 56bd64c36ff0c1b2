#include "isodisc/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace isodisc {

namespace {

QMatrix unit(Index n, Index i, Index j) {
  QMatrix m = QMatrix::Zero(n, n);
  m(i, j) = Rat(1);
  return m;
}

QVector basis_vector(Index d, Index i) {
  QVector v = QVector::Zero(d);
  v(i) = Rat(1);
  return v;
}

Rat trace(const QMatrix& m) {
  Rat t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class num = x.num(), den = x.den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return Rat(a, b);
}

// Position of (i, j), i <= j, in the row-major upper triangle.
Index upper_index(Index n, Index i, Index j) { return i * n - i * (i - 1) / 2 + (j - i); }

std::vector<QMatrix> so_basis(Index n) {
  std::vector<QMatrix> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) out.push_back(unit(n, i, j) - unit(n, j, i));
  return out;
}

std::vector<QMatrix> real_v_basis(CaseId id, Index n) {
  std::vector<QMatrix> out;
  if (id == CaseId::SymReal) {
    for (Index i = 0; i < n; ++i) out.push_back(unit(n, i, i));
  } else {
    for (Index k = 1; k < n; ++k) {
      QMatrix h = QMatrix::Zero(n, n);
      for (Index i = 0; i < k; ++i) h(i, i) = Rat(1);
      h(k, k) = Rat(static_cast<long>(-k));
      out.push_back(h);
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) out.push_back(unit(n, i, j) + unit(n, j, i));
  return out;
}

std::vector<std::string> real_names(CaseId id, Index n) {
  std::vector<std::string> out;
  if (id == CaseId::SymReal) {
    for (Index i = 1; i <= n; ++i) out.push_back("y" + std::to_string(i) + std::to_string(i));
  } else {
    for (Index k = 1; k < n; ++k) out.push_back("h" + std::to_string(k));
  }
  for (Index i = 1; i <= n; ++i)
    for (Index j = i + 1; j <= n; ++j) out.push_back("y" + std::to_string(i) + std::to_string(j));
  return out;
}

LinearAction build_sym_real(CaseId id, Index n) {
  LinearAction a;
  a.name = case_label(id);
  const std::vector<QMatrix> vb = real_v_basis(id, n);
  const std::vector<QMatrix> gb = so_basis(n);
  a.d = static_cast<Index>(vb.size());
  a.p = static_cast<Index>(gb.size());
  for (const QMatrix& x : gb) {
    QMatrix g(a.d, a.d);
    for (Index k = 0; k < a.d; ++k) {
      const QMatrix& b = vb[static_cast<std::size_t>(k)];
      g.col(k) = sym_real_coords(id, static_cast<int>(n), x * b - b * x);
    }
    a.generators.push_back(g);
  }
  a.inner_g = QMatrix(a.p, a.p);
  for (Index i = 0; i < a.p; ++i)
    for (Index j = 0; j < a.p; ++j)
      a.inner_g(i, j) = -trace(gb[static_cast<std::size_t>(i)] * gb[static_cast<std::size_t>(j)]) / Rat(2);
  a.inner_V = QMatrix(a.d, a.d);
  for (Index i = 0; i < a.d; ++i)
    for (Index j = 0; j < a.d; ++j)
      a.inner_V(i, j) = trace(vb[static_cast<std::size_t>(i)] * vb[static_cast<std::size_t>(j)]) / Rat(2);
  a.var_names = real_names(id, n);
  CartanData cd;
  cd.r = id == CaseId::SymReal ? n : n - 1;
  for (Index k = 0; k < cd.r; ++k) cd.basis.push_back(basis_vector(a.d, k));
  cd.diagram = "A" + std::to_string(n - 1);
  a.cartan = cd;
  return a;
}

std::vector<CMatrix> complex_v_basis(Index n) {
  std::vector<CMatrix> out;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const QMatrix s = i == j ? unit(n, i, i) : QMatrix(unit(n, i, j) + unit(n, j, i));
      out.push_back(CMatrix::real(s));
      out.push_back(CMatrix{QMatrix::Zero(n, n), s});
    }
  }
  return out;
}

std::vector<CMatrix> u_basis(Index n) {
  std::vector<CMatrix> out;
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) out.push_back(CMatrix::real(unit(n, j, k) - unit(n, k, j)));
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) out.push_back(CMatrix{QMatrix::Zero(n, n), unit(n, j, k) + unit(n, k, j)});
  for (Index j = 0; j < n; ++j) out.push_back(CMatrix{QMatrix::Zero(n, n), unit(n, j, j)});
  return out;
}

Rat re_trace(const CMatrix& m) { return trace(m.re); }

LinearAction build_sym_complex(Index n) {
  LinearAction a;
  a.name = case_label(CaseId::SymComplex);
  const std::vector<CMatrix> vb = complex_v_basis(n);
  const std::vector<CMatrix> gb = u_basis(n);
  a.d = static_cast<Index>(vb.size());
  a.p = static_cast<Index>(gb.size());
  for (const CMatrix& x : gb) {
    QMatrix g(a.d, a.d);
    for (Index k = 0; k < a.d; ++k) {
      const CMatrix& b = vb[static_cast<std::size_t>(k)];
      g.col(k) = sym_complex_coords(static_cast<int>(n), x * b + b * x.transpose());
    }
    a.generators.push_back(g);
  }
  a.inner_g = QMatrix(a.p, a.p);
  for (Index i = 0; i < a.p; ++i)
    for (Index j = 0; j < a.p; ++j)
      a.inner_g(i, j) = -re_trace(gb[static_cast<std::size_t>(i)] * gb[static_cast<std::size_t>(j)]) / Rat(2);
  a.inner_V = QMatrix(a.d, a.d);
  for (Index i = 0; i < a.d; ++i)
    for (Index j = 0; j < a.d; ++j)
      a.inner_V(i, j) = re_trace(vb[static_cast<std::size_t>(i)] * vb[static_cast<std::size_t>(j)].adjoint()) / Rat(2);
  QMatrix jm = QMatrix::Zero(a.d, a.d);
  for (Index t = 0; t < a.d / 2; ++t) {
    jm(2 * t + 1, 2 * t) = Rat(1);
    jm(2 * t, 2 * t + 1) = Rat(-1);
  }
  a.complex_structure = jm;
  for (Index i = 1; i <= n; ++i) {
    for (Index j = i; j <= n; ++j) {
      const std::string idx = std::to_string(i) + std::to_string(j);
      a.var_names.push_back("re_z" + idx);
      a.var_names.push_back("im_z" + idx);
    }
  }
  CartanData cd;
  cd.r = n;
  for (Index i = 0; i < n; ++i) cd.basis.push_back(basis_vector(a.d, 2 * upper_index(n, i, i)));
  cd.diagram = n == 1 ? "A1" : "C" + std::to_string(n);
  a.cartan = cd;
  return a;
}

LinearAction build_plane_pair(bool torus) {
  LinearAction a;
  a.name = case_label(torus ? CaseId::Torus2 : CaseId::NonpolarSo2);
  a.d = 4;
  a.var_names = {"a1", "a2", "b1", "b2"};
  QMatrix ga = QMatrix::Zero(4, 4), gb = QMatrix::Zero(4, 4);
  ga(0, 1) = Rat(-1);
  ga(1, 0) = Rat(1);
  gb(2, 3) = Rat(-1);
  gb(3, 2) = Rat(1);
  if (torus) {
    a.generators = {ga, gb};
  } else {
    a.generators = {QMatrix(ga + gb)};
  }
  a.p = static_cast<Index>(a.generators.size());
  a.inner_g = QMatrix::Identity(a.p, a.p);
  a.inner_V = QMatrix::Identity(4, 4);
  if (torus) {
    CartanData cd;
    cd.r = 2;
    cd.basis = {basis_vector(4, 0), basis_vector(4, 2)};
    cd.diagram = "A1xA1";
    a.cartan = cd;
  }
  return a;
}

}  // namespace

CaseId parse_case(std::string_view label) {
  for (CaseId id : all_cases())
    if (case_label(id) == label) return id;
  throw std::invalid_argument("unknown case: " + std::string(label));
}

std::string case_label(CaseId id) {
  switch (id) {
    case CaseId::SymReal: return "sym_real";
    case CaseId::SymRealTraceless: return "sym_real_traceless";
    case CaseId::SymComplex: return "sym_complex";
    case CaseId::Torus2: return "torus2";
    case CaseId::NonpolarSo2: return "nonpolar_so2";
  }
  throw std::logic_error("case_label: bad id");
}

std::vector<CaseId> all_cases() {
  return {CaseId::SymReal, CaseId::SymRealTraceless, CaseId::SymComplex, CaseId::Torus2, CaseId::NonpolarSo2};
}

bool case_has_size(CaseId id) { return id == CaseId::SymReal || id == CaseId::SymRealTraceless || id == CaseId::SymComplex; }

QMatrix sym_real_matrix(CaseId id, int n, const QVector& v) {
  const std::vector<QMatrix> vb = real_v_basis(id, n);
  if (v.size() != static_cast<Index>(vb.size())) throw std::invalid_argument("sym_real_matrix: wrong coordinate count");
  QMatrix y = QMatrix::Zero(n, n);
  for (std::size_t k = 0; k < vb.size(); ++k) y += v(static_cast<Index>(k)) * vb[k];
  return y;
}

QVector sym_real_coords(CaseId id, int n, const QMatrix& y) {
  if (!exact_equal(y, y.transpose())) throw std::invalid_argument("sym_real_coords: matrix not symmetric");
  const Index nn = n;
  const Index off = nn * (nn - 1) / 2;
  const Index diag = id == CaseId::SymReal ? nn : nn - 1;
  if (id != CaseId::SymReal && !trace(y).is_zero()) throw std::invalid_argument("sym_real_coords: matrix not traceless");
  QVector v(diag + off);
  if (id == CaseId::SymReal) {
    for (Index i = 0; i < nn; ++i) v(i) = y(i, i);
  } else {
    // Orthogonal expansion in h_k: t_k = <Y, h_k> / <h_k, h_k>.
    for (Index k = 1; k < nn; ++k) {
      Rat s(0);
      for (Index i = 0; i < k; ++i) s += y(i, i);
      s -= Rat(static_cast<long>(k)) * y(k, k);
      v(k - 1) = s / Rat(static_cast<long>(k + k * k));
    }
  }
  Index t = diag;
  for (Index i = 0; i < nn; ++i)
    for (Index j = i + 1; j < nn; ++j) v(t++) = y(i, j);
  return v;
}

CMatrix sym_complex_matrix(int n, const QVector& v) {
  const std::vector<CMatrix> vb = complex_v_basis(n);
  if (v.size() != static_cast<Index>(vb.size())) throw std::invalid_argument("sym_complex_matrix: wrong coordinate count");
  CMatrix x = CMatrix::zero(n);
  for (std::size_t k = 0; k < vb.size(); ++k) {
    x.re += v(static_cast<Index>(k)) * vb[k].re;
    x.im += v(static_cast<Index>(k)) * vb[k].im;
  }
  return x;
}

QVector sym_complex_coords(int n, const CMatrix& x) {
  if (!exact_equal(x.re, x.re.transpose()) || !exact_equal(x.im, x.im.transpose())) {
    throw std::invalid_argument("sym_complex_coords: matrix not symmetric");
  }
  QVector v(static_cast<Index>(n) * (n + 1));
  Index t = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      v(t++) = x.re(i, j);
      v(t++) = x.im(i, j);
    }
  }
  return v;
}

std::vector<Root> derive_roots(const LinearAction& action, const std::vector<QVector>& cartan_basis) {
  const Index r = static_cast<Index>(cartan_basis.size());
  const QMatrix sg_inv = inverse(action.inner_g);
  auto gram_at = [&](const QVector& a) {
    const QMatrix rho = rho_at(action, a);
    return QMatrix(rho.transpose() * action.inner_V * rho);
  };
  auto point = [&](const QVector& t) {
    QVector a = QVector::Zero(action.d);
    for (Index k = 0; k < r; ++k) a += t(k) * cartan_basis[static_cast<std::size_t>(k)];
    return a;
  };
  static const long kGeneric[] = {2, 7, 23, 79, 251, 769, 2333, 7001, 21011, 63029};
  if (r > 10) throw std::invalid_argument("derive_roots: rank too large");
  QVector generic(r);
  for (Index k = 0; k < r; ++k) generic(k) = Rat(kGeneric[k]);
  const std::vector<Eigenspace> spaces = rational_eigenspaces(QMatrix(sg_inv * gram_at(point(generic))));

  std::vector<Root> roots;
  for (const Eigenspace& es : spaces) {
    if (es.eigenvalue.is_zero()) continue;
    const QVector& u = es.basis.front();
    const Rat norm = inner_product(u, action.inner_g, u);
    auto value = [&](const QVector& t) { return inner_product(u, gram_at(point(t)), u) / norm; };
    QVector lambda = QVector::Zero(r);
    Index first = -1;
    for (Index k = 0; k < r; ++k) {
      QVector t = QVector::Zero(r);
      t(k) = Rat(1);
      const auto s = rational_sqrt(value(t));
      if (!s) throw NonRationalSpectrum("derive_roots: root value is not a rational square");
      lambda(k) = *s;
      if (first < 0 && !s->is_zero()) first = k;
    }
    if (first < 0) throw std::logic_error("derive_roots: root vanishes on the Cartan basis");
    for (Index k = first + 1; k < r; ++k) {
      if (lambda(k).is_zero()) continue;
      QVector t = QVector::Zero(r);
      t(first) = Rat(1);
      t(k) = Rat(1);
      const Rat same = (lambda(first) + lambda(k)) * (lambda(first) + lambda(k));
      if (!(value(t) == same)) lambda(k) = -lambda(k);
    }
    Rat at_generic(0);
    for (Index k = 0; k < r; ++k) at_generic += lambda(k) * generic(k);
    if (!(at_generic * at_generic == es.eigenvalue)) {
      throw std::logic_error("derive_roots: generic point separates roots inconsistently");
    }
    roots.push_back(Root{lambda, static_cast<int>(es.dim())});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    for (Index k = 0; k < a.functional.size(); ++k) {
      if (!(a.functional(k) == b.functional(k))) return a.functional(k) > b.functional(k);
    }
    return false;
  });
  return roots;
}

LinearAction build_case(CaseId id, int n, std::uint64_t cap) {
  if (case_has_size(id) && n < 1) throw std::invalid_argument("build_case: n must be positive");
  if ((id == CaseId::SymReal || id == CaseId::SymRealTraceless) && n < 2) {
    throw std::invalid_argument("build_case: n must be at least 2");
  }
  LinearAction a;
  switch (id) {
    case CaseId::SymReal:
    case CaseId::SymRealTraceless: a = build_sym_real(id, n); break;
    case CaseId::SymComplex: a = build_sym_complex(n); break;
    case CaseId::Torus2: a = build_plane_pair(true); break;
    case CaseId::NonpolarSo2: a = build_plane_pair(false); break;
  }
  if (a.cartan) {
    const std::uint64_t count = binomial(static_cast<unsigned>(a.d), static_cast<unsigned>(a.cartan->r));
    if (count > cap) {
      throw CapExceeded(a.name + ": wedge dimension " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
    }
    a.cartan->roots = derive_roots(a, a.cartan->basis);
  }
  validate(a);
  return a;
}

CartanData cartan_data(CaseId id, int n) {
  if (id == CaseId::NonpolarSo2) throw std::invalid_argument("cartan_data: nonpolar_so2 is not polar");
  return *build_case(id, n, ~std::uint64_t{0}).cartan;
}

bool discriminant_irreducible(const CartanData& cd) {
  for (const Root& r : cd.roots)
    if (r.multiplicity != 1) return false;
  const std::string& g = cd.diagram;
  if (g.size() < 2 || g.find('x') != std::string::npos) return false;
  const char type = g[0];
  int rank = 0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] < '0' || g[i] > '9') return false;
    rank = rank * 10 + (g[i] - '0');
  }
  switch (type) {
    case 'A': return rank >= 1;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    default: return false;
  }
}

QMatrix cayley_orthogonal(int n) {
  const Index nn = n;
  const QMatrix id = QMatrix::Identity(nn, nn);
  for (long k = 1; k < 100; ++k) {
    QMatrix s = QMatrix::Zero(nn, nn);
    for (Index i = 0; i < nn; ++i)
      for (Index j = i + 1; j < nn; ++j) {
        s(i, j) = Rat(((i + 1) * (j + 2) * k) % 7 + 1, 2);
        s(j, i) = -s(i, j);
      }
    const QMatrix m = (id - s) * inverse(QMatrix(id + s));
    bool ok = true;
    for (Index i = 0; i < nn; ++i)
      if (m(i, 0).is_zero()) ok = false;
    if (ok) return m;
  }
  throw std::logic_error("cayley_orthogonal: no suitable matrix found");
}

QVector regular_point(CaseId id, int n) {
  const Index nn = n;
  switch (id) {
    case CaseId::SymReal: {
      QMatrix z = QMatrix::Zero(nn, nn);
      for (Index i = 0; i < nn; ++i) z(i, i) = Rat(static_cast<long>(i + 1));
      return sym_real_coords(id, n, z);
    }
    case CaseId::SymRealTraceless: {
      QMatrix z = QMatrix::Zero(nn, nn);
      for (Index i = 0; i < nn; ++i) z(i, i) = Rat(static_cast<long>(nn * (i + 1) - nn * (nn + 1) / 2));
      const QMatrix m = cayley_orthogonal(n);
      return sym_real_coords(id, n, QMatrix(m.transpose() * z * m));
    }
    case CaseId::SymComplex: {
      QMatrix z = QMatrix::Zero(nn, nn);
      for (Index i = 0; i < nn; ++i) z(i, i) = Rat(static_cast<long>(i + 1));
      const QMatrix m = cayley_orthogonal(n);
      return sym_complex_coords(n, CMatrix::real(QMatrix(m.transpose() * z * m)));
    }
    default: throw std::invalid_argument("regular_point: unsupported case " + case_label(id));
  }
}

}  // namespace isodisc
