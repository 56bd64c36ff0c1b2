#include "isodisc/exactlin.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace isodisc {

bool is_zero(const QMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const QVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

Rat inner_product(const QVector& u, const QMatrix& s, const QVector& w) {
  Rat acc(0);
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i).is_zero()) continue;
    Rat row(0);
    for (Index j = 0; j < w.size(); ++j) {
      if (!w(j).is_zero() && !s(i, j).is_zero()) row += s(i, j) * w(j);
    }
    acc += u(i) * row;
  }
  return acc;
}

mpz_class denominator_lcm(const QMatrix& m) {
  mpz_class l = 1;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
  return l;
}

namespace {

// Smallest k such that v, Mv, ..., M^k v are dependent; returns the monic
// relation (low to high).
std::vector<Rat> krylov_relation(const std::vector<QVector>& seq) {
  const Index dim = seq.front().size();
  QMatrix k(dim, static_cast<Index>(seq.size()));
  for (std::size_t j = 0; j < seq.size(); ++j) k.col(static_cast<Index>(j)) = seq[j];
  const RankKernel<Rat> rk = rank_kernel(k);
  if (rk.kernel.empty()) return {};
  // Rank deficiency appears first in the last column, so the kernel vector
  // has a 1 in that position.
  const QVector& rel = rk.kernel.front();
  std::vector<Rat> out(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) out[j] = rel(static_cast<Index>(j));
  return out;
}

QVector vectorize(const QMatrix& m) {
  QVector v(m.size());
  Index t = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(t++) = m(i, j);
  return v;
}

std::vector<Rat> vector_minimal_polynomial(const QMatrix& m, const QVector& seed) {
  std::vector<QVector> seq{seed};
  for (Index k = 0; k <= m.rows(); ++k) {
    std::vector<Rat> rel = krylov_relation(seq);
    if (!rel.empty()) return rel;
    seq.push_back(m * seq.back());
  }
  throw std::logic_error("vector_minimal_polynomial: no relation found");
}

// Prime factorisation by trial division with a Pollard rho fallback.
void pollard_factor(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) {
      pollard_factor(d, out);
      pollard_factor(n / d, out);
      return;
    }
  }
}

std::map<mpz_class, unsigned> factor(mpz_class n) {
  std::map<mpz_class, unsigned> out;
  n = abs(n);
  for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n > 1) pollard_factor(n, out);
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 5'000'000) throw NonRationalSpectrum("rational root search: too many divisor candidates");
  }
  return divs;
}

// Tests whether p/q is a root of an integer polynomial (low to high) by
// evaluating q^deg * f(p/q) = sum c_k p^k q^(deg-k).
bool is_root(const std::vector<mpz_class>& c, const mpz_class& p, const mpz_class& q) {
  mpz_class acc = 0;
  mpz_class pk = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    mpz_class qpow;
    mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), c.size() - 1 - k);
    acc += c[k] * pk * qpow;
    pk *= p;
  }
  return acc == 0;
}

// Synthetic division of a rational polynomial by (t - r).
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
  const std::size_t n = c.size() - 1;
  std::vector<Rat> q(n);
  Rat carry(0);
  for (std::size_t k = n; k-- > 0;) {
    carry = c[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

Rat eval(const std::vector<Rat>& c, const Rat& t) {
  Rat acc(0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

}  // namespace

namespace {

// Roots of `poly` (a polynomial annihilating m): floating eigenvalues of m
// propose candidates with small denominators, each confirmed exactly; the
// divisor search only sees what is left after deflation.
std::vector<Rat> roots_guided(const QMatrix& m, std::vector<Rat> poly) {
  std::vector<Rat> roots;
  Eigen::MatrixXd md(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) md(i, j) = m(i, j).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(md, false);
  if (es.info() == Eigen::Success) {
    for (Index k = 0; k < es.eigenvalues().size(); ++k) {
      const std::complex<double> ev = es.eigenvalues()(k);
      if (std::abs(ev.imag()) > 1e-6 * (1 + std::abs(ev.real())) || !std::isfinite(ev.real())) continue;
      for (long q = 1; q <= 64 && poly.size() > 1; ++q) {
        const double scaled = std::round(ev.real() * static_cast<double>(q));
        if (std::abs(scaled) > 1e15) break;
        const Rat cand(mpz_class(static_cast<long>(scaled)), mpz_class(q));
        if (!eval(poly, cand).is_zero()) continue;
        roots.push_back(cand);
        while (poly.size() > 1 && eval(poly, cand).is_zero()) poly = deflate(poly, cand);
        break;
      }
    }
  }
  for (const Rat& r : rational_roots_all(poly)) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<Rat> minimal_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: matrix not square");
  const Index n = m.rows();
  std::vector<QVector> seq{vectorize(QMatrix::Identity(n, n))};
  QMatrix power = QMatrix::Identity(n, n);
  for (Index k = 0; k <= n; ++k) {
    std::vector<Rat> rel = krylov_relation(seq);
    if (!rel.empty()) return rel;
    power = (power * m).eval();
    seq.push_back(vectorize(power));
  }
  throw std::logic_error("minimal_polynomial: no relation found");
}

std::vector<Rat> rational_roots_all(const std::vector<Rat>& coeffs_in) {
  std::vector<Rat> c = coeffs_in;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() <= 1) return {};
  std::vector<Rat> roots;
  while (c.size() > 1 && c.front().is_zero()) {
    c.erase(c.begin());
    if (roots.empty()) roots.push_back(Rat(0));
  }
  while (c.size() > 1) {
    // Clear denominators.
    mpz_class l = 1;
    for (const Rat& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const Rat& x : c) ic.push_back(mpz_class(x.raw() * l));
    const std::vector<mpz_class> ps = divisors(ic.front());
    const std::vector<mpz_class> qs = divisors(ic.back());
    std::optional<Rat> found;
    for (const mpz_class& q : qs) {
      for (const mpz_class& p : ps) {
        for (int s : {1, -1}) {
          const mpz_class sp = s * p;
          mpz_class g;
          mpz_gcd(g.get_mpz_t(), sp.get_mpz_t(), q.get_mpz_t());
          if (g != 1) continue;
          if (is_root(ic, sp, q)) { found = Rat(sp, q); break; }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw NonRationalSpectrum("polynomial has an irreducible factor of degree >= 2");
    if (!eval(c, *found).is_zero()) throw std::logic_error("rational_roots_all: root check mismatch");
    roots.push_back(*found);
    c = deflate(c, *found);
    while (c.size() > 1 && eval(c, *found).is_zero()) c = deflate(c, *found);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Eigenspace> rational_eigenspaces(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("rational_eigenspaces: matrix not square");
  const Index n = m.rows();
  if (n == 0) return {};

  auto spaces_for = [&](const std::vector<Rat>& roots) {
    std::vector<Eigenspace> out;
    for (const Rat& lambda : roots) {
      QMatrix shifted = m;
      for (Index i = 0; i < n; ++i) shifted(i, i) -= lambda;
      RankKernel<Rat> rk = rank_kernel(shifted);
      if (!rk.kernel.empty()) out.push_back(Eigenspace{lambda, std::move(rk.kernel)});
    }
    return out;
  };
  auto total_dim = [](const std::vector<Eigenspace>& es) {
    Index t = 0;
    for (const auto& e : es) t += e.dim();
    return t;
  };

  // Cheap route: the minimal polynomial of a fixed dense vector usually
  // coincides with that of the matrix. Accept only if the eigenspaces fill
  // the whole space; otherwise fall back to the matrix minimal polynomial.
  QVector seed(n);
  for (Index i = 0; i < n; ++i) seed(i) = Rat(static_cast<long>((i * 7919 + 17) % 101 + 1));
  std::vector<Eigenspace> fast = spaces_for(roots_guided(m, vector_minimal_polynomial(m, seed)));
  if (total_dim(fast) == n) return fast;

  const std::vector<Rat> minpoly = minimal_polynomial(m);
  std::vector<Eigenspace> full = spaces_for(roots_guided(m, minpoly));
  if (total_dim(full) != n) throw NotDiagonalizable("matrix is not diagonalizable over the rationals");
  return full;
}

OrthoBasis gram_schmidt_weights(const std::vector<QVector>& vectors, const QMatrix& inner) {
  OrthoBasis out;
  for (const QVector& v : vectors) {
    QVector q = v;
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
      const Rat coef = inner_product(out.basis[j], inner, v) / out.weights[j];
      if (!coef.is_zero()) q -= coef * out.basis[j];
    }
    const Rat w = inner_product(q, inner, q);
    if (w.is_zero()) throw DependentInput("gram_schmidt_weights: input vectors are linearly dependent");
    if (w.sign() < 0) throw std::invalid_argument("gram_schmidt_weights: inner product not positive definite");
    out.basis.push_back(std::move(q));
    out.weights.push_back(w);
  }
  return out;
}

}  // namespace isodisc
