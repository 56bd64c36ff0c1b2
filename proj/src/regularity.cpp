#include "isodisc/regularity.hpp"

namespace isodisc {

namespace {

QVector flatten(const QMatrix& m) {
  QVector v(m.size());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

}  // namespace

bool powers_independent(const QMatrix& x) {
  const Index n = x.rows();
  std::vector<QVector> vs;
  QMatrix p = QMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    vs.push_back(flatten(p));
    p = p * x;
  }
  return rank(columns(vs, n * n)) == n;
}

bool powers_independent(const CMatrix& x) {
  const Index n = x.rows();
  const CMatrix i_unit{QMatrix::Zero(n, n), QMatrix::Identity(n, n)};
  std::vector<QVector> vs;
  CMatrix p{QMatrix::Identity(n, n), QMatrix::Zero(n, n)};
  for (Index k = 0; k < n; ++k) {
    for (const CMatrix& m : {p, CMatrix(i_unit * p)}) {
      QVector v(2 * n * n);
      v << flatten(m.re), flatten(m.im);
      vs.push_back(std::move(v));
    }
    p = p * x;
  }
  return rank(columns(vs, 2 * n * n)) == 2 * n;
}

bool regularity_test(CaseId id, int n, const QVector& point) {
  switch (id) {
    case CaseId::SymRealTraceless: return powers_independent(sym_real_matrix(id, n, point));
    case CaseId::SymComplex: return powers_independent(sym_complex_matrix(n, point));
    default: throw std::invalid_argument("regularity_test: unsupported case " + case_label(id));
  }
}

QMatrix q_form(int n) {
  const Index l = n / 2;
  QMatrix q = QMatrix::Zero(n, n);
  for (Index i = 0; i < l; ++i) {
    q(i, l + i) = Rat(1);
    q(l + i, i) = Rat(1);
  }
  if (n % 2 == 1) q(n - 1, n - 1) = Rat(1);
  return q;
}

QMatrix cycle_matrix(int n) {
  const Index l = n / 2;
  std::vector<Index> seq{0};
  for (Index k = l; k < n; ++k) seq.push_back(k);
  for (Index k = l - 1; k >= 1; --k) seq.push_back(k);
  QMatrix x = QMatrix::Zero(n, n);
  for (std::size_t k = 0; k < seq.size(); ++k) x(seq[(k + 1) % seq.size()], seq[k]) = Rat(1);
  return x;
}

std::vector<QMatrix> so_q_basis(int n) {
  const QMatrix q = q_form(n);
  const Index nn = n;
  // Unknown A(a, c) at a * n + c.
  QMatrix eqs = QMatrix::Zero(nn * nn, nn * nn);
  for (Index r = 0; r < nn; ++r)
    for (Index c = 0; c < nn; ++c)
      for (Index t = 0; t < nn; ++t) {
        // (A^t Q)(r, c) = sum_t A(t, r) Q(t, c); (Q A)(r, c) = sum_t Q(r, t) A(t, c).
        if (!q(t, c).is_zero()) eqs(r * nn + c, t * nn + r) += q(t, c);
        if (!q(r, t).is_zero()) eqs(r * nn + c, t * nn + c) += q(r, t);
      }
  std::vector<QMatrix> out;
  for (const QVector& v : rank_kernel(eqs).kernel) {
    QMatrix a(nn, nn);
    for (Index r = 0; r < nn; ++r)
      for (Index c = 0; c < nn; ++c) a(r, c) = v(r * nn + c);
    out.push_back(std::move(a));
  }
  return out;
}

bool in_q_model(const QMatrix& x, const QMatrix& q) {
  Rat tr(0);
  for (Index i = 0; i < x.rows(); ++i) tr += x(i, i);
  return tr.is_zero() && exact_equal(QMatrix(x.transpose()), QMatrix(q * x * inverse(q)));
}

Index so_q_orbit_rank(const QMatrix& x) {
  std::vector<QVector> vs;
  for (const QMatrix& a : so_q_basis(static_cast<int>(x.rows()))) vs.push_back(flatten(QMatrix(a * x - x * a)));
  return rank(columns(vs, x.size()));
}

PredictedComponent predicted_component(CaseId id, int n) {
  if (n < 2) throw std::invalid_argument("predicted_component: n must be at least 2");
  const unsigned u = static_cast<unsigned>(n);
  PredictedComponent out;
  out.weight = std::to_string(n) + "*theta1";
  switch (id) {
    case CaseId::SymRealTraceless:
      out.dim = static_cast<Index>(binomial(2 * u - 1, u - 1) - binomial(2 * u - 3, u - 1));
      return out;
    case CaseId::SymComplex: out.dim = static_cast<Index>(2 * binomial(2 * u - 1, u)); return out;
    default: throw std::invalid_argument("predicted_component: unsupported case " + case_label(id));
  }
}

}  // namespace isodisc
