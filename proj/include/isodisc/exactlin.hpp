#pragma once

#include "isodisc/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isodisc {

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rat>;
using QVector = Vec<Rat>;

/// Thrown when eigenvalues of a matrix are not all rational.
class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NonRationalSpectrum : public SpectrumError {
 public:
  using SpectrumError::SpectrumError;
};
class NotDiagonalizable : public SpectrumError {
 public:
  using SpectrumError::SpectrumError;
};

/// Thrown by gram_schmidt_weights on linearly dependent input.
class DependentInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;         // reduced row echelon form, same shape as input
  std::vector<Index> pivots;   // pivot column of each nonzero row, ascending
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form. Pivot rule: leftmost column with a nonzero
/// entry at or below the current row, taking the smallest such row index.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = m;
  Mat<Scalar>& a = out.reduced;
  const Index rows = a.rows(), cols = a.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i) {
      if (!(a(i, col) == Scalar(0))) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < cols; ++j) a(row, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < cols; ++j) {
        if (!(a(row, j) == Scalar(0))) a(i, j) -= f * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Scalar>
struct RankKernel {
  Index rank = 0;
  std::vector<Vec<Scalar>> kernel;  // one vector per free column, ascending
};

/// Rank and canonical kernel basis: for each free column f, the vector with
/// a 1 at f, zeros at the other free columns, and pivot entries read off the
/// reduced echelon form.
template <typename Derived>
RankKernel<typename Derived::Scalar> rank_kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Echelon<Scalar> e = rref(m);
  RankKernel<Scalar> out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<Scalar> v = Vec<Scalar>::Zero(m.cols());
    v(f) = Scalar(1);
    for (Index r = 0; r < e.rank(); ++r) v(e.pivots[static_cast<std::size_t>(r)]) = -e.reduced(r, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Stacks column vectors into a matrix with `dim` rows.
template <typename Scalar>
Mat<Scalar> columns(const std::vector<Vec<Scalar>>& vs, Index dim) {
  Mat<Scalar> out(dim, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) out.col(static_cast<Index>(j)) = vs[j];
  return out;
}

/// Echelon basis (reduced, as column vectors) of the span of `vs`.
template <typename Scalar>
std::vector<Vec<Scalar>> span_basis(const std::vector<Vec<Scalar>>& vs, Index dim) {
  if (vs.empty()) return {};
  const Echelon<Scalar> e = rref(columns(vs, dim).transpose());
  std::vector<Vec<Scalar>> out;
  for (Index r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r).transpose());
  return out;
}

/// Solves a * x = b exactly; returns nothing when inconsistent. Free
/// variables are set to zero.
template <typename DA, typename DB>
std::optional<Vec<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a,
                                              const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Echelon<Scalar> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivots[static_cast<std::size_t>(r)]) = e.reduced(r, a.cols());
  return x;
}

/// Exact inverse; throws std::domain_error when singular.
template <typename Derived>
Mat<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<Scalar>::Identity(n, n);
  const Echelon<Scalar> e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw std::domain_error("inverse: singular matrix");
  }
  return e.reduced.rightCols(n);
}

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Mat<Scalar> a = m;
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (!(a(i, k) == Scalar(0))) { swap = i; break; }
      }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Coefficients c[0..n] of det(t*I - m) = sum_k c[k] t^k (so c[n] == 1),
/// by Berkowitz's division-free algorithm.
template <typename Derived>
std::vector<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const Index n = m.rows();
  // Characteristic vector of the leading r x r block, highest power first.
  std::vector<Scalar> poly{Scalar(1)};
  for (Index r = 0; r < n; ++r) {
    const Scalar a_rr = m(r, r);
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<Scalar> col;
    col.reserve(static_cast<std::size_t>(r) + 2);
    col.push_back(Scalar(1));
    col.push_back(-a_rr);
    if (r > 0) {
      const auto lead = m.topLeftCorner(r, r);
      Vec<Scalar> c = m.col(r).head(r);
      for (Index k = 0; k < r; ++k) {
        Scalar acc(0);
        for (Index i = 0; i < r; ++i) acc += m(r, i) * c(i);
        col.push_back(-acc);
        if (k + 1 < r) c = (lead * c).eval();
      }
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r) + 2, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) next[i] += col[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  // poly holds coefficients from t^n down to t^0.
  return std::vector<Scalar>(poly.rbegin(), poly.rend());
}

/// Monic minimal polynomial, coefficients low to high.
std::vector<Rat> minimal_polynomial(const QMatrix& m);

/// Integer and rational roots of a rational polynomial (coefficients low to
/// high), sorted ascending, without multiplicity. Throws NonRationalSpectrum
/// when a factor without rational roots remains.
std::vector<Rat> rational_roots_all(const std::vector<Rat>& coeffs);

struct Eigenspace {
  Rat eigenvalue;
  std::vector<QVector> basis;  // canonical kernel basis of (M - lambda I)
  Index dim() const { return static_cast<Index>(basis.size()); }
};

/// Eigenvalues in ascending order with echelon-reduced eigenspace bases.
/// Throws NonRationalSpectrum or NotDiagonalizable.
std::vector<Eigenspace> rational_eigenspaces(const QMatrix& m);

struct OrthoBasis {
  std::vector<QVector> basis;
  std::vector<Rat> weights;  // <q_i, q_i>
};

/// Gram-Schmidt without normalization. Throws DependentInput.
OrthoBasis gram_schmidt_weights(const std::vector<QVector>& vectors, const QMatrix& inner);

/// Bilinear form u^T S w.
Rat inner_product(const QVector& u, const QMatrix& s, const QVector& w);

bool is_zero(const QMatrix& m);

/// Shape-checked exact equality (Eigen's operator== requires equal shapes).
template <typename A, typename B>
bool exact_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}
bool is_zero(const QVector& v);

/// Least common multiple of the entry denominators.
mpz_class denominator_lcm(const QMatrix& m);

}  // namespace isodisc
