#pragma once

#include "isodisc/action.hpp"
#include "isodisc/wedge.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace isodisc {

enum class CaseId { SymReal, SymRealTraceless, SymComplex, Torus2, NonpolarSo2 };

CaseId parse_case(std::string_view label);  // throws std::invalid_argument
std::string case_label(CaseId id);
std::vector<CaseId> all_cases();
/// Whether the case takes a size parameter n.
bool case_has_size(CaseId id);

/// Catalog representations. Coordinates and metrics:
///  sym_real(n): Y in Sym(n,R); diagonal entries y_ii first, then y_ij (i<j)
///    row-major; g = so(n) with basis E_ij - E_ji; x.Y = xY - Yx;
///    inner_g = -tr(xy)/2, inner_V = tr(XY)/2.
///  sym_real_traceless(n): traceless Y; Cartan basis h_k = diag(1,..,1,-k,0,..)
///    (k ones), then off-diagonals; same g and metrics.
///  sym_complex(n): X in Sym(n,C) as (Re z_11, Im z_11, Re z_12, ...) over the
///    upper triangle row-major; g = u(n) with basis E_jk - E_kj, i(E_jk + E_kj)
///    (j<k), then i E_jj; x.X = xX + X x^t; inner_g = -Re tr(xy)/2,
///    inner_V = Re tr(X Y^*)/2.
///  torus2: (a1, a2, b1, b2), so(2) + so(2) rotating each plane.
///  nonpolar_so2: (a1, a2, b1, b2), one so(2) rotating both planes.
/// Throws CapExceeded when binom(d, r) exceeds `cap`.
LinearAction build_case(CaseId id, int n = 0, std::uint64_t cap = kDefaultWedgeCap);

/// Cartan data of a polar case; throws std::invalid_argument for
/// nonpolar_so2.
CartanData cartan_data(CaseId id, int n = 0);

/// Restricted roots read off the action: at a generic Cartan point a the
/// eigenvalues of inner_g^-1 rho(a)^T inner_V rho(a) are lambda(a)^2 with
/// multiplicity m_lambda. Signs are fixed so the first nonzero coordinate is
/// positive.
std::vector<Root> derive_roots(const LinearAction& action, const std::vector<QVector>& cartan_basis);

/// A point of V where the orbit dimension is maximal.
QVector regular_point(CaseId id, int n);

/// True iff the diagram is connected of type A_n, D_n (n >= 4) or E6/E7/E8
/// and every multiplicity is 1.
bool discriminant_irreducible(const CartanData& cd);

/// Rational orthogonal n x n matrix (Cayley transform of a skew matrix)
/// whose first column has no zero entry.
QMatrix cayley_orthogonal(int n);

/// Complex matrix as a pair of rational matrices.
struct CMatrix {
  QMatrix re, im;

  static CMatrix zero(Index n) { return {QMatrix::Zero(n, n), QMatrix::Zero(n, n)}; }
  static CMatrix real(const QMatrix& m) { return {m, QMatrix::Zero(m.rows(), m.cols())}; }
  Index rows() const { return re.rows(); }
  CMatrix operator+(const CMatrix& o) const { return {re + o.re, im + o.im}; }
  CMatrix operator-(const CMatrix& o) const { return {re - o.re, im - o.im}; }
  CMatrix operator*(const CMatrix& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  CMatrix transpose() const { return {re.transpose(), im.transpose()}; }
  CMatrix adjoint() const { return {re.transpose(), -im.transpose()}; }
};

/// Matrix of a point of V for the real symmetric cases.
QMatrix sym_real_matrix(CaseId id, int n, const QVector& v);
/// Coordinates of a (traceless when required) real symmetric matrix.
QVector sym_real_coords(CaseId id, int n, const QMatrix& y);
CMatrix sym_complex_matrix(int n, const QVector& v);
QVector sym_complex_coords(int n, const CMatrix& x);

}  // namespace isodisc
