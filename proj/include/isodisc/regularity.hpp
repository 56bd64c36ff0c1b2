#pragma once

#include "isodisc/catalog.hpp"

#include <string>
#include <vector>

namespace isodisc {

/// Whether {I, X, ..., X^(n-1)} is linearly independent.
bool powers_independent(const QMatrix& x);
/// Same over C, tested on the realification (each power M and i M).
bool powers_independent(const CMatrix& x);

/// Regularity of a point of V for sym_real_traceless (real matrix powers) or
/// sym_complex (X with Y = I, complex powers). Other cases throw.
bool regularity_test(CaseId id, int n, const QVector& point);

/// Split form Q = [[0, I_l], [I_l, 0]] (plus a trailing 1 for odd n).
QMatrix q_form(int n);
/// Permutation matrix e_1 -> e_(l+1) -> ... -> e_n -> e_l -> ... -> e_2 -> e_1,
/// l = floor(n / 2). Lies in {X : X^t = Q X Q^-1, tr X = 0}.
QMatrix cycle_matrix(int n);
/// Basis of so(Q) = {A : A^t Q + Q A = 0}.
std::vector<QMatrix> so_q_basis(int n);
bool in_q_model(const QMatrix& x, const QMatrix& q);
/// Rank of {[A_i, X]} over a basis of so(Q).
Index so_q_orbit_rank(const QMatrix& x);

struct PredictedComponent {
  std::string weight;
  Index dim = 0;
};

/// Component of weight n*theta1 carrying the special element:
/// binom(2n-1, n-1) - binom(2n-3, n-1) for sym_real_traceless and
/// 2 binom(2n-1, n) for sym_complex.
PredictedComponent predicted_component(CaseId id, int n);

}  // namespace isodisc
