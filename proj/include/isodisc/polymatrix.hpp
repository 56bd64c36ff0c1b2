#pragma once

#include "isodisc/exactlin.hpp"
#include "isodisc/polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace isodisc {

/// Dense matrix of polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Index rows, Index cols, std::size_t nvars);
  static PolyMatrix constant(const QMatrix& m, std::size_t nvars);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  MVPoly& operator()(Index i, Index j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const MVPoly& operator()(Index i, Index j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  /// Left/right multiplication by a constant matrix.
  friend PolyMatrix operator*(const QMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const QMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix select(const std::vector<Index>& rows, const std::vector<Index>& cols) const;
  /// Largest total degree among the entries (-1 when all zero).
  int max_degree() const;

 private:
  Index rows_ = 0, cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MVPoly> data_;
};

/// Determinant by cofactor expansion with memoised minors (no division).
/// Throws std::invalid_argument on a non-square matrix or, when
/// `require_linear`, on an entry of degree > 1.
MVPoly det_linear_forms(const PolyMatrix& m, bool require_linear = true);

/// All k x k minors det(M[I, cols]) with |cols| = k, keyed by the increasing
/// row index set I (encoded as a bitmask over at most 64 rows).
std::map<std::uint64_t, MVPoly> maximal_minors(const PolyMatrix& m, const std::vector<Index>& cols);

/// e_1..e_n of the characteristic polynomial of a square polynomial matrix
/// (det(tI - M) = sum_k (-1)^k e_k t^(n-k)), by Faddeev-LeVerrier.
std::vector<MVPoly> char_coeffs_symbolic(const PolyMatrix& m);

/// Rows of a bitmask in increasing order.
std::vector<Index> mask_indices(std::uint64_t mask);

}  // namespace isodisc
