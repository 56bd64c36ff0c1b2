#pragma once

#include "isodisc/exactlin.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace isodisc {

inline constexpr std::uint64_t kDefaultWedgeCap = 100000;

/// Refusal: a requested space is larger than the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis {e_I} of the k-th exterior power of a `dim`-dimensional space:
/// increasing multi-indices in lexicographic order.
class WedgeBasis {
 public:
  WedgeBasis() = default;
  WedgeBasis(Index dim, Index degree, std::uint64_t cap = kDefaultWedgeCap);

  Index ambient_dim() const { return dim_; }
  Index degree() const { return degree_; }
  Index size() const { return static_cast<Index>(masks_.size()); }

  std::vector<Index> indices(Index k) const;
  std::uint64_t mask(Index k) const { return masks_[static_cast<std::size_t>(k)]; }
  /// Position of the multi-index with the given bitmask, or -1.
  Index index_of(std::uint64_t mask) const;

 private:
  Index dim_ = 0, degree_ = 0;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, Index> lookup_;
};

/// Derivation extension of g to the wedge space:
/// g(u_1 ^ ... ^ u_k) = sum_i u_1 ^ ... ^ g u_i ^ ... ^ u_k.
QMatrix wedge_derivation(const QMatrix& g, const WedgeBasis& basis);

/// Induced inner product <e_I, e_J> = det(S[I, J]).
QMatrix wedge_gram(const QMatrix& s, const WedgeBasis& basis);

/// Sign of the shuffle permutation (I, complement of I).
int shuffle_sign(std::uint64_t mask, Index dim);

/// Equivariant identification Lambda^k -> Lambda^(dim-k) for a diagonal
/// metric S: e_I -> shuffle_sign(I) / <e_Ic, e_Ic> * e_Ic. This is the Hodge
/// star up to the global factor sqrt(det S).
QMatrix complement_pairing(const QMatrix& s, const WedgeBasis& from, const WedgeBasis& to);

/// Kronecker product.
QMatrix kron(const QMatrix& a, const QMatrix& b);

bool is_diagonal(const QMatrix& m);

}  // namespace isodisc
