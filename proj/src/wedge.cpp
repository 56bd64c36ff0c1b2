#include "isodisc/wedge.hpp"

#include "isodisc/rational.hpp"

#include <bit>

namespace isodisc {

WedgeBasis::WedgeBasis(Index dim, Index degree, std::uint64_t cap) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > 64) throw std::invalid_argument("WedgeBasis: ambient dimension must be in [0, 64]");
  if (degree < 0 || degree > dim) throw std::invalid_argument("WedgeBasis: degree out of range");
  const std::uint64_t count = binomial(static_cast<unsigned>(dim), static_cast<unsigned>(degree));
  if (count > cap) {
    throw CapExceeded("wedge space of dimension " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
  }
  masks_.reserve(count);
  std::vector<Index> idx(static_cast<std::size_t>(degree));
  auto rec = [&](auto&& self, Index pos, Index start, std::uint64_t mask) -> void {
    if (pos == degree) {
      masks_.push_back(mask);
      return;
    }
    for (Index i = start; i <= dim - (degree - pos); ++i) self(self, pos + 1, i + 1, mask | (std::uint64_t{1} << i));
  };
  rec(rec, 0, 0, 0);
  for (std::size_t k = 0; k < masks_.size(); ++k) lookup_.emplace(masks_[k], static_cast<Index>(k));
}

std::vector<Index> WedgeBasis::indices(Index k) const {
  std::vector<Index> out;
  std::uint64_t m = mask(k);
  while (m != 0) {
    out.push_back(static_cast<Index>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Index WedgeBasis::index_of(std::uint64_t mask) const {
  auto it = lookup_.find(mask);
  return it == lookup_.end() ? -1 : it->second;
}

QMatrix wedge_derivation(const QMatrix& g, const WedgeBasis& basis) {
  if (g.rows() != basis.ambient_dim() || g.cols() != basis.ambient_dim()) {
    throw std::invalid_argument("wedge_derivation: matrix does not match ambient dimension");
  }
  const Index n = basis.size();
  QMatrix out = QMatrix::Zero(n, n);
  for (Index c = 0; c < n; ++c) {
    const std::uint64_t mask = basis.mask(c);
    for (Index src : basis.indices(c)) {
      const std::uint64_t rest = mask & ~(std::uint64_t{1} << src);
      for (Index l = 0; l < g.rows(); ++l) {
        const Rat& coef = g(l, src);
        if (coef.is_zero()) continue;
        if (l == src) {
          out(c, c) += coef;
          continue;
        }
        const std::uint64_t lbit = std::uint64_t{1} << l;
        if ((rest & lbit) != 0) continue;
        // Moving l from slot `src` to its sorted position passes over the
        // indices strictly between src and l.
        const Index lo = std::min(src, l), hi = std::max(src, l);
        const std::uint64_t between = rest & ((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{2} << lo) - 1);
        const bool odd = (std::popcount(between) % 2) == 1;
        const Index r = basis.index_of(rest | lbit);
        if (odd) out(r, c) -= coef;
        else out(r, c) += coef;
      }
    }
  }
  return out;
}

bool is_diagonal(const QMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

QMatrix wedge_gram(const QMatrix& s, const WedgeBasis& basis) {
  const Index n = basis.size();
  QMatrix out = QMatrix::Zero(n, n);
  if (is_diagonal(s)) {
    for (Index k = 0; k < n; ++k) {
      Rat prod(1);
      for (Index i : basis.indices(k)) prod *= s(i, i);
      out(k, k) = prod;
    }
    return out;
  }
  for (Index a = 0; a < n; ++a) {
    const std::vector<Index> ia = basis.indices(a);
    for (Index b = a; b < n; ++b) {
      const std::vector<Index> ib = basis.indices(b);
      QMatrix sub(static_cast<Index>(ia.size()), static_cast<Index>(ib.size()));
      for (std::size_t i = 0; i < ia.size(); ++i)
        for (std::size_t j = 0; j < ib.size(); ++j) sub(static_cast<Index>(i), static_cast<Index>(j)) = s(ia[i], ib[j]);
      out(a, b) = determinant(sub);
      out(b, a) = out(a, b);
    }
  }
  return out;
}

int shuffle_sign(std::uint64_t mask, Index dim) {
  // (I, I^c) sorts with sum_a (i_a - a) transpositions.
  long inversions = 0;
  Index pos = 0;
  for (Index i = 0; i < dim; ++i) {
    if ((mask >> i) & 1U) {
      inversions += i - pos;
      ++pos;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

QMatrix complement_pairing(const QMatrix& s, const WedgeBasis& from, const WedgeBasis& to) {
  if (!is_diagonal(s)) throw std::invalid_argument("complement_pairing: metric must be diagonal");
  const Index dim = from.ambient_dim();
  if (to.ambient_dim() != dim || from.degree() + to.degree() != dim) {
    throw std::invalid_argument("complement_pairing: degrees must be complementary");
  }
  const std::uint64_t full = dim == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
  QMatrix out = QMatrix::Zero(to.size(), from.size());
  for (Index k = 0; k < from.size(); ++k) {
    const std::uint64_t comp = full & ~from.mask(k);
    Rat norm(1);
    for (Index i = 0; i < dim; ++i)
      if ((comp >> i) & 1U) norm *= s(i, i);
    out(to.index_of(comp), k) = Rat(shuffle_sign(from.mask(k), dim)) / norm;
  }
  return out;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix out = QMatrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace isodisc
