#include "isodisc/polymatrix.hpp"

#include <bit>
#include <stdexcept>

namespace isodisc {

PolyMatrix::PolyMatrix(Index rows, Index cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(static_cast<std::size_t>(rows * cols), MVPoly(nvars)) {}

PolyMatrix PolyMatrix::constant(const QMatrix& m, std::size_t nvars) {
  PolyMatrix out(m.rows(), m.cols(), nvars);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = MVPoly::constant(nvars, m(i, j));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_, nvars_);
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || nvars_ != o.nvars_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix out(rows_, o.cols_, nvars_);
  for (Index i = 0; i < rows_; ++i) {
    for (Index j = 0; j < o.cols_; ++j) {
      PolyAccumulator acc(nvars_);
      for (Index k = 0; k < cols_; ++k) {
        const MVPoly& a = (*this)(i, k);
        const MVPoly& b = o(k, j);
        if (!a.is_zero() && !b.is_zero()) acc.add_product(Rat(1), a, b);
      }
      out(i, j) = std::move(acc).finish();
    }
  }
  return out;
}

PolyMatrix operator*(const QMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix out(a.rows(), b.cols(), b.nvars());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      PolyAccumulator acc(b.nvars());
      for (Index k = 0; k < a.cols(); ++k) {
        if (!a(i, k).is_zero()) acc.add(b(k, j), a(i, k));
      }
      out(i, j) = std::move(acc).finish();
    }
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const QMatrix& b) { return (b.transpose() * a.transpose()).transpose(); }

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ && a.data_ == b.data_;
}

PolyMatrix PolyMatrix::select(const std::vector<Index>& rows, const std::vector<Index>& cols) const {
  PolyMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()), nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = (*this)(rows[i], cols[j]);
  return out;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const MVPoly& p : data_) d = std::max(d, p.degree());
  return d;
}

std::vector<Index> mask_indices(std::uint64_t mask) {
  std::vector<Index> out;
  while (mask != 0) {
    out.push_back(static_cast<Index>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::map<std::uint64_t, MVPoly> maximal_minors(const PolyMatrix& m, const std::vector<Index>& cols) {
  if (m.rows() > 64) throw std::invalid_argument("maximal_minors: at most 64 rows supported");
  const std::size_t n = m.nvars();
  // level[mask] = det(M[rows(mask), cols[0..j)]) with popcount(mask) == j.
  std::map<std::uint64_t, MVPoly> level;
  level.emplace(0, MVPoly::constant(n, Rat(1)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Index col = cols[j];
    std::map<std::uint64_t, PolyAccumulator> next;
    for (const auto& [mask, minor] : level) {
      if (minor.is_zero()) continue;
      for (Index i = 0; i < m.rows(); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((mask & bit) != 0) continue;
        const MVPoly& entry = m(i, col);
        if (entry.is_zero()) continue;
        // Position of row i within the enlarged set, expanded along the
        // last selected column j.
        const int pos = std::popcount(mask & (bit - 1));
        const Rat sign((pos + static_cast<int>(j)) % 2 == 0 ? 1 : -1);
        auto it = next.try_emplace(mask | bit, PolyAccumulator(n)).first;
        it->second.add_product(sign, entry, minor);
      }
    }
    level.clear();
    for (auto& [mask, acc] : next) level.emplace(mask, std::move(acc).finish());
  }
  // Fill in structurally zero minors so every row subset is present.
  if (cols.size() <= static_cast<std::size_t>(m.rows())) {
    std::vector<Index> idx(cols.size());
    auto rec = [&](auto&& self, std::size_t k, Index start, std::uint64_t mask) -> void {
      if (k == cols.size()) {
        level.try_emplace(mask, MVPoly(n));
        return;
      }
      for (Index i = start; i < m.rows(); ++i) self(self, k + 1, i + 1, mask | (std::uint64_t{1} << i));
    };
    rec(rec, 0, 0, 0);
  }
  return level;
}

MVPoly det_linear_forms(const PolyMatrix& m, bool require_linear) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_linear_forms: matrix not square");
  if (require_linear && m.max_degree() > 1) {
    throw std::invalid_argument("det_linear_forms: entries must have degree <= 1");
  }
  if (m.rows() == 0) return MVPoly::constant(m.nvars(), Rat(1));
  std::vector<Index> cols(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) cols[static_cast<std::size_t>(j)] = j;
  auto minors = maximal_minors(m, cols);
  const std::uint64_t full = m.rows() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m.rows()) - 1);
  return minors.at(full);
}

std::vector<MVPoly> char_coeffs_symbolic(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_coeffs_symbolic: matrix not square");
  const Index n = a.rows();
  const std::size_t nv = a.nvars();
  // M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I.
  PolyMatrix mk = PolyMatrix::constant(QMatrix::Identity(n, n), nv);
  std::vector<MVPoly> e;
  for (Index k = 1; k <= n; ++k) {
    PolyMatrix am = a * mk;
    PolyAccumulator tr(nv);
    for (Index i = 0; i < n; ++i) tr.add(am(i, i));
    MVPoly trace = std::move(tr).finish();
    // Division by the integer k is exact over Q; verify the quotient anyway.
    const MVPoly c = trace * Rat(-1, static_cast<long>(k));
    if (!(c * Rat(static_cast<long>(-k)) == trace)) {
      throw std::logic_error("char_coeffs_symbolic: inexact division");
    }
    e.push_back(k % 2 == 0 ? c : -c);
    if (k < n) {
      for (Index i = 0; i < n; ++i) am(i, i) += c;
      mk = std::move(am);
    }
  }
  return e;
}

}  // namespace isodisc
