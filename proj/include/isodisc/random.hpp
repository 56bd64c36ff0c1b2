#pragma once

#include "isodisc/exactlin.hpp"

#include <cstdint>
#include <random>

namespace isodisc {

/// Deterministic source of small integers and rationals. All "generic
/// point" choices in the library go through this class.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  long uniform_int(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(engine_);
  }

  /// p/q with |p| <= range, 1 <= q <= max_den.
  Rat rational(long range, long max_den = 1) {
    const long p = uniform_int(-range, range);
    const long q = max_den > 1 ? uniform_int(1, max_den) : 1;
    return Rat(p, q);
  }

  QVector vector(Index n, long range, long max_den = 1) {
    QVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational(range, max_den);
    return v;
  }

  QMatrix matrix(Index rows, Index cols, long range, long max_den = 1) {
    QMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = rational(range, max_den);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace isodisc
