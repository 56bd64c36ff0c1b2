#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace isodisc {

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over mpq_class. Every operator returns a canonical Rat
/// (never a gmpxx expression template), which keeps it usable as an Eigen
/// scalar.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(const mpz_class& z) : q_(z) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const { return Rat(::abs(q_)); }
  Rat inverse() const;
  Rat pow(unsigned e) const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator+() const { return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat abs(const Rat& r) { return r.abs(); }

/// Binomial coefficient as a 64-bit count; throws std::overflow_error.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace isodisc

template <>
struct std::hash<isodisc::Rat> {
  std::size_t operator()(const isodisc::Rat& r) const noexcept { return r.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<isodisc::Rat> : GenericNumTraits<isodisc::Rat> {
  using Real = isodisc::Rat;
  using NonInteger = isodisc::Rat;
  using Literal = isodisc::Rat;
  using Nested = isodisc::Rat;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(std::numeric_limits<long>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<long>::min()); }
};

}  // namespace Eigen
