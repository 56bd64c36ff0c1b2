#pragma once

#include "isodisc/exactlin.hpp"
#include "isodisc/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace isodisc {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector, one byte per variable. Variables beyond the owning
/// polynomial's nvars are always zero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t i);
  static Monomial from_exponents(std::span<const unsigned> exps);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned degree() const;
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Graded lexicographic: higher total degree first, then larger exponent
  /// of the earliest variable.
  friend bool grlex_greater(const Monomial& a, const Monomial& b);
  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rat coef;
};

/// Sparse multivariate polynomial over Q in canonical form: terms sorted by
/// descending graded-lex order, no zero coefficients.
class MVPoly {
 public:
  MVPoly() = default;
  explicit MVPoly(std::size_t nvars);

  static MVPoly constant(std::size_t nvars, const Rat& c);
  static MVPoly variable(std::size_t nvars, std::size_t i);
  static MVPoly linear(const QVector& coeffs);
  /// Builds from arbitrary terms (merges duplicates, drops zeros).
  static MVPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// The common degree when every term has the same degree (the zero
  /// polynomial counts as homogeneous of any requested degree).
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous(unsigned deg) const;
  /// Verifies homogeneity and records the degree; throws std::invalid_argument.
  MVPoly& assert_homogeneous(unsigned deg);
  std::optional<unsigned> asserted_degree() const { return asserted_degree_; }

  MVPoly& operator+=(const MVPoly& o);
  MVPoly& operator-=(const MVPoly& o);
  MVPoly& operator*=(const Rat& c);
  friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
  friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
  friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
  friend MVPoly operator*(MVPoly a, const Rat& c) { return a *= c; }
  friend MVPoly operator*(const Rat& c, MVPoly a) { return a *= c; }
  MVPoly operator-() const;
  MVPoly pow(unsigned e) const;
  MVPoly square() const { return *this * *this; }

  /// Adds c * a * b into *this without materialising the product.
  void add_product(const Rat& c, const MVPoly& a, const MVPoly& b);

  friend bool operator==(const MVPoly& a, const MVPoly& b);

  Rat eval(std::span<const Rat> point) const;
  Rat eval(const QVector& point) const;
  MVPoly derivative(std::size_t var) const;

  /// Substitutes x_i -> sum_k t(i, k) y_k, giving a polynomial in t.cols()
  /// variables.
  MVPoly substitute_linear(const QMatrix& t) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_same(const MVPoly& o, const char* what) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
  std::optional<unsigned> asserted_degree_;
};

/// Unordered sum builder for long sums of products; finish() canonicalises.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(std::size_t nvars) : nvars_(nvars) {}
  void add(const MVPoly& p, const Rat& scale = Rat(1));
  void add_product(const Rat& scale, const MVPoly& a, const MVPoly& b);
  MVPoly finish() &&;

 private:
  std::size_t nvars_;
  std::unordered_map<Monomial, Rat, MonomialHash> acc_;
};

/// Degree <= 1 homogeneous polynomial stored as its coefficient vector.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(QVector coeffs) : coeffs_(std::move(coeffs)) {}
  /// Throws std::invalid_argument when p has degree > 1 or a constant term.
  static LinForm from_poly(const MVPoly& p);

  const QVector& coeffs() const { return coeffs_; }
  std::size_t nvars() const { return static_cast<std::size_t>(coeffs_.size()); }
  MVPoly to_poly() const { return MVPoly::linear(coeffs_); }
  bool is_zero() const { return isodisc::is_zero(coeffs_); }

 private:
  QVector coeffs_;
};

/// Addition/subtraction/multiplication/scale/power as named operations.
enum class PolyOp { Add, Sub, Mul, Scale, Pow };
MVPoly poly_arith(PolyOp op, const MVPoly& a, const MVPoly& b);
MVPoly poly_arith(PolyOp op, const MVPoly& a, const Rat& scalar);
MVPoly poly_arith(PolyOp op, const MVPoly& a, unsigned exponent);

/// Returns c with f == c * g when such a rational exists; c = 0 when f is
/// zero. When g is zero, only f == 0 succeeds (with c = 0).
std::optional<Rat> equal_mod_constant(const MVPoly& f, const MVPoly& g);

/// Directional derivative of f along the linear vector field x -> G x,
/// i.e. sum_i (G x)_i * df/dx_i.
MVPoly linear_field_derivative(const MVPoly& f, const QMatrix& g);

/// All monomials of total degree `deg` in `nvars` variables, descending
/// graded-lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned deg);

/// Coefficients of a homogeneous polynomial in the given monomial basis.
/// Throws std::invalid_argument if p has a term outside the basis.
QVector coefficient_vector(const MVPoly& p, const std::vector<Monomial>& basis);
MVPoly from_coefficient_vector(std::size_t nvars, const QVector& c, const std::vector<Monomial>& basis);

/// Default display names x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace isodisc
