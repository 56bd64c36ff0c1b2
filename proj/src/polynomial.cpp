#include "isodisc/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace isodisc {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t i) {
  Monomial m;
  m.set(i, 1);
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned v) {
  if (i >= kMaxVars) throw std::out_of_range("Monomial: variable index out of range");
  if (v > 255) throw std::overflow_error("Monomial: exponent exceeds 255");
  e_[i] = static_cast<std::uint8_t>(v);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e_) d += x;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = static_cast<unsigned>(e_[i]) + o.e_[i];
    if (s > 255) throw std::overflow_error("Monomial: exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
  }
  return false;
}

std::size_t Monomial::hash() const {
  std::uint64_t w[4];
  std::memcpy(w, e_.data(), sizeof(w));
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t x : w) {
    h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

// ---------------------------------------------------------------- MVPoly

namespace {

void canonicalize(std::vector<Term>& terms) {
  auto cmp = [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); };
  if (!std::is_sorted(terms.begin(), terms.end(), cmp)) std::sort(terms.begin(), terms.end(), cmp);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms = std::move(out);
}

MVPoly from_map(std::size_t nvars, std::unordered_map<Monomial, Rat, MonomialHash>&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back(Term{m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  return MVPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

MVPoly::MVPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("MVPoly: at most 32 variables supported");
}

MVPoly MVPoly::constant(std::size_t nvars, const Rat& c) {
  MVPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

MVPoly MVPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("MVPoly::variable: index out of range");
  MVPoly p(nvars);
  p.terms_.push_back(Term{Monomial::variable(i), Rat(1)});
  return p;
}

MVPoly MVPoly::linear(const QVector& coeffs) {
  MVPoly p(static_cast<std::size_t>(coeffs.size()));
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (!coeffs(i).is_zero()) p.terms_.push_back(Term{Monomial::variable(static_cast<std::size_t>(i)), coeffs(i)});
  }
  return p;  // x1 > x2 > ... in grlex, already sorted
}

MVPoly MVPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MVPoly p(nvars);
  for (const Term& t : terms) {
    for (std::size_t i = nvars; i < kMaxVars; ++i) {
      if (t.mono[i] != 0) throw std::invalid_argument("MVPoly: exponent on a variable beyond nvars");
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Rat MVPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grlex_greater(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rat(0);
}

int MVPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

std::optional<unsigned> MVPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned d = terms_.front().mono.degree();
  if (terms_.back().mono.degree() != d) return std::nullopt;
  return d;
}

bool MVPoly::is_homogeneous(unsigned deg) const {
  if (terms_.empty()) return true;
  return homogeneous_degree() == deg;
}

MVPoly& MVPoly::assert_homogeneous(unsigned deg) {
  if (!is_homogeneous(deg)) {
    throw std::invalid_argument("MVPoly: polynomial is not homogeneous of degree " + std::to_string(deg));
  }
  asserted_degree_ = deg;
  return *this;
}

void MVPoly::check_same(const MVPoly& o, const char* what) const {
  if (nvars_ != o.nvars_) {
    throw std::invalid_argument(std::string("MVPoly ") + what + ": mismatched variable count (" +
                                std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
  }
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
  check_same(o, "add");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_greater(a->mono, b->mono))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_greater(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      Rat c = a->coef + b->coef;
      if (!c.is_zero()) out.push_back(Term{a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  asserted_degree_.reset();
  return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& o) { return *this += -o; }

MVPoly& MVPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coef *= c;
  }
  return *this;
}

MVPoly MVPoly::operator-() const {
  MVPoly r = *this;
  for (Term& t : r.terms_) t.coef = -t.coef;
  return r;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
  a.check_same(b, "mul");
  if (a.is_zero() || b.is_zero()) return MVPoly(a.nvars_);
  if (a.size() == 1 || b.size() == 1) {
    // Multiplying by a single term preserves the order.
    const MVPoly& mono = a.size() == 1 ? a : b;
    const MVPoly& other = a.size() == 1 ? b : a;
    MVPoly r(a.nvars_);
    r.terms_.reserve(other.size());
    const Term& t = mono.terms_.front();
    for (const Term& u : other.terms_) r.terms_.push_back(Term{t.mono * u.mono, t.coef * u.coef});
    return r;
  }
  PolyAccumulator acc(a.nvars_);
  acc.add_product(Rat(1), a, b);
  return std::move(acc).finish();
}

MVPoly MVPoly::pow(unsigned e) const {
  MVPoly result = constant(nvars_, Rat(1));
  MVPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

void MVPoly::add_product(const Rat& c, const MVPoly& a, const MVPoly& b) {
  check_same(a, "add_product");
  check_same(b, "add_product");
  PolyAccumulator acc(nvars_);
  acc.add(*this);
  acc.add_product(c, a, b);
  *this = std::move(acc).finish();
}

bool operator==(const MVPoly& a, const MVPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  }
  return true;
}

Rat MVPoly::eval(std::span<const Rat> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MVPoly::eval: point length does not match nvars");
  // Cache powers per variable.
  std::vector<std::vector<Rat>> powers(nvars_);
  Rat acc(0);
  for (const Term& t : terms_) {
    Rat v = t.coef;
    for (std::size_t i = 0; i < nvars_ && !v.is_zero(); ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rat(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    acc += v;
  }
  return acc;
}

Rat MVPoly::eval(const QVector& point) const {
  std::vector<Rat> p(point.data(), point.data() + point.size());
  return eval(std::span<const Rat>(p));
}

MVPoly MVPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("MVPoly::derivative: variable out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coef * Rat(static_cast<long>(e))});
  }
  return from_terms(nvars_, std::move(out));
}

MVPoly MVPoly::substitute_linear(const QMatrix& t) const {
  if (static_cast<std::size_t>(t.rows()) != nvars_) {
    throw std::invalid_argument("substitute_linear: matrix rows must equal nvars");
  }
  const auto nout = static_cast<std::size_t>(t.cols());
  std::vector<MVPoly> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(MVPoly::linear(t.row(static_cast<Index>(i)).transpose()));
  std::vector<std::vector<MVPoly>> powers(nvars_);
  PolyAccumulator acc(nout);
  for (const Term& term : terms_) {
    MVPoly v = constant(nout, term.coef);
    for (std::size_t i = 0; i < nvars_ && !v.is_zero(); ++i) {
      const unsigned e = term.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(nout, Rat(1)));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v = v * pw[e];
    }
    acc.add(v);
  }
  return std::move(acc).finish();
}

std::string MVPoly::to_string(const std::vector<std::string>& names_in) const {
  const std::vector<std::string> names = names_in.empty() ? default_names(nvars_) : names_in;
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coef;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    const bool is_const = t.mono.degree() == 0;
    bool need_star = false;
    if (!c.is_one() || is_const) {
      os << c;
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- PolyAccumulator

void PolyAccumulator::add(const MVPoly& p, const Rat& scale) {
  if (p.nvars() != nvars_) throw std::invalid_argument("PolyAccumulator: mismatched variable count");
  if (scale.is_zero()) return;
  for (const Term& t : p.terms()) {
    auto [it, inserted] = acc_.try_emplace(t.mono, Rat(0));
    it->second += scale.is_one() ? t.coef : t.coef * scale;
  }
}

void PolyAccumulator::add_product(const Rat& scale, const MVPoly& a, const MVPoly& b) {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) {
    throw std::invalid_argument("PolyAccumulator: mismatched variable count");
  }
  if (scale.is_zero()) return;
  acc_.reserve(acc_.size() + a.size() * b.size() / 2 + 16);
  for (const Term& s : a.terms()) {
    const Rat sc = scale.is_one() ? s.coef : s.coef * scale;
    for (const Term& t : b.terms()) {
      auto [it, inserted] = acc_.try_emplace(s.mono * t.mono, Rat(0));
      it->second += sc * t.coef;
    }
  }
}

MVPoly PolyAccumulator::finish() && { return from_map(nvars_, std::move(acc_)); }

// ---------------------------------------------------------------- LinForm

LinForm LinForm::from_poly(const MVPoly& p) {
  QVector c = QVector::Zero(static_cast<Index>(p.nvars()));
  for (const Term& t : p.terms()) {
    if (t.mono.degree() != 1) throw std::invalid_argument("LinForm: polynomial is not a linear form");
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.mono[i] == 1) c(static_cast<Index>(i)) = t.coef;
    }
  }
  return LinForm(std::move(c));
}

// ---------------------------------------------------------------- free functions

MVPoly poly_arith(PolyOp op, const MVPoly& a, const MVPoly& b) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    default: throw std::invalid_argument("poly_arith: operation needs a scalar or exponent operand");
  }
}

MVPoly poly_arith(PolyOp op, const MVPoly& a, const Rat& scalar) {
  if (op != PolyOp::Scale) throw std::invalid_argument("poly_arith: scalar operand only valid for scale");
  return a * scalar;
}

MVPoly poly_arith(PolyOp op, const MVPoly& a, unsigned exponent) {
  if (op != PolyOp::Pow) throw std::invalid_argument("poly_arith: exponent operand only valid for pow");
  return a.pow(exponent);
}

std::optional<Rat> equal_mod_constant(const MVPoly& f, const MVPoly& g) {
  if (f.nvars() != g.nvars()) return std::nullopt;
  if (f.is_zero()) return Rat(0);
  if (g.is_zero() || f.size() != g.size()) return std::nullopt;
  const Rat c = f.terms().front().coef / g.terms().front().coef;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f.terms()[i].mono == g.terms()[i].mono)) return std::nullopt;
    if (!(f.terms()[i].coef == c * g.terms()[i].coef)) return std::nullopt;
  }
  return c;
}

MVPoly linear_field_derivative(const MVPoly& f, const QMatrix& g) {
  const std::size_t n = f.nvars();
  if (static_cast<std::size_t>(g.rows()) != n || g.cols() != g.rows()) {
    throw std::invalid_argument("linear_field_derivative: field matrix must be nvars x nvars");
  }
  PolyAccumulator acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const QVector row = g.row(static_cast<Index>(i)).transpose();
    if (is_zero(row)) continue;
    const MVPoly d = f.derivative(i);
    if (d.is_zero()) continue;
    acc.add_product(Rat(1), MVPoly::linear(row), d);
  }
  return std::move(acc).finish();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned deg) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // Descending grlex within fixed degree = descending lex: enumerate the
  // first exponent from deg down to 0, recursively.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
  return out;
}

QVector coefficient_vector(const MVPoly& p, const std::vector<Monomial>& basis) {
  QVector c = QVector::Zero(static_cast<Index>(basis.size()));
  std::size_t j = 0;
  for (const Term& t : p.terms()) {
    while (j < basis.size() && grlex_greater(basis[j], t.mono)) ++j;
    if (j == basis.size() || !(basis[j] == t.mono)) {
      throw std::invalid_argument("coefficient_vector: term outside the monomial basis");
    }
    c(static_cast<Index>(j)) = t.coef;
  }
  return c;
}

MVPoly from_coefficient_vector(std::size_t nvars, const QVector& c, const std::vector<Monomial>& basis) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!c(static_cast<Index>(j)).is_zero()) terms.push_back(Term{basis[j], c(static_cast<Index>(j))});
  }
  return MVPoly::from_terms(nvars, std::move(terms));
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace isodisc
