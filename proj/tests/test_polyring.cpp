#include "isodisc/polymatrix.hpp"
#include "isodisc/polynomial.hpp"
#include "isodisc/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace isodisc;

namespace {

MVPoly random_poly(SeededRng& rng, std::size_t nvars, unsigned max_deg, int terms) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> e(nvars, 0);
    const unsigned deg = static_cast<unsigned>(rng.uniform_int(0, max_deg));
    for (unsigned s = 0; s < deg; ++s) ++e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(nvars) - 1))];
    ts.push_back(Term{Monomial::from_exponents(e), rng.rational(9, 3)});
  }
  return MVPoly::from_terms(nvars, ts);
}

PolyMatrix random_linear_matrix(SeededRng& rng, Index rows, Index cols, std::size_t nvars) {
  PolyMatrix m(rows, cols, nvars);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = MVPoly::linear(rng.vector(static_cast<Index>(nvars), 3));
  return m;
}

QMatrix eval_matrix(const PolyMatrix& m, const QVector& x) {
  QMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(x);
  return out;
}

}  // namespace

TEST_CASE("ring identities on seeded polynomials") {
  SeededRng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const MVPoly a = random_poly(rng, 3, 4, 5), b = random_poly(rng, 3, 4, 5), c = random_poly(rng, 3, 3, 4);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a.square());
    const QVector x = rng.vector(3, 7, 2);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    CHECK(poly_arith(PolyOp::Mul, a, b) == a * b);
    CHECK(poly_arith(PolyOp::Pow, a, 3u) == a * a * a);
  }
}

TEST_CASE("terms stay in descending graded-lex order") {
  SeededRng rng(22);
  const MVPoly p = random_poly(rng, 4, 5, 30);
  for (std::size_t k = 1; k < p.size(); ++k) CHECK(grlex_greater(p.terms()[k - 1].mono, p.terms()[k].mono));
  for (const Term& t : p.terms()) CHECK_FALSE(t.coef.is_zero());
}

TEST_CASE("accumulator agrees with direct arithmetic") {
  SeededRng rng(23);
  PolyAccumulator acc(3);
  MVPoly direct(3);
  for (int k = 0; k < 10; ++k) {
    const MVPoly a = random_poly(rng, 3, 2, 3), b = random_poly(rng, 3, 2, 3);
    const Rat s = rng.rational(5, 4);
    acc.add_product(s, a, b);
    direct += s * (a * b);
  }
  CHECK(std::move(acc).finish() == direct);
}

TEST_CASE("derivatives, Killing-field derivative and substitution") {
  SeededRng rng(24);
  const MVPoly a = random_poly(rng, 3, 4, 6), b = random_poly(rng, 3, 4, 6);
  for (std::size_t v = 0; v < 3; ++v) CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));

  // x^2 + y^2 is killed by the rotation field (-y, x).
  QMatrix rot = QMatrix::Zero(2, 2);
  rot(0, 1) = Rat(-1);
  rot(1, 0) = Rat(1);
  const MVPoly r2 = MVPoly::variable(2, 0).square() + MVPoly::variable(2, 1).square();
  CHECK(linear_field_derivative(r2, rot).is_zero());
  CHECK_FALSE(linear_field_derivative(MVPoly::variable(2, 0).square(), rot).is_zero());

  const QMatrix t = rng.matrix(3, 2, 4);
  const MVPoly sub = a.substitute_linear(t);
  const QVector y = rng.vector(2, 5);
  CHECK(sub.eval(y) == a.eval(QVector(t * y)));
}

TEST_CASE("equal_mod_constant and homogeneity") {
  SeededRng rng(25);
  const MVPoly g = random_poly(rng, 3, 3, 4);
  CHECK(equal_mod_constant(Rat(-5, 2) * g, g) == Rat(-5, 2));
  CHECK_FALSE(equal_mod_constant(g + MVPoly::constant(3, Rat(1)), g).has_value());
  CHECK(equal_mod_constant(MVPoly(3), g) == Rat(0));
  CHECK_FALSE(equal_mod_constant(g, MVPoly(3)).has_value());

  MVPoly h = MVPoly::variable(2, 0) * MVPoly::variable(2, 1);
  CHECK_NOTHROW(h.assert_homogeneous(2));
  MVPoly inh = h + MVPoly::variable(2, 0);
  CHECK_THROWS_AS(inh.assert_homogeneous(2), std::invalid_argument);
}

TEST_CASE("coefficient vectors round trip over a monomial basis") {
  SeededRng rng(26);
  const auto basis = monomials_of_degree(4, 3);
  CHECK(basis.size() == binomial(6, 3));
  const QVector c = rng.vector(static_cast<Index>(basis.size()), 5);
  const MVPoly p = from_coefficient_vector(4, c, basis);
  CHECK(coefficient_vector(p, basis) == c);
  CHECK(p.is_homogeneous(3));
}

TEST_CASE("maximal minors agree with numeric determinants") {
  SeededRng rng(27);
  const PolyMatrix m = random_linear_matrix(rng, 5, 3, 3);
  const std::vector<Index> cols{0, 2};
  const auto minors = maximal_minors(m, cols);
  CHECK(minors.size() == binomial(5, 2));
  for (int trial = 0; trial < 4; ++trial) {
    const QVector x = rng.vector(3, 6);
    const QMatrix num = eval_matrix(m, x);
    for (const auto& [mask, minor] : minors) {
      CHECK(minor.eval(x) == oracle::leibniz_det(oracle::submatrix(num, mask_indices(mask), cols)));
    }
  }
}

TEST_CASE("Cauchy-Binet: squared minors sum to e_k of the Gram matrix") {
  SeededRng rng(28);
  const PolyMatrix m = random_linear_matrix(rng, 4, 3, 2);
  const std::vector<MVPoly> e = char_coeffs_symbolic(m.transpose() * m);
  REQUIRE(e.size() == 3);
  for (Index k = 1; k <= 3; ++k) {
    PolyAccumulator acc(2);
    for (const auto& cols : oracle::subsets(3, k))
      for (const auto& [mask, minor] : maximal_minors(m, cols)) acc.add_product(Rat(1), minor, minor);
    CHECK(std::move(acc).finish() == e[static_cast<std::size_t>(k) - 1]);
  }
}

TEST_CASE("symbolic characteristic coefficients match numeric ones") {
  SeededRng rng(29);
  const PolyMatrix m = random_linear_matrix(rng, 4, 4, 2);
  const std::vector<MVPoly> e = char_coeffs_symbolic(m);
  for (int trial = 0; trial < 3; ++trial) {
    const QVector x = rng.vector(2, 5);
    const std::vector<Rat> c = char_poly(eval_matrix(m, x));
    for (std::size_t k = 1; k <= 4; ++k) {
      const Rat sign(k % 2 == 0 ? 1 : -1);
      CHECK(sign * e[k - 1].eval(x) == c[4 - k]);
    }
  }
  CHECK(det_linear_forms(m).eval(QVector::Ones(2)) == oracle::leibniz_det(eval_matrix(m, QVector::Ones(2))));
}
