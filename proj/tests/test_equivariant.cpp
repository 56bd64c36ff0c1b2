#include "isodisc/catalog.hpp"
#include "isodisc/discriminant.hpp"
#include "isodisc/equivariant.hpp"
#include "isodisc/io.hpp"
#include "isodisc/random.hpp"
#include "isodisc/regularity.hpp"
#include "literal_certificates.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace isodisc;

namespace {

struct Sized {
  CaseId id;
  int n;
};

const std::vector<Sized> kPolar{{CaseId::Torus2, 0},          {CaseId::SymReal, 2},
                                {CaseId::SymReal, 3},         {CaseId::SymRealTraceless, 2},
                                {CaseId::SymRealTraceless, 3}, {CaseId::SymComplex, 2}};

MVPoly var(std::size_t i) { return MVPoly::variable(4, i); }

MVPoly sum_of_squares(const SosCertificate& c, std::size_t nvars) {
  PolyAccumulator acc(nvars);
  for (const WeightedSquare& s : c.squares) acc.add_product(s.weight, s.poly, s.poly);
  return std::move(acc).finish();
}

SearchOptions options_for(CaseId id, int n) {
  SearchOptions o;
  o.case_label = case_label(id);
  o.n = n;
  return o;
}

}  // namespace

TEST_CASE("Phi entries are minors of S_V rho(v)") {
  const LinearAction a = build_case(CaseId::SymRealTraceless, 3);
  const PhiMap phi = phi_matrix(a, 2);
  SeededRng rng(41);
  const QVector v = rng.vector(a.d, 5);
  const QMatrix sr = a.inner_V * rho_at(a, v);
  for (Index j = 0; j < phi.g_wedge.size(); ++j)
    for (Index i = 0; i < phi.v_wedge.size(); ++i) {
      QVector e = QVector::Zero(phi.domain_dim());
      e(phi.domain_index(j, i)) = Rat(1);
      CHECK(phi.image(e).eval(v) ==
            oracle::leibniz_det(oracle::submatrix(sr, phi.v_wedge.indices(i), phi.g_wedge.indices(j))));
    }
}

TEST_CASE("Phi is equivariant") {
  for (const Sized& c : kPolar) {
    CAPTURE(case_label(c.id));
    CAPTURE(c.n);
    const LinearAction a = build_case(c.id, c.n);
    const PhiMap phi = phi_matrix(a, orbit_dim(a));
    const auto gens = domain_generators(a, phi);
    for (Index i = 0; i < a.p; ++i) {
      const QMatrix lhs = phi.matrix * gens[static_cast<std::size_t>(i)];
      const QMatrix rhs = poly_action_matrix(a.generators[static_cast<std::size_t>(i)], phi.monomials) * phi.matrix;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("special element restricts to delta") {
  const LinearAction t2 = build_case(CaseId::Torus2);
  const PhiMap phi2 = phi_matrix(t2, 2);
  const QVector theta2 = special_element(t2, phi2);
  // Cartan = span{v1, v3}, so theta = x1 ^ x2 (x) v2 ^ v4.
  CHECK(theta2(phi2.domain_index(0, phi2.v_wedge.index_of(0b1010))) == Rat(1));
  for (const Sized& c : kPolar) {
    CAPTURE(case_label(c.id));
    const LinearAction a = build_case(c.id, c.n);
    const Index m = orbit_dim(a);
    const PhiMap phi = phi_matrix(a, m);
    const QVector theta = special_element(a, phi);
    const QMatrix inner = domain_inner(a, phi);
    const MVPoly lhs = restrict_cartan(phi.image(theta).square(), *a.cartan);
    const MVPoly rhs = inner_product(theta, inner, theta) * restrict_cartan(discriminant_minors(a, m), *a.cartan);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Casimir operator") {
  const LinearAction a = build_case(CaseId::SymRealTraceless, 3);
  const CasimirResult on_v = casimir(a, a.generators, false);
  CHECK(on_v.kappa.has_value());
  const CasimirResult norm = casimir(a, a.generators, true);
  CHECK(norm.omega == QMatrix(QMatrix::Identity(a.d, a.d)));
  const PhiMap phi = phi_matrix(a, 3);
  const auto gens = domain_generators(a, phi);
  const CasimirResult dom = casimir(a, gens);
  for (const QMatrix& g : gens) CHECK(QMatrix(dom.omega * g) == QMatrix(g * dom.omega));
  const CasimirResult w2 = casimir(a, induced_wedge_action(a, 2));
  CHECK(rational_eigenspaces(w2.omega).back().eigenvalue == Rat(2));

  const CasimirResult reducible = casimir(build_case(CaseId::Torus2), build_case(CaseId::Torus2).generators);
  CHECK(reducible.status == "normalized");
  LinearAction skewed = build_case(CaseId::Torus2);
  skewed.generators[1] *= Rat(2);
  skewed.inner_V(2, 2) = skewed.inner_V(3, 3) = Rat(1);
  CHECK(casimir(skewed, skewed.generators).status == "not-scalar-on-V");
}

TEST_CASE("Casimir split of the baby example") {
  const LinearAction a = build_case(CaseId::Torus2);
  const PhiMap phi = phi_matrix(a, 2);
  const auto gens = domain_generators(a, phi);
  const auto comps = casimir_split(casimir(a, gens).omega, gens);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].dim() == 2);
  CHECK(comps[1].dim() == 4);
  for (const QVector& v : comps[0].basis) CHECK(is_zero(QVector(phi.matrix * v)));
  CHECK(generated_submodule(comps[0].basis[0], gens).size() == 1);
  CHECK(generated_submodule(QVector::Zero(phi.domain_dim()), gens).empty());
}

TEST_CASE("component decomposition covers the domain") {
  for (const Sized& c : kPolar) {
    CAPTURE(case_label(c.id));
    const LinearAction a = build_case(c.id, c.n);
    const SearchContext ctx = prepare_search(a, options_for(c.id, c.n));
    Index total = 0;
    for (const Component& comp : ctx.components) {
      total += comp.dim();
      CHECK(is_invariant(comp.basis, ctx.generators));
      const FWResult fw = f_W(ctx.phi, ctx.inner, comp.basis);
      for (const QMatrix& g : a.generators) CHECK(linear_field_derivative(fw.poly, g).is_zero());
      const auto k = equal_mod_constant(fw.poly, ctx.delta);
      REQUIRE(k.has_value());
      CHECK(k->sign() >= 0);
    }
    CHECK(total == ctx.phi.domain_dim());
    for (std::size_t k = 0; k < ctx.components.size(); ++k) {
      const auto c_k = equal_mod_constant(f_W(ctx.phi, ctx.inner, ctx.components[k].basis).poly, ctx.delta);
      CHECK((c_k->sign() > 0) == !is_zero(ctx.theta_parts[k]));
    }
  }
}

TEST_CASE("baby example components give the two displayed identities") {
  const MVPoly first = (var(0) * var(2) + var(1) * var(3)).square() + (var(0) * var(3) - var(1) * var(2)).square();
  const MVPoly second = (var(0) * var(2) - var(1) * var(3)).square() + (var(0) * var(3) + var(1) * var(2)).square();
  const LinearAction a = build_case(CaseId::Torus2);
  const SearchOptions o = options_for(CaseId::Torus2, 0);
  const SearchContext ctx = prepare_search(a, o);
  const auto cands = sos_candidates(ctx, o);
  REQUIRE(cands.size() == 2);
  bool saw_first = false, saw_second = false;
  for (const Candidate& cand : cands) {
    CHECK(cand.basis.size() == 2);
    const MVPoly f = f_W(ctx.phi, ctx.inner, cand.basis).poly;
    saw_first = saw_first || equal_mod_constant(f, first).has_value();
    saw_second = saw_second || equal_mod_constant(f, second).has_value();
  }
  CHECK(saw_first);
  CHECK(saw_second);
}

TEST_CASE("non-polar circle action has a component not proportional to delta") {
  const LinearAction a = build_case(CaseId::NonpolarSo2);
  CHECK_THROWS_AS(sos_search(a), NotPolar);
  const PhiMap phi = phi_matrix(a, 1);
  const QMatrix inner = domain_inner(a, phi);
  const auto gens = domain_generators(a, phi);
  const MVPoly delta = discriminant_minors(a);
  bool found = false;
  for (const Component& comp : casimir_split(casimir(a, gens).omega, gens)) {
    for (const auto& piece : refine_invariant(comp.basis, gens, inner, 24, central_operators(a, gens))) {
      const MVPoly f = f_W(phi, inner, piece).poly;
      if (equal_mod_constant(f, var(0).square() + var(1).square()).has_value()) {
        found = true;
        CHECK_FALSE(equal_mod_constant(f, delta).has_value());
      }
    }
  }
  CHECK(found);
}

TEST_CASE("sos_search square counts") {
  auto count = [](CaseId id, int n) {
    const SosCertificate c = sos_search(build_case(id, n), options_for(id, n));
    CHECK(c.verified);
    return c.squares.size();
  };
  CHECK(count(CaseId::Torus2, 0) == 2);
  CHECK(count(CaseId::SymReal, 2) == 2);
  CHECK(count(CaseId::SymRealTraceless, 2) == 2);
  CHECK(count(CaseId::SymRealTraceless, 3) == 7);
  const std::size_t complex2 = count(CaseId::SymComplex, 2);
  CHECK(complex2 <= 5);
  CHECK(complex2 <= static_cast<std::size_t>(predicted_component(CaseId::SymComplex, 2).dim));
  CHECK(count(CaseId::SymRealTraceless, 3) <= static_cast<std::size_t>(predicted_component(CaseId::SymRealTraceless, 3).dim));
}

TEST_CASE("certificates are invariant, verified and deterministic") {
  for (const Sized& c : kPolar) {
    CAPTURE(case_label(c.id));
    const LinearAction a = build_case(c.id, c.n);
    const SosCertificate cert = sos_search(a, options_for(c.id, c.n));
    const MVPoly f = sum_of_squares(cert, static_cast<std::size_t>(a.d));
    for (const QMatrix& g : a.generators) CHECK(linear_field_derivative(f, g).is_zero());
    for (const WeightedSquare& s : cert.squares) CHECK(s.weight.sign() > 0);
    CHECK(dump(certificate_to_json(cert)) == dump(certificate_to_json(sos_search(a, options_for(c.id, c.n)))));
  }
}

TEST_CASE("certificate mutations fail verification") {
  const LinearAction a = build_case(CaseId::SymRealTraceless, 3);
  const MVPoly delta = discriminant_minors(a);
  const SosCertificate cert = sos_search(a, options_for(CaseId::SymRealTraceless, 3));
  SosCertificate w = cert;
  w.squares[0].weight += Rat(1, 7);
  CHECK_FALSE(verify_certificate(w, delta));
  CHECK_FALSE(w.verified);
  SosCertificate neg = cert;
  neg.squares[1].weight = -neg.squares[1].weight;
  CHECK_FALSE(verify_certificate(neg, delta));
  SosCertificate c0 = cert;
  c0.constant = Rat(0);
  CHECK_FALSE(verify_certificate(c0, delta));
}

TEST_CASE("closed-form complex 2x2 certificate") {
  const LinearAction a = build_case(CaseId::SymComplex, 2);
  const MVPoly delta = discriminant_minors(a);
  SosCertificate cert = literal::sym_complex_two_squares();
  const auto k = equal_mod_constant(sum_of_squares(cert, 6), delta);
  REQUIRE(k.has_value());
  CHECK(k->sign() > 0);
  cert.constant = *k;
  CHECK(verify_certificate(cert, delta));
}

TEST_CASE("the predicted complex component also yields a certificate") {
  const LinearAction a = build_case(CaseId::SymComplex, 2);
  const SearchOptions o = options_for(CaseId::SymComplex, 2);
  const SearchContext ctx = prepare_search(a, o);
  bool six = false;
  for (const Candidate& cand : sos_candidates(ctx, o)) {
    if (cand.basis.size() != 6) continue;
    const auto cert = certificate_for(ctx, cand.basis, cand.eigenvalue, o, a.var_names);
    REQUIRE(cert.has_value());
    CHECK(cert->verified);
    six = true;
  }
  CHECK(six);
}

TEST_CASE("bracket of symmetric matrices is their commutator") {
  const CaseId id = CaseId::SymRealTraceless;
  const LinearAction a = build_case(id, 3);
  for (Index p = 0; p < a.d; ++p)
    for (Index q = 0; q < a.d; ++q) {
      const QMatrix yp = sym_real_matrix(id, 3, QVector::Unit(a.d, p));
      const QMatrix yq = sym_real_matrix(id, 3, QVector::Unit(a.d, q));
      const QMatrix k = yp * yq - yq * yp;
      const QVector br = bracket(a, p, q);
      // so(3) basis E_01 - E_10, E_02 - E_20, E_12 - E_21.
      CHECK(br(0) == k(0, 1));
      CHECK(br(1) == k(0, 2));
      CHECK(br(2) == k(1, 2));
    }
}

TEST_CASE("A map and its adjoint") {
  const LinearAction a = build_case(CaseId::SymRealTraceless, 3);
  const LinMap am = a_map(a);
  CHECK(am.matrix.rows() == 3);
  CHECK(am.matrix.cols() == 10);
  const std::vector<Index> cart = a.cartan_coordinates();
  const WedgeBasis src(a.d, 2);
  const Index col = src.index_of((std::uint64_t{1} << cart[0]) | (std::uint64_t{1} << cart[1]));
  CHECK(is_zero(QVector(am.matrix.col(col))));

  const LinMap as = a_star(a, am);
  const QMatrix s_src = wedge_gram(a.inner_V, src);
  const QMatrix s_tgt = kron(a.inner_g, wedge_gram(a.inner_V, WedgeBasis(a.d, 0)));
  SeededRng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const QVector u = rng.vector(src.size(), 5, 3);
    const QVector w = rng.vector(am.matrix.rows(), 5, 3);
    CHECK(inner_product(QVector(am.matrix * u), s_tgt, w) == inner_product(u, s_src, QVector(as.matrix * w)));
  }
  CHECK_THROWS_AS(a_map(build_case(CaseId::SymRealTraceless, 2)), std::invalid_argument);
}

TEST_CASE("A map is equivariant in degree three") {
  const LinearAction a = build_case(CaseId::SymRealTraceless, 4);
  const LinMap am = a_map(a);
  const auto on_src = induced_wedge_action(a, 3);
  const auto on_rest = induced_wedge_action(a, 1);
  const auto ad = adjoint_matrices(a);
  const QMatrix ip = QMatrix::Identity(a.p, a.p);
  const QMatrix ir = QMatrix::Identity(a.d, a.d);
  for (std::size_t i = 0; i < ad.size(); ++i) {
    const QMatrix on_tgt = kron(ad[i], ir) + kron(ip, on_rest[i]);
    CHECK(QMatrix(am.matrix * on_src[i]) == QMatrix(on_tgt * am.matrix));
  }
}

TEST_CASE("Phi kills the image of A*") {
  for (const Sized& c : std::vector<Sized>{{CaseId::SymRealTraceless, 3}, {CaseId::SymComplex, 2}, {CaseId::Torus2, 0}}) {
    CAPTURE(case_label(c.id));
    const LinearAction a = build_case(c.id, c.n);
    CHECK(check_phi_astar_zero(a));
  }
  // Flip one entry of A* whose row is seen by Phi.
  const LinearAction a = build_case(CaseId::SymRealTraceless, 3);
  LinMap as = a_star(a, a_map(a));
  const PhiMap phi = phi_matrix(a, a.p);
  const QMatrix seen = phi.matrix * complement_pairing(a.inner_V, WedgeBasis(a.d, a.d - a.p), phi.v_wedge);
  bool flipped = false;
  for (Index r = 0; r < as.matrix.rows() && !flipped; ++r) {
    if (is_zero(QVector(seen.col(r)))) continue;
    for (Index c = 0; c < as.matrix.cols() && !flipped; ++c) {
      if (as.matrix(r, c).is_zero()) continue;
      as.matrix(r, c) = -as.matrix(r, c);
      flipped = true;
    }
  }
  REQUIRE(flipped);
  CHECK_FALSE(is_zero(phi_astar(a, as.matrix)));
}

TEST_CASE("maximal Casimir eigenvalue on Lambda^r") {
  for (const Sized& c : std::vector<Sized>{{CaseId::SymRealTraceless, 3}, {CaseId::SymComplex, 2}, {CaseId::Torus2, 0}}) {
    CAPTURE(case_label(c.id));
    const KostantReport rep = kostant_check(build_case(c.id, c.n));
    CHECK(rep.r == 2);
    CHECK(rep.max_eigenvalue == Rat(2));
    CHECK(rep.kernel_a >= rep.top_dim);
  }
}
