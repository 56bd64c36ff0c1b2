#pragma once

#include "isodisc/action.hpp"
#include "isodisc/certificate.hpp"
#include "isodisc/polynomial.hpp"
#include "isodisc/wedge.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isodisc {

/// Linear map between two named bases.
struct LinMap {
  std::string domain;
  std::string codomain;
  QMatrix matrix;  // codomain x domain
};

/// Phi : Lambda^m g (x) Lambda^m V -> R[V]_m,
///   Phi(x_J (x) v_I)(v) = <x_J1 v ^ ... ^ x_Jm v, v_I> = det((S_V rho(v))_{I,J}).
/// Domain index of x_J (x) v_I is j * |Lambda^m V| + i.
struct PhiMap {
  Index m = 0;
  WedgeBasis g_wedge;
  WedgeBasis v_wedge;
  std::size_t nvars = 0;
  std::vector<Monomial> monomials;  // codomain basis, descending grlex
  QMatrix matrix;

  Index domain_dim() const { return g_wedge.size() * v_wedge.size(); }
  Index domain_index(Index j, Index i) const { return j * v_wedge.size() + i; }
  MVPoly image(const QVector& u) const;
};

/// Derivation action of each generator on Lambda^k V.
std::vector<QMatrix> induced_wedge_action(const LinearAction& action, Index k, std::uint64_t cap = kDefaultWedgeCap);

PhiMap phi_matrix(const LinearAction& action, Index m, std::uint64_t cap = kDefaultWedgeCap);

/// Inner product on the domain of Phi: wedge Gram of inner_g tensor wedge
/// Gram of inner_V.
QMatrix domain_inner(const LinearAction& action, const PhiMap& phi);

/// Action of each x_i on the domain of Phi (ad on Lambda^m g plus the
/// derivation action on Lambda^m V).
std::vector<QMatrix> domain_generators(const LinearAction& action, const PhiMap& phi);

/// Matrix of f -> x.f, (x.f)(v) = -grad f(v) . (G v), on the given
/// monomial basis.
QMatrix poly_action_matrix(const QMatrix& g, const std::vector<Monomial>& monomials);

/// theta = x_1 ^ ... ^ x_m (x) v_I with I the non-Cartan coordinates.
/// Requires a cartan-adapted action with d - r == m.
QVector special_element(const LinearAction& action, const PhiMap& phi);

struct CasimirResult {
  QMatrix omega;
  std::optional<Rat> kappa;  // scalar by which the raw Casimir acts on V
  bool normalized = false;
  std::string status;        // "normalized", "raw" or "not-scalar-on-V"
};

/// omega = sum_ij (inner_g^-1)_ij rho(x_i) rho(x_j) for the given
/// representation matrices, divided by kappa when `normalize` is set and the
/// Casimir of V is kappa * I.
CasimirResult casimir(const LinearAction& action, const std::vector<QMatrix>& space_generators, bool normalize = true);

/// Central elements sum_ij (S_g^-1 B S_g^-1)_ij rho(x_i) rho(x_j) for a basis
/// of the ad-invariant symmetric forms B on g other than inner_g itself.
std::vector<QMatrix> central_operators(const LinearAction& action, const std::vector<QMatrix>& space_generators);

struct Component {
  Rat eigenvalue;
  std::vector<QVector> basis;
  Index dim() const { return static_cast<Index>(basis.size()); }
};

/// Eigenspaces of omega ordered by (dimension, eigenvalue); each is checked
/// to be invariant under every generator.
std::vector<Component> casimir_split(const QMatrix& omega, const std::vector<QMatrix>& generators);

/// Smallest invariant subspace containing `seed`, echelon-reduced.
std::vector<QVector> generated_submodule(const QVector& seed, const std::vector<QMatrix>& generators);

bool is_invariant(const std::vector<QVector>& basis, const std::vector<QMatrix>& generators);

/// Splits an invariant subspace by the rational eigenspaces of the given
/// central operators, then recursively by rational self-adjoint elements of
/// its commutant. The commutant step is skipped above `max_dim`.
std::vector<std::vector<QVector>> refine_invariant(const std::vector<QVector>& basis,
                                                   const std::vector<QMatrix>& generators, const QMatrix& inner,
                                                   Index max_dim, const std::vector<QMatrix>& central = {});

struct FWResult {
  MVPoly poly;
  std::vector<Rat> weights;     // 1 / <q_i, q_i>
  std::vector<MVPoly> squares;  // Phi(q_i)
};

/// f_W = sum_i Phi(q_i)^2 / <q_i, q_i> over an orthogonal basis q of W.
FWResult f_W(const PhiMap& phi, const QMatrix& inner, const std::vector<QVector>& w);

class NoComponentFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotPolar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultWedgeCap;
  Index refine_max_dim = 24;
  bool normalize_content = true;
  std::string case_label;
  int n = 0;
};

/// Everything sos_search derives from an action before choosing W.
struct SearchContext {
  Index m = 0;
  MVPoly delta;
  PhiMap phi;
  QMatrix inner;
  std::vector<QMatrix> generators;
  QVector theta;
  CasimirResult casimir;
  std::vector<QMatrix> central;
  std::vector<Component> components;
  std::vector<QVector> theta_parts;  // projection of theta onto each component
};

SearchContext prepare_search(const LinearAction& action, const SearchOptions& opts);

struct Candidate {
  std::size_t component = 0;
  Rat eigenvalue;
  std::vector<QVector> basis;
};

/// Invariant subspaces generated by the theta-projections onto the
/// (refined) Casimir components, ordered by (dimension, eigenvalue).
std::vector<Candidate> sos_candidates(const SearchContext& ctx, const SearchOptions& opts);

/// Certificate from an invariant subspace W when f_W = c * delta with c > 0.
std::optional<SosCertificate> certificate_for(const SearchContext& ctx, const std::vector<QVector>& w,
                                              const Rat& eigenvalue, const SearchOptions& opts,
                                              const std::vector<std::string>& var_names);

/// First candidate W with f_W = c * delta, c > 0; verified before return.
/// Throws NotPolar or NoComponentFound.
SosCertificate sos_search(const LinearAction& action, const SearchOptions& opts = {});

/// [y_a, y_b] in the basis of g, recovered from invariance of the metrics:
/// inner_g([y_a, y_b], x_j) = <y_a, x_j . y_b>_V.
QVector bracket(const LinearAction& action, Index a, Index b);

/// A : Lambda^r V -> g (x) Lambda^(r-2) V (maximal-rank actions, r >= 2).
LinMap a_map(const LinearAction& action, std::uint64_t seed = 0);
/// Adjoint of A for inner_g (x) wedge Gram and the wedge Gram on Lambda^r V.
LinMap a_star(const LinearAction& action, const LinMap& a);

/// Matrix of Phi o (complement pairing) o A*, which must vanish.
QMatrix phi_astar(const LinearAction& action, const QMatrix& astar);
bool check_phi_astar_zero(const LinearAction& action, std::uint64_t seed = 0);

struct KostantReport {
  Index r = 0;
  Rat max_eigenvalue;
  Index top_dim = 0;    // dimension of the top eigenspace
  Index kernel_a = 0;   // dim ker A
  std::string status;   // Casimir normalization status
};

/// Normalized Casimir on Lambda^r V; the maximal eigenvalue should be r.
KostantReport kostant_check(const LinearAction& action, std::uint64_t seed = 0);

}  // namespace isodisc
