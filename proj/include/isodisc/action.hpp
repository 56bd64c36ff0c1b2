#pragma once

#include "isodisc/exactlin.hpp"
#include "isodisc/polymatrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isodisc {

/// Invariant violation in a representation (message names the generator).
class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Root {
  QVector functional;  // coefficients in the Cartan coordinates t_1..t_r
  int multiplicity = 1;
};

struct CartanData {
  Index r = 0;
  std::vector<QVector> basis;  // vectors of V, orthogonal under inner_V
  std::vector<Root> roots;     // positive restricted roots
  std::string diagram;         // "A2", "C2", "A1xA1", ...

  int multiplicity_sum() const;
};

/// A Lie algebra g acting on V through skew generator matrices rho(x_j).
struct LinearAction {
  std::string name;
  Index d = 0;
  Index p = 0;
  std::vector<QMatrix> generators;  // rho(x_1), ..., rho(x_p), each d x d
  QMatrix inner_g;                  // p x p
  QMatrix inner_V;                  // d x d
  std::vector<std::string> var_names;
  std::optional<CartanData> cartan;
  std::optional<QMatrix> complex_structure;  // J with J^2 = -I, if V is complex

  /// Positions of the Cartan basis when every Cartan vector is a
  /// coordinate unit vector; empty otherwise.
  std::vector<Index> cartan_coordinates() const;
  bool cartan_adapted() const { return cartan.has_value() && !cartan_coordinates().empty(); }
  bool polar() const { return cartan.has_value(); }
};

/// Checks shapes, skewness, positive definiteness, independence of the
/// generators and commutator closure. Throws ActionError.
void validate(const LinearAction& action);

/// Structure constants as matrices ad(x_i) on g: column j holds the
/// coordinates of [x_i, x_j]. Throws ActionError when not closed.
std::vector<QMatrix> adjoint_matrices(const LinearAction& action);

/// d x p matrix whose column j is rho(x_j) applied to the generic point.
PolyMatrix rho_symbolic(const LinearAction& action);
/// Same matrix evaluated at a rational point.
QMatrix rho_at(const LinearAction& action, const QVector& v);

/// Exact test of symmetric positive definiteness (LDL^T pivots).
bool is_positive_definite(const QMatrix& s);

bool operator==(const CartanData& a, const CartanData& b);
bool operator==(const LinearAction& a, const LinearAction& b);

}  // namespace isodisc
