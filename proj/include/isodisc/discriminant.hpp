#pragma once

#include "isodisc/action.hpp"
#include "isodisc/polynomial.hpp"
#include "isodisc/wedge.hpp"

#include <cstdint>

namespace isodisc {

/// Generic orbit dimension: the largest rank of rho(v) over three seeded
/// integer points.
Index orbit_dim(const LinearAction& action, std::uint64_t seed = 0);

/// delta as the weighted sum of squared m x m minors of rho(v),
///   sum_{I,J} det(S_V)_I det(S_g^-1)_J det(rho(v)_{I,J})^2,
/// which is the plain sum of squared minors in orthonormal bases. Requires
/// diagonal metrics; throws CapExceeded when binom(d,m) binom(p,m) > cap.
MVPoly discriminant_minors(const LinearAction& action, Index m, std::uint64_t cap = kDefaultWedgeCap);
MVPoly discriminant_minors(const LinearAction& action, std::uint64_t seed = 0);

/// delta as e_m of S_g^-1 rho(v)^T S_V rho(v); also asserts that the
/// coefficients e_k with k > m vanish.
MVPoly discriminant_charcoeff(const LinearAction& action, Index m);
MVPoly discriminant_charcoeff(const LinearAction& action, std::uint64_t seed = 0);

/// Symbolic Gram matrix S_g^-1 rho(v)^T S_V rho(v).
PolyMatrix symbolic_gram(const LinearAction& action);

/// f restricted to the Cartan subspace, in the Cartan coordinates t_1..t_r.
MVPoly restrict_cartan(const MVPoly& f, const CartanData& cd);

/// prod over positive roots of lambda(t)^(2 m_lambda).
MVPoly root_product(const CartanData& cd);

}  // namespace isodisc
