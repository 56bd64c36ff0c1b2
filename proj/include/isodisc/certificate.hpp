#pragma once

#include "isodisc/polynomial.hpp"

#include <string>
#include <vector>

namespace isodisc {

struct WeightedSquare {
  Rat weight;
  MVPoly poly;
};

/// Claim: sum_i w_i q_i^2 = c * delta with every w_i > 0 and c > 0.
struct SosCertificate {
  std::string case_label;
  int n = 0;
  Rat constant;
  std::vector<WeightedSquare> squares;
  std::vector<std::string> var_names;
  Index component_dim = 0;
  Rat casimir_eigenvalue;
  bool verified = false;
};

/// Symbolic check of the certificate identity; sets cert.verified.
bool verify_certificate(SosCertificate& cert, const MVPoly& delta);

/// Rescales each square by its content so coefficients are coprime integers
/// with a positive leading term; weights absorb the factor.
void normalize_content(SosCertificate& cert);

}  // namespace isodisc
