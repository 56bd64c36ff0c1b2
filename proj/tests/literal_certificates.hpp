// Certificates typed in by hand from closed-form identities.
#pragma once

#include "isodisc/certificate.hpp"

namespace isodisc::literal {

// 2x2 complex symmetric [[z1, z3], [z3, z2]] in the sym_complex coordinates
// (re_z11, im_z11, re_z12, im_z12, re_z22, im_z22). With P = z1 z2 - z3^2,
// A = |z1|^2 - |z2|^2 and B = z1 conj(z3) + conj(z2) z3 the identity
// |P|^2 (A^2 + 4 |B|^2) = |P A|^2 + 4 |P B|^2 gives four real squares.
inline SosCertificate sym_complex_two_squares() {
  const std::size_t nv = 6;
  auto x = [&](std::size_t i) { return MVPoly::variable(nv, i); };
  const MVPoly a1 = x(0), b1 = x(1), a3 = x(2), b3 = x(3), a2 = x(4), b2 = x(5);
  const MVPoly re_p = a1 * a2 - b1 * b2 - a3 * a3 + b3 * b3;
  const MVPoly im_p = a1 * b2 + b1 * a2 - Rat(2) * a3 * b3;
  const MVPoly a = a1 * a1 + b1 * b1 - a2 * a2 - b2 * b2;
  const MVPoly re_b = a1 * a3 + b1 * b3 + a2 * a3 + b2 * b3;
  const MVPoly im_b = b1 * a3 - a1 * b3 + a2 * b3 - b2 * a3;
  SosCertificate cert;
  cert.case_label = "sym_complex";
  cert.n = 2;
  cert.var_names = {"re_z11", "im_z11", "re_z12", "im_z12", "re_z22", "im_z22"};
  cert.squares = {{Rat(1), re_p * a},
                  {Rat(1), im_p * a},
                  {Rat(4), re_p * re_b - im_p * im_b},
                  {Rat(4), re_p * im_b + im_p * re_b}};
  return cert;
}

}  // namespace isodisc::literal
