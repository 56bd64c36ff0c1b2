#include "isodisc/certificate.hpp"

namespace isodisc {

bool verify_certificate(SosCertificate& cert, const MVPoly& delta) {
  cert.verified = false;
  if (cert.constant.sign() <= 0) return false;
  PolyAccumulator acc(delta.nvars());
  for (const WeightedSquare& s : cert.squares) {
    if (s.weight.sign() <= 0 || s.poly.nvars() != delta.nvars()) return false;
    acc.add_product(s.weight, s.poly, s.poly);
  }
  acc.add(delta, -cert.constant);
  cert.verified = std::move(acc).finish().is_zero();
  return cert.verified;
}

void normalize_content(SosCertificate& cert) {
  for (WeightedSquare& s : cert.squares) {
    if (s.poly.is_zero()) continue;
    mpz_class g = 0, l = 1;
    for (const Term& t : s.poly.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.raw().get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.raw().get_den_mpz_t());
    }
    Rat content(abs(g), l);
    if (s.poly.terms().front().coef.sign() < 0) content = -content;
    s.poly = s.poly * content.inverse();
    s.weight = s.weight * content * content;
  }
}

}  // namespace isodisc
