#include "mvf/exact/crt.hpp"

#include "mvf/errors.hpp"

namespace mvf {

CrtResult crt(const std::vector<Congruence>& system) {
  Integer x = 0, m = 1;
  for (size_t i = 0; i < system.size(); ++i) {
    const auto& c = system[i];
    if (c.modulus < 1) fail(ErrorCode::InvalidArgument, "modulus must be positive");
    for (size_t j = 0; j < i; ++j) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), c.modulus.get_mpz_t(), system[j].modulus.get_mpz_t());
      if (g != 1)
        fail(ErrorCode::NonCoprimeModuli,
             "moduli " + system[j].modulus.get_str() + " and " + c.modulus.get_str() +
                 " share a factor");
    }
    // x + m t = r (mod n)  =>  t = (r - x) m^{-1}.
    Integer t = mod((c.residue - x) * inverse_mod(mod(m, c.modulus), c.modulus), c.modulus);
    x += m * t;
    m *= c.modulus;
    x = mod(x, m);
  }
  return {x, m};
}

}  // namespace mvf
