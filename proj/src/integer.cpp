#include "csf/integer.hpp"

namespace csf {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(std::span<const long> counts) {
  Integer out = 1;
  long total = 0;
  for (long m : counts) {
    if (m < 0) return 0;
    total += m;
    out *= binomial(total, m);
  }
  return out;
}

}  // namespace csf
