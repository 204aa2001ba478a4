#include "hooksph/symfunc.hpp"

namespace hooksph {

Rational pochhammer(const Rational& a, unsigned n) {
  Rational out(1);
  for (unsigned i = 0; i < n; ++i) out *= a + Rational(i);
  return out;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  Rational falling(1);
  for (long i = 0; i < k; ++i) falling *= Rational(n - i);
  return falling / factorial(static_cast<unsigned>(k));
}

}  // namespace hooksph
