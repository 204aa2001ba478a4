#ifndef HOOKSPH_RATIONAL_HPP
#define HOOKSPH_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hooksph {

// Exact rational number in canonical form (reduced, positive denominator,
// zero stored as 0/1). Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : value_(mpz_class(static_cast<long>(v))) {}

  template <std::unsigned_integral U>
  Rational(U v) : value_(mpz_class(static_cast<unsigned long>(v))) {}

  explicit Rational(const mpz_class& v) : value_(v) {}
  explicit Rational(const mpq_class& v);

  // Throws DivisionByZeroError when den == 0.
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "a" or "a/b" with optional sign; throws ParseError.
  static Rational parse(std::string_view text);

  // "num/den", den omitted when 1.
  std::string str() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  // Throws std::range_error unless the value is an integer fitting in long.
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational inverse(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hooksph

#endif
