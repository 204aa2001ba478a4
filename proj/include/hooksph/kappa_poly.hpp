#ifndef HOOKSPH_KAPPA_POLY_HPP
#define HOOKSPH_KAPPA_POLY_HPP

#include <concepts>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hooksph/rational.hpp"

namespace hooksph {

// Dense univariate polynomial in the coupling parameter kappa with exact
// rational coefficients, stored in ascending degree. Trailing zeros are
// trimmed, so the zero polynomial has no coefficients.
class KappaPoly {
 public:
  KappaPoly() = default;
  KappaPoly(const Rational& constant);
  template <std::integral I>
  KappaPoly(I constant) : KappaPoly(Rational(constant)) {}
  explicit KappaPoly(std::vector<Rational> coefficients);
  KappaPoly(std::initializer_list<Rational> coefficients);

  // The polynomial "kappa".
  static KappaPoly kappa();

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Coefficient of kappa^i, zero past the degree.
  Rational coefficient(std::size_t i) const;
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational eval(const Rational& kappa0) const;

  KappaPoly operator-() const;
  KappaPoly& operator+=(const KappaPoly& o);
  KappaPoly& operator-=(const KappaPoly& o);
  KappaPoly& operator*=(const KappaPoly& o);
  KappaPoly& operator*=(const Rational& s);

  friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
  friend KappaPoly operator-(KappaPoly a, const KappaPoly& b) { return a -= b; }
  friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
    KappaPoly r = a;
    return r *= b;
  }
  friend bool operator==(const KappaPoly&, const KappaPoly&) = default;

  // JSON array of coefficient strings, ascending degree.
  nlohmann::json to_json() const;
  static KappaPoly from_json(const nlohmann::json& j);

  // Human form such as "1 + 2*k - 1/3*k^2".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

KappaPoly scale(const KappaPoly& p, const Rational& s);

std::ostream& operator<<(std::ostream& os, const KappaPoly& p);

}  // namespace hooksph

#endif
