#ifndef HOOKSPH_MPOLY_HPP
#define HOOKSPH_MPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hooksph/perm.hpp"
#include "hooksph/rational.hpp"

namespace hooksph {

using Exponents = std::vector<std::uint16_t>;

// Sparse polynomial in x_0..x_{N-1} with exact rational coefficients. Zero
// coefficients are never stored.
class MultivariatePoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit MultivariatePoly(int nvars = 0) : nvars_(nvars) {}

  static MultivariatePoly constant(int nvars, const Rational& c);
  static MultivariatePoly variable(int nvars, int i);
  static MultivariatePoly monomial(const Exponents& exps, const Rational& c = Rational(1));

  int variable_count() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Highest total degree; -1 for zero.
  int total_degree() const;
  Rational coefficient(const Exponents& exps) const;

  // Adds c * x^exps, dropping the term if it cancels.
  void add_term(const Exponents& exps, const Rational& c);

  MultivariatePoly operator-() const;
  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  MultivariatePoly& operator*=(const Rational& s);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) { return a += b; }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) { return a -= b; }
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator*(MultivariatePoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const MultivariatePoly&, const MultivariatePoly&) = default;

  // (w f)(x) = f(x w) with (x w)_i = x_{w(i)}: the exponent of x_i moves to x_{w(i)}.
  MultivariatePoly permuted(const Permutation& w) const;

  Rational eval(std::span<const Rational> point) const;

  std::string str() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Weight attached to each monomial by an inner product in which distinct
// monomials are orthogonal. S_N-invariance requires the weight to depend only
// on the multiset of exponents.
using MonomialWeight = std::function<Rational(const Exponents&)>;

// <f, g> with monomials orthonormal, or weighted by `weight` when given.
Rational inner_product(const MultivariatePoly& f, const MultivariatePoly& g, const MonomialWeight& weight = {});

}  // namespace hooksph

#endif
