#include "hooksph/spherical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooksph/errors.hpp"
#include "hooksph/symfunc.hpp"

namespace hooksph {

namespace {

std::vector<int> support_sizes(const SphericalQuery& q) {
  std::vector<int> sizes;
  sizes.reserve(q.support.members().size());
  for (int a : q.support.members()) sizes.push_back(q.blocks.size(a));
  return sizes;
}

void require_invariants(const SphericalQuery& q) {
  q.validate();
  if (q.m() < 0) throw NoInvariantsError(q.b, q.p());
}

}  // namespace

void SphericalQuery::validate() const {
  if (b < 0) throw std::invalid_argument("b must be nonnegative");
  if (support.size() == 0) throw std::invalid_argument("support set must be nonempty");
  if (support.members().back() >= p())
    throw std::invalid_argument("support member " + std::to_string(support.members().back() + 1) +
                                " exceeds p = " + std::to_string(p()));
}

SphericalQuery normalize_support(const SphericalQuery& q) {
  q.validate();
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(q.p()));
  for (int a : q.support.members()) sizes.push_back(q.blocks.size(a));
  for (int j = 0; j < q.p(); ++j)
    if (!q.support.contains(j)) sizes.push_back(q.blocks.size(j));
  std::vector<int> front(static_cast<std::size_t>(q.ell()));
  for (int i = 0; i < q.ell(); ++i) front[static_cast<std::size_t>(i)] = i;
  return SphericalQuery{q.b, BlockStructure(std::move(sizes)), SupportSet(std::move(front))};
}

Rational invariant_multiplicity(int b, int p) {
  const int m = p - b - 1;
  if (m < 0) throw NoInvariantsError(b, p);
  return binomial(b + m, b);
}

Rational spherical_big2(const SphericalQuery& q) {
  require_invariants(q);
  const int b = q.b;
  const int m = q.m();
  const int ell = q.ell();
  std::vector<Rational> reciprocals;
  for (int n : support_sizes(q)) reciprocals.emplace_back(1, n);

  Rational value = binomial(b + m, b);
  for (int i = 1; i <= std::min(b, ell - 1); ++i) {
    Rational term = binomial(b + m - i, b - i) * elem_sym<Rational>(static_cast<std::size_t>(i), reciprocals);
    if (i % 2 == 1) value -= term;
    else value += term;
  }
  return value;
}

Rational spherical_big1(const SphericalQuery& q, Big1Options options) {
  require_invariants(q);
  if (q.ell() < 2 && !options.allow_single_block)
    throw std::invalid_argument("product form requires a support of size >= 2");
  const int b = q.b;
  const int m = q.m();
  const int ell = q.ell();
  std::vector<Rational> shifted;
  Rational pi(1);
  for (int n : support_sizes(q)) {
    shifted.emplace_back(n - 1);
    pi *= Rational(n);
  }

  Rational bracket(0);
  for (int k = 0; k <= std::min(m, ell); ++k) {
    const auto mk = static_cast<unsigned>(m - k);
    bracket += pochhammer(Rational(b + 1), mk) / factorial(mk) *
               elem_sym<Rational>(static_cast<std::size_t>(ell - k), shifted);
  }
  Rational tail = pochhammer(Rational(b - ell + 1), static_cast<unsigned>(m)) / factorial(static_cast<unsigned>(m));
  if (ell % 2 == 0) tail = -tail;  // (-1)^{l+1}
  bracket += tail;
  return bracket / pi;
}

}  // namespace hooksph
