#include <random>

#include "doctest.h"

#include "hooksph/kappa_poly.hpp"
#include "hooksph/symfunc.hpp"

using namespace hooksph;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// e_k by summing products over all k-subsets
Rational elem_by_subsets(std::size_t k, const std::vector<Rational>& c) {
  Rational sum(0);
  const std::size_t r = c.size();
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Rational prod(1);
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) prod *= c[i];
    sum += prod;
  }
  return sum;
}

// h_k by summing over all multisets of size k (nondecreasing index tuples)
Rational complete_by_multisets(std::size_t k, const std::vector<Rational>& c, std::size_t start = 0) {
  if (k == 0) return Rational(1);
  Rational sum(0);
  for (std::size_t i = start; i < c.size(); ++i) sum += c[i] * complete_by_multisets(k - 1, c, i);
  return sum;
}

}  // namespace

TEST_CASE("elementary symmetric examples") {
  CHECK(elem_sym<Rational>(0, ints({4, 5, 6})) == Rational(1));
  CHECK(elem_sym<Rational>(0, std::vector<Rational>{}) == Rational(1));
  CHECK(elem_sym<Rational>(3, ints({1, 1, 1})) == Rational(1));
  CHECK(elem_sym<Rational>(2, ints({1, 2, 3})) == Rational(11));
  CHECK(elem_sym<Rational>(4, ints({1, 2, 3})) == Rational(0));
}

TEST_CASE("complete homogeneous examples") {
  CHECK(complete_sym<Rational>(0, ints({4, 5})) == Rational(1));
  CHECK(complete_sym<Rational>(0, std::vector<Rational>{}) == Rational(1));
  CHECK(complete_sym<Rational>(1, ints({7, 9})) == Rational(16));
  CHECK(complete_sym<Rational>(2, ints({1, 2})) == Rational(7));
  CHECK(complete_sym<Rational>(3, std::vector<Rational>{}) == Rational(0));
}

TEST_CASE("symmetric functions agree with subset and multiset enumeration") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> c(std::uniform_int_distribution<std::size_t>(0, 6)(rng));
    for (auto& v : c) v = Rational(std::uniform_int_distribution<long>(-9, 9)(rng), std::uniform_int_distribution<long>(1, 5)(rng));
    for (std::size_t k = 0; k <= 7; ++k) {
      CHECK(elem_sym<Rational>(k, c) == elem_by_subsets(k, c));
      if (k <= 4) CHECK(complete_sym<Rational>(k, c) == complete_by_multisets(k, c));
    }
  }
}

TEST_CASE("symmetric functions over kappa polynomials") {
  const std::vector<KappaPoly> vals{KappaPoly{Rational(1), Rational(1)}, KappaPoly(Rational(2))};
  CHECK(elem_sym<KappaPoly>(1, vals) == KappaPoly{Rational(3), Rational(1)});
  CHECK(elem_sym<KappaPoly>(2, vals) == KappaPoly{Rational(2), Rational(2)});
  // h_2(1+k, 2) = (1+k)^2 + 2(1+k) + 4
  CHECK(complete_sym<KappaPoly>(2, vals) == KappaPoly{Rational(7), Rational(4), Rational(1)});
  const Rational k0(3, 7);
  std::vector<Rational> at{vals[0].eval(k0), vals[1].eval(k0)};
  for (std::size_t k = 0; k <= 4; ++k) CHECK(complete_sym<KappaPoly>(k, vals).eval(k0) == complete_sym<Rational>(k, at));
}

TEST_CASE("pochhammer factorial binomial") {
  CHECK(pochhammer(Rational(5, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(3), 2) == Rational(12));
  CHECK(pochhammer(Rational(-2), 2) == Rational(2));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(10) == Rational(3628800));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(5, 0) == Rational(1));
  CHECK(binomial(2, 5) == Rational(0));
  CHECK(binomial(5, -1) == Rational(0));
  CHECK(binomial(-3, 2) == Rational(6));
  for (long n = 0; n <= 12; ++n)
    for (long k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}
