#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "hooksph/hook_character.hpp"
#include "hooksph/invariant_oracle.hpp"
#include "hooksph/symfunc.hpp"

using namespace hooksph;

namespace {

Permutation representative(const CycleType& ct) {
  std::vector<int> images;
  int start = 0;
  for (int len : ct.parts()) {
    for (int i = 0; i < len; ++i) images.push_back(start + (i + 1) % len);
    start += len;
  }
  return Permutation(images);
}

// Number of standard Young tableaux of a shape by removing corners.
long count_syt(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += count_syt(smaller);
  }
  return total;
}

}  // namespace

TEST_CASE("hook character examples") {
  CHECK(hook_character(HookShape(4, 1), CycleType({4})) == Rational(-1));
  CHECK(hook_character(HookShape(4, 1), CycleType({1, 1, 1, 1})) == Rational(3));
  for (int b = 0; b <= 5; ++b)
    for (int ell = 1; ell <= b + 1; ++ell) {
      std::vector<int> ct{ell};
      ct.insert(ct.end(), static_cast<std::size_t>(b + 1 - ell), 1);
      CHECK(hook_character(HookShape(b + 1, b), CycleType(ct)) == Rational(ell % 2 == 1 ? 1 : -1));
    }
  CHECK_THROWS_AS(hook_character(HookShape(4, 1), CycleType({3})), std::invalid_argument);
  CHECK_THROWS_AS(HookShape(3, 3), std::invalid_argument);
}

TEST_CASE("hook dimension") {
  for (int n = 1; n <= 8; ++n) CHECK(hook_dimension(HookShape(n, 0)) == Rational(1));
  for (int b = 0; b <= 6; ++b) CHECK(hook_dimension(HookShape(b + 1, b)) == Rational(1));
  CHECK(hook_dimension(HookShape(4, 1)) == Rational(3));
  for (int n = 1; n <= 8; ++n)
    for (int b = 0; b < n; ++b) {
      const HookShape shape(n, b);
      CHECK(hook_dimension(shape) == Rational(count_syt(shape.partition())));
      CHECK(hook_character(shape, CycleType(std::vector<int>(static_cast<std::size_t>(n), 1))) == hook_dimension(shape));
    }
}

TEST_CASE("murnaghan-nakayama on non-hook shapes") {
  // S_3 standard and S_4 (2,2)
  CHECK(mn_character({2, 1}, CycleType({3})) == -1);
  CHECK(mn_character({2, 2}, CycleType({2, 2})) == 2);
  CHECK(mn_character({2, 2}, CycleType({3, 1})) == -1);
  CHECK(mn_character({2, 2}, CycleType({4})) == 0);
  CHECK(mn_character({3, 2}, CycleType({1, 1, 1, 1, 1})) == 5);
}

TEST_CASE("column orthogonality for hook characters") {
  for (int n = 1; n <= 6; ++n)
    for (int b = 0; b < n; ++b) {
      const HookShape shape(n, b);
      Rational sum(0);
      for (const auto& ct : partitions_of(n)) {
        const Rational chi = hook_character(shape, ct);
        sum += Rational(static_cast<long>(ct.class_size())) * chi * chi;
      }
      CHECK(sum == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("murnaghan-nakayama agrees with the alternating-polynomial representation") {
  for (int n = 1; n <= 6; ++n)
    for (int b = 0; b < n; ++b) {
      const HookShape shape(n, b);
      for (const auto& ct : partitions_of(n))
        CHECK(character_via_alternating(shape, representative(ct)) == hook_character(shape, ct));
    }
}

TEST_CASE("character table lookup") {
  const HookCharacterTable table(HookShape(5, 2));
  for (const auto& ct : partitions_of(5)) CHECK(Rational(table(ct)) == hook_character(HookShape(5, 2), ct));
  CHECK(table.at(Permutation::identity(5)) == 6);
}

TEST_CASE("brute-force spherical examples") {
  const BlockStructure blocks({2, 1});
  CHECK(spherical_bruteforce(HookShape(3, 1), blocks, Permutation::transposition(3, 0, 2)) == Rational(-1, 2));
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 1}, {2, 2, 1}, {1, 3, 1, 1}, {2, 2, 2}}) {
    const BlockStructure bs(sizes);
    const int p = bs.block_count();
    for (int b = 0; b <= p - 1; ++b) {
      const int m = p - b - 1;
      CHECK(spherical_bruteforce(HookShape(bs.total(), b), bs, Permutation::identity(bs.total())) == binomial(b + m, b));
    }
    CHECK(spherical_bruteforce(HookShape(bs.total(), 0), bs, Permutation::transposition(bs.total(), 0, bs.total() - 1)) ==
          Rational(1));
  }
}

TEST_CASE("brute-force spherical value is bi-invariant") {
  const BlockStructure blocks({2, 2, 1});
  const HookShape shape(5, 1);
  const Permutation g = Permutation::parse_cycles("(1 3 5)", 5);
  const Rational base = spherical_bruteforce(shape, blocks, g);
  for (const auto& h1 : YoungSubgroup(blocks))
    for (const auto& h2 : YoungSubgroup(blocks)) CHECK(spherical_bruteforce(shape, blocks, compose(compose(h1, g), h2)) == base);
}
