#include "doctest.h"

#include "hooksph/dunkl.hpp"
#include "hooksph/errors.hpp"
#include "hooksph/symfunc.hpp"

using namespace hooksph;

namespace {

std::vector<int> expanded(const DegreeProfile& p) { return p.expanded(); }

}  // namespace

TEST_CASE("monomial space") {
  const MonomialSpace s(3, 2);
  CHECK(s.dimension() == 6);
  CHECK(s.exponents(0) == std::vector<int>{2, 0, 0});
  for (std::size_t i = 0; i < s.dimension(); ++i) CHECK(s.index_of(s.exponents(i)) == i);
  CHECK_THROWS_AS(s.index_of({1, 0, 0}), std::out_of_range);
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) CHECK(Rational(static_cast<long>(MonomialSpace(n, d).dimension())) == binomial(d + n - 1, n - 1));
}

TEST_CASE("x_1 D_1 on linear polynomials in two variables") {
  const MonomialSpace s(2, 1);
  const std::size_t x1 = s.index_of({1, 0}), x2 = s.index_of({0, 1});
  const Rational k0(2, 7);
  const auto m = xdx_matrix(s, 0, k0);
  // columns are images: x_1 -> (1+k) x_1, x_2 -> -k x_1
  CHECK(m(x1, x1) == Rational(1) + k0);
  CHECK(m(x2, x1) == Rational(0));
  CHECK(m(x1, x2) == -k0);
  CHECK(m(x2, x2) == Rational(0));
  const auto p1 = pk_matrix(s, 1, k0);
  CHECK(p1.trace() == Rational(2) + Rational(2) * k0);
}

TEST_CASE("symmetric monomial is an eigenvector") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 2; ++d) {
      const MonomialSpace s(n, n * d);
      const std::size_t idx = s.index_of(std::vector<int>(static_cast<std::size_t>(n), d));
      std::vector<Rational> v(s.dimension());
      v[idx] = Rational(1);
      for (const Rational& k0 : {Rational(0), Rational(1, 3), Rational(-5, 2)}) {
        for (int i = 0; i < n; ++i) {
          const auto w = xdx_matrix(s, i, k0).apply(v);
          for (std::size_t r = 0; r < w.size(); ++r) CHECK(w[r] == (r == idx ? Rational(d) : Rational(0)));
        }
        for (int k = 1; k <= 3; ++k) {
          const auto w = pk_matrix(s, k, k0).apply(v);
          CHECK(w[idx] == Rational(n) * pow(Rational(d), static_cast<unsigned>(k)));
        }
      }
    }
}

TEST_CASE("euler operator at kappa = 0") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d) {
      const MonomialSpace s(n, d);
      for (int i = 0; i < n; ++i) {
        const auto m = xdx_matrix(s, i, Rational(0));
        CHECK(m.is_diagonal());
        for (std::size_t r = 0; r < s.dimension(); ++r) CHECK(m(r, r) == Rational(s.exponents(r)[static_cast<std::size_t>(i)]));
      }
      CHECK(pk_matrix(s, 1, Rational(0)).trace() == Rational(d) * Rational(static_cast<long>(s.dimension())));
    }
}

TEST_CASE("dunkl operators commute") {
  const MonomialSpace s(3, 3);
  const Rational k0(3, 5);
  const auto p1 = pk_matrix(s, 1, k0), p2 = pk_matrix(s, 2, k0), p3 = pk_matrix(s, 3, k0);
  CHECK(p1 * p2 == p2 * p1);
  CHECK(p2 * p3 == p3 * p2);
}

TEST_CASE("isotype projector") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      const MonomialSpace s(n, d);
      for (int b = 0; b < n; ++b) {
        const auto pi = isotype_projector(s, HookShape(n, b));
        CHECK(pi * pi == pi);
        for (int i = 0; i + 1 < n; ++i) {
          const auto r = permutation_matrix(s, Permutation::transposition(n, i, i + 1));
          CHECK(r * pi == pi * r);
        }
      }
    }
}

TEST_CASE("orbit projector commutes with the isotype projector and counts the multiplicity") {
  for (const char* text : {"1:1,0:1", "2:1,1:1,0:1", "1:2,0:2", "2:1,0:3", "3:1,1:2", "1:1,0:3"}) {
    const auto profile = DegreeProfile::parse(text);
    const int n = profile.n(), p = profile.block_count();
    const MonomialSpace s(n, profile.total_degree());
    const auto q = orbit_projector(s, expanded(profile));
    CHECK(q * q == q);
    for (int b = 0; b < n; ++b) {
      const HookShape shape(n, b);
      const auto pi = isotype_projector(s, shape);
      CHECK(q * pi == pi * q);
      const Rational mu = b <= p - 1 ? binomial(p - 1, b) : Rational(0);
      CHECK((q * pi * q).trace() == mu * hook_dimension(shape));
    }
  }
}

TEST_CASE("isotype trace examples") {
  for (const Rational& k0 : {Rational(0), Rational(1, 3), Rational(-4)})
    CHECK(isotype_trace(DegreeProfile::parse("1:3"), 0, 2, k0) == Rational(3));
  CHECK(isotype_trace(DegreeProfile::parse("1:1,0:1"), 1, 1, Rational(1, 3)) == Rational(5, 3));
  for (const Rational& k0 : {Rational(0), Rational(1, 3), Rational(9, 2)})
    CHECK(isotype_trace(DegreeProfile::parse("1:1,0:1"), 0, 1, k0) == Rational(1));
  CHECK_THROWS_AS(isotype_trace(DegreeProfile::parse("1:1,0:1"), 2, 1, Rational(1)), NoInvariantsError);
}

TEST_CASE("isotype trace agrees with the literal matrix product") {
  for (const char* text : {"1:1,0:1", "2:1,1:1,0:1", "1:2,0:1", "2:1,0:2", "1:1,0:3", "2:2"})
    for (int b = 0; b < DegreeProfile::parse(text).block_count(); ++b)
      for (int k = 1; k <= 3; ++k)
        for (const Rational& k0 : {Rational(1, 3), Rational(-2)})
          CHECK(isotype_trace(DegreeProfile::parse(text), b, k, k0) == isotype_trace_dense(DegreeProfile::parse(text), b, k, k0));
}
