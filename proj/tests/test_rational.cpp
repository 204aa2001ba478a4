#include <random>
#include <sstream>

#include "doctest.h"

#include "hooksph/errors.hpp"
#include "hooksph/kappa_poly.hpp"
#include "hooksph/rational.hpp"

using namespace hooksph;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

KappaPoly random_poly(std::mt19937_64& rng) {
  std::vector<Rational> c(std::uniform_int_distribution<std::size_t>(0, 4)(rng));
  for (auto& v : c) v = random_rational(rng);
  return KappaPoly(c);
}

}  // namespace

TEST_CASE("rational arithmetic examples") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  const Rational half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);
  const Rational zero = Rational(7, 6) - Rational(7, 6);
  CHECK(zero.is_zero());
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero.str() == "0");
}

TEST_CASE("rational canonical form") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(-10, -5).is_integer());
  CHECK(Rational(-10, -5).to_long() == 2);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK(Rational(-5, 2).sign() == -1);
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(inverse(Rational(0)), DivisionByZeroError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZeroError);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-4/8") == Rational(-1, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("rational parse/format round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r = random_rational(rng);
    CHECK(Rational::parse(r.str()) == r);
  }
  std::ostringstream os;
  os << Rational(-7, 21);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * inverse(a) == Rational(1));
  }
}

TEST_CASE("rational pow") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(-1), 5) == Rational(-1));
  CHECK(pow(Rational(0), 0) == Rational(1));
}

TEST_CASE("kappa polynomial examples") {
  const KappaPoly one_plus_k{Rational(1), Rational(1)};
  CHECK(one_plus_k * one_plus_k == KappaPoly{Rational(1), Rational(2), Rational(1)});
  CHECK(KappaPoly{Rational(1), Rational(2)}.eval(Rational(1, 2)) == Rational(2));
  const KappaPoly cancelled = one_plus_k + KappaPoly{Rational(-1), Rational(-1)};
  CHECK(cancelled.is_zero());
  CHECK(cancelled.coefficients().empty());
  CHECK(cancelled.degree() == -1);
}

TEST_CASE("kappa polynomial trimming and degree") {
  const KappaPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(p.coefficient(5) == Rational(0));
  CHECK(KappaPoly::kappa().degree() == 1);
  CHECK(scale(KappaPoly::kappa(), Rational(0)).is_zero());
  CHECK(KappaPoly{Rational(1), Rational(2), Rational(-1, 3)}.str() == "1 + 2*k - 1/3*k^2");
  CHECK(KappaPoly().str() == "0");
}

TEST_CASE("kappa polynomial degree is additive and eval is a homomorphism") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const KappaPoly p = random_poly(rng), q = random_poly(rng);
    const Rational x = random_rational(rng);
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
    CHECK(scale(p, x).eval(Rational(3)) == x * p.eval(Rational(3)));
  }
}

TEST_CASE("kappa polynomial ring axioms on random triples") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const KappaPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("kappa polynomial json round trip") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    const KappaPoly p = random_poly(rng);
    CHECK(KappaPoly::from_json(nlohmann::json::parse(p.to_json().dump())) == p);
  }
  CHECK(KappaPoly{Rational(1), Rational(2)}.to_json() == nlohmann::json::array({"1", "2"}));
}
