#include "doctest.h"

#include "properties.hpp"
#include "ssc/padic.hpp"

using namespace ssc;
using namespace ssc::padic;

TEST_CASE("addition examples") {
  Field F{3};
  CHECK((F(1) + F(-1)).is_zero());
  auto x = F.pi(1) + F(1);
  CHECK(x.valuation() == 0);
  CHECK(x.unit() == 4);
  auto y = F.frac(1, 3) + F.frac(2, 3);
  CHECK(y.valuation() == 0);
  CHECK(y.unit() == 1);
}

TEST_CASE("cancellation keeps the lower precision") {
  Field F{3, 6};
  auto x = F.pi(-2) * F(5);
  auto z = x - x;
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == 4);
  CHECK_THROWS_AS(z.inverse(), PrecisionExhausted);
  CHECK_THROWS_AS(z.in_ideal(5), PrecisionExhausted);
  CHECK(z.in_ideal(4));
}

TEST_CASE("products and inverses") {
  Field F{3};
  CHECK((F.pi(1) * F.pi(-1)) == F(1));
  auto two = F(2);
  auto inv = two.inverse();
  CHECK(inv.unit() % 3 == 2);
  CHECK((two * inv) == F(1));
  CHECK(inv.unit() == (power(3, 12) + 1) / 2);
  CHECK_THROWS_AS(F.zero().inverse(), DivisionByZero);
  CHECK((F.zero() * F.pi(-9)).is_exact_zero());
}

TEST_CASE("fractional parts") {
  Field F{3};
  CHECK(F(7).fractional_part() == PPowerFraction{});
  CHECK(F.pi(-1).fractional_part() == PPowerFraction{1, 1});
  CHECK(F.frac(5, 9).fractional_part() == PPowerFraction{5, 2});
  CHECK(F.frac(-1, 3).fractional_part() == PPowerFraction{2, 1});
  CHECK(F.frac(5, 9).fractional_part().to_rational(3) == Rational(5, 9));
  CHECK_THROWS_AS(PAdicNumber::zero(3, -1).fractional_part(), PrecisionExhausted);
}

TEST_CASE("residue enumeration") {
  auto r = enumerate_residues(3, 0, 1);
  REQUIRE(r.size() == 3);
  CHECK(r[0].is_zero());
  CHECK(r[2].to_rational() == 2);
  auto s = enumerate_residues(3, -1, 1);
  REQUIRE(s.size() == 9);
  for (int a = 0; a < 9; ++a) {
    Rational want(a, 3);
    want.canonicalize();
    CHECK(s[a].to_rational() == want);
  }
  CHECK(enumerate_residues(5, -2, 1).size() == 125);
  for (auto& x : s) CHECK(x.absolute_precision() == 1);
}

TEST_CASE("membership") {
  Field F{3};
  CHECK(F.pi(2).in_ideal(1));
  CHECK((F(1) + F.pi(1)).in_one_plus_p());
  CHECK_FALSE(F.pi(-1).in_ideal(0));
  CHECK(F(2).is_unit());
  CHECK_FALSE(F(2).in_one_plus_p());
  CHECK_FALSE(F(6).is_unit());
  CHECK(F(0).in_ideal(1000));
}

TEST_CASE("rational round trip") {
  Field F{5};
  auto x = PAdicNumber::from_rational(5, Rational(7, 250), 12);
  CHECK(x.valuation() == -3);
  CHECK((x * F(250)) == F(7));
}

TEST_CASE("ring laws against a rational oracle") {
  auto r = props::padic_ring_laws(20251017, 2000);
  CHECK(r.failures == 0);
  CHECK(r.cases == 2000);
}

TEST_CASE("residue cover property") {
  CHECK(props::residue_cover(3, -2, 2));
  CHECK(props::residue_cover(5, 0, 2));
}
