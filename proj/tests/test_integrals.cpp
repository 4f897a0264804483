#include "doctest.h"

#include "properties.hpp"
#include "ssc/integrals.hpp"

using namespace ssc;
using namespace ssc::integrals;
namespace sp = gsp4::special;

namespace {

Rational qpow(int q, int k) {
  Rational r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= q;
  return k >= 0 ? r : 1 / r;
}

cyclo::CyclotomicValue rat(int p, const Rational& r) { return cyclo::CyclotomicValue::rational(p, r); }

Axis add_axis(int low, int high) { return Axis{AxisKind::Additive, low, high, false}; }

}  // namespace

TEST_CASE("lattice integration basics") {
  const int p = 3;
  Integrand one = [](std::span<const PAdicNumber>, cyclo::RootSum& acc) { acc.add_integer(1); };
  CHECK(integrate(one, LatticeBox{p, {add_axis(0, 2)}}).to_rational() == 1);
  CHECK(integrate(one, LatticeBox{p, {Axis{AxisKind::Multiplicative, 0, 1, false}}}).to_rational() == 1);
  CHECK(integrate(one, LatticeBox{p, {Axis{AxisKind::Multiplicative, 4, 2 + 4, false}}}).to_rational() == 1);
  CHECK(integrate(one, LatticeBox{p, {add_axis(-2, 0)}}).to_rational() == 9);

  Field F{p};
  const auto pinv = F.pi(-1), pinv2 = F.pi(-2);
  Integrand psi1 = [&](std::span<const PAdicNumber> x, cyclo::RootSum& acc) { acc.add(cyclo::psi_root(x[0] * pinv)); };
  Integrand psi2 = [&](std::span<const PAdicNumber> x, cyclo::RootSum& acc) { acc.add(cyclo::psi_root(x[0] * pinv2)); };
  CHECK(integrate(psi1, LatticeBox{p, {add_axis(0, 1)}}).is_zero());
  CHECK(refinement_check(psi1, LatticeBox{p, {add_axis(0, 1)}}, RefineMode::Joint).stable);
  CHECK_FALSE(refinement_check(psi2, LatticeBox{p, {add_axis(0, 1)}}, RefineMode::Joint).stable);

  auto r = auto_resolve(psi2, LatticeBox{p, {add_axis(0, 1)}}, {});
  CHECK(r.stable);
  CHECK(r.box.axes[0].high == 2);
  CHECK(r.value.is_zero());
  CHECK_THROWS_AS(auto_resolve(psi2, LatticeBox{p, {add_axis(0, 1)}}, {}, 1), PrecisionExhausted);
}

TEST_CASE("support scan grows to the true support") {
  const int p = 3;
  // indicator of p^-2 o
  Integrand f = [](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
    if (x[0].in_ideal(-2)) acc.add_integer(1);
  };
  IntegrationOptions opt;
  auto scan = locate_support(f, LatticeBox{p, {add_axis(0, 1)}}, opt);
  CHECK(scan.box.axes[0].low == -2);
  auto r = scan_and_resolve(f, LatticeBox{p, {add_axis(0, 1)}}, opt);
  CHECK(r.value.to_rational() == 9);
  opt.max_cells = 10;
  Integrand everywhere = [](std::span<const PAdicNumber>, cyclo::RootSum& acc) { acc.add_integer(1); };
  CHECK_THROWS_AS(locate_support(everywhere, LatticeBox{p, {add_axis(0, 1)}}, opt), SupportNotLocated);
}

TEST_CASE("refinement gate property suite") {
  auto o = props::refinement_gates(77, 400);
  CHECK(o.failures == 0);
  INFO(o.first_failure);
}

TEST_CASE("Laurent sums in q^s") {
  const int p = 3;
  LaurentInQs a(p), b(p);
  a.add(1, 7, rat(p, 1));  // q^(s + 7/2)
  b.add(1, 1, rat(p, 27)); // 27 q^(s + 1/2)
  CHECK(a == b);
  CHECK(a.s_exponents() == std::vector<int>{1});
  a.add(1, 3, rat(p, -3));  // -3 q^(s + 3/2) = -9 q^(s + 1/2)
  CHECK(a.terms().begin()->second.to_rational() == 18);
  LaurentInQs c(p);
  c.add(0, -2, rat(p, 9));  // 9 q^-1 = 3
  c.add(0, 0, rat(p, -3));
  CHECK(c.is_zero());
  auto d = b + b;
  CHECK(d == b.scaled(2));
  LaurentInQs e(p);
  e.add(2, 0, rat(p, 1));
  CHECK_FALSE(e == b);
  CHECK((e + b).s_exponents() == std::vector<int>{1, 2});
}

TEST_CASE("J0 of minimal-vector translates") {
  Field F{3};
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 1));
  PsiUnits c;
  const auto g = F.pi(-1) / F(c.c1), d = F.pi(-1) / F(c.c2);
  auto r = j0_minimal(M, g, d, g, d, c);
  CHECK(r.stable);
  CHECK(r.value.to_rational() == qpow(3, 7));
  // gamma a unit
  CHECK(j0_minimal(M, F(-1), d, F(-1), d, c).value.is_zero());
  // alpha / gamma outside 1 + p
  CHECK(j0_minimal(M, g * F(2), d, g, d, c).value.is_zero());
  // delta outside pi^-1 c2^-1 (1 + p)
  CHECK(j0_minimal(M, g, d * F(2), g, d * F(2), c).value.is_zero());
  // alpha/gamma and beta/delta in 1 + p with nontrivial ratio
  CHECK(j0_minimal(M, g * F(4), d * F(7), g, d, c).value.to_rational() == qpow(3, 7));
}

TEST_CASE("J0 pairing is Hermitian on samples") {
  Field F{3};
  Rng rng(31);
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 2));
  PsiUnits c{1, -1};
  const auto g = F.pi(-1) / F(c.c1), d = F.pi(-1) / F(c.c2);
  for (int k = 0; k < 4; ++k) {
    auto near = [&](const PAdicNumber& x) {
      return x * (F.one() + padic::random_in_ideal(3, (k % 2) ? 0 : 1, F.precision, rng));
    };
    const auto a = near(g), b = near(d), gg = near(g), dd = near(d);
    auto v12 = j0_minimal(M, a, b, gg, dd, c).value;
    auto v21 = j0_minimal(M, gg, dd, a, b, c).value;
    CHECK(v12 == v21.conjugate());
  }
}

TEST_CASE("J0 of the newvector, family by family") {
  Field F{3};
  PsiUnits c;
  auto r = j0_newvector(F, F(1), c);
  CHECK(r.parts[0].value.is_zero());
  CHECK(r.parts[1].value.to_rational() == 81);
  CHECK(r.parts[2].value.is_zero());
  CHECK(r.parts[3].value.is_zero());
  for (const auto& part : r.parts) CHECK(part.stable);
  CHECK(r.total == Rational(19683, 64));
}

TEST_CASE("Whittaker function of the minimal vector") {
  Field F{3};
  Rng rng(32);
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 1, -1));
  PsiUnits c;
  const auto al = F.pi(-1) / F(c.c1), be = F.pi(-1) / F(c.c2);
  const auto one = GSp4Element::identity(F);
  const auto g = sp::d(F, al, be);
  auto w = whittaker(M, one, g, c);
  CHECK(w.value.to_rational() == qpow(3, 7));
  // W_{d f}(1) = W_f(d)
  CHECK(whittaker(M, g, one, c).value.to_rational() == qpow(3, 7));
  CHECK(whittaker(M, one, sp::d(F, F(2), be), c).value.is_zero());
  for (int k = 0; k < 3; ++k) {
    const auto a = padic::random_in_ideal(3, -1, F.precision, rng), e = padic::random_in_ideal(3, -1, F.precision, rng);
    const auto b = padic::random_in_ideal(3, -1, F.precision, rng), cc = padic::random_in_ideal(3, -1, F.precision, rng);
    auto lhs = whittaker(M, one, sp::u(F, a, b, cc, e) * g, c).value;
    auto rhs = cyclo::psi(F(c.c1) * a + F(c.c2) * e) * w.value;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quadratic characters and the zeta closed form") {
  Field F{3};
  QuadraticCharacter triv, leg{true, 1}, odd{false, -1};
  CHECK(triv.at(F(2) * F.pi(3)) == 1);
  CHECK(leg.at(F(2)) == -1);
  CHECK(leg.at(F(4) * F.pi(1)) == 1);
  CHECK(odd.at(F.pi(-1)) == -1);
  CHECK_THROWS_AS(leg.at(F.zero()), DivisionByZero);
  PsiUnits c;
  const auto al = F.pi(-1) / F(c.c1);
  auto e = zeta_expected(F, al, F(1), triv, c);
  // (1 - 1/3)^-1 3^(7/2) q^s = (81/2) q^(s + 1/2)
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first == std::make_pair(1, 1));
  CHECK(e.terms().begin()->second.to_rational() == Rational(81, 2));
  CHECK(zeta_expected(F, F(2), F(1), triv, c).is_zero());
}

TEST_CASE("Novodvorsky zeta integral of a minimal-vector translate") {
  Field F{3};
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 1));
  PsiUnits c;
  const auto al = F.pi(-1) / F(c.c1);
  QuadraticCharacter triv;
  auto z = novodvorsky_zeta(M, al, F(1), triv, c);
  CHECK(z.stable);
  CHECK(z.value == zeta_expected(F, al, F(1), triv, c));
  CHECK(z.value.s_exponents().size() == 1);
  CHECK(z.shells == std::vector<int>{-1});
}

TEST_CASE("Bessel integral of minimal-vector translates") {
  Field F{3};
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 1));
  auto s2 = bessel_default(F, 1, 2);
  auto b2 = bessel(M, s2);
  CHECK(b2.stable);
  CHECK(b2.value.to_rational() == qpow(3, 7 - 8));
  CHECK(bessel(M, bessel_default(F, 1, 3)).value.to_rational() == qpow(3, 7 - 12));
  // alpha outside pi^(1-m0) u0 (1 + p)
  auto off = s2;
  off.alpha = F.pi(-1) * F(2);
  CHECK(bessel(M, off).value.is_zero());
  CHECK_THROWS_AS(bessel_default(F, 2, 2), BadParameter);  // -2 is a square mod 3
  CHECK_THROWS_AS(bessel_default(F, 1, 1), BadParameter);
  CHECK_THROWS_AS(lambda_inverse_root(s2, F(1)), UnsupportedVector);
}

TEST_CASE("Lambda germ is multiplicative") {
  Rng rng(33);
  for (int p : {3, 5}) {
    Field F{p};
    for (int m0 : {2, 3}) {
      BesselSetup s;
      s.a = p == 3 ? 1 : 2;
      s.m0 = m0;
      s.u0 = 2;
      const auto a = F(s.a);
      for (int k = 0; k < 50; ++k) {
        const auto y1 = padic::random_in_ideal(p, m0 - 1, F.precision, rng);
        const auto y2 = padic::random_in_ideal(p, m0 - 1, F.precision, rng);
        // (1 + y1 r)(1 + y2 r) = (1 - a y1 y2)(1 + Y r) with r = sqrt(-a)
        const auto Y = (y1 + y2) / (F.one() - a * y1 * y2);
        const auto prod = cyclo::root_times(p, lambda_inverse_root(s, y1), lambda_inverse_root(s, y2));
        const auto at = lambda_inverse_root(s, Y);
        CHECK(cyclo::CyclotomicValue::root(p, prod) == cyclo::CyclotomicValue::root(p, at));
      }
    }
  }
}

TEST_CASE("torus volume") {
  CHECK(bessel_torus_volume(Field{3}, 1) == Rational(4, 3));
  CHECK(bessel_torus_volume(Field{5}, 2) == Rational(6, 5));
  CHECK(bessel_torus_volume(Field{7}, 1, 1) == Rational(8, 7));
}

TEST_CASE("Bessel covariance under (lambda, A)") {
  Field F{3};
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 1));
  auto s = bessel_default(F, 1, 2);
  auto id = bessel_covariance_check(M, s, BesselTwist{F.one(), F.one(), F.one()});
  CHECK(id.ok());
  CHECK(id.factor == 1);
  auto scaled = bessel_covariance_check(M, s, BesselTwist{F.pi(1), F.one(), F.one()});
  CHECK(scaled.factor == Rational(1, 27));
  CHECK(scaled.ok());
  CHECK(scaled.lhs.to_rational() == Rational(1, 3));
  auto unit = bessel_covariance_check(M, s, BesselTwist{F.one(), F.one(), F(2)});
  CHECK(unit.factor == 1);
  CHECK(unit.ok());
}

TEST_CASE("formal degree") {
  auto r = formal_degree_check(3);
  CHECK(r.index == 640);
  CHECK(r.index == (81 - 1) * (9 - 1));
  CHECK(r.volume == Rational(1, 320));
  CHECK(r.degree == 320);
  CHECK_THROWS_AS(formal_degree_check(11), BadParameter);
}
