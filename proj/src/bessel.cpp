#include <algorithm>

#include "ssc/integrals.hpp"

namespace ssc::integrals {

namespace sp = gsp4::special;

namespace {

IntegrationOptions deep(IntegrationOptions opt) {
  opt.level = std::max(opt.level, 3);
  return opt;
}

Axis additive(int low) { return Axis{AxisKind::Additive, low, low + 1, false}; }

bool is_square_mod(std::int64_t x, int p) {
  x %= p;
  if (x < 0) x += p;
  for (std::int64_t y = 0; y < p; ++y)
    if (y * y % p == x) return true;
  return false;
}

Rational q_pow(int p, int k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(k)));
  Rational r = k >= 0 ? Rational(v) : Rational(1, v);
  r.canonicalize();
  return r;
}

}  // namespace

BesselSetup bessel_default(const Field& F, std::int64_t a, int m0, std::int64_t u0) {
  BesselSetup s;
  s.a = a;
  s.m0 = m0;
  s.u0 = u0;
  s.alpha = F.pi(1 - m0) * F(u0);
  s.beta = F.pi(1);
  validate(s, F);
  return s;
}

void validate(const BesselSetup& s, const Field& F) {
  const int p = F.p;
  if (s.a % p == 0 || is_square_mod(-s.a, p)) throw BadParameter("-a must be a non-square unit");
  if (s.u0 % p == 0) throw BadParameter("u0 must be a unit");
  if (s.m0 < 2) throw BadParameter("m0 must be at least 2");
  if (2 * s.m0 - 3 < F(s.a).valuation()) throw BadParameter("need 2 m0 - 3 >= v(a)");
}

cyclo::Root lambda_inverse_root(const BesselSetup& s, const PAdicNumber& Y) {
  if (!Y.in_ideal(s.m0 - 1)) throw UnsupportedVector("Lambda is only known on 1 + p^(m0-1) o_L");
  const int p = Y.prime();
  // Lambda(1 + Y sqrt(-a)) = psi(u0 Y / pi^m0)
  return cyclo::psi_root(-(PAdicNumber::from_integer(p, s.u0, padic::kDefaultPrecision) * Y).shifted(-s.m0));
}

GSp4Element bessel_twist_element(const Field& F, const BesselTwist& tw) {
  const auto z = F.zero();
  return gsp4::from_rows(F, {{{tw.lambda * tw.A1, z, z, z},
                              {z, tw.lambda * tw.A2, z, z},
                              {z, z, tw.A2.inverse(), z},
                              {z, z, z, tw.A1.inverse()}}});
}

IntegralResult bessel_integral(const Model& M, const BesselSetup& s, const BesselTwist& tw, const GSp4Element& k,
                               const IntegrationOptions& opt) {
  const Field& F = M.field();
  const int p = F.p;
  validate(s, F);
  const auto a = F(s.a);
  const auto sa = tw.lambda * tw.A1 * tw.A1 * a;  // S~ = diag(sa, sc)
  const auto sc = tw.lambda * tw.A2 * tw.A2;
  const auto scale = tw.lambda * tw.A1 * tw.A2;  // t~(y) corresponds to 1 + scale y sqrt(-a)
  const auto kinv = k.inverse();
  const auto z0 = F.zero(), one = F.one();
  // axes: y, u, w, z
  Integrand f = [&](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
    const auto& y = x[0];
    const auto t = gsp4::from_rows(
        F, {{{one, sc * y, z0, z0}, {-(sa * y), one, z0, z0}, {z0, z0, one, -(sc * y)}, {z0, z0, sa * y, one}}});
    const auto v = M.f_min(kinv * sp::n(F, x[1], x[2], x[3]) * t * k);
    if (!v.nonzero) return;
    auto r = cyclo::root_times(p, cyclo::Root{1, v.k}, lambda_inverse_root(s, scale * y));
    r = cyclo::root_times(p, r, cyclo::psi_root(-(sa * x[3] + sc * x[2])));
    acc.add(r, v.sign);
  };
  const int m0 = s.m0;
  LatticeBox box{p, {additive(m0 - 1), additive(m0 - 2), additive(-1), additive(2 * m0 - 3)}};
  auto r = scan_and_resolve(f, box, deep(opt));
  // transported torus measure |scale| dy / |1 + a (scale y)^2|; the second factor is 1 on the support
  r.value = r.value.scaled(scale.norm());
  return r;
}

IntegralResult bessel(const Model& M, const BesselSetup& s, const IntegrationOptions& opt) {
  const Field& F = M.field();
  BesselTwist id{F.one(), F.one(), F.one()};
  return bessel_integral(M, s, id, sp::d(F, s.alpha, s.beta).inverse(), opt);
}

Rational bessel_torus_volume(const Field& F, std::int64_t a, int resolution) {
  const int p = F.p;
  const auto A = F(a);
  IntegrationOptions opt;
  opt.exec = Exec::Serial;
  auto weight = [&](const PAdicNumber& w) { return cyclo::CyclotomicValue::rational(p, q_pow(p, w.valuation())); };
  // chart y in o: 1 + y sqrt(-a); chart Z in p: Z + sqrt(-a) with weight |Z^2 + a|^-1
  ValueIntegrand near = [&](std::span<const PAdicNumber> x) { return weight(F.one() + A * x[0] * x[0]); };
  ValueIntegrand far = [&](std::span<const PAdicNumber> x) { return weight(x[0] * x[0] + A); };
  LatticeBox o{p, {Axis{AxisKind::Additive, 0, resolution, false}}};
  LatticeBox pp{p, {Axis{AxisKind::Additive, 1, 1 + resolution, false}}};
  return (integrate(near, o, opt) + integrate(far, pp, opt)).to_rational();
}

CovarianceReport bessel_covariance_check(const Model& M, const BesselSetup& s, const BesselTwist& tw,
                                         const IntegrationOptions& opt) {
  const Field& F = M.field();
  CovarianceReport r;
  const auto dinv = sp::d(F, s.alpha, s.beta).inverse();
  const auto m = bessel_twist_element(F, tw);
  r.lhs = bessel(M, s, opt).value;
  // v = m^{-1} d^{-1} f_min, so that m v = d^{-1} f_min
  const auto twisted = bessel_integral(M, s, tw, m.inverse() * dinv, opt).value;
  const auto det = tw.lambda * tw.A1 * tw.A2;  // lambda det A
  const Rational n = det.norm();
  r.factor = n * n * n;
  r.rhs = twisted.scaled(r.factor);
  return r;
}

}  // namespace ssc::integrals
