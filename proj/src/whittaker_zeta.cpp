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

// U-box a in p^-1, b in p^-2, c in p^-3, e in p^-1, where f_min(d_{pi c1, pi c2} u ...) can live
std::vector<Axis> u_axes() { return {additive(-1), additive(-2), additive(-3), additive(-1)}; }

int legendre(std::uint64_t r, int p) {
  r %= static_cast<std::uint64_t>(p);
  if (r == 0) return 0;
  std::uint64_t acc = 1, base = r;
  for (int e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base % static_cast<std::uint64_t>(p);
    base = base * base % static_cast<std::uint64_t>(p);
  }
  return acc == 1 ? 1 : -1;
}

}  // namespace

int QuadraticCharacter::at(const PAdicNumber& x) const {
  if (x.is_zero()) throw DivisionByZero("character at zero");
  const int v = x.valuation();
  int s = (v % 2 != 0 && at_pi < 0) ? -1 : 1;
  if (ramified) s *= legendre(x.shifted(-v).residue(1), x.prime());
  return s;
}

IntegralResult whittaker(const Model& M, const GSp4Element& g0, const GSp4Element& g, const PsiUnits& c,
                         const IntegrationOptions& opt) {
  const Field& F = M.field();
  const int p = F.p;
  const auto left = sp::d(F, F.pi(1) * F(c.c1), F.pi(1) * F(c.c2));
  const auto right = g * g0;
  Integrand f = [&](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
    const auto v = M.f_min(left * sp::u(F, x[0], x[1], x[2], x[3]) * right);
    if (!v.nonzero) return;
    acc.add(cyclo::root_times(p, cyclo::Root{1, v.k}, psi_u_inverse(c, x[0], x[3])), v.sign);
  };
  return scan_and_resolve(f, LatticeBox{p, u_axes()}, deep(opt));
}

GSp4Element zeta_embedding(const Field& F, const PAdicNumber& gamma, const PAdicNumber& x) {
  const auto z = F.zero(), one = F.one();
  return gsp4::from_rows(F, {{{gamma, z, z, z}, {z, gamma, z, z}, {z, x, one, z}, {z, z, z, one}}});
}

ZetaResult novodvorsky_zeta(const Model& M, const PAdicNumber& alpha, const PAdicNumber& beta,
                            const QuadraticCharacter& chi, const PsiUnits& c, const IntegrationOptions& opt) {
  const Field& F = M.field();
  const int p = F.p;
  const auto left = sp::d(F, F.pi(1) * F(c.c1), F.pi(1) * F(c.c2));
  const auto right = sp::d(F, alpha, beta);
  // axes: gamma (one multiplicative shell), x, then a, b, c, e
  Integrand f = [&](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
    const auto g = left * sp::u(F, x[2], x[3], x[4], x[5]) * zeta_embedding(F, x[0], x[1]) * right;
    const auto v = M.f_min(g);
    if (!v.nonzero) return;
    acc.add(cyclo::root_times(p, cyclo::Root{1, v.k}, psi_u_inverse(c, x[2], x[5])), v.sign * chi.at(x[0]));
  };

  ZetaResult out{LaurentInQs(p), {}, 0, true};
  auto shell = [&](int v) {
    std::vector<Axis> axes{Axis{AxisKind::Multiplicative, v, v + 1, false}, additive(1 - beta.valuation())};
    for (const auto& a : u_axes()) axes.push_back(a);
    auto r = scan_and_resolve(f, LatticeBox{p, axes}, deep(opt));
    out.cells += r.cells;
    out.stable = out.stable && r.stable;
    if (!r.value.is_zero()) {
      // |gamma|^(s - 3/2) = q^(-v s + 3v/2)
      out.value.add(-v, 3 * v, r.value);
      out.shells.push_back(v);
    }
    return !r.value.is_zero();
  };
  // walk outward from v = -v(beta) until two consecutive shells vanish on each side
  const int centre = -beta.valuation();
  shell(centre);
  for (int dir : {-1, 1}) {
    int empty = 0;
    for (int v = centre + dir; empty < 2; v += dir) empty = shell(v) ? 0 : empty + 1;
  }
  std::sort(out.shells.begin(), out.shells.end());
  return out;
}

LaurentInQs zeta_expected(const Field& F, const PAdicNumber& alpha, const PAdicNumber& beta,
                          const QuadraticCharacter& chi, const PsiUnits& c) {
  LaurentInQs out(F.p);
  const auto target = F.pi(-1) / F(c.c1);
  if (!(alpha / target).in_one_plus_p()) return out;
  const int k = beta.valuation();
  // (1 - 1/q)^-1 q^(s + 7/2) q^(-k (1/2 - s)) chi(beta pi c2)^-1, with chi = chi^-1
  Rational coeff(F.p, F.p - 1);
  coeff *= chi.at(beta * F.pi(1) * F(c.c2));
  out.add(1 + k, 7 - k, cyclo::CyclotomicValue::rational(F.p, coeff));
  return out;
}

}  // namespace ssc::integrals
