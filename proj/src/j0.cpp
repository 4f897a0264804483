#include <algorithm>

#include "ssc/integrals.hpp"

namespace ssc::integrals {

namespace sp = gsp4::special;

namespace {

// psi(c1 a) with a in p^-2 already needs level 2; the scans can push one deeper
IntegrationOptions deep(IntegrationOptions opt) {
  opt.level = std::max(opt.level, 3);
  return opt;
}

Axis additive(int low, int resolution = 1) { return Axis{AxisKind::Additive, low, low + resolution, false}; }

}  // namespace

cyclo::Root psi_u_inverse(const PsiUnits& c, const PAdicNumber& a, const PAdicNumber& e) {
  const int p = a.prime();
  const auto c1 = PAdicNumber::from_integer(p, c.c1, padic::kDefaultPrecision);
  const auto c2 = PAdicNumber::from_integer(p, c.c2, padic::kDefaultPrecision);
  return cyclo::psi_root(-(c1 * a + c2 * e));
}

IntegralResult j0_minimal(const Model& M, const PAdicNumber& alpha, const PAdicNumber& beta,
                          const PAdicNumber& gamma, const PAdicNumber& delta, const PsiUnits& c,
                          const IntegrationOptions& opt) {
  const Field& F = M.field();
  const int p = F.p;
  const auto left = sp::d(F, gamma, delta).inverse();
  const auto right = sp::d(F, alpha, beta);
  Integrand f = [&](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
    const auto v = M.f_min(left * sp::u(F, x[0], x[1], x[2], x[3]) * right);
    if (!v.nonzero) return;
    acc.add(cyclo::root_times(p, cyclo::Root{1, v.k}, psi_u_inverse(c, x[0], x[3])), v.sign);
  };
  const int vg = gamma.valuation(), vd = delta.valuation();
  LatticeBox box{p, {additive(vg), additive(vg + vd), additive(2 * vg + vd), additive(vd)}};
  return scan_and_resolve(f, box, deep(opt));
}

IntegralResult j0_newvector_part(const Field& F, int family, const PAdicNumber& t, const PsiUnits& c,
                                 const IntegrationOptions& opt) {
  const int p = F.p;
  const auto lo = reps::family_box_lows(family);
  const auto c1 = F(c.c1), c2 = F(c.c2), pinv = F.pi(-1);
  Integrand f = [&, family](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
    // psi^{-1}(d^{-1} u d) = psi(-(c1 a + c2 e) / pi)
    const auto shift = -((c1 * x[0] + c2 * x[3]) * pinv);
    reps::matcoeff_family_add(family, x[0], x[1], x[2], x[3], t, shift, acc);
  };
  LatticeBox box{p, {}};
  for (int l : lo) box.axes.push_back(additive(l));
  return auto_resolve(f, box, deep(opt));
}

J0NewResult j0_newvector(const Field& F, const PAdicNumber& t, const PsiUnits& c, const IntegrationOptions& opt) {
  J0NewResult r;
  Rational sum = 0;
  for (int i = 0; i < 4; ++i) {
    r.parts[static_cast<std::size_t>(i)] = j0_newvector_part(F, i + 1, t, c, opt);
    sum += r.parts[static_cast<std::size_t>(i)].value.to_rational();
  }
  const long q = F.p;
  Rational norm(q * q * q * q * q, (q - 1) * (q - 1) * (q + 1) * (q + 1));
  norm.canonicalize();
  r.total = norm * sum;
  return r;
}

}  // namespace ssc::integrals
