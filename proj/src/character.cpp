#include "ssc/reps.hpp"

namespace ssc::reps {

CharValue CharValue::times(const CharValue& o, int p) const {
  if (!nonzero || !o.nonzero) return zero();
  return {true, sign * o.sign, static_cast<std::uint32_t>((k + o.k) % static_cast<std::uint32_t>(p))};
}

cyclo::CyclotomicValue CharValue::value(int p) const {
  if (!nonzero) return cyclo::CyclotomicValue::zero(p);
  auto v = cyclo::CyclotomicValue::root(p, cyclo::Root{1, k});
  return sign > 0 ? v : -v;
}

AffineGenericCharacter::AffineGenericCharacter(const Field& F, const PAdicNumber& t1, const PAdicNumber& t2,
                                               const PAdicNumber& t3, int sign)
    : F_(F), t_{t1, t2, t3}, sign_(sign) {
  if (sign != 1 && sign != -1) throw BadParameter("sign must be +1 or -1");
  for (std::size_t k = 0; k < 3; ++k) {
    if (!t_[k].is_unit()) throw BadParameter("t" + std::to_string(k + 1) + " must be a unit");
    res_[k] = static_cast<std::uint32_t>(t_[k].residue(1));
  }
  gchi_ = gsp4::special::g_chi(F, t2 / t3);
  gchi_inv_ = gchi_.inverse();
}

AffineGenericCharacter AffineGenericCharacter::from_t(const Field& F, std::int64_t t, int sign) {
  return AffineGenericCharacter(F, F(1), F(1), F(t), sign);
}

CharValue AffineGenericCharacter::on_H(const GSp4Element& h) const {
  auto r = gsp4::h_residues(h);
  if (!r) throw NotInH(h.to_string());
  return from_residues(*r);
}

CharValue AffineGenericCharacter::from_residues(const gsp4::HResidues& r) const {
  const std::uint64_t p = static_cast<std::uint64_t>(F_.p);
  const std::uint64_t k =
      (res_[0] * std::uint64_t{r.r12} + res_[1] * std::uint64_t{r.r23} + res_[2] * std::uint64_t{r.r41}) % p;
  return {true, 1, static_cast<std::uint32_t>(k)};
}

CharValue AffineGenericCharacter::on_Hprime(const GSp4Element& g) const {
  switch (gsp4::member_Hprime(g, gchi_)) {
    case gsp4::HprimeBranch::InH:
      return on_H(g);
    case gsp4::HprimeBranch::InGchiH: {
      auto v = on_H(gchi_inv_ * g);
      v.sign *= sign_;
      return v;
    }
    case gsp4::HprimeBranch::Neither:
      break;
  }
  return CharValue::zero();
}

AffineGenericCharacter AffineGenericCharacter::orbit_act(const PAdicNumber& a, const PAdicNumber& b,
                                                         const PAdicNumber& c) const {
  if (!a.is_unit() || !b.is_unit() || !c.is_unit()) throw BadParameter("orbit action needs unit entries");
  return AffineGenericCharacter(F_, t_[0] * a / b, t_[1] * b * b / c, t_[2] * c / (a * a), sign_);
}

std::uint32_t AffineGenericCharacter::orbit_invariant() const {
  const std::uint64_t p = static_cast<std::uint64_t>(F_.p);
  return static_cast<std::uint32_t>(res_[0] * res_[0] % p * res_[1] % p * res_[2] % p);
}

GSp4Element AffineGenericCharacter::transporter(const AffineGenericCharacter& eta) const {
  if (orbit_invariant() != eta.orbit_invariant()) throw BadParameter("characters lie in different orbits");
  const auto& l1 = eta.t1();
  const auto& l2 = eta.t2();
  auto b = t_[0] / l1;
  auto c = t_[0] * t_[0] * t_[1] / (l1 * l1 * l2);
  return gsp4::special::torus(F_, F_.one(), b, c);
}

}  // namespace ssc::reps
