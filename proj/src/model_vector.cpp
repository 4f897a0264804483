#include "ssc/reps.hpp"

namespace ssc::reps {

namespace sp = gsp4::special;

namespace {

std::vector<GSp4Element> printed_expansion_terms(const Field& F) {
  const int p = F.p;
  const auto z = F.zero();
  const auto D = sp::torus(F, F.one(), F.pi(1), F.pi(3));
  const auto s2inv = sp::s2(F).inverse();
  const auto w3 = gsp4::from_rows(F, {{{z, z, z, -F.pi(-5)}, {z, z, F(-1), z}, {z, F(1), z, z}, {F.pi(5), z, z, z}}});
  const auto t5 = sp::t_n(F, 5);
  std::vector<GSp4Element> out;
  for (int family = 1; family <= 4; ++family) {
    const bool x_deep = family == 1 || family == 3;
    const bool y_deep = family <= 2;
    const std::int64_t xr = x_deep ? p * p : p;
    const std::int64_t yr = y_deep ? p * p : p;
    for (std::int64_t u = 1; u < p; ++u)
      for (std::int64_t v = 1; v < p; ++v) {
        const auto mD = sp::m(F, F(u), F(v)) * D;
        for (std::int64_t x = 0; x < xr; ++x) {
          const auto XmD = sp::X(F, x_deep ? F(x) : F(x) * F.pi(1)) * mD;
          for (std::int64_t y = 0; y < yr; ++y) {
            auto T = sp::Y(F, F(y) * F.pi(y_deep ? -5 : -4)) * XmD;
            switch (family) {
              case 1: T = s2inv * T; break;
              case 3: T = w3 * T; break;
              case 4: T = t5 * T; break;
              default: break;
            }
            out.push_back(T);
          }
        }
      }
  }
  return out;
}

}  // namespace

Model::Model(const AffineGenericCharacter& chi) : chi_(chi) {
  const Field& F = chi_.field();
  d_ = sp::d_pow(F, 1, 1);
  S_ = gsp4::representatives_S(F);
  S_inv_.reserve(S_.size());
  const auto dinv = d_.inverse();
  for (const auto& s : S_) {
    S_inv_.push_back(s.element.inverse());
    auto st = s.element * dinv;
    auto sti = st.inverse();
    shifted_[0].push_back(st);
    shifted_inv_[0].push_back(sti);
    shifted_[static_cast<std::size_t>(s.family)].push_back(st);
    shifted_inv_[static_cast<std::size_t>(s.family)].push_back(sti);
  }
  terms_ = printed_expansion_terms(F);
}

CharValue Model::f_min(const GSp4Element& g) const { return chi_.on_Hprime(g); }

CharValue Model::f_new(const GSp4Element& g) const {
  // every s has v(mu(s)) = 3, so the branch of g s^{-1} is fixed by g
  const auto& mu = g.multiplier();
  if (mu.is_zero()) throw PrecisionExhausted("multiplier indistinguishable from zero");
  const bool odd = ((mu.valuation() - 3) % 2) != 0;
  const GSp4Element x = odd ? chi_.gchi_inverse() * g : g;
  for (const auto& si : S_inv_) {
    const auto y = x * si;
    if (gsp4::in_H(y)) {
      auto v = chi_.on_H(y);
      if (odd) v.sign *= chi_.sign();
      return v;
    }
  }
  return CharValue::zero();
}

std::size_t Model::count_matches(const GSp4Element& g) const {
  std::size_t n = 0;
  for (const auto& si : S_inv_)
    if (gsp4::member_Hprime(g * si, chi_.gchi()) != gsp4::HprimeBranch::Neither) ++n;
  return n;
}

ModelVector Model::vector(VectorKind kind) const { return {kind, GSp4Element::identity(field())}; }

ModelVector Model::translate(const ModelVector& v, const GSp4Element& g) { return {v.kind, g * v.g0}; }

CharValue Model::eval(const ModelVector& v, const GSp4Element& g) const {
  const auto x = g * v.g0;
  switch (v.kind) {
    case VectorKind::Minimal: return f_min(x);
    case VectorKind::New: return f_new(x);
    case VectorKind::ShiftedNew: return f_shifted(x);
  }
  throw UnsupportedVector("unknown vector kind");
}

std::vector<GSp4Element> Model::support_representatives(const ModelVector& v) const {
  const auto g0inv = v.g0.inverse();
  std::vector<GSp4Element> out;
  switch (v.kind) {
    case VectorKind::Minimal:
      out.push_back(g0inv);
      break;
    case VectorKind::New:
      for (const auto& s : S_) out.push_back(s.element * g0inv);
      break;
    case VectorKind::ShiftedNew:
      for (const auto& s : shifted_[0]) out.push_back(s * g0inv);
      break;
  }
  return out;
}

cyclo::CyclotomicValue Model::inner_product(const ModelVector& v1, const ModelVector& v2) const {
  const int p = prime();
  cyclo::RootSum acc(p, 1);
  for (const auto& s : support_representatives(v1)) {
    const auto a = eval(v1, s);
    const auto b = eval(v2, s);
    if (!a.nonzero || !b.nonzero) continue;
    // a * conj(b)
    CharValue bc{true, b.sign, static_cast<std::uint32_t>((static_cast<std::uint32_t>(p) - b.k) % static_cast<std::uint32_t>(p))};
    a.times(bc, p).add_to(acc);
  }
  return acc.value();
}

cyclo::CyclotomicValue Model::expansion_value(const GSp4Element& g) const {
  cyclo::RootSum acc(prime(), 1);
  for (const auto& T : terms_) f_min(g * T).add_to(acc);
  return acc.value();
}

GSp4Element random_new_support(const Model& M, Rng& rng) {
  const Field& F = M.field();
  return gsp4::random_Hprime(F, M.character().gchi(), rng) * M.d() * gsp4::random_paramodular(F, 5, rng);
}

GSp4Element random_off_support(const Model& M, Rng& rng) {
  const Field& F = M.field();
  static constexpr std::array<std::array<int, 2>, 8> kPairs{
      {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 0}, {-1, 1}, {1, -1}}};
  const auto ij = kPairs[rng() % kPairs.size()];
  auto g = gsp4::random_Hprime(F, M.character().gchi(), rng) * sp::d_pow(F, ij[0], ij[1]);
  return g * ((rng() & 1) ? gsp4::random_paramodular(F, 5, rng) : gsp4::random_K(F, rng));
}

}  // namespace ssc::reps
