#include "ssc/gsp4.hpp"

#include <algorithm>

namespace ssc::gsp4 {

namespace {

using Bounds = std::array<int, 16>;

// Valuation lower bounds of the paramodular pattern K(n); (1,4) is p^-n.
Bounds paramodular_bounds(int n, bool klingen) {
  Bounds b{0, 0, 0, klingen ? 0 : -n,  //
           n, 0, 0, 0,                 //
           n, 0, 0, 0,                 //
           n, n, n, 0};
  return b;
}

bool within(const GSp4Element& g, const Bounds& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!g.at(i, j).in_ideal(b[static_cast<std::size_t>(4 * i + j)])) return false;
  return true;
}

bool in_Kprime(const GSp4Element& g) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto& x = g.at(i, j);
      if (i == j) {
        if (!x.in_one_plus_p()) return false;
      } else if (!x.in_ideal(i < j ? 0 : 1)) {
        return false;
      }
    }
  }
  return true;
}

bool in_Z(const GSp4Element& g) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i != j && !g.at(i, j).is_zero()) return false;
      if (i == j && !g.at(i, i).equals(g.at(0, 0))) return false;
    }
  return !g.at(0, 0).is_zero();
}

}  // namespace

bool member(const GSp4Element& g, const SubgroupTag& tag) {
  switch (tag.kind) {
    case Subgroup::K:
      return g.multiplier().is_unit() && within(g, Bounds{});
    case Subgroup::Kprime:
      return in_Kprime(g);
    case Subgroup::Klingen:
      return g.multiplier().is_unit() && within(g, paramodular_bounds(tag.level, true));
    case Subgroup::Paramodular:
      return g.multiplier().is_unit() && within(g, paramodular_bounds(tag.level, false));
    case Subgroup::ParamodularShifted5: {
      // d K(5) d^{-1} with d = diag(p^3, p^2, p, 1): entry (i,j) gains e_i - e_j
      auto b = paramodular_bounds(5, false);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b[static_cast<std::size_t>(4 * i + j)] += (3 - i) - (3 - j);
      return g.multiplier().is_unit() && within(g, b);
    }
    case Subgroup::Z:
      return in_Z(g);
    case Subgroup::H:
      return in_H(g);
    case Subgroup::E: {
      const auto& mu = g.multiplier();
      if (mu.is_zero()) throw PrecisionExhausted("multiplier indistinguishable from zero");
      return mu.valuation() % 2 == 0;
    }
  }
  return false;
}

std::optional<HResidues> h_residues(const GSp4Element& g) {
  const PAdicNumber& z = g.at(3, 3);
  if (z.is_zero()) {
    if (z.is_exact_zero()) return std::nullopt;
    // on H, v(g_44) = v(mu) / 2
    const auto& mu = g.multiplier();
    if (!mu.is_zero() && (mu.valuation() % 2 != 0 || mu.valuation() / 2 < z.absolute_precision()))
      return std::nullopt;
    throw PrecisionExhausted("g_44 indistinguishable from zero");
  }
  const int vz = z.valuation();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) {
        if (i == 3) continue;
        if (!(g.at(i, i) - z).in_ideal(vz + 1)) return std::nullopt;
      } else if (!g.at(i, j).in_ideal(vz + (i < j ? 0 : 1))) {
        return std::nullopt;
      }
    }
  }
  const PAdicNumber zi = z.inverse();
  HResidues r;
  r.z = z;
  r.r12 = static_cast<std::uint32_t>((g.at(0, 1) * zi).residue(1));
  r.r23 = static_cast<std::uint32_t>((g.at(1, 2) * zi).residue(1));
  r.r41 = static_cast<std::uint32_t>((g.at(3, 0) * zi).shifted(-1).residue(1));
  return r;
}

bool in_H(const GSp4Element& g) { return h_residues(g).has_value(); }

HDecomposition decompose_H(const GSp4Element& g) {
  if (!in_H(g)) throw NotInH(g.to_string());
  const PAdicNumber& z = g.at(3, 3);
  return {z, g.scaled(z.inverse())};
}

HprimeBranch member_Hprime(const GSp4Element& g, const GSp4Element& gchi) {
  const auto& mu = g.multiplier();
  if (mu.is_zero()) throw PrecisionExhausted("multiplier indistinguishable from zero");
  if (mu.valuation() % 2 == 0) return in_H(g) ? HprimeBranch::InH : HprimeBranch::Neither;
  return in_H(gchi.inverse() * g) ? HprimeBranch::InGchiH : HprimeBranch::Neither;
}

HprimeBranch member_Hprime_both(const GSp4Element& g, const GSp4Element& gchi) {
  bool a = in_H(g);
  bool b = in_H(gchi.inverse() * g);
  if (a && b) throw Error("element lies in both H and g_chi H");
  return a ? HprimeBranch::InH : b ? HprimeBranch::InGchiH : HprimeBranch::Neither;
}

// ---- samplers ----

namespace {

using special::Root;

PAdicNumber one_plus_p(const Field& F, Rng& rng) {
  return F.one() + padic::random_in_ideal(F.p, 1, F.precision, rng);
}

PAdicNumber in_ideal(const Field& F, int k, Rng& rng) { return padic::random_in_ideal(F.p, k, F.precision, rng); }

GSp4Element unit_torus(const Field& F, Rng& rng, bool principal) {
  auto pick = [&] { return principal ? one_plus_p(F, rng) : padic::random_unit(F.p, F.precision, rng); };
  return special::torus(F, pick(), pick(), pick());
}

// Product of a torus element and one random element of every root subgroup,
// in random order; depth[r] is the ideal exponent for root r.
GSp4Element root_product(const Field& F, Rng& rng, const std::array<int, 8>& depth, bool principal_torus) {
  std::array<Root, 8> roots{Root::A1,    Root::A2,    Root::A1A2,    Root::A2A1A1,
                            Root::NegA1, Root::NegA2, Root::NegA1A2, Root::NegA2A1A1};
  std::array<int, 8> order{0, 1, 2, 3, 4, 5, 6, 7};
  std::shuffle(order.begin(), order.end(), rng);
  GSp4Element g = unit_torus(F, rng, principal_torus);
  for (int k : order)
    g = g * special::root_element(F, roots[static_cast<std::size_t>(k)], in_ideal(F, depth[static_cast<std::size_t>(k)], rng));
  return g;
}

}  // namespace

GSp4Element random_Kprime(const Field& F, Rng& rng) {
  return root_product(F, rng, {0, 0, 0, 0, 1, 1, 1, 1}, true);
}

GSp4Element random_H(const Field& F, Rng& rng) {
  int k = std::uniform_int_distribution<int>(-3, 3)(rng);
  auto z = padic::random_unit(F.p, F.precision, rng).shifted(k);
  return random_Kprime(F, rng).scaled(z);
}

GSp4Element random_Hprime(const Field& F, const GSp4Element& gchi, Rng& rng) {
  auto h = random_H(F, rng);
  return std::uniform_int_distribution<int>(0, 1)(rng) ? gchi * h : h;
}

GSp4Element random_K(const Field& F, Rng& rng) {
  auto g = root_product(F, rng, {0, 0, 0, 0, 0, 0, 0, 0}, false);
  if (rng() & 1) g = g * special::s1(F);
  if (rng() & 1) g = special::s2(F) * g;
  return g;
}

GSp4Element random_klingen(const Field& F, int n, Rng& rng) {
  auto g = root_product(F, rng, {0, 0, 0, 0, n, 0, n, n}, false);
  if (rng() & 1) g = g * special::s2(F);
  return g;
}

GSp4Element random_paramodular(const Field& F, int n, Rng& rng) {
  for (;;) {
    auto g = root_product(F, rng, {0, 0, 0, -n, n, 0, n, n}, false);
    if (rng() & 1) g = g * special::s2(F);
    if (rng() & 1) g = special::t_n(F, n) * g;
    if (rng() & 1) g = g * root_product(F, rng, {0, 0, 0, -n, n, 0, n, n}, false);
    if (member(g, {Subgroup::Paramodular, n})) return g;
  }
}

GSp4Element random_unipotent(const Field& F, int vmin, Rng& rng) {
  return special::u(F, in_ideal(F, vmin, rng), in_ideal(F, vmin, rng), in_ideal(F, vmin, rng),
                    in_ideal(F, vmin, rng));
}

}  // namespace ssc::gsp4
