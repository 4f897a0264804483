#include <algorithm>

#include "ssc/reps.hpp"

namespace ssc::reps {

namespace sp = gsp4::special;

HeckeSums hecke_T01(const Model& M) {
  const Field& F = M.field();
  const int p = F.p;
  const auto& d = M.d();
  const auto d1p = sp::d(F, F.one(), F.pi(1));   // diag(pi, pi, 1, 1)
  const auto dpp = sp::d(F, F.pi(1), F.pi(-1));  // diag(pi, 1, pi, 1)
  const auto t5 = sp::t5_hecke(F);
  const auto dt5 = d * t5;
  HeckeSums h;
  cyclo::RootSum A(p, 1), B(p, 1), C(p, 1), D(p, 1);
  for (std::int64_t x = 0; x < p; ++x) {
    const auto X = F(x);
    const auto a1 = sp::root_element(F, sp::Root::A1, X);
    for (std::int64_t y = 0; y < p; ++y) {
      for (std::int64_t z = 0; z < p; ++z) {
        M.f_new(d * sp::n(F, F(y), X, F(z) * F.pi(-5)) * d1p).add_to(A);
        ++h.terms;
      }
      M.f_new(dt5 * sp::n(F, F(y), X, F.zero()) * d1p).add_to(C);
      ++h.terms;
    }
    for (std::int64_t z = 0; z < p; ++z) {
      M.f_new(d * a1 * sp::Y(F, F(z) * F.pi(-5)) * dpp).add_to(B);
      ++h.terms;
    }
    M.f_new(dt5 * a1 * dpp).add_to(D);
    ++h.terms;
  }
  h.A = A.value();
  h.B = B.value();
  h.C = C.value();
  h.D = D.value();
  return h;
}

CheckReport atkin_lehner_check(const Model& M, const std::vector<GSp4Element>& points) {
  const int p = M.prime();
  const auto u5 = sp::u_n(M.field(), 5);
  const int eps = M.character().sign();
  CheckReport r;
  for (const auto& g : points) {
    ++r.points;
    const auto lhs = M.f_new(g * u5).value(p);
    const auto f = M.f_new(g);
    if (f.nonzero) ++r.hits;
    const auto rhs = eps > 0 ? f.value(p) : -f.value(p);
    if (!(lhs == rhs)) {
      ++r.mismatches;
      if (r.notes.size() < 5) r.notes.push_back("f(g u5) = " + lhs.to_string() + ", eps f(g) = " + rhs.to_string());
    }
  }
  return r;
}

CheckReport involution_check(const Model& M, const ModelVector& v, const std::vector<GSp4Element>& points,
                             Rng& rng) {
  const int p = M.prime();
  const auto& chi = M.character();
  const auto gchi2inv = (chi.gchi() * chi.gchi()).inverse();
  CheckReport r;
  for (const auto& g : points) {
    ++r.points;
    const auto fg = M.eval(v, g);
    if (fg.nonzero) ++r.hits;
    const auto sq = M.eval(v, gchi2inv * g);
    // (sign)^2 = 1
    if (!(sq.value(p) == fg.value(p))) {
      ++r.mismatches;
      if (r.notes.size() < 5) r.notes.push_back("f(g_chi^-2 g) != f(g)");
    }
    const auto h = gsp4::random_Hprime(M.field(), chi.gchi(), rng);
    const auto lhs = M.eval(v, h * g).value(p);
    const auto rhs = chi.on_Hprime(h).times(fg, p).value(p);
    if (!(lhs == rhs)) {
      ++r.mismatches;
      if (r.notes.size() < 5) r.notes.push_back("f(h g) != chi(h) f(g)");
    }
  }
  return r;
}

CheckReport newvector_expansion_check(const Model& M, const std::vector<GSp4Element>& points) {
  const int p = M.prime();
  CheckReport r;
  for (const auto& g : points) {
    ++r.points;
    const auto f = M.f_new(g);
    if (f.nonzero) ++r.hits;
    const auto lhs = f.value(p);
    const auto rhs = M.expansion_value(g);
    if (!(lhs == rhs)) {
      ++r.mismatches;
      if (r.notes.size() < 5) r.notes.push_back("f_new = " + lhs.to_string() + ", expansion = " + rhs.to_string());
    }
  }
  return r;
}

std::int64_t dim_Astar(int n) {
  std::int64_t count = 0;
  for (int i = 1; 2 * i + 1 <= n - 2; ++i)
    for (int j = 1; 2 * i + j <= n - 2; ++j) ++count;
  return count;
}

std::int64_t dim_Astar_formula(int n) {
  if (n <= 4) return 0;
  return static_cast<std::int64_t>((n - 3) * (n - 3) / 4);
}

bool support_pair_admissible(int i, int j, int n) { return i >= 1 && j >= 1 && 2 * i + j <= n - 2; }

SupportCriterionReport support_criterion_check(const AffineGenericCharacter& chi, int i, int j, int n,
                                               std::size_t trials, Rng& rng) {
  const Field& F = chi.field();
  const auto g = sp::d_pow(F, i, j);
  const auto ginv = g.inverse();
  // exponents of d_{pi^i, pi^j}
  const std::array<int, 4> e{2 * i + j, i + j, i, 0};
  auto k_bound = [&](int a, int b) {
    if (a == 0 && b == 3) return -n;
    if (b == 0 && a > 0) return n;
    if (a == 3 && b < 3) return n;
    return 0;
  };
  auto h_bound = [&](int a, int b) { return a > b ? 1 : 0; };
  using P = std::pair<int, int>;
  const std::array<std::pair<sp::Root, std::vector<P>>, 8> roots{{
      {sp::Root::A1, {{0, 1}, {2, 3}}},
      {sp::Root::A2, {{1, 2}}},
      {sp::Root::A1A2, {{0, 2}, {1, 3}}},
      {sp::Root::A2A1A1, {{0, 3}}},
      {sp::Root::NegA1, {{1, 0}, {3, 2}}},
      {sp::Root::NegA2, {{2, 1}}},
      {sp::Root::NegA1A2, {{2, 0}, {3, 1}}},
      {sp::Root::NegA2A1A1, {{3, 0}}},
  }};
  // shallowest depth keeping the root inside K(n) and its d-conjugate inside K'
  std::array<int, 8> depth{};
  for (std::size_t r = 0; r < roots.size(); ++r) {
    int dmax = -1000;
    for (auto [a, b] : roots[r].second) dmax = std::max({dmax, k_bound(a, b), h_bound(a, b) - (e[static_cast<std::size_t>(a)] - e[static_cast<std::size_t>(b)])});
    depth[r] = dmax;
  }

  SupportCriterionReport rep;
  rep.admissible = support_pair_admissible(i, j, n);
  for (std::size_t t = 0; t < trials; ++t) {
    GSp4Element k;
    if (t % 2 == 0) {
      std::array<std::size_t, 8> order{0, 1, 2, 3, 4, 5, 6, 7};
      std::shuffle(order.begin(), order.end(), rng);
      k = sp::torus(F, F.one() + padic::random_in_ideal(F.p, 1, F.precision, rng),
                    F.one() + padic::random_in_ideal(F.p, 1, F.precision, rng),
                    F.one() + padic::random_in_ideal(F.p, 1, F.precision, rng));
      for (auto r : order)
        k = k * sp::root_element(F, roots[r].first, padic::random_in_ideal(F.p, depth[r], F.precision, rng));
    } else {
      k = gsp4::random_paramodular(F, n, rng);
    }
    ++rep.trials;
    if (!gsp4::member(k, {gsp4::Subgroup::Paramodular, n})) continue;
    const auto x = g * k * ginv;
    auto res = gsp4::h_residues(x);
    if (!res) continue;
    ++rep.in_H;
    if (chi.from_residues(*res).k != 0) ++rep.nontrivial;
  }
  return rep;
}

}  // namespace ssc::reps
