#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "ssc/cli.hpp"
#include "ssc/errors.hpp"
#include "ssc/integrals.hpp"

namespace ssc::cli {

using integrals::PsiUnits;
using padic::Field;
using padic::PAdicNumber;
using reps::AffineGenericCharacter;
using reps::GSp4Element;
using reps::Model;
namespace sp = gsp4::special;

namespace {

std::string str(const Rational& r) { return r.get_str(); }
std::string str(std::uint64_t n) { return std::to_string(n); }

Rational qpow(int q, int k) {
  Rational r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= q;
  return k >= 0 ? r : 1 / r;
}

std::string value_str(const cyclo::CyclotomicValue& v) {
  return v.is_rational() ? v.to_rational().get_str() : v.to_string();
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& x : parts) s += (s.empty() ? "" : ";") + x;
  return s;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Ctx {
  const RunConfig& cfg;
  Field F;
  PsiUnits c;
  Rng rng;
  CheckReport& r;

  Model model(int sign) const { return Model(AffineGenericCharacter::from_t(F, cfg.t, sign)); }
  Model model() const { return model(cfg.sign); }
  integrals::IntegrationOptions opt() const {
    integrals::IntegrationOptions o;
    o.precision = cfg.precision;
    return o;
  }
  void param(const std::string& k, const std::string& v) { r.params.emplace_back(k, v); }
};

// Fraction of agreeing items as "ok/n".
std::string tally(std::size_t bad, std::size_t n) { return std::to_string(n - bad) + "/" + std::to_string(n); }

void check_cosets(Ctx& x) {
  const int q = x.F.q();
  Model M = x.model();
  const auto& S = M.representatives();
  std::vector<GSp4Element> reps;
  for (const auto& s : S) reps.push_back(s.element);
  const auto& gchi = M.character().gchi();
  const auto d = M.d();
  const Field F = x.F;
  gsp4::Sampler amb = [&](Rng& r) {
    return gsp4::random_Hprime(F, gchi, r) * d * gsp4::random_paramodular(F, 5, r);
  };
  gsp4::ElementTest in = [&](const GSp4Element& g) {
    return gsp4::member_Hprime(g, gchi) != gsp4::HprimeBranch::Neither;
  };
  auto rep = gsp4::verify_coset_partition(reps, amb, static_cast<std::size_t>(x.cfg.trials), in, x.rng);
  const std::uint64_t want = static_cast<std::uint64_t>((q - 1) * (q - 1) * q * q * (q + 1) * (q + 1));
  x.param("samples", std::to_string(x.cfg.trials));
  x.r.expected = "reps=" + str(want) + ";disjoint=0 violations;samples matched once=" + std::to_string(x.cfg.trials);
  x.r.computed = "reps=" + str(static_cast<std::uint64_t>(reps.size())) +
                 ";disjoint=" + std::to_string(rep.disjointness_violations) + " violations" +
                 ";samples matched once=" + std::to_string(rep.samples - rep.unmatched - rep.multiply_matched);
  x.r.terms = rep.pairs_checked + rep.samples;
  x.r.pass = reps.size() == want && rep.ok() && rep.samples == static_cast<std::size_t>(x.cfg.trials);
}

void check_characters(Ctx& x) {
  const auto& F = x.F;
  auto chi = AffineGenericCharacter::from_t(F, x.cfg.t, x.cfg.sign);
  const int p = F.p;
  const std::size_t n = static_cast<std::size_t>(x.cfg.trials);
  std::size_t hom = 0, conj = 0, orbit = 0, transport = 0;
  for (std::size_t k = 0; k < n; ++k) {
    auto h1 = gsp4::random_H(F, x.rng), h2 = gsp4::random_H(F, x.rng);
    if (!(chi.on_H(h1 * h2) == chi.on_H(h1).times(chi.on_H(h2), p))) ++hom;
    if (!(chi.on_H(chi.gchi_inverse() * h1 * chi.gchi()) == chi.on_H(h1))) ++conj;
  }
  const std::size_t m = std::max<std::size_t>(1, n / 10);
  for (std::size_t k = 0; k < m; ++k) {
    auto a = padic::random_unit(p, F.precision, x.rng), b = padic::random_unit(p, F.precision, x.rng),
         c = padic::random_unit(p, F.precision, x.rng);
    auto eta = chi.orbit_act(a, b, c);
    auto mm = sp::torus(F, a, b, c);
    auto h = gsp4::random_H(F, x.rng);
    if (eta.orbit_invariant() != chi.orbit_invariant() || !(eta.on_H(h) == chi.on_H(mm * h * mm.inverse())))
      ++orbit;
    auto m0 = chi.transporter(eta);
    auto m0i = m0.inverse();
    auto h2 = gsp4::random_H(F, x.rng);
    if (!(chi.on_H(m0 * h2 * m0i) == eta.on_H(h2))) ++transport;
  }
  x.param("pairs", std::to_string(n));
  x.param("orbit_samples", std::to_string(m));
  x.r.expected = join({"homomorphism=" + tally(0, n), "gchi=" + tally(0, n), "orbit=" + tally(0, m),
                       "transporter=" + tally(0, m)});
  x.r.computed = join({"homomorphism=" + tally(hom, n), "gchi=" + tally(conj, n), "orbit=" + tally(orbit, m),
                       "transporter=" + tally(transport, m)});
  x.r.terms = 2 * n + 2 * m;
  x.r.pass = hom + conj + orbit + transport == 0;
}

void check_expansion(Ctx& x) {
  Model M = x.model();
  const std::size_t n = static_cast<std::size_t>(x.cfg.expansion_points);
  std::vector<GSp4Element> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back(reps::random_new_support(M, x.rng));
  for (std::size_t k = 0; k < n; ++k) pts.push_back(reps::random_off_support(M, x.rng));
  auto rep = reps::newvector_expansion_check(M, pts);
  x.param("points", std::to_string(2 * n));
  x.r.expected = "agree=" + tally(0, 2 * n) + ";support hits=" + std::to_string(n);
  x.r.computed = "agree=" + tally(rep.mismatches, rep.points) + ";support hits=" + std::to_string(rep.hits);
  x.r.terms = rep.points * M.expansion_terms().size();
  x.r.pass = rep.ok() && rep.points == 2 * n && rep.hits == n;
}

std::array<PAdicNumber, 4> box_point(int family, int p, int precision, Rng& rng) {
  auto lo = reps::family_box_lows(family);
  std::array<PAdicNumber, 4> v;
  for (std::size_t i = 0; i < 4; ++i)
    v[i] = padic::random_in_ideal(p, lo[i] + static_cast<int>(rng() % 3), precision, rng);
  return v;
}

void check_matcoeff(Ctx& x) {
  Model M = x.model();
  const int p = x.F.p;
  const auto t = x.F(x.cfg.t);
  std::size_t inside = 0, inside_bad = 0, outside = 0, outside_bad = 0, nonzero = 0;
  for (int f = 1; f <= 4; ++f) {
    for (int k = 0; k < x.cfg.matcoeff_points; ++k) {
      auto v = box_point(f, p, x.F.precision, x.rng);
      auto want = reps::matcoeff_bruteforce(M, v[0], v[1], v[2], v[3], f);
      ++inside;
      if (!(reps::matcoeff_family(f, v[0], v[1], v[2], v[3], t) == want)) ++inside_bad;
      if (!want.is_zero()) ++nonzero;
    }
    auto lo = reps::family_box_lows(f);
    for (std::size_t face = 0; face < 4; ++face) {
      auto v = box_point(f, p, x.F.precision, x.rng);
      v[face] = padic::random_unit(p, x.F.precision, x.rng).shifted(lo[face] - 1);
      ++outside;
      if (!reps::matcoeff_bruteforce(M, v[0], v[1], v[2], v[3], f).is_zero() ||
          !reps::matcoeff_family(f, v[0], v[1], v[2], v[3], t).is_zero())
        ++outside_bad;
    }
  }
  x.param("points_per_family", std::to_string(x.cfg.matcoeff_points));
  x.r.expected = "inside=" + tally(0, inside) + ";outside zero=" + tally(0, outside);
  x.r.computed = "inside=" + tally(inside_bad, inside) + ";outside zero=" + tally(outside_bad, outside) +
                 ";nonzero=" + std::to_string(nonzero);
  x.r.terms = (inside + outside) * M.representatives().size() * M.representatives().size();
  x.r.pass = inside_bad == 0 && outside_bad == 0;
}

void check_hecke(Ctx& x) {
  Model M = x.model();
  auto h = reps::hecke_T01(M);
  x.r.expected = "A=0;B=0;C=0;D=0";
  x.r.computed = join({"A=" + value_str(h.A), "B=" + value_str(h.B), "C=" + value_str(h.C), "D=" + value_str(h.D)});
  x.r.terms = h.terms;
  x.r.pass = h.A.is_zero() && h.B.is_zero() && h.C.is_zero() && h.D.is_zero();
}

void check_atkin_lehner(Ctx& x) {
  Model M = x.model();
  std::vector<GSp4Element> pts{M.d()};
  for (int k = 1; k < x.cfg.atkin_lehner_points; ++k) pts.push_back(reps::random_new_support(M, x.rng));
  auto al = reps::atkin_lehner_check(M, pts);
  auto inv = reps::involution_check(M, M.vector(reps::VectorKind::New), pts, x.rng);
  x.param("points", std::to_string(pts.size()));
  x.r.expected = "eps=" + std::to_string(x.cfg.sign) + ";agree=" + tally(0, pts.size()) +
                 ";involution=" + tally(0, pts.size());
  x.r.computed = "eps=" + std::to_string(x.cfg.sign) + ";agree=" + tally(al.mismatches, al.points) +
                 ";involution=" + tally(inv.mismatches, inv.points);
  x.r.terms = al.points + inv.points;
  x.r.pass = al.ok() && inv.ok() && al.points == pts.size() && al.hits == pts.size();
}

void check_dims(Ctx& x) {
  std::vector<std::string> want, got;
  bool ok = true;
  for (int n = 0; n <= 12; ++n) {
    const std::int64_t w = n >= 3 ? (n - 3) * (n - 3) / 4 : 0;
    const std::int64_t g = reps::dim_Astar(n);
    want.push_back(std::to_string(w));
    got.push_back(std::to_string(g));
    ok = ok && w == g && reps::dim_Astar_formula(n) == w;
  }
  auto csv = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + e;
    return s;
  };
  x.param("n", "0..12");
  x.r.expected = csv(want);
  x.r.computed = csv(got);
  x.r.terms = 13;
  x.r.pass = ok;
}

void check_support(Ctx& x) {
  auto chi = AffineGenericCharacter::from_t(x.F, x.cfg.t, x.cfg.sign);
  const std::size_t trials = static_cast<std::size_t>(x.cfg.trials);
  const std::array<std::array<int, 3>, 5> cases{{{1, 1, 5}, {0, 1, 5}, {1, 0, 5}, {1, 1, 4}, {1, 2, 6}}};
  std::vector<std::string> want, got;
  bool ok = true;
  for (const auto& [i, j, n] : cases) {
    auto rep = reps::support_criterion_check(chi, i, j, n, trials, x.rng);
    const bool adm = i >= 1 && j >= 1 && 2 * i + j <= n - 2;
    const std::string key = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(n) + ")";
    want.push_back(key + (adm ? "=trivial" : "=witness"));
    got.push_back(key + (rep.nontrivial == 0 ? "=trivial" : "=witness"));
    ok = ok && rep.ok() && rep.admissible == adm && (!adm || rep.in_H > 0);
    x.r.terms += rep.trials;
  }
  x.param("trials", std::to_string(trials));
  x.r.expected = join(want);
  x.r.computed = join(got);
  x.r.pass = ok;
}

void check_formal_degree(Ctx& x) {
  const std::int64_t q = x.F.q();
  const std::uint64_t index = static_cast<std::uint64_t>((q * q * q * q - 1) * (q * q - 1));
  auto fd = integrals::formal_degree_check(static_cast<int>(q));
  const Rational degree = Rational(static_cast<long>(index)) / 2;
  x.r.expected = "index=" + str(index) + ";degree=" + str(degree);
  x.r.computed = "index=" + str(fd.index) + ";degree=" + str(fd.degree);
  x.r.terms = fd.index;
  x.r.pass = fd.index == index && fd.degree == degree;
}

void check_j0_min(Ctx& x) {
  Model M = x.model();
  const auto& F = x.F;
  const auto g = F.pi(-1) / F(x.c.c1), d = F.pi(-1) / F(x.c.c2);
  const int q = F.q();
  struct Case {
    std::string name;
    PAdicNumber al, be, ga, de;
    Rational want;
  };
  const std::vector<Case> cases{
      {"main", g, d, g, d, qpow(q, 7)},
      {"gamma unit", F(x.c.c1), d, F(x.c.c1), d, 0},
      {"alpha/gamma off 1+p", g * F(2), d, g, d, 0},
      {"delta off 1+p", g, d * F(2), g, d * F(2), 0},
      {"ratio in 1+p", g * F(1 + q), d * F(1 + 2 * q), g, d, qpow(q, 7)},
  };
  std::vector<std::string> want, got;
  bool ok = true;
  for (const auto& k : cases) {
    auto r = integrals::j0_minimal(M, k.al, k.be, k.ga, k.de, x.c, x.opt());
    want.push_back(k.name + "=" + str(k.want));
    got.push_back(k.name + "=" + value_str(r.value));
    ok = ok && r.stable && r.value == cyclo::CyclotomicValue::rational(F.p, k.want);
    x.r.terms += r.cells;
  }
  x.r.expected = join(want);
  x.r.computed = join(got);
  x.r.pass = ok;
}

void check_j0_new(Ctx& x) {
  const int q = x.F.q();
  auto r = integrals::j0_newvector(x.F, x.F(x.cfg.t), x.c, x.opt());
  const std::array<Rational, 4> want{0, qpow(q, 4), 0, 0};
  const Rational total = qpow(q, 9) / (Rational(q * q - 1) * Rational(q * q - 1));
  std::vector<std::string> w, g;
  bool ok = r.total == total;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string key = "J0" + std::to_string(i + 1) + "=";
    w.push_back(key + str(want[i]));
    g.push_back(key + value_str(r.parts[i].value));
    ok = ok && r.parts[i].stable && r.parts[i].value == cyclo::CyclotomicValue::rational(q, want[i]);
    x.r.terms += r.parts[i].cells;
  }
  w.push_back("total=" + str(total));
  g.push_back("total=" + str(r.total));
  x.r.expected = join(w);
  x.r.computed = join(g);
  x.r.pass = ok;
}

void check_whittaker(Ctx& x) {
  Model M = x.model();
  const auto& F = x.F;
  const auto al = F.pi(-1) / F(x.c.c1), be = F.pi(-1) / F(x.c.c2);
  const auto one = GSp4Element::identity(F);
  auto w = integrals::whittaker(M, one, sp::d(F, al, be), x.c, x.opt());
  auto z = integrals::whittaker(M, one, sp::d(F, F(x.c.c1), be), x.c, x.opt());
  const Rational want = qpow(F.q(), 7);
  x.r.expected = "W(d)=" + str(want) + ";W(d unit alpha)=0";
  x.r.computed = "W(d)=" + value_str(w.value) + ";W(d unit alpha)=" + value_str(z.value);
  x.r.terms = w.cells + z.cells;
  x.r.pass = w.stable && z.stable && w.value == cyclo::CyclotomicValue::rational(F.p, want) && z.value.is_zero();
}

void check_zeta(Ctx& x) {
  Model M = x.model();
  const auto& F = x.F;
  const auto al = F.pi(-1) / F(x.c.c1);
  integrals::QuadraticCharacter triv, leg{true, 1};
  struct Case {
    std::string name;
    PAdicNumber alpha, beta;
    integrals::QuadraticCharacter chi;
  };
  const std::vector<Case> cases{
      {"trivial,beta=1", al, F(1), triv},
      {"trivial,beta=pi", al, F.pi(1), triv},
      {"legendre,beta=1", al, F(1), leg},
      {"alpha unit", F(x.c.c1), F(1), triv},
  };
  std::vector<std::string> want, got;
  bool ok = true;
  for (const auto& k : cases) {
    auto z = integrals::novodvorsky_zeta(M, k.alpha, k.beta, k.chi, x.c, x.opt());
    auto e = integrals::zeta_expected(F, k.alpha, k.beta, k.chi, x.c);
    want.push_back(k.name + "=" + e.to_string());
    got.push_back(k.name + "=" + z.value.to_string());
    ok = ok && z.stable && z.value == e;
    x.r.terms += z.cells;
  }
  ok = ok && !integrals::zeta_expected(F, al, F(1), triv, x.c).is_zero();
  x.r.expected = join(want);
  x.r.computed = join(got);
  x.r.pass = ok;
}

void check_bessel(Ctx& x) {
  Model M = x.model();
  const auto& F = x.F;
  const int q = F.q();
  std::vector<std::string> want, got;
  bool ok = true;
  for (int m0 : x.cfg.bessel_m0) {
    auto s = integrals::bessel_default(F, x.cfg.bessel_a, m0, x.cfg.bessel_u0);
    auto b = integrals::bessel(M, s, x.opt());
    const Rational w = qpow(q, 7 - 4 * m0);
    want.push_back("m0=" + std::to_string(m0) + ":" + str(w));
    got.push_back("m0=" + std::to_string(m0) + ":" + value_str(b.value));
    ok = ok && b.stable && b.value == cyclo::CyclotomicValue::rational(F.p, w);
    x.r.terms += b.cells;
  }
  const Rational vol_want = 1 + Rational(1, q);
  const auto vol = integrals::bessel_torus_volume(F, x.cfg.bessel_a);
  want.push_back("volume=" + str(vol_want));
  got.push_back("volume=" + str(vol));
  ok = ok && vol == vol_want;

  // one sampled twist
  const int k = static_cast<int>(x.rng() % 2);
  integrals::BesselTwist tw{F.pi(k) * padic::random_unit(F.p, F.precision, x.rng),
                            padic::random_unit(F.p, F.precision, x.rng),
                            padic::random_unit(F.p, F.precision, x.rng)};
  auto s = integrals::bessel_default(F, x.cfg.bessel_a, x.cfg.bessel_m0.front(), x.cfg.bessel_u0);
  auto cov = integrals::bessel_covariance_check(M, s, tw, x.opt());
  const Rational f_want = qpow(q, -3 * k);
  want.push_back("covariance factor=" + str(f_want) + ",sides equal");
  got.push_back("covariance factor=" + str(cov.factor) + (cov.ok() ? ",sides equal" : ",sides differ"));
  ok = ok && cov.ok() && cov.factor == f_want;
  x.param("a", std::to_string(x.cfg.bessel_a));
  x.param("u0", std::to_string(x.cfg.bessel_u0));
  x.param("twist", "v(lambda)=" + std::to_string(k));
  x.r.expected = join(want);
  x.r.computed = join(got);
  x.r.pass = ok;
}

using CheckFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& table() {
  static const std::vector<std::pair<std::string, CheckFn>> t{
      {"cosets", check_cosets},
      {"characters", check_characters},
      {"newvector-expansion", check_expansion},
      {"matcoeff", check_matcoeff},
      {"hecke", check_hecke},
      {"atkin-lehner", check_atkin_lehner},
      {"dims", check_dims},
      {"support-criterion", check_support},
      {"formal-degree", check_formal_degree},
      {"j0-min", check_j0_min},
      {"j0-new", check_j0_new},
      {"whittaker", check_whittaker},
      {"zeta", check_zeta},
      {"bessel", check_bessel},
  };
  return t;
}

}  // namespace

void RunConfig::validate() const {
  if (p < 3 || !is_prime(p)) throw BadConfig("p must be an odd prime, got " + std::to_string(p));
  auto unit = [&](std::int64_t v, const char* name) {
    if (v % p == 0) throw BadConfig(std::string(name) + " must be a unit mod p");
  };
  unit(t, "t");
  unit(c1, "c1");
  unit(c2, "c2");
  unit(bessel_u0, "bessel_u0");
  if (sign != 1 && sign != -1) throw BadConfig("sign must be +1 or -1");
  if (precision < 8 || precision > 40) throw BadConfig("precision must lie in [8, 40]");
  if (trials < 1 || expansion_points < 1 || matcoeff_points < 1 || atkin_lehner_points < 1)
    throw BadConfig("trial counts must be positive");
  if (bessel_m0.empty()) throw BadConfig("bessel_m0 is empty");
  for (int m : bessel_m0)
    if (m < 2) throw BadConfig("bessel m0 must be at least 2");
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : table()) n.push_back(k);
    n.push_back("all");
    return n;
  }();
  return names;
}

CheckReport run(const std::string& check, const RunConfig& cfg) {
  const auto& t = table();
  auto it = std::find_if(t.begin(), t.end(), [&](const auto& e) { return e.first == check; });
  if (it == t.end()) throw UnknownCheck("'" + check + "'");
  cfg.validate();

  CheckReport r;
  r.check = check;
  r.params = {{"p", std::to_string(cfg.p)},     {"t", std::to_string(cfg.t)},
              {"sign", std::to_string(cfg.sign)}, {"precision", std::to_string(cfg.precision)},
              {"c1", std::to_string(cfg.c1)},   {"c2", std::to_string(cfg.c2)},
              {"seed", std::to_string(cfg.seed)}};
  // each check has its own stream, so reports do not depend on which others ran
  const auto index = static_cast<std::uint64_t>(it - t.begin());
  Ctx ctx{cfg, Field{cfg.p, cfg.precision}, PsiUnits{cfg.c1, cfg.c2}, Rng(cfg.seed * 1000003ULL + index), r};

  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(ctx);
  } catch (const std::exception& e) {
    r.pass = false;
    r.computed = e.what();
  }
  if (cfg.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& checks, const RunConfig& cfg, int jobs) {
  cfg.validate();
  std::vector<std::string> names;
  for (const auto& c : checks) {
    if (c == "all") {
      for (const auto& [k, f] : table()) names.push_back(k);
    } else if (std::none_of(table().begin(), table().end(), [&](const auto& e) { return e.first == c; })) {
      throw UnknownCheck("'" + c + "'");
    } else {
      names.push_back(c);
    }
  }
  std::vector<CheckReport> out(names.size());
  const long n = static_cast<long>(names.size());
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run(names[static_cast<std::size_t>(i)], cfg);
  } else {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run(names[static_cast<std::size_t>(i)], cfg);
  }
  return out;
}

}  // namespace ssc::cli
