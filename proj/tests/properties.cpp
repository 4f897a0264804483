#include "properties.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <sstream>

#include "ssc/cyclo.hpp"
#include "ssc/lattice.hpp"
#include "ssc/padic.hpp"

using namespace ssc;
using padic::PAdicNumber;

namespace props {
namespace {

constexpr int kPrimes[] = {3, 5, 7, 11, 13};

int pick_prime(Rng& rng) { return kPrimes[std::uniform_int_distribution<int>(0, 4)(rng)]; }

// v_p of a nonzero rational, computed with gmp.
long rational_valuation(const Rational& r, int p) {
  mpz_class n = r.get_num(), d = r.get_den(), pz = p;
  long a = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
  long b = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()));
  return a - b;
}

// The representative of `got` agrees with `want` modulo p^A(got).
bool agrees(const PAdicNumber& got, const Rational& want) {
  Rational diff = got.to_rational() - want;
  if (sgn(diff) == 0) return true;
  return rational_valuation(diff, got.prime()) >= got.absolute_precision();
}

void fail(Outcome& o, const std::string& what) {
  if (o.failures++ == 0) o.first_failure = what;
}

std::complex<double> numeric(const cyclo::CyclotomicValue& z) {
  const double pm = std::pow(static_cast<double>(z.prime()), z.level());
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < z.coefficients().size(); ++j)
    s += z.coefficients()[j].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(j) / pm);
  return s;
}

}  // namespace

Outcome padic_ring_laws(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Outcome o;
  for (long i = 0; i < cases; ++i) {
    ++o.cases;
    const int p = pick_prime(rng);
    const int n = std::uniform_int_distribution<int>(6, 12)(rng);
    auto x = padic::random_element(p, -4, 4, n, rng, 0.05);
    auto y = padic::random_element(p, -4, 4, n, rng, 0.05);
    auto z = padic::random_element(p, -4, 4, n, rng, 0.05);
    Rational X = x.to_rational(), Y = y.to_rational();
    std::ostringstream tag;
    tag << "p=" << p << " x=" << x.to_string() << " y=" << y.to_string() << " z=" << z.to_string();
    if (!agrees(x + y, X + Y)) fail(o, "sum oracle " + tag.str());
    if (!agrees(x - y, X - Y)) fail(o, "difference oracle " + tag.str());
    if (!agrees(x * y, X * Y)) fail(o, "product oracle " + tag.str());
    if (!y.is_zero() && !agrees(x / y, X / Y)) fail(o, "quotient oracle " + tag.str());
    if (!((x + y) + z).equals(x + (y + z))) fail(o, "additive associativity " + tag.str());
    if (!((x * y) * z).equals(x * (y * z))) fail(o, "multiplicative associativity " + tag.str());
    if (!(x * (y + z)).equals(x * y + x * z)) fail(o, "distributivity " + tag.str());
    if (!(x + y).equals(y + x) || !(x * y).equals(y * x)) fail(o, "commutativity " + tag.str());
    if (!x.is_zero()) {
      if (!(x * x.inverse()).equals(padic::PAdicNumber::from_integer(p, 1, n)))
        fail(o, "inverse " + tag.str());
      // |x| = q^{-v(x)} against the valuation of the rational representative
      Rational q_pow = 1;
      for (long e = 0; e < std::abs(rational_valuation(X, p)); ++e) q_pow *= p;
      Rational want = rational_valuation(X, p) >= 0 ? Rational(1 / q_pow) : q_pow;
      if (x.norm() != want) fail(o, "norm " + tag.str());
      if (!y.is_zero() && (x * y).norm() != x.norm() * y.norm()) fail(o, "norm multiplicativity " + tag.str());
      auto w = padic::random_in_ideal(p, 0, n, rng);
      if (x.absolute_precision() >= 0 && w.absolute_precision() >= 0 &&
          !((x + w).fractional_part() == x.fractional_part()))
        fail(o, "fractional part shift by o " + tag.str());
    }
  }
  return o;
}

bool residue_cover(int p, int k_low, int k_high) {
  auto reps = padic::enumerate_residues(p, k_low, k_high);
  std::uint64_t expected = padic::power(p, k_high - k_low);
  if (reps.size() != expected) return false;
  std::set<std::uint64_t> classes;
  for (auto& r : reps) {
    // index of r in p^k_low o / p^k_high o
    Rational t = r.to_rational();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(k_low)));
    Rational idx = k_low >= 0 ? Rational(t / scale) : Rational(t * scale);
    if (idx.get_den() != 1) return false;
    mpz_class mod = static_cast<unsigned long>(expected);
    mpz_class v = idx.get_num() % mod;
    classes.insert(v.get_ui());
  }
  return classes.size() == expected;
}

Outcome cyclo_normal_form(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Outcome o;
  for (long i = 0; i < cases; ++i) {
    ++o.cases;
    const int p = kPrimes[std::uniform_int_distribution<int>(0, 2)(rng)];
    const int level = std::uniform_int_distribution<int>(0, p == 3 ? 4 : 2)(rng);
    const int nterms = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<cyclo::CyclotomicValue> terms;
    for (int k = 0; k < nterms; ++k) {
      int lv = std::uniform_int_distribution<int>(0, level)(rng);
      std::uint64_t e = std::uniform_int_distribution<std::uint64_t>(0, padic::power(p, lv) - 1)(rng);
      Rational c(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
      c.canonicalize();
      terms.push_back(cyclo::CyclotomicValue::root(p, {lv, e}).scaled(c));
    }
    cyclo::CyclotomicValue forward(p), backward(p);
    for (auto& t : terms) forward += t;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) backward = *it + backward;
    std::vector<cyclo::CyclotomicValue> shuffled = terms;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    while (shuffled.size() > 1) {
      std::vector<cyclo::CyclotomicValue> next;
      for (std::size_t k = 0; k + 1 < shuffled.size(); k += 2) next.push_back(shuffled[k] + shuffled[k + 1]);
      if (shuffled.size() % 2) next.push_back(shuffled.back());
      shuffled = std::move(next);
    }
    if (!(forward == backward) || !(forward == shuffled[0])) fail(o, "re-association changed normal form");
    if (std::abs(numeric(forward) - numeric(shuffled[0])) > 1e-9) fail(o, "numeric mismatch");
    std::complex<double> direct = 0;
    for (auto& t : terms) direct += numeric(t);
    if (std::abs(direct - numeric(forward)) > 1e-8) fail(o, "normal form disagrees with complex evaluation");
    if (forward.is_zero() != (std::abs(direct) < 1e-9)) fail(o, "zero test disagrees with complex evaluation");

    auto x = padic::random_element(p, -3, 2, 10, rng, 0.05);
    auto y = padic::random_element(p, -3, 2, 10, rng, 0.05);
    if (!(cyclo::psi(x + y) == cyclo::psi(x) * cyclo::psi(y))) fail(o, "psi is not additive");
    if (!(cyclo::psi(x).conjugate() == cyclo::psi(-x))) fail(o, "conjugate(psi(x)) != psi(-x)");
    auto z = cyclo::psi(x);
    if (!(z * z.conjugate() == cyclo::CyclotomicValue::rational(p, 1))) fail(o, "|psi|^2 != 1");
  }
  return o;
}

Outcome refinement_gates(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Outcome o;
  for (long i = 0; i < cases; ++i) {
    ++o.cases;
    const int p = kPrimes[std::uniform_int_distribution<int>(0, 1)(rng)];
    // f(x) = psi(c x) on p^L o with v(c) = -k: constant on cells p^(k) exactly.
    const int L = std::uniform_int_distribution<int>(-2, 1)(rng);
    const int k = std::uniform_int_distribution<int>(L, L + 3)(rng);
    auto c = padic::random_unit(p, 10, rng).shifted(-k);
    integrals::Integrand f = [c](std::span<const PAdicNumber> x, cyclo::RootSum& acc) {
      acc.add(cyclo::psi_root(c * x[0]));
    };
    integrals::LatticeBox good{p, {{integrals::AxisKind::Additive, L, std::max(k, L)}}};
    // orthogonality oracle: the integral is vol(p^L) when c p^L lies in o, else 0
    Rational vol = integrals::additive_volume(p, L);
    cyclo::CyclotomicValue expect = (-k + L >= 0) ? cyclo::CyclotomicValue::rational(p, vol)
                                                  : cyclo::CyclotomicValue::zero(p);
    integrals::IntegrationOptions opt;
    opt.level = 4;
    opt.exec = (i % 2) ? integrals::Exec::Parallel : integrals::Exec::Serial;
    auto val = integrals::integrate(f, good, opt);
    if (!(val == expect)) fail(o, "character integral disagrees with orthogonality");
    if (!integrals::refinement_check(f, good, integrals::RefineMode::Joint, opt).stable)
      fail(o, "refinement gate rejected a cell-constant integrand");
    if (k - 1 >= L) {
      integrals::LatticeBox coarse{p, {{integrals::AxisKind::Additive, L, k - 1}}};
      // the coarse sum sees only the representative of each p^(k-1) cell; it is a
      // constant multiple of vol, while the true integral vanishes
      auto r = integrals::refinement_check(f, coarse, integrals::RefineMode::Joint, opt);
      if (r.stable && !(r.coarse == expect)) fail(o, "refinement gate accepted a wrong coarse value");
    }
  }
  return o;
}

}  // namespace props
