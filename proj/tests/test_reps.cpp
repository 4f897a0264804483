#include "doctest.h"

#include "ssc/reps.hpp"

using namespace ssc;
using namespace ssc::reps;
using padic::Field;
namespace sp = gsp4::special;

namespace {

cyclo::CyclotomicValue val(const CharValue& v, int p) { return v.value(p); }

}  // namespace

TEST_CASE("character values on H") {
  Field F{3};
  Rng rng(4);
  auto chi = AffineGenericCharacter::from_t(F, 1);
  CHECK(chi.on_H(GSp4Element::identity(F)) == CharValue::one());
  for (int k = -3; k <= 3; ++k) CHECK(chi.on_H(GSp4Element::identity(F).scaled(F(2) * F.pi(k))) == CharValue::one());
  CHECK_THROWS_AS(chi.on_H(sp::d_pow(F, 1, 1)), NotInH);
  // k'_12 = 1 gives zeta_3
  auto x = sp::root_element(F, sp::Root::A1, F(1));
  CHECK(chi.on_H(x) == CharValue{true, 1, 1});
  // k'_41 = pi: t3 * 1
  auto chi2 = AffineGenericCharacter::from_t(F, 2);
  CHECK(chi2.on_H(sp::root_element(F, sp::Root::NegA2A1A1, F.pi(1))) == CharValue{true, 1, 2});
  CHECK_THROWS_AS(AffineGenericCharacter::from_t(F, 3), BadParameter);
}

TEST_CASE("character is a homomorphism on H") {
  for (int p : {3, 5}) {
    Field F{p};
    Rng rng(10 + static_cast<unsigned>(p));
    AffineGenericCharacter chi(F, F(2), F(p - 1), F(3 % p == 0 ? 1 : 3));
    for (int k = 0; k < 200; ++k) {
      auto h1 = gsp4::random_H(F, rng), h2 = gsp4::random_H(F, rng);
      CHECK(chi.on_H(h1 * h2) == chi.on_H(h1).times(chi.on_H(h2), p));
    }
  }
}

TEST_CASE("g_chi conjugation preserves chi") {
  Field F{3};
  Rng rng(6);
  for (int t : {1, 2}) {
    auto chi = AffineGenericCharacter::from_t(F, t);
    const auto& g = chi.gchi();
    for (int k = 0; k < 50; ++k) {
      auto h = gsp4::random_H(F, rng);
      CHECK(chi.on_H(chi.gchi_inverse() * h * g) == chi.on_H(h));
    }
  }
}

TEST_CASE("extension to H'") {
  Field F{3};
  for (int eps : {1, -1}) {
    auto chi = AffineGenericCharacter::from_t(F, 1, eps);
    CHECK(chi.on_Hprime(GSp4Element::identity(F)) == CharValue::one());
    CHECK(chi.on_Hprime(chi.gchi()) == CharValue{true, eps, 0});
    CHECK_FALSE(chi.on_Hprime(sp::d_pow(F, 1, 1)).nonzero);
  }
}

TEST_CASE("orbit action and invariant") {
  Field F{5};
  Rng rng(9);
  AffineGenericCharacter chi(F, F(2), F(3), F(4));
  auto same = chi.orbit_act(F(1), F(1), F(1));
  CHECK(same.orbit_invariant() == chi.orbit_invariant());
  CHECK(chi.orbit_invariant() == (2 * 2 * 3 * 4) % 5);
  for (int k = 0; k < 30; ++k) {
    auto a = padic::random_unit(5, F.precision, rng), b = padic::random_unit(5, F.precision, rng),
         c = padic::random_unit(5, F.precision, rng);
    auto eta = chi.orbit_act(a, b, c);
    CHECK(eta.orbit_invariant() == chi.orbit_invariant());
    auto m = sp::torus(F, a, b, c);
    auto h = gsp4::random_H(F, rng);
    CHECK(eta.on_H(h) == chi.on_H(m * h * m.inverse()));
  }
  // m = diag(1, t1, t1 t2, t1^2 t2) reaches the chi_{1,1,t} form
  auto t1 = chi.t1(), t2 = chi.t2();
  auto normal = chi.orbit_act(F(1), t1, t1 * t1 * t2);
  CHECK(normal.t1() == F(1));
  CHECK(normal.t2() == F(1));
}

TEST_CASE("transporter between characters of one orbit") {
  Field F{5};
  Rng rng(12);
  AffineGenericCharacter chi(F, F(2), F(3), F(4));
  // eta with l1 = 3, l2 = 4 and l3 forced by the invariant: l1^2 l2 l3 = 48 = 3 mod 5 -> l3 = 3 * 36^{-1}
  auto l3 = F(chi.orbit_invariant()) / (F(9) * F(4));
  AffineGenericCharacter eta(F, F(3), F(4), l3);
  REQUIRE(eta.orbit_invariant() == chi.orbit_invariant());
  auto m0 = chi.transporter(eta);
  auto m0i = m0.inverse();
  for (int k = 0; k < 50; ++k) {
    auto h = gsp4::random_H(F, rng);
    CHECK(chi.on_H(m0 * h * m0i) == eta.on_H(h));
  }
  AffineGenericCharacter other(F, F(1), F(1), F(1));
  if (other.orbit_invariant() != chi.orbit_invariant()) CHECK_THROWS_AS(chi.transporter(other), BadParameter);
}

TEST_CASE("minimal vector and newvector values") {
  Field F{3};
  for (int eps : {1, -1}) {
    Model M(AffineGenericCharacter::from_t(F, 1, eps));
    auto one = GSp4Element::identity(F);
    CHECK(M.f_min(one) == CharValue::one());
    CHECK(M.f_min(M.character().gchi()) == CharValue{true, eps, 0});
    CHECK(M.f_new(M.d()) == CharValue::one());
    CHECK_FALSE(M.f_new(one).nonzero);
    CHECK(M.count_matches(one) == 0);
    CHECK(M.count_matches(M.d()) == 1);
    CHECK(M.f_shifted(one) == CharValue::one());
  }
}

TEST_CASE("newvector is right K(5)-invariant") {
  Field F{3};
  Rng rng(13);
  Model M(AffineGenericCharacter::from_t(F, 2, -1));
  for (int k = 0; k < 20; ++k) {
    auto g = (k % 2) ? random_new_support(M, rng) : random_off_support(M, rng);
    auto kk = gsp4::random_paramodular(F, 5, rng);
    CHECK(M.f_new(g * kk) == M.f_new(g));
    CHECK(M.count_matches(g) <= 1);
  }
}

TEST_CASE("inner products") {
  Field F{3};
  Model M(AffineGenericCharacter::from_t(F, 1));
  auto fmin = M.vector(VectorKind::Minimal);
  auto fnew = M.vector(VectorKind::New);
  auto fsh = M.vector(VectorKind::ShiftedNew);
  CHECK(M.inner_product(fmin, fmin).to_rational() == 1);
  CHECK(M.inner_product(fnew, fnew).to_rational() == 576);
  CHECK(M.inner_product(fsh, fsh).to_rational() == 576);
  CHECK(M.inner_product(fmin, Model::translate(fmin, M.d())).is_zero());
  // a translate has the same norm
  auto h = Model::translate(fmin, sp::d_pow(F, 2, -1));
  CHECK(M.inner_product(h, h).to_rational() == 1);
}

TEST_CASE("translates compose on the right") {
  Field F{3};
  Rng rng(14);
  Model M(AffineGenericCharacter::from_t(F, 1));
  auto v = M.vector(VectorKind::New);
  auto g1 = sp::d_pow(F, 0, 1), g2 = sp::s2(F);
  auto w = Model::translate(Model::translate(v, g1), g2);
  for (int k = 0; k < 10; ++k) {
    auto g = random_new_support(M, rng);
    CHECK(M.eval(w, g) == M.f_new(g * g2 * g1));
  }
  CHECK(M.eval(M.vector(VectorKind::ShiftedNew), GSp4Element::identity(F)) == M.f_new(M.d()));
}

TEST_CASE("minimal vector is its own matrix coefficient") {
  Field F{3};
  Rng rng(15);
  Model M(AffineGenericCharacter::from_t(F, 1, -1));
  auto fmin = M.vector(VectorKind::Minimal);
  for (int k = 0; k < 100; ++k) {
    GSp4Element g;
    switch (k % 3) {
      case 0: g = gsp4::random_Hprime(F, M.character().gchi(), rng); break;
      case 1: g = random_off_support(M, rng); break;
      default: g = gsp4::random_K(F, rng) * sp::d_pow(F, k % 4, 1 - k % 3); break;
    }
    // <g f, f> = f(g) since the support is the single coset H'
    auto phi = M.inner_product(Model::translate(fmin, g), fmin);
    CHECK(phi == val(M.f_min(g), 3));
  }
}

TEST_CASE("newvector expansion") {
  Field F{3};
  Rng rng(16);
  Model M(AffineGenericCharacter::from_t(F, 1));
  CHECK(M.expansion_terms().size() == 576);
  CHECK(M.expansion_value(M.d()).to_rational() == 1);
  CHECK(M.expansion_value(GSp4Element::identity(F)).is_zero());
  std::vector<GSp4Element> pts;
  for (int k = 0; k < 6; ++k) pts.push_back(random_new_support(M, rng));
  for (int k = 0; k < 6; ++k) pts.push_back(random_off_support(M, rng));
  auto r = newvector_expansion_check(M, pts);
  CHECK(r.ok());
  CHECK(r.hits == 6);
}

TEST_CASE("Hecke operator sums vanish") {
  Field F{3};
  for (int eps : {1, -1}) {
    Model M(AffineGenericCharacter::from_t(F, 1, eps));
    auto h = hecke_T01(M);
    CHECK(h.terms == 27 + 9 + 9 + 3);
    CHECK(h.A.is_zero());
    CHECK(h.B.is_zero());
    CHECK(h.C.is_zero());
    CHECK(h.D.is_zero());
  }
}

TEST_CASE("Atkin-Lehner sign and involution") {
  Field F{3};
  Rng rng(17);
  for (int eps : {1, -1}) {
    Model M(AffineGenericCharacter::from_t(F, 1, eps));
    CHECK(M.f_new(M.d() * sp::u_n(F, 5)) == CharValue{true, eps, 0});
    std::vector<GSp4Element> pts{M.d()};
    for (int k = 0; k < 8; ++k) pts.push_back(random_new_support(M, rng));
    auto r = atkin_lehner_check(M, pts);
    CHECK(r.ok());
    CHECK(r.hits == pts.size());
    auto inv = involution_check(M, M.vector(VectorKind::New), pts, rng);
    CHECK(inv.ok());
    auto invmin = involution_check(M, M.vector(VectorKind::Minimal), {GSp4Element::identity(F)}, rng);
    CHECK(invmin.ok());
  }
}

TEST_CASE("dimension count") {
  const std::int64_t want[] = {0, 0, 0, 0, 0, 1, 2, 4, 6, 9, 12, 16, 20};
  for (int n = 0; n <= 12; ++n) {
    CHECK(dim_Astar(n) == want[n]);
    CHECK(dim_Astar_formula(n) == want[n]);
  }
  CHECK(support_pair_admissible(1, 1, 5));
  CHECK_FALSE(support_pair_admissible(0, 1, 5));
  CHECK_FALSE(support_pair_admissible(1, 1, 4));
}

TEST_CASE("support criterion") {
  Field F{3};
  Rng rng(18);
  auto chi = AffineGenericCharacter::from_t(F, 1);
  auto a = support_criterion_check(chi, 1, 1, 5, 500, rng);
  CHECK(a.admissible);
  CHECK(a.in_H > 0);
  CHECK(a.nontrivial == 0);
  auto b = support_criterion_check(chi, 0, 1, 5, 200, rng);
  CHECK(b.ok());
  CHECK(b.nontrivial > 0);
  auto c = support_criterion_check(chi, 1, 1, 4, 200, rng);
  CHECK(c.ok());
  CHECK(c.nontrivial > 0);
}
