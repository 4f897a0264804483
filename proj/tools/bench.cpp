// Serial reference vs OpenMP kernels: brute-force matrix coefficient,
// coset partition check and lattice integration. Prints seconds and
// whether both paths agree.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "ssc/integrals.hpp"

using namespace ssc;
using padic::Field;

namespace {

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-22s serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  Field F{3};
  reps::Model M(reps::AffineGenericCharacter::from_t(F, 1));
  int status = 0;

  {
    const auto a = F.frac(1, 3), b = F(2), c = F.frac(2, 9), e = F(3);
    cyclo::CyclotomicValue vs, vp;
    double ts = timed([&] { vs = reps::matcoeff_bruteforce(M, a, b, c, e, 0, Exec::Serial); });
    double tp = timed([&] { vp = reps::matcoeff_bruteforce(M, a, b, c, e, 0, Exec::Parallel); });
    row("matcoeff brute force", ts, tp, vs == vp);
    status |= !(vs == vp);
  }
  {
    std::vector<gsp4::GSp4Element> reps;
    for (const auto& s : M.representatives()) reps.push_back(s.element);
    const auto& gchi = M.character().gchi();
    gsp4::Sampler amb = [&](Rng& r) {
      return gsp4::random_Hprime(F, gchi, r) * M.d() * gsp4::random_paramodular(F, 5, r);
    };
    gsp4::ElementTest in = [&](const gsp4::GSp4Element& g) {
      return gsp4::member_Hprime(g, gchi) != gsp4::HprimeBranch::Neither;
    };
    gsp4::CosetReport rs, rp;
    Rng r1(5), r2(5);
    double ts = timed([&] { rs = gsp4::verify_coset_partition(reps, amb, 50, in, r1, Exec::Serial); });
    double tp = timed([&] { rp = gsp4::verify_coset_partition(reps, amb, 50, in, r2, Exec::Parallel); });
    const bool agree = rs.ok() == rp.ok() && rs.pairs_checked == rp.pairs_checked;
    row("coset partition", ts, tp, agree);
    status |= !agree;
  }
  {
    const auto g = F.pi(-1) / F(-1);
    const auto gi = gsp4::special::d(F, g, g).inverse(), dd = gsp4::special::d(F, g, g);
    const auto pinv = F.pi(-1);
    integrals::Integrand f = [&](std::span<const padic::PAdicNumber> x, cyclo::RootSum& acc) {
      auto v = M.f_min(gi * gsp4::special::u(F, x[0], x[1], x[2], x[3]) * dd);
      if (!v.nonzero) return;
      acc.add(cyclo::root_times(3, cyclo::Root{1, v.k}, cyclo::psi_root((x[0] + x[3]) * pinv)), v.sign);
    };
    integrals::LatticeBox box{3, {integrals::Axis{integrals::AxisKind::Additive, -1, 1, false},
                                  integrals::Axis{integrals::AxisKind::Additive, -2, 0, false},
                                  integrals::Axis{integrals::AxisKind::Additive, -3, -1, false},
                                  integrals::Axis{integrals::AxisKind::Additive, -1, 1, false}}};
    integrals::IntegrationOptions os, op;
    os.exec = Exec::Serial;
    os.level = op.level = 3;
    cyclo::CyclotomicValue vs, vp;
    double ts = timed([&] { vs = integrals::integrate(f, box, os); });
    double tp = timed([&] { vp = integrals::integrate(f, box, op); });
    row("lattice integration", ts, tp, vs == vp);
    status |= !(vs == vp);
  }
  return status;
}
