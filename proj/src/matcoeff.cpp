#include <exception>

#include <omp.h>

#include "ssc/reps.hpp"

namespace ssc::reps {

namespace {

// Level of the root accumulators: every family argument has denominator at most p^2.
constexpr int kLevel = 2;

void pair_row(const Model& M, const GSp4Element& sg, const std::vector<GSp4Element>& inv, cyclo::RootSum& acc) {
  for (const auto& si : inv) {
    auto r = gsp4::h_residues(sg * si);
    if (r) M.character().from_residues(*r).add_to(acc);
  }
}

}  // namespace

cyclo::CyclotomicValue matcoeff_bruteforce(const Model& M, const PAdicNumber& a, const PAdicNumber& b,
                                           const PAdicNumber& c, const PAdicNumber& e, int family, Exec exec) {
  if (family < 0 || family > 4) throw BadParameter("family must be 0..4");
  const int p = M.prime();
  const auto g = gsp4::special::u(M.field(), a, b, c, e);
  const auto& S = M.shifted_reps(family);
  const auto& inv = M.shifted_inverses(family);
  const auto n = static_cast<std::int64_t>(S.size());
  cyclo::RootSum total(p, 1);
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) pair_row(M, S[static_cast<std::size_t>(i)] * g, inv, total);
    return total.value();
  }
  std::exception_ptr err;
#pragma omp parallel
  {
    cyclo::RootSum local(p, 1);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        pair_row(M, S[static_cast<std::size_t>(i)] * g, inv, local);
      } catch (...) {
#pragma omp critical(matcoeff_err)
        if (!err) err = std::current_exception();
      }
    }
#pragma omp critical(matcoeff_sum)
    total.add(local);
  }
  if (err) std::rethrow_exception(err);
  return total.value();
}

std::array<int, 4> family_box_lows(int family) {
  switch (family) {
    case 1: return {-1, 0, -2, 1};
    case 2: return {0, 0, -2, 0};
    case 3: return {-2, -1, -3, 1};
    case 4: return {-1, -1, -3, 0};
    default: throw BadParameter("family must be 1..4");
  }
}

bool family_box(int family, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c,
                const PAdicNumber& e) {
  const auto lo = family_box_lows(family);
  return a.in_ideal(lo[0]) && b.in_ideal(lo[1]) && c.in_ideal(lo[2]) && e.in_ideal(lo[3]);
}

void matcoeff_family_add(int family, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c,
                         const PAdicNumber& e, const PAdicNumber& t, const PAdicNumber& shift,
                         cyclo::RootSum& acc) {
  if (!family_box(family, a, b, c, e)) return;
  const int p = a.prime();
  const int prec = padic::kDefaultPrecision;
  auto num = [&](std::int64_t k) { return PAdicNumber::from_integer(p, k, prec); };
  auto pi = [&](int k) { return PAdicNumber::uniformizer_power(p, k, prec); };
  auto add = [&](const PAdicNumber& arg, std::int64_t mult) { acc.add(cyclo::psi_root(arg + shift), mult); };
  const std::int64_t q = p;

  switch (family) {
    case 1: {
      // (q-1) q^2 sum_{v, x mod p^2, a pi x + b in p} psi(v (a pi x + b) pi^-2)
      const auto api = a * pi(1);
      for (std::int64_t x = 0; x < q * q; ++x) {
        const auto w = api * num(x) + b;
        if (!w.in_ideal(1)) continue;
        const auto w2 = w * pi(-2);
        for (std::int64_t v = 1; v < q; ++v) add(num(v) * w2, (q - 1) * q * q);
      }
      break;
    }
    case 2: {
      // q^2 sum_{u, v, x mod p, 1+ex unit} psi(v (a - bx) / pi + e u / (v (1+ex) pi))
      for (std::int64_t x = 0; x < q; ++x) {
        const auto ex = num(1) + e * num(x);
        if (!ex.is_unit()) continue;
        const auto abx = (a - b * num(x)) * pi(-1);
        const auto eterm = e * pi(-1) / ex;
        for (std::int64_t v = 1; v < q; ++v) {
          const auto vv = num(v);
          const auto left = vv * abx;
          const auto er = eterm / vv;
          for (std::int64_t u = 1; u < q; ++u) add(left + num(u) * er, q * q);
        }
      }
      break;
    }
    case 3: {
      // sum_{u, v, x mod p^2, y mod p, b + a pi x in o, 1 - (ab+c) pi^3 y unit}
      //   psi(-v (b + a pi x) y / pi - u (ab+c) pi^2)
      const auto abc = a * b + c;
      const auto abc3 = abc * pi(3);
      const auto abc2 = abc * pi(2);
      const auto api = a * pi(1);
      for (std::int64_t y = 0; y < q; ++y) {
        if (!(num(1) - abc3 * num(y)).is_unit()) continue;
        for (std::int64_t x = 0; x < q * q; ++x) {
          const auto w = b + api * num(x);
          if (!w.in_ideal(0)) continue;
          const auto left = -(w * num(y) * pi(-1));
          for (std::int64_t v = 1; v < q; ++v)
            for (std::int64_t u = 1; u < q; ++u) add(num(v) * left - num(u) * abc2, 1);
        }
      }
      break;
    }
    case 4: {
      // sum_{u, v, x, y mod p, 1+ex unit, D unit}
      //   psi(-v (a - bx) y / D + e u / (pi v (1+ex) D) - t (ab+c) pi^2 / (u v D^2))
      const auto abc = a * b + c;
      const auto abc3 = abc * pi(3);
      const auto tabc2 = t * abc * pi(2);
      for (std::int64_t y = 0; y < q; ++y) {
        const auto D = num(1) - abc3 * num(y);
        if (!D.is_unit()) continue;
        const auto Dinv = D.inverse();
        for (std::int64_t x = 0; x < q; ++x) {
          const auto ex = num(1) + e * num(x);
          if (!ex.is_unit()) continue;
          const auto first = -((a - b * num(x)) * num(y) * Dinv);
          const auto second = e * pi(-1) / (ex * D);
          const auto third = tabc2 * Dinv * Dinv;
          for (std::int64_t v = 1; v < q; ++v) {
            const auto vi = num(v).inverse();
            for (std::int64_t u = 1; u < q; ++u) {
              const auto ui = num(u).inverse();
              add(num(v) * first + num(u) * vi * second - ui * vi * third, 1);
            }
          }
        }
      }
      break;
    }
    default:
      throw BadParameter("family must be 1..4");
  }
}

cyclo::CyclotomicValue matcoeff_family(int family, const PAdicNumber& a, const PAdicNumber& b,
                                       const PAdicNumber& c, const PAdicNumber& e, const PAdicNumber& t) {
  cyclo::RootSum acc(a.prime(), kLevel);
  matcoeff_family_add(family, a, b, c, e, t, PAdicNumber::zero(a.prime()), acc);
  return acc.value();
}

}  // namespace ssc::reps
