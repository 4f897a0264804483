#include <atomic>

#include <omp.h>

#include "ssc/gsp4.hpp"

namespace ssc::gsp4 {

namespace {

// The right-hand Weyl-type factors of the four families.
GSp4Element family_tail(const Field& F, int family) {
  auto z = F.zero();
  switch (family) {
    case 1:
      return special::s2(F);
    case 2:
      return GSp4Element::identity(F);
    case 3:
      return from_rows(F, {{{z, z, z, F.pi(-5)}, {z, z, F(1), z}, {z, F(-1), z, z}, {-F.pi(5), z, z, z}}});
    default:
      return from_rows(F, {{{z, z, z, F.pi(-5)}, {z, F(1), z, z}, {z, z, F(1), z}, {-F.pi(5), z, z, z}}});
  }
}

}  // namespace

std::uint64_t family_size(int q, int family) {
  const std::uint64_t u = static_cast<std::uint64_t>(q - 1) * static_cast<std::uint64_t>(q - 1);
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  switch (family) {
    case 1: return u * Q * Q * Q * Q;
    case 2:
    case 3: return u * Q * Q * Q;
    case 4: return u * Q * Q;
    default: throw BadParameter("family must be 1..4");
  }
}

std::vector<CosetRep> representatives_S(const Field& F) {
  const int p = F.p;
  const auto d = special::d_pow(F, 1, 1);
  std::vector<CosetRep> out;
  for (int family = 1; family <= 4; ++family) {
    // x runs mod p^2 (X(x)) or mod p (X(x pi)); y mod p^2 with pi^-5, z mod p with pi^-4
    const bool x_deep = family == 1 || family == 3;
    const bool y_deep = family <= 2;
    const std::int64_t xr = x_deep ? p * p : p;
    const std::int64_t yr = y_deep ? p * p : p;
    const auto tail = family_tail(F, family);
    for (std::int64_t u = 1; u < p; ++u) {
      for (std::int64_t v = 1; v < p; ++v) {
        const auto mu = d * special::m(F, F(u), F(v));
        for (std::int64_t x = 0; x < xr; ++x) {
          const auto X = special::X(F, x_deep ? F(x) : F(x) * F.pi(1));
          const auto dmX = mu * X;
          for (std::int64_t y = 0; y < yr; ++y) {
            const auto Y = special::Y(F, F(y) * F.pi(y_deep ? -5 : -4));
            out.push_back({family, u, v, x, y, dmX * Y * tail});
          }
        }
      }
    }
  }
  return out;
}

std::vector<GSp4Element> klingen_representatives(const Field& F) {
  const int p = F.p;
  const auto d = special::d_pow(F, 1, 1);
  const auto s2 = special::s2(F);
  std::vector<GSp4Element> out;
  for (std::int64_t u = 1; u < p; ++u)
    for (std::int64_t v = 1; v < p; ++v) {
      const auto dm = d * special::m(F, F(u), F(v));
      for (std::int64_t x = 0; x < p * p; ++x) out.push_back(dm * special::X(F, F(x)) * s2);
      for (std::int64_t x = 0; x < p; ++x) out.push_back(dm * special::X(F, F(x) * F.pi(1)));
    }
  return out;
}

CosetReport verify_coset_partition(const std::vector<GSp4Element>& reps, const Sampler& ambient,
                                   std::size_t samples, const ElementTest& coset_test, Rng& rng,
                                   Exec exec) {
  CosetReport r;
  r.representatives = reps.size();
  r.samples = samples;
  const std::int64_t n = static_cast<std::int64_t>(reps.size());
  std::vector<GSp4Element> inv(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) inv[i] = reps[i].inverse();

  constexpr std::size_t kKeep = 10;
  std::atomic<std::size_t> bad{0};
  std::vector<std::string> notes;
  auto pair_check = [&](std::int64_t i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (coset_test(reps[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j)])) {
        if (bad.fetch_add(1) < kKeep) {
#pragma omp critical(coset_notes)
          notes.push_back("representatives " + std::to_string(i) + " and " + std::to_string(j) +
                          " share a coset");
        }
      }
    }
  };
  std::exception_ptr err;
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) pair_check(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        pair_check(i);
      } catch (...) {
#pragma omp critical(coset_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
  r.pairs_checked = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  r.disjointness_violations = bad.load();

  // samples are drawn serially so the stream does not depend on the schedule
  for (std::size_t k = 0; k < samples; ++k) {
    const auto g = ambient(rng);
    std::size_t hits = 0;
    for (std::int64_t j = 0; j < n; ++j)
      if (coset_test(g * inv[static_cast<std::size_t>(j)])) ++hits;
    if (hits == 0) {
      ++r.unmatched;
      if (notes.size() < 2 * kKeep) notes.push_back("sample " + std::to_string(k) + " matched no representative");
    } else if (hits > 1) {
      ++r.multiply_matched;
      if (notes.size() < 2 * kKeep)
        notes.push_back("sample " + std::to_string(k) + " matched " + std::to_string(hits) + " representatives");
    }
  }
  r.violations = std::move(notes);
  return r;
}

}  // namespace ssc::gsp4
