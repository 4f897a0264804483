#include "ssc/lattice.hpp"

#include <atomic>

#include <omp.h>

namespace ssc::integrals {

using padic::PAdicNumber;

namespace {

Rational q_power(int p, int k) {
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(k)));
  Rational r = k >= 0 ? Rational(pv) : Rational(1, pv);
  r.canonicalize();
  return r;
}

std::uint64_t axis_cells(int p, const Axis& a) {
  int r = a.resolution();
  if (r < 0) throw BadParameter("axis with high < low");
  if (a.kind == AxisKind::Multiplicative || a.annulus) {
    if (r == 0) {
      if (a.annulus) throw BadParameter("annulus axis needs resolution >= 1");
      return 1;
    }
    return padic::power(p, r - 1) * static_cast<std::uint64_t>(p - 1);
  }
  return padic::power(p, r);
}

struct CellGrid {
  std::vector<std::vector<PAdicNumber>> points;
  std::uint64_t total = 1;

  CellGrid(const LatticeBox& box, const IntegrationOptions& opt) {
    for (auto& a : box.axes) {
      points.push_back(axis_points(box.p, a, opt.precision));
      total *= points.back().size();
    }
    if (total > opt.max_cells)
      throw BudgetExceeded("box has " + std::to_string(total) + " cells, budget " +
                           std::to_string(opt.max_cells));
  }

  void fill(std::uint64_t index, std::vector<PAdicNumber>& out) const {
    for (std::size_t k = points.size(); k-- > 0;) {
      const auto n = points[k].size();
      out[k] = points[k][index % n];
      index /= n;
    }
  }
};

}  // namespace

Rational additive_volume(int p, int low) { return q_power(p, -low); }

std::uint64_t LatticeBox::cell_count() const {
  std::uint64_t n = 1;
  for (auto& a : axes) n *= axis_cells(p, a);
  return n;
}

Rational LatticeBox::cell_measure() const {
  Rational m = 1;
  for (auto& a : axes) {
    if (a.kind == AxisKind::Additive) {
      m *= q_power(p, -a.high);
    } else {
      m /= Rational(static_cast<long>(axis_cells(p, a)));
    }
  }
  return m;
}

Rational LatticeBox::volume() const {
  Rational v = 1;
  for (auto& a : axes) {
    if (a.kind == AxisKind::Additive) {
      v *= q_power(p, -a.low);
      if (a.annulus) v *= Rational(p - 1, p);
    }
  }
  return v;
}

LatticeBox LatticeBox::refined(const std::vector<std::size_t>& which) const {
  LatticeBox b = *this;
  if (which.empty()) {
    for (auto& a : b.axes) ++a.high;
  } else {
    for (auto k : which) ++b.axes.at(k).high;
  }
  return b;
}

std::vector<PAdicNumber> axis_points(int p, const Axis& a, int precision) {
  std::vector<PAdicNumber> out;
  const int r = a.resolution();
  if (a.kind == AxisKind::Multiplicative && r == 0) {
    out.push_back(PAdicNumber::uniformizer_power(p, a.low, precision));
    return out;
  }
  for (auto& x : padic::enumerate_residues(p, a.low, a.high)) {
    bool on_shell = !x.is_zero() && x.valuation() == a.low;
    if ((a.kind == AxisKind::Multiplicative || a.annulus) && !on_shell) continue;
    out.push_back(x.lifted(precision));
  }
  return out;
}

namespace {

// Runs body(point, thread_slot) over every cell, serially or with OpenMP.
template <class Body>
void for_each_cell(const LatticeBox& box, const IntegrationOptions& opt, int slots, Body&& body) {
  CellGrid grid(box, opt);
  const std::uint64_t total = grid.total;
  const std::size_t dims = box.axes.size();
  if (opt.exec == Exec::Serial) {
    std::vector<PAdicNumber> pt(dims);
    for (std::uint64_t i = 0; i < total; ++i) {
      grid.fill(i, pt);
      if (!body(pt, 0)) return;
    }
    return;
  }
  std::exception_ptr err;
  std::atomic<bool> stop{false};
#pragma omp parallel num_threads(slots)
  {
    std::vector<PAdicNumber> pt(dims);
    const int slot = omp_get_thread_num();
#pragma omp for schedule(dynamic, 256)
    for (std::uint64_t i = 0; i < total; ++i) {
      if (stop.load(std::memory_order_relaxed)) continue;
      try {
        grid.fill(i, pt);
        if (!body(pt, slot)) stop = true;
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
        stop = true;
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

int slot_count(const IntegrationOptions& opt) { return opt.exec == Exec::Serial ? 1 : omp_get_max_threads(); }

}  // namespace

cyclo::CyclotomicValue cell_sum(const Integrand& f, const LatticeBox& box, const IntegrationOptions& opt) {
  const int slots = slot_count(opt);
  std::vector<cyclo::RootSum> acc(static_cast<std::size_t>(slots), cyclo::RootSum(box.p, opt.level));
  for_each_cell(box, opt, slots, [&](std::span<const PAdicNumber> pt, int slot) {
    f(pt, acc[static_cast<std::size_t>(slot)]);
    return true;
  });
  for (int k = 1; k < slots; ++k) acc[0].add(acc[static_cast<std::size_t>(k)]);
  return acc[0].value();
}

cyclo::CyclotomicValue integrate(const Integrand& f, const LatticeBox& box, const IntegrationOptions& opt) {
  return cell_sum(f, box, opt).scaled(box.cell_measure());
}

cyclo::CyclotomicValue integrate(const ValueIntegrand& f, const LatticeBox& box, const IntegrationOptions& opt) {
  const int slots = slot_count(opt);
  std::vector<cyclo::CyclotomicValue> acc(static_cast<std::size_t>(slots), cyclo::CyclotomicValue(box.p));
  for_each_cell(box, opt, slots, [&](std::span<const PAdicNumber> pt, int slot) {
    acc[static_cast<std::size_t>(slot)] += f(pt);
    return true;
  });
  for (int k = 1; k < slots; ++k) acc[0] += acc[static_cast<std::size_t>(k)];
  return acc[0].scaled(box.cell_measure());
}

std::uint64_t count_nonzero(const Integrand& f, const LatticeBox& box, std::uint64_t limit,
                            const IntegrationOptions& opt) {
  const int slots = slot_count(opt);
  std::vector<cyclo::RootSum> acc(static_cast<std::size_t>(slots), cyclo::RootSum(box.p, opt.level));
  std::atomic<std::uint64_t> hits{0};
  for_each_cell(box, opt, slots, [&](std::span<const PAdicNumber> pt, int slot) {
    auto& a = acc[static_cast<std::size_t>(slot)];
    a.clear();
    f(pt, a);
    if (!a.is_zero_value()) hits.fetch_add(1, std::memory_order_relaxed);
    return hits.load(std::memory_order_relaxed) < limit;
  });
  return std::min<std::uint64_t>(hits.load(), limit);
}

RefineMode affordable_mode(const LatticeBox& box, const IntegrationOptions& opt) {
  return box.refined().cell_count() <= opt.max_cells ? RefineMode::Joint : RefineMode::PerAxis;
}

RefinementResult refinement_check(const Integrand& f, const LatticeBox& box, RefineMode mode,
                                  const IntegrationOptions& opt) {
  RefinementResult r;
  r.coarse = integrate(f, box, opt);
  r.cells = box.cell_count();
  if (mode == RefineMode::Joint) {
    auto fine = box.refined();
    r.fine = integrate(f, fine, opt);
    r.cells += fine.cell_count();
    r.stable = r.fine == r.coarse;
    return r;
  }
  r.stable = true;
  r.fine = r.coarse;
  for (std::size_t k = 0; k < box.axes.size(); ++k) {
    auto fine = box.refined({k});
    auto v = integrate(f, fine, opt);
    r.cells += fine.cell_count();
    if (!(v == r.coarse)) {
      r.stable = false;
      r.unstable_axes.push_back(k);
      r.fine = v;
    }
  }
  return r;
}

LatticeBox outer_slab(const LatticeBox& box, std::size_t axis) {
  LatticeBox s = box;
  Axis& a = s.axes.at(axis);
  if (a.kind != AxisKind::Additive) throw BadParameter("outer slab of a multiplicative axis");
  if (a.annulus) throw BadParameter("outer slab of an annulus");
  a.low -= 1;
  a.annulus = true;
  return s;
}

SupportScan locate_support(const Integrand& f, const LatticeBox& start, const IntegrationOptions& opt) {
  SupportScan scan{start, 0};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < scan.box.axes.size(); ++k) {
      if (scan.box.axes[k].kind != AxisKind::Additive) continue;
      for (;;) {
        LatticeBox s1 = outer_slab(scan.box, k);
        LatticeBox inner = scan.box;
        inner.axes[k].low -= 1;
        LatticeBox s2 = outer_slab(inner, k);
        scan.evaluations += s1.cell_count() + s2.cell_count();
        if (scan.evaluations > opt.max_cells)
          throw SupportNotLocated("support scan exceeded " + std::to_string(opt.max_cells) + " evaluations");
        bool hit1 = count_nonzero(f, s1, 1, opt) > 0;
        bool hit2 = count_nonzero(f, s2, 1, opt) > 0;
        if (!hit1 && !hit2) break;
        scan.box.axes[k].low -= hit2 ? 2 : 1;
        changed = true;
      }
    }
  }
  return scan;
}

IntegralResult auto_resolve(const Integrand& f, LatticeBox box, const IntegrationOptions& opt, int max_resolution) {
  IntegralResult out;
  for (;;) {
    const RefineMode mode = affordable_mode(box, opt);
    auto r = refinement_check(f, box, mode, opt);
    out.cells += r.cells;
    if (r.stable) {
      out.value = r.coarse;
      out.box = box;
      out.stable = true;
      return out;
    }
    std::vector<std::size_t> raise = r.unstable_axes;
    if (raise.empty())
      for (std::size_t k = 0; k < box.axes.size(); ++k) raise.push_back(k);
    for (auto k : raise) {
      auto& a = box.axes[k];
      if (a.resolution() >= max_resolution)
        throw PrecisionExhausted("axis " + std::to_string(k) + " still unstable at resolution " +
                                 std::to_string(a.resolution()));
      ++a.high;
    }
  }
}

IntegralResult scan_and_resolve(const Integrand& f, const LatticeBox& start, const IntegrationOptions& opt) {
  LatticeBox box = start;
  std::uint64_t cells = 0;
  for (int round = 0; round < 4; ++round) {
    auto scan = locate_support(f, box, opt);
    cells += scan.evaluations;
    // a box that grew is rescanned at the resolution it ends up needing
    const bool grew = !(scan.box.axes == box.axes);
    auto res = auto_resolve(f, scan.box, opt);
    res.cells += cells;
    if (!grew && res.box.axes == box.axes) return res;
    cells = res.cells;
    box = res.box;
  }
  throw SupportNotLocated("support box did not settle");
}

}  // namespace ssc::integrals
