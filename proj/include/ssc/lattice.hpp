#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ssc/cyclo.hpp"
#include "ssc/exec.hpp"
#include "ssc/padic.hpp"

namespace ssc::integrals {

enum class AxisKind { Additive, Multiplicative };

/**
 * One coordinate of a box.
 * Additive: the set p^low o, cut into cells of p^high; with `annulus` only the
 * part p^low o minus p^(low+1) o.
 * Multiplicative: the shell v(x) = low, cut into cells x(1 + p^(high-low)).
 */
struct Axis {
  AxisKind kind = AxisKind::Additive;
  int low = 0;
  int high = 1;
  bool annulus = false;

  int resolution() const { return high - low; }
  bool operator==(const Axis&) const = default;
};

struct LatticeBox {
  int p = 3;
  std::vector<Axis> axes;

  std::uint64_t cell_count() const;
  /// Measure of one cell (every cell of a box has the same measure).
  Rational cell_measure() const;
  Rational volume() const;
  /// Raise the resolution of the given axes by one step (all axes if empty).
  LatticeBox refined(const std::vector<std::size_t>& which = {}) const;
};

Rational additive_volume(int p, int low);

/**
 * Integrands add their value at a point into an integer multiset of roots of
 * unity. Every integrand in this library is an integer combination of roots,
 * which keeps the inner loop free of rational arithmetic.
 */
using Integrand = std::function<void(std::span<const padic::PAdicNumber>, cyclo::RootSum&)>;
/// General integrand with rational cyclotomic values (slow path).
using ValueIntegrand = std::function<cyclo::CyclotomicValue(std::span<const padic::PAdicNumber>)>;

using ssc::Exec;

struct IntegrationOptions {
  int precision = padic::kDefaultPrecision;
  Exec exec = Exec::Parallel;
  std::uint64_t max_cells = 50'000'000;
  /// Level of the root accumulator; integrands deeper than this throw.
  int level = 2;
};

/// Cell representatives of one axis, lifted to the working precision.
std::vector<padic::PAdicNumber> axis_points(int p, const Axis& axis, int precision);

/// Sum of f over the cell representatives, without the measure.
cyclo::CyclotomicValue cell_sum(const Integrand& f, const LatticeBox& box,
                                const IntegrationOptions& opt = {});
/// Sum over cells of f(representative) times the cell measure.
cyclo::CyclotomicValue integrate(const Integrand& f, const LatticeBox& box,
                                 const IntegrationOptions& opt = {});
cyclo::CyclotomicValue integrate(const ValueIntegrand& f, const LatticeBox& box,
                                 const IntegrationOptions& opt = {});
/// Number of cells on which f is nonzero; stops early after `limit` hits.
std::uint64_t count_nonzero(const Integrand& f, const LatticeBox& box, std::uint64_t limit,
                            const IntegrationOptions& opt = {});

enum class RefineMode { Joint, PerAxis };

struct RefinementResult {
  bool stable = false;
  cyclo::CyclotomicValue coarse;
  cyclo::CyclotomicValue fine;
  std::vector<std::size_t> unstable_axes;
  std::uint64_t cells = 0;
};

/**
 * Recompute one resolution step finer and compare. Joint refines every axis at
 * once; PerAxis refines each axis separately (cheaper, used when the joint box
 * would exceed the cell budget).
 */
RefinementResult refinement_check(const Integrand& f, const LatticeBox& box, RefineMode mode,
                                  const IntegrationOptions& opt = {});

/// Joint if the refined box fits the cell budget, per-axis otherwise.
RefineMode affordable_mode(const LatticeBox& box, const IntegrationOptions& opt);

/// The slab one shell outside the box along an additive axis, same cell size.
LatticeBox outer_slab(const LatticeBox& box, std::size_t axis);

struct SupportScan {
  LatticeBox box;
  std::uint64_t evaluations = 0;
};

/**
 * Grow each additive axis downward until two consecutive slabs vanish.
 * Starts from `start`; throws SupportNotLocated when the cell budget runs out.
 */
SupportScan locate_support(const Integrand& f, const LatticeBox& start, const IntegrationOptions& opt);

/// An integral value together with the evidence it was computed on a valid box.
struct IntegralResult {
  cyclo::CyclotomicValue value;
  LatticeBox box;
  bool stable = false;
  std::uint64_t cells = 0;
};

/**
 * Raise the resolution of every axis that changes the value under refinement
 * until the per-axis check passes. Throws PrecisionExhausted when an axis would
 * need more than `max_resolution` steps.
 */
IntegralResult auto_resolve(const Integrand& f, LatticeBox box, const IntegrationOptions& opt,
                            int max_resolution = 6);

/// Grow the box until slabs outside it vanish, then resolve it.
IntegralResult scan_and_resolve(const Integrand& f, const LatticeBox& start, const IntegrationOptions& opt);

}  // namespace ssc::integrals
