#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssc/padic.hpp"

namespace ssc::cyclo {

inline constexpr int kMaxLevel = 6;

/// zeta_{p^level}^exponent.
struct Root {
  int level = 0;
  std::uint64_t exponent = 0;
};

/**
 * Exact element of Q(zeta_{p^M}) in the power basis {zeta^j : j < phi(p^M)}.
 * The level is kept minimal, so equal values have equal coefficient vectors.
 */
class CyclotomicValue {
 public:
  CyclotomicValue() : CyclotomicValue(3) {}
  explicit CyclotomicValue(int p);

  static CyclotomicValue zero(int p) { return CyclotomicValue(p); }
  static CyclotomicValue rational(int p, const Rational& r);
  static CyclotomicValue root(int p, const Root& r);
  /// Normalizes a dense vector indexed by exponents mod p^level.
  static CyclotomicValue from_dense(int p, int level, const std::vector<Rational>& dense);

  int prime() const { return p_; }
  int level() const { return level_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator-(const CyclotomicValue& o) const;
  CyclotomicValue operator-() const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue scaled(const Rational& r) const;
  CyclotomicValue conjugate() const;

  bool is_zero() const;
  bool is_rational() const { return level_ == 0; }
  bool operator==(const CyclotomicValue& o) const;
  Rational to_rational() const;

  /// Coefficients at the given level (level >= this->level()).
  std::vector<Rational> raised(int level) const;
  /// "3/2" for rationals, otherwise "[c0, c1, ...]@p^M".
  std::string to_string() const;

 private:
  void lower();

  int p_;
  int level_ = 0;
  std::vector<Rational> c_;
};

int phi_prime_power(int p, int level);

/// e^{2 pi i * a} for a = numerator/p^m.
CyclotomicValue root_of_unity(int p, const padic::PPowerFraction& a);
CyclotomicValue root_of_unity(int p, const Rational& a);
Root root_from_fraction(const padic::PPowerFraction& a);

/// Product of two roots, at the deeper of the two levels.
Root root_times(int p, const Root& a, const Root& b);

Root psi_root(const padic::PAdicNumber& x);
Root psi0_root(const padic::PAdicNumber& x);
CyclotomicValue psi(const padic::PAdicNumber& x);
CyclotomicValue psi0(const padic::PAdicNumber& x);

/**
 * Integer multiset of roots of unity at a fixed level; the hot-loop
 * accumulator for character sums. Converted to a CyclotomicValue at the end.
 */
class RootSum {
 public:
  RootSum(int p, int level);

  void add(const Root& r, std::int64_t multiplicity = 1);
  void add(const RootSum& o);
  void add_integer(std::int64_t n) { counts_[0] += n; }
  CyclotomicValue value() const;
  bool empty() const;
  /// True iff the represented value is zero (not just the multiset).
  bool is_zero_value() const { return empty() || value().is_zero(); }
  void clear();
  int prime() const { return p_; }
  int level() const { return level_; }

 private:
  int p_;
  int level_;
  std::uint64_t size_;
  std::vector<std::int64_t> counts_;
};

}  // namespace ssc::cyclo
