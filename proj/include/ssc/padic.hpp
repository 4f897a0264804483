#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ssc/errors.hpp"

namespace ssc {

using Rational = mpq_class;
using Rng = std::mt19937_64;

namespace padic {

inline constexpr int kDefaultPrecision = 12;
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max() / 2;
// Absolute precision carried by an exact zero.
inline constexpr int kExactPrecision = std::numeric_limits<int>::max() / 4;
inline constexpr int kMaxPrime = 127;

bool is_supported_prime(int p);
// Largest r such that p^r < 2^62.
int max_relative_precision(int p);
std::uint64_t power(int p, int k);

/// numerator / p^exponent with 0 <= numerator < p^exponent.
struct PPowerFraction {
  std::uint64_t numerator = 0;
  int exponent = 0;

  Rational to_rational(int p) const;
  bool operator==(const PPowerFraction&) const = default;
};

/**
 * An element of Q_p known modulo p^A.
 *
 * Nonzero values are p^v * u with u a unit stored modulo p^(A - v).
 * Zero carries only its absolute precision; an exact zero (from the integer 0)
 * has A = kExactPrecision and absorbs products.
 */
class PAdicNumber {
 public:
  PAdicNumber() = default;

  static PAdicNumber zero(int p, int absolute_precision = kExactPrecision);
  static PAdicNumber from_integer(int p, std::int64_t n, int precision = kDefaultPrecision);
  static PAdicNumber from_rational(int p, std::int64_t num, std::int64_t den,
                                   int precision = kDefaultPrecision);
  static PAdicNumber from_rational(int p, const Rational& r, int precision = kDefaultPrecision);
  /// p^k with the given relative precision.
  static PAdicNumber uniformizer_power(int p, int k, int precision = kDefaultPrecision);
  /// p^v * unit with unit reduced mod p^(absolute - v); unit must be prime to p.
  static PAdicNumber from_parts(int p, int valuation, std::uint64_t unit, int absolute_precision);

  int prime() const { return p_; }
  bool is_zero() const { return val_ == kInfiniteValuation; }
  bool is_exact_zero() const { return is_zero() && abs_ >= kExactPrecision; }
  int valuation() const { return val_; }
  std::uint64_t unit() const { return unit_; }
  int absolute_precision() const { return abs_; }
  int relative_precision() const { return is_zero() ? 0 : abs_ - val_; }

  PAdicNumber operator+(const PAdicNumber& o) const;
  PAdicNumber operator-(const PAdicNumber& o) const;
  PAdicNumber operator*(const PAdicNumber& o) const;
  PAdicNumber operator/(const PAdicNumber& o) const;
  PAdicNumber operator-() const;
  PAdicNumber& operator+=(const PAdicNumber& o) { return *this = *this + o; }
  PAdicNumber& operator-=(const PAdicNumber& o) { return *this = *this - o; }
  PAdicNumber& operator*=(const PAdicNumber& o) { return *this = *this * o; }

  PAdicNumber inverse() const;
  /// Multiply by p^k (exact shift of the valuation and the precision).
  PAdicNumber shifted(int k) const;

  /// Same value regarded as known modulo p^a. Raising a is a choice of lift.
  PAdicNumber with_absolute_precision(int a) const;
  /// Lift to relative precision n (value read as an exact representative).
  PAdicNumber lifted(int n) const;

  /// Equality modulo p^min(A_x, A_y).
  bool equals(const PAdicNumber& o) const;
  bool operator==(const PAdicNumber& o) const { return equals(o); }

  PPowerFraction fractional_part() const;
  bool in_ideal(int k) const;
  bool is_unit() const;
  bool in_one_plus_p() const;
  /// Residue of x mod p^k for x in o, as an integer in [0, p^k).
  std::uint64_t residue(int k) const;

  /// |x| = q^{-v(x)}; zero has norm 0.
  Rational norm() const;
  /// Representative p^v * u as a rational.
  Rational to_rational() const;
  std::string to_string() const;

 private:
  int p_ = 3;
  int val_ = kInfiniteValuation;
  int abs_ = kExactPrecision;
  std::uint64_t unit_ = 0;
};

/// Representatives a*p^k_low, a = 0 .. p^(k_high-k_low)-1, each with A = k_high.
std::vector<PAdicNumber> enumerate_residues(int p, int k_low, int k_high);

/// Random element with valuation in [vmin, vmax] (zero with probability zero_chance).
PAdicNumber random_element(int p, int vmin, int vmax, int precision, Rng& rng,
                           double zero_chance = 0.0);
PAdicNumber random_unit(int p, int precision, Rng& rng);
/// Random element of p^k o at absolute precision k + precision.
PAdicNumber random_in_ideal(int p, int k, int precision, Rng& rng);

/**
 * Convenience bundle of a prime and a working precision; builds constants.
 */
struct Field {
  int p = 3;
  int precision = kDefaultPrecision;

  PAdicNumber operator()(std::int64_t n) const { return PAdicNumber::from_integer(p, n, precision); }
  PAdicNumber frac(std::int64_t num, std::int64_t den) const {
    return PAdicNumber::from_rational(p, num, den, precision);
  }
  PAdicNumber pi(int k = 1) const { return PAdicNumber::uniformizer_power(p, k, precision); }
  PAdicNumber zero() const { return PAdicNumber::zero(p); }
  PAdicNumber one() const { return (*this)(1); }
  int q() const { return p; }
};

}  // namespace padic
}  // namespace ssc
