#include "ssc/padic.hpp"

#include <array>
#include <sstream>

namespace ssc::padic {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 kPowerLimit = u64{1} << 62;

struct PowerTable {
  std::array<std::array<u64, 64>, kMaxPrime + 1> pw{};
  std::array<int, kMaxPrime + 1> cap{};
};

constexpr PowerTable build_table() {
  PowerTable t{};
  for (int p = 2; p <= kMaxPrime; ++p) {
    u64 x = 1;
    int k = 0;
    t.pw[p][0] = 1;
    while (k + 1 < 64 && x <= (kPowerLimit - 1) / static_cast<u64>(p)) {
      x *= static_cast<u64>(p);
      ++k;
      t.pw[p][k] = x;
    }
    t.cap[p] = k;
  }
  return t;
}

constexpr PowerTable kTable = build_table();

inline u64 pw(int p, int k) { return kTable.pw[p][k]; }

inline u64 mulmod(u64 a, u64 b, u64 m) {
  if (m <= 0xffffffffULL) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 invmod(u64 a, u64 m) {
  i128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    i128 qt = r0 / r1;
    i128 t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw DivisionByZero("unit is not invertible");
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

int strip(u64& x, int p) {
  int k = 0;
  while (x % static_cast<u64>(p) == 0) {
    x /= static_cast<u64>(p);
    ++k;
  }
  return k;
}

void check_prime(int p) {
  if (!is_supported_prime(p)) throw BadParameter("unsupported prime " + std::to_string(p));
}

void check_rel(int p, int r) {
  if (r > kTable.cap[p])
    throw BadParameter("relative precision " + std::to_string(r) + " exceeds word size for p=" +
                       std::to_string(p));
}

}  // namespace

bool is_supported_prime(int p) {
  if (p < 3 || p > kMaxPrime || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int max_relative_precision(int p) {
  check_prime(p);
  return kTable.cap[p];
}

std::uint64_t power(int p, int k) {
  if (k < 0 || k > kTable.cap[p]) throw BadParameter("power out of range");
  return pw(p, k);
}

Rational PPowerFraction::to_rational(int p) const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(exponent));
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(numerator), 0, 0, &numerator);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PAdicNumber PAdicNumber::zero(int p, int absolute_precision) {
  PAdicNumber z;
  z.p_ = p;
  z.val_ = kInfiniteValuation;
  z.abs_ = absolute_precision >= kExactPrecision ? kExactPrecision : absolute_precision;
  z.unit_ = 0;
  return z;
}

PAdicNumber PAdicNumber::from_parts(int p, int valuation, std::uint64_t unit, int absolute_precision) {
  int r = absolute_precision - valuation;
  if (r <= 0) return zero(p, absolute_precision);
  check_rel(p, r);
  PAdicNumber x;
  x.p_ = p;
  x.val_ = valuation;
  x.abs_ = absolute_precision;
  x.unit_ = unit % pw(p, r);
  if (x.unit_ % static_cast<u64>(p) == 0) throw BadParameter("unit part divisible by p");
  return x;
}

PAdicNumber PAdicNumber::from_integer(int p, std::int64_t n, int precision) {
  check_prime(p);
  if (n == 0) return zero(p);
  check_rel(p, precision);
  bool neg = n < 0;
  u64 m = neg ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  int v = strip(m, p);
  u64 mod = pw(p, precision);
  u64 u = m % mod;
  if (neg) u = (mod - u) % mod;
  return from_parts(p, v, u, v + precision);
}

PAdicNumber PAdicNumber::from_rational(int p, std::int64_t num, std::int64_t den, int precision) {
  if (den == 0) throw DivisionByZero("zero denominator");
  return from_integer(p, num, precision) / from_integer(p, den, precision);
}

PAdicNumber PAdicNumber::from_rational(int p, const Rational& r, int precision) {
  check_prime(p);
  check_rel(p, precision);
  if (r == 0) return zero(p);
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class pz = p;
  int v = static_cast<int>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t())) -
          static_cast<int>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(precision));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class u = num * inv;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  u64 uu = 0;
  mpz_export(&uu, nullptr, 1, sizeof(uu), 0, 0, u.get_mpz_t());
  return from_parts(p, v, uu, v + precision);
}

PAdicNumber PAdicNumber::uniformizer_power(int p, int k, int precision) {
  check_prime(p);
  check_rel(p, precision);
  return from_parts(p, k, 1, k + precision);
}

PAdicNumber PAdicNumber::operator+(const PAdicNumber& o) const {
  if (p_ != o.p_) throw BadParameter("mixed primes");
  int a = std::min(abs_, o.abs_);
  if (is_zero()) return o.with_absolute_precision(std::min(a, o.abs_));
  if (o.is_zero()) return with_absolute_precision(a);
  int v = std::min(val_, o.val_);
  int r = a - v;
  u64 mod = pw(p_, r);
  u64 s = 0;
  int dx = val_ - v, dy = o.val_ - v;
  if (dx < r) s = mulmod(unit_ % mod, pw(p_, dx), mod);
  if (dy < r) s += mulmod(o.unit_ % mod, pw(p_, dy), mod);
  if (s >= mod) s -= mod;
  if (s == 0) return zero(p_, a);
  int k = strip(s, p_);
  PAdicNumber x;
  x.p_ = p_;
  x.val_ = v + k;
  x.abs_ = a;
  x.unit_ = s;
  return x;
}

PAdicNumber PAdicNumber::operator-() const {
  if (is_zero()) return *this;
  PAdicNumber x = *this;
  x.unit_ = pw(p_, abs_ - val_) - unit_;
  return x;
}

PAdicNumber PAdicNumber::operator-(const PAdicNumber& o) const { return *this + (-o); }

PAdicNumber PAdicNumber::operator*(const PAdicNumber& o) const {
  if (p_ != o.p_) throw BadParameter("mixed primes");
  if (is_zero() || o.is_zero()) {
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    if (is_zero() && o.is_zero()) return zero(p_, abs_ + o.abs_);
    if (is_zero()) return zero(p_, abs_ + o.val_);
    return zero(p_, o.abs_ + val_);
  }
  int r = std::min(abs_ - val_, o.abs_ - o.val_);
  u64 mod = pw(p_, r);
  PAdicNumber x;
  x.p_ = p_;
  x.val_ = val_ + o.val_;
  x.abs_ = x.val_ + r;
  x.unit_ = mulmod(unit_ % mod, o.unit_ % mod, mod);
  return x;
}

PAdicNumber PAdicNumber::inverse() const {
  if (is_exact_zero()) throw DivisionByZero("inverse of zero");
  if (is_zero()) throw PrecisionExhausted("inverse of a value indistinguishable from zero");
  int r = abs_ - val_;
  PAdicNumber x;
  x.p_ = p_;
  x.val_ = -val_;
  x.abs_ = -val_ + r;
  x.unit_ = invmod(unit_, pw(p_, r));
  return x;
}

PAdicNumber PAdicNumber::operator/(const PAdicNumber& o) const { return *this * o.inverse(); }

PAdicNumber PAdicNumber::shifted(int k) const {
  if (is_exact_zero()) return *this;
  PAdicNumber x = *this;
  x.abs_ += k;
  if (!is_zero()) x.val_ += k;
  return x;
}

PAdicNumber PAdicNumber::with_absolute_precision(int a) const {
  if (is_zero()) return zero(p_, a);
  if (a <= val_) return zero(p_, a);
  if (a == abs_) return *this;
  int r = a - val_;
  check_rel(p_, r);
  PAdicNumber x = *this;
  x.abs_ = a;
  if (a < abs_) x.unit_ = unit_ % pw(p_, r);
  return x;
}

PAdicNumber PAdicNumber::lifted(int n) const {
  if (is_zero()) return zero(p_);
  return with_absolute_precision(val_ + n);
}

bool PAdicNumber::equals(const PAdicNumber& o) const { return (*this - o).is_zero(); }

PPowerFraction PAdicNumber::fractional_part() const {
  if (abs_ < 0) throw PrecisionExhausted("fractional part needs the value modulo o");
  if (is_zero() || val_ >= 0) return {};
  int m = -val_;
  return {unit_ % pw(p_, m), m};
}

bool PAdicNumber::in_ideal(int k) const {
  if (!is_zero()) return val_ >= k;
  if (abs_ >= k) return true;
  throw PrecisionExhausted("membership in p^" + std::to_string(k) + " undecidable at precision " +
                           std::to_string(abs_));
}

bool PAdicNumber::is_unit() const {
  if (!is_zero()) return val_ == 0;
  if (abs_ >= 1) return false;
  throw PrecisionExhausted("unit test undecidable");
}

bool PAdicNumber::in_one_plus_p() const {
  if (!is_zero()) return val_ == 0 && unit_ % static_cast<u64>(p_) == 1;
  if (abs_ >= 1) return false;
  throw PrecisionExhausted("1+p test undecidable");
}

std::uint64_t PAdicNumber::residue(int k) const {
  if (k < 0) throw BadParameter("negative residue depth");
  if (abs_ < k) throw PrecisionExhausted("residue deeper than precision");
  if (is_zero() || val_ >= k) return 0;
  if (val_ < 0) throw BadParameter("residue of a non-integral value");
  check_rel(p_, k);
  u64 mod = pw(p_, k);
  return mulmod(unit_ % pw(p_, k - val_), pw(p_, val_), mod);
}

Rational PAdicNumber::to_rational() const {
  if (is_zero()) return 0;
  mpz_class u;
  u64 w = unit_;
  mpz_import(u.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(std::abs(val_)));
  Rational r = val_ >= 0 ? Rational(u * pv) : Rational(u, pv);
  r.canonicalize();
  return r;
}

Rational PAdicNumber::norm() const {
  if (is_zero()) return 0;
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(std::abs(val_)));
  Rational r = val_ >= 0 ? Rational(1, pv) : Rational(pv);
  r.canonicalize();
  return r;
}

std::string PAdicNumber::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0";
  if (is_zero()) {
    os << "O(" << p_ << "^" << abs_ << ")";
    return os.str();
  }
  os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << abs_ << ")";
  return os.str();
}

std::vector<PAdicNumber> enumerate_residues(int p, int k_low, int k_high) {
  check_prime(p);
  if (k_low > k_high) throw BadParameter("enumerate_residues: k_low > k_high");
  check_rel(p, k_high - k_low);
  u64 n = pw(p, k_high - k_low);
  std::vector<PAdicNumber> out;
  out.reserve(n);
  out.push_back(PAdicNumber::zero(p, k_high));
  for (u64 a = 1; a < n; ++a) {
    u64 m = a;
    int k = strip(m, p);
    out.push_back(PAdicNumber::from_parts(p, k_low + k, m, k_high));
  }
  return out;
}

PAdicNumber random_unit(int p, int precision, Rng& rng) {
  check_rel(p, precision);
  std::uniform_int_distribution<u64> d(0, pw(p, precision) - 1);
  u64 u;
  do u = d(rng);
  while (u % static_cast<u64>(p) == 0);
  return PAdicNumber::from_parts(p, 0, u, precision);
}

PAdicNumber random_element(int p, int vmin, int vmax, int precision, Rng& rng, double zero_chance) {
  if (zero_chance > 0 && std::uniform_real_distribution<double>(0, 1)(rng) < zero_chance)
    return PAdicNumber::zero(p);
  int v = std::uniform_int_distribution<int>(vmin, vmax)(rng);
  return random_unit(p, precision, rng).shifted(v);
}

PAdicNumber random_in_ideal(int p, int k, int precision, Rng& rng) {
  check_rel(p, precision);
  u64 a = std::uniform_int_distribution<u64>(0, pw(p, precision) - 1)(rng);
  if (a == 0) return PAdicNumber::zero(p, k + precision);
  int s = strip(a, p);
  return PAdicNumber::from_parts(p, k + s, a, k + precision);
}

}  // namespace ssc::padic
