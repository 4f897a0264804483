#include "ssc/cyclo.hpp"

#include <algorithm>
#include <sstream>

namespace ssc::cyclo {

namespace {

std::uint64_t ipow(int p, int k) { return padic::power(p, k); }

void check_level(int level) {
  if (level < 0 || level > kMaxLevel)
    throw BadParameter("cyclotomic level " + std::to_string(level) + " outside [0, " +
                       std::to_string(kMaxLevel) + "]");
}

}  // namespace

int phi_prime_power(int p, int level) {
  if (level == 0) return 1;
  return static_cast<int>(ipow(p, level - 1)) * (p - 1);
}

CyclotomicValue::CyclotomicValue(int p) : p_(p), level_(0), c_(1) {}

CyclotomicValue CyclotomicValue::rational(int p, const Rational& r) {
  CyclotomicValue z(p);
  z.c_[0] = r;
  return z;
}

CyclotomicValue CyclotomicValue::from_dense(int p, int level, const std::vector<Rational>& dense) {
  check_level(level);
  const std::uint64_t size = ipow(p, level);
  if (dense.size() != size) throw BadParameter("dense vector has wrong length");
  CyclotomicValue z(p);
  z.level_ = level;
  if (level == 0) {
    z.c_[0] = dense[0];
    return z;
  }
  const std::uint64_t n = size / static_cast<std::uint64_t>(p);
  const std::uint64_t phi = size - n;
  z.c_.assign(dense.begin(), dense.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::uint64_t j = phi; j < size; ++j) {
    if (sgn(dense[j]) == 0) continue;
    std::uint64_t r = j - phi;
    for (int k = 0; k + 1 < p; ++k) z.c_[k * n + r] -= dense[j];
  }
  z.lower();
  return z;
}

CyclotomicValue CyclotomicValue::root(int p, const Root& r) {
  check_level(r.level);
  int level = r.level;
  std::uint64_t e = r.exponent % ipow(p, level);
  while (level > 0 && e % static_cast<std::uint64_t>(p) == 0) {
    e /= static_cast<std::uint64_t>(p);
    --level;
  }
  if (level == 0) return rational(p, 1);
  CyclotomicValue z(p);
  z.level_ = level;
  const std::uint64_t n = ipow(p, level - 1);
  const std::uint64_t phi = n * static_cast<std::uint64_t>(p - 1);
  z.c_.assign(phi, Rational());
  if (e < phi) {
    z.c_[e] = 1;
  } else {
    for (int k = 0; k + 1 < p; ++k) z.c_[k * n + (e - phi)] = -1;
  }
  return z;
}

void CyclotomicValue::lower() {
  while (level_ > 0) {
    if (level_ == 1) {
      for (std::size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) return;
      c_.resize(1);
      level_ = 0;
      return;
    }
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (j % static_cast<std::size_t>(p_) != 0 && sgn(c_[j]) != 0) return;
    std::vector<Rational> d(c_.size() / static_cast<std::size_t>(p_));
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = c_[j * static_cast<std::size_t>(p_)];
    c_ = std::move(d);
    --level_;
  }
}

std::vector<Rational> CyclotomicValue::raised(int level) const {
  if (level < level_) throw BadParameter("cannot lower a level by raising");
  if (level == level_) return c_;
  std::vector<Rational> out(static_cast<std::size_t>(phi_prime_power(p_, level)));
  const std::uint64_t step = ipow(p_, level - level_);
  for (std::size_t j = 0; j < c_.size(); ++j) out[j * step] = c_[j];
  return out;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  if (p_ != o.p_) throw BadParameter("mixed primes");
  if (o.level_ > level_) {
    c_ = raised(o.level_);
    level_ = o.level_;
  }
  const std::uint64_t step = ipow(p_, level_ - o.level_);
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j * step] += o.c_[j];
  lower();
  return *this;
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  CyclotomicValue z = *this;
  z += o;
  return z;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue z = *this;
  for (auto& c : z.c_) c = -c;
  return z;
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const { return *this + (-o); }

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  if (p_ != o.p_) throw BadParameter("mixed primes");
  int level = std::max(level_, o.level_);
  if (level == 0) return rational(p_, c_[0] * o.c_[0]);
  auto a = raised(level), b = o.raised(level);
  const std::uint64_t size = ipow(p_, level);
  std::vector<Rational> dense(size);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      dense[(i + j) % size] += a[i] * b[j];
    }
  }
  return from_dense(p_, level, dense);
}

CyclotomicValue CyclotomicValue::scaled(const Rational& r) const {
  if (sgn(r) == 0) return zero(p_);
  CyclotomicValue z = *this;
  for (auto& c : z.c_) c *= r;
  return z;
}

CyclotomicValue CyclotomicValue::conjugate() const {
  if (level_ == 0) return *this;
  const std::uint64_t size = ipow(p_, level_);
  std::vector<Rational> dense(size);
  for (std::size_t j = 0; j < c_.size(); ++j) dense[(size - j) % size] = c_[j];
  return from_dense(p_, level_, dense);
}

bool CyclotomicValue::is_zero() const { return level_ == 0 && sgn(c_[0]) == 0; }

bool CyclotomicValue::operator==(const CyclotomicValue& o) const {
  return p_ == o.p_ && level_ == o.level_ && c_ == o.c_;
}

Rational CyclotomicValue::to_rational() const {
  if (level_ != 0) throw NotRational(to_string());
  return c_[0];
}

std::string CyclotomicValue::to_string() const {
  if (level_ == 0) return c_[0].get_str();
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < c_.size(); ++j) os << (j ? ", " : "") << c_[j].get_str();
  os << "]@" << p_ << "^" << level_;
  return os.str();
}

Root root_from_fraction(const padic::PPowerFraction& a) {
  check_level(a.exponent);
  return Root{a.exponent, a.numerator};
}

CyclotomicValue root_of_unity(int p, const padic::PPowerFraction& a) {
  return CyclotomicValue::root(p, root_from_fraction(a));
}

CyclotomicValue root_of_unity(int p, const Rational& a) {
  mpz_class den = a.get_den();
  mpz_class pz = p;
  int m = static_cast<int>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
  if (den != 1) throw BadParameter("root_of_unity: denominator of " + a.get_str() + " is not a power of " +
                                   std::to_string(p));
  check_level(m);
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
  mpz_class num = a.get_num();
  mpz_mod(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  return CyclotomicValue::root(p, Root{m, num.get_ui()});
}

Root root_times(int p, const Root& a, const Root& b) {
  const int level = std::max(a.level, b.level);
  const std::uint64_t n = ipow(p, level);
  const std::uint64_t ea = a.exponent * ipow(p, level - a.level) % n;
  const std::uint64_t eb = b.exponent * ipow(p, level - b.level) % n;
  return {level, (ea + eb) % n};
}

Root psi_root(const padic::PAdicNumber& x) { return root_from_fraction(x.fractional_part()); }
Root psi0_root(const padic::PAdicNumber& x) { return psi_root(x.shifted(-1)); }
CyclotomicValue psi(const padic::PAdicNumber& x) { return CyclotomicValue::root(x.prime(), psi_root(x)); }
CyclotomicValue psi0(const padic::PAdicNumber& x) { return CyclotomicValue::root(x.prime(), psi0_root(x)); }

RootSum::RootSum(int p, int level) : p_(p), level_(level) {
  check_level(level);
  size_ = ipow(p, level);
  counts_.assign(size_, 0);
}

void RootSum::add(const Root& r, std::int64_t multiplicity) {
  if (r.level > level_) throw BadParameter("root deeper than accumulator level");
  std::uint64_t idx = (r.exponent * ipow(p_, level_ - r.level)) % size_;
  counts_[idx] += multiplicity;
}

void RootSum::add(const RootSum& o) {
  if (o.p_ != p_ || o.level_ != level_) throw BadParameter("accumulator shape mismatch");
  for (std::uint64_t j = 0; j < size_; ++j) counts_[j] += o.counts_[j];
}

void RootSum::clear() { std::fill(counts_.begin(), counts_.end(), 0); }

bool RootSum::empty() const {
  for (auto c : counts_)
    if (c != 0) return false;
  return true;
}

CyclotomicValue RootSum::value() const {
  // reduce and lower in integers, convert only the final coefficients
  std::vector<std::int64_t> c(counts_);
  int level = level_;
  if (level > 0) {
    const std::uint64_t n = size_ / static_cast<std::uint64_t>(p_);
    const std::uint64_t phi = size_ - n;
    for (std::uint64_t j = phi; j < size_; ++j) {
      if (c[j] == 0) continue;
      for (int k = 0; k + 1 < p_; ++k) c[k * n + (j - phi)] -= c[j];
    }
    c.resize(phi);
  }
  while (level > 0) {
    bool lowerable = true;
    if (level == 1) {
      for (std::size_t j = 1; j < c.size() && lowerable; ++j) lowerable = c[j] == 0;
      if (!lowerable) break;
      c.resize(1);
      level = 0;
      break;
    }
    for (std::size_t j = 0; j < c.size() && lowerable; ++j)
      lowerable = j % static_cast<std::size_t>(p_) == 0 || c[j] == 0;
    if (!lowerable) break;
    std::vector<std::int64_t> d(c.size() / static_cast<std::size_t>(p_));
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = c[j * static_cast<std::size_t>(p_)];
    c = std::move(d);
    --level;
  }
  if (level == 0) return CyclotomicValue::rational(p_, Rational(static_cast<long>(c[0])));
  std::vector<Rational> dense(ipow(p_, level));
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) dense[j] = Rational(static_cast<long>(c[j]));
  return CyclotomicValue::from_dense(p_, level, dense);
}
}  // namespace ssc::cyclo
