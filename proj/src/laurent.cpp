#include <sstream>

#include "ssc/integrals.hpp"

namespace ssc::integrals {

namespace {

Rational q_pow(int p, int k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
  Rational r = k >= 0 ? Rational(v) : Rational(1, v);
  r.canonicalize();
  return r;
}

// floor(x / 2) for negative x too
int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

void LaurentInQs::add(int a, int twice_b, const cyclo::CyclotomicValue& c) {
  if (c.prime() != p_) throw BadParameter("coefficient over a different prime");
  const int whole = floor_half(twice_b);
  const int half = twice_b - 2 * whole;
  const auto key = std::make_pair(a, half);
  auto folded = c.scaled(q_pow(p_, whole));
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!folded.is_zero()) terms_.emplace(key, folded);
    return;
  }
  it->second += folded;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentInQs LaurentInQs::operator+(const LaurentInQs& o) const {
  LaurentInQs r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

LaurentInQs LaurentInQs::scaled(const Rational& r) const {
  LaurentInQs out(p_);
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, c.scaled(r));
  return out;
}

bool LaurentInQs::operator==(const LaurentInQs& o) const {
  if (p_ != o.p_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [k, c] : terms_) {
    auto it = o.terms_.find(k);
    if (it == o.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

std::vector<int> LaurentInQs::s_exponents() const {
  std::vector<int> out;
  for (const auto& [k, c] : terms_)
    if (out.empty() || out.back() != k.first) out.push_back(k.first);
  return out;
}

std::string LaurentInQs::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*q^(" << k.first << "s" << (k.second ? "+1/2" : "") << ")";
  }
  return os.str();
}

}  // namespace ssc::integrals
