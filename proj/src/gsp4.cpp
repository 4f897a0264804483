#include "ssc/gsp4.hpp"

#include <sstream>

namespace ssc::gsp4 {

namespace {

// J = antidiag(1, 1, -1, -1): row k has sign kSign[k] in column 3 - k.
constexpr int kSign[4] = {1, 1, -1, -1};

PAdicNumber signed_copy(const PAdicNumber& x, int s) { return s > 0 ? x : -x; }

GSp4Element::Entries zeros(const Field& F) {
  GSp4Element::Entries e;
  e.fill(F.zero());
  return e;
}

GSp4Element::Entries diag_entries(const Field& F, const PAdicNumber& a, const PAdicNumber& b,
                                  const PAdicNumber& c, const PAdicNumber& d) {
  auto e = zeros(F);
  e[0] = a;
  e[5] = b;
  e[10] = c;
  e[15] = d;
  return e;
}

}  // namespace

GSp4Element GSp4Element::make_unchecked(const Entries& e, const PAdicNumber& mu) {
  GSp4Element g;
  g.e_ = e;
  g.mu_ = mu;
  return g;
}

GSp4Element GSp4Element::make(const Entries& e) {
  GSp4Element g;
  g.e_ = e;
  // (tg J g)_{03} gives mu
  PAdicNumber mu = PAdicNumber::zero(e[0].prime());
  for (int k = 0; k < 4; ++k) mu += signed_copy(e[static_cast<std::size_t>(4 * k)] * e[static_cast<std::size_t>(4 * (3 - k) + 3)], kSign[k]);
  if (mu.is_zero()) throw NotInGroup("similitude multiplier vanishes");
  g.mu_ = mu;
  if (!g.is_symplectic()) throw NotInGroup("tg J g is not a multiple of J:\n" + g.to_string());
  return g;
}

GSp4Element GSp4Element::identity(const Field& F) {
  return make_unchecked(diag_entries(F, F.one(), F.one(), F.one(), F.one()), F.one());
}

bool GSp4Element::is_symplectic() const {
  const int p = prime();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      PAdicNumber s = PAdicNumber::zero(p);
      for (int k = 0; k < 4; ++k) s += signed_copy(at(k, i) * at(3 - k, j), kSign[k]);
      PAdicNumber want = (j == 3 - i) ? signed_copy(mu_, kSign[i]) : PAdicNumber::zero(p);
      if (!s.equals(want)) return false;
    }
  }
  return true;
}

GSp4Element GSp4Element::operator*(const GSp4Element& o) const {
  GSp4Element g;
  const int p = prime();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      PAdicNumber s = PAdicNumber::zero(p);
      for (int k = 0; k < 4; ++k) {
        const auto& a = at(i, k);
        const auto& b = o.at(k, j);
        if (a.is_exact_zero() || b.is_exact_zero()) continue;
        s += a * b;
      }
      g.e_[static_cast<std::size_t>(4 * i + j)] = s;
    }
  }
  g.mu_ = mu_ * o.mu_;
  return g;
}

GSp4Element GSp4Element::inverse() const {
  // (J^{-1} tg J)_{ij} = -s_i s_{3-j} g_{3-j, 3-i}
  const PAdicNumber minv = mu_.inverse();
  GSp4Element g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g.e_[static_cast<std::size_t>(4 * i + j)] =
          signed_copy(at(3 - j, 3 - i) * minv, -kSign[i] * kSign[3 - j]);
  g.mu_ = minv;
  return g;
}

GSp4Element GSp4Element::scaled(const PAdicNumber& z) const {
  GSp4Element g = *this;
  for (auto& x : g.e_) x = x * z;
  g.mu_ = mu_ * z * z;
  return g;
}

GSp4Element GSp4Element::transpose() const {
  GSp4Element g = *this;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.e_[static_cast<std::size_t>(4 * i + j)] = at(j, i);
  return g;
}

bool GSp4Element::equals(const GSp4Element& o) const {
  for (std::size_t k = 0; k < 16; ++k)
    if (!e_[k].equals(o.e_[k])) return false;
  return mu_.equals(o.mu_);
}

int GSp4Element::min_absolute_precision() const {
  int a = padic::kExactPrecision;
  for (auto& x : e_) a = std::min(a, x.absolute_precision());
  return a;
}

std::string GSp4Element::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << "[";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  os << "mu = " << mu_.to_string();
  return os.str();
}

GSp4Element from_rows(const Field& F, const std::array<std::array<PAdicNumber, 4>, 4>& rows) {
  GSp4Element::Entries e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      e[static_cast<std::size_t>(4 * i + j)] = (x.is_exact_zero() && x.prime() != F.p) ? F.zero() : x;
    }
  return GSp4Element::make(e);
}

namespace special {

namespace {

struct Builder {
  const Field& F;
  GSp4Element::Entries e;
  explicit Builder(const Field& f) : F(f), e(zeros(f)) {}
  Builder& set(int i, int j, const PAdicNumber& x) {
    e[static_cast<std::size_t>(4 * i + j)] = x;
    return *this;
  }
  Builder& ones() {
    for (int k = 0; k < 4; ++k) e[static_cast<std::size_t>(5 * k)] = F.one();
    return *this;
  }
  GSp4Element checked() const { return GSp4Element::make(e); }
  GSp4Element with(const PAdicNumber& mu) const { return GSp4Element::make_unchecked(e, mu); }
};

}  // namespace

GSp4Element J(const Field& F) {
  return Builder(F).set(0, 3, F(1)).set(1, 2, F(1)).set(2, 1, F(-1)).set(3, 0, F(-1)).checked();
}

GSp4Element s1(const Field& F) {
  return Builder(F).set(0, 1, F(1)).set(1, 0, F(1)).set(2, 3, F(1)).set(3, 2, F(1)).checked();
}

GSp4Element s2(const Field& F) {
  return Builder(F).set(0, 0, F(1)).set(1, 2, F(1)).set(2, 1, F(-1)).set(3, 3, F(1)).checked();
}

GSp4Element d(const Field& F, const PAdicNumber& alpha, const PAdicNumber& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw BadParameter("d_{alpha,beta} needs nonzero parameters");
  auto ab = alpha * beta;
  return GSp4Element::make_unchecked(diag_entries(F, alpha * ab, ab, alpha, F.one()), alpha * ab);
}

GSp4Element d_pow(const Field& F, int i, int j) { return d(F, F.pi(i), F.pi(j)); }

GSp4Element torus(const Field& F, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw BadParameter("torus element needs nonzero entries");
  return GSp4Element::make_unchecked(diag_entries(F, a, b, c / b, c / a), c);
}

GSp4Element m(const Field& F, const PAdicNumber& u, const PAdicNumber& v) {
  if (u.is_zero() || v.is_zero()) throw BadParameter("m(u,v) needs nonzero entries");
  return GSp4Element::make_unchecked(diag_entries(F, u * v, u, v, F.one()), u * v);
}

GSp4Element X(const Field& F, const PAdicNumber& x) { return Builder(F).ones().set(2, 1, x).with(F.one()); }

GSp4Element Y(const Field& F, const PAdicNumber& c) { return Builder(F).ones().set(0, 3, c).with(F.one()); }

GSp4Element g_chi(const Field& F, const PAdicNumber& r) {
  if (!r.is_unit()) throw BadParameter("g_chi needs t2/t3 a unit");
  auto pr = F.pi(1) * r;
  return Builder(F).set(0, 2, F(1)).set(1, 3, F(-1)).set(2, 0, -pr).set(3, 1, pr).checked();
}

GSp4Element u_n(const Field& F, int n) {
  auto pn = F.pi(n);
  return Builder(F).set(0, 2, F(1)).set(1, 3, F(-1)).set(2, 0, pn).set(3, 1, -pn).checked();
}

GSp4Element t_n(const Field& F, int n) {
  return Builder(F).set(0, 3, -F.pi(-n)).set(1, 1, F(1)).set(2, 2, F(1)).set(3, 0, F.pi(n)).checked();
}

GSp4Element t5_hecke(const Field& F) {
  return Builder(F).ones().set(0, 3, -F.pi(-5)).set(3, 0, F.pi(5)).set(3, 3, F.zero()).checked();
}

GSp4Element u(const Field& F, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c,
              const PAdicNumber& e) {
  return Builder(F)
      .ones()
      .set(0, 1, a)
      .set(0, 2, b + a * e)
      .set(0, 3, c + a * b)
      .set(1, 2, e)
      .set(1, 3, b)
      .set(2, 3, -a)
      .with(F.one());
}

GSp4Element n(const Field& F, const PAdicNumber& uu, const PAdicNumber& w, const PAdicNumber& z) {
  return Builder(F).ones().set(0, 2, uu).set(0, 3, z).set(1, 2, w).set(1, 3, uu).with(F.one());
}

GSp4Element root_element(const Field& F, Root root, const PAdicNumber& r) {
  Builder b(F);
  b.ones();
  switch (root) {
    case Root::A1: b.set(0, 1, r).set(2, 3, -r); break;
    case Root::A2: b.set(1, 2, r); break;
    case Root::A1A2: b.set(0, 2, r).set(1, 3, r); break;
    case Root::A2A1A1: b.set(0, 3, r); break;
    case Root::NegA1: b.set(1, 0, r).set(3, 2, -r); break;
    case Root::NegA2: b.set(2, 1, r); break;
    case Root::NegA1A2: b.set(2, 0, r).set(3, 1, r); break;
    case Root::NegA2A1A1: b.set(3, 0, r); break;
  }
  return b.with(F.one());
}

}  // namespace special
}  // namespace ssc::gsp4
