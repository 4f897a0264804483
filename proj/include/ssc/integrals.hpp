#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssc/lattice.hpp"
#include "ssc/reps.hpp"

namespace ssc::integrals {

using padic::Field;
using padic::PAdicNumber;
using reps::GSp4Element;
using reps::Model;

/**
 * Finite sum of c * q^(a s + b) with a an integer and b a half-integer.
 * Integer parts of b are folded into the coefficient, so the stored keys are
 * (a, 0) or (a, 1) for b in Z or b in 1/2 + Z, and equal sums compare equal.
 */
class LaurentInQs {
 public:
  explicit LaurentInQs(int p) : p_(p) {}

  /// Adds c * q^(a s + twice_b / 2).
  void add(int a, int twice_b, const cyclo::CyclotomicValue& c);
  LaurentInQs operator+(const LaurentInQs& o) const;
  LaurentInQs scaled(const Rational& r) const;
  bool operator==(const LaurentInQs& o) const;

  int prime() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<int> s_exponents() const;
  const std::map<std::pair<int, int>, cyclo::CyclotomicValue>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  int p_;
  std::map<std::pair<int, int>, cyclo::CyclotomicValue> terms_;
};

/// The units c1, c2 of psi_{c1,c2}(u) = psi(c1 a + c2 e).
struct PsiUnits {
  std::int64_t c1 = -1;
  std::int64_t c2 = -1;
};

// ---- Whittaker integrals ----

/// The upper unipotent u(a,b,c,e) paired with psi_{c1,c2}^{-1}(u) as a root.
cyclo::Root psi_u_inverse(const PsiUnits& c, const PAdicNumber& a, const PAdicNumber& e);

/// J0(d_{alpha,beta} f_min, d_{gamma,delta} f_min) as an integral over U.
IntegralResult j0_minimal(const Model& M, const PAdicNumber& alpha, const PAdicNumber& beta,
                          const PAdicNumber& gamma, const PAdicNumber& delta, const PsiUnits& c,
                          const IntegrationOptions& opt = {});

struct J0NewResult {
  std::array<IntegralResult, 4> parts;
  /// q^5 / ((q-1)^2 (q+1)^2) times the sum of the parts.
  Rational total;
};

/// J_{0,i} over the family boxes of the shifted newvector, and their normalized sum.
J0NewResult j0_newvector(const Field& F, const PAdicNumber& t, const PsiUnits& c,
                         const IntegrationOptions& opt = {});
IntegralResult j0_newvector_part(const Field& F, int family, const PAdicNumber& t, const PsiUnits& c,
                                 const IntegrationOptions& opt = {});

/// W_phi(g) for phi = g0 . f_min, i.e. the U-integral of f_min(d_{pi c1, pi c2} u g g0) psi^{-1}(u).
IntegralResult whittaker(const Model& M, const GSp4Element& g0, const GSp4Element& g, const PsiUnits& c,
                         const IntegrationOptions& opt = {});

/// [[gamma],[ , gamma],[ , x, 1],[ , , , 1]].
GSp4Element zeta_embedding(const Field& F, const PAdicNumber& gamma, const PAdicNumber& x);

/// A character of F^x with conductor at most p and values +-1.
struct QuadraticCharacter {
  bool ramified = false;  // Legendre symbol on units
  int at_pi = 1;          // value at the uniformizer
  int at(const PAdicNumber& x) const;
};

struct ZetaResult {
  LaurentInQs value;
  std::vector<int> shells;  // valuations of gamma with a nonzero shell sum
  std::uint64_t cells = 0;
  bool stable = true;
};

/// Z(s, W_{d_{alpha,beta} f_min}, chi), shell by shell in v(gamma).
ZetaResult novodvorsky_zeta(const Model& M, const PAdicNumber& alpha, const PAdicNumber& beta,
                            const QuadraticCharacter& chi, const PsiUnits& c, const IntegrationOptions& opt = {});

/// (1 - q^-1)^-1 q^(s + 7/2) |beta|^(1/2 - s) chi(beta pi c2)^-1, or 0.
LaurentInQs zeta_expected(const Field& F, const PAdicNumber& alpha, const PAdicNumber& beta,
                          const QuadraticCharacter& chi, const PsiUnits& c);

// ---- Bessel integrals ----

struct BesselSetup {
  std::int64_t a = 1;  // S = diag(a, 1), -a a non-square unit
  int m0 = 2;
  std::int64_t u0 = 1;
  PAdicNumber alpha, beta;
};

/// alpha = pi^(1-m0) u0 and beta = pi.
BesselSetup bessel_default(const Field& F, std::int64_t a, int m0, std::int64_t u0 = 1);
void validate(const BesselSetup& s, const Field& F);

/// Lambda^{-1}(1 + Y sqrt(-a)) for Y in p^(m0-1), through the germ.
cyclo::Root lambda_inverse_root(const BesselSetup& s, const PAdicNumber& Y);

/// Twisted data for the covariance relation: S~ = lambda tA S A with A = diag(A1, A2).
struct BesselTwist {
  PAdicNumber lambda, A1, A2;
};

/// diag(lambda A1, lambda A2, 1/A2, 1/A1) = diag(lambda A, A').
GSp4Element bessel_twist_element(const Field& F, const BesselTwist& tw);

/**
 * B_{Lambda, theta_S~}(k . f_min) for S~ = lambda tA S A, integrating
 * f_min(k^{-1} n t k) Lambda^{-1}(t) theta^{-1}(n) over N and the y-chart of T.
 */
IntegralResult bessel_integral(const Model& M, const BesselSetup& s, const BesselTwist& tw,
                               const GSp4Element& k, const IntegrationOptions& opt = {});
/// B_{Lambda, theta_S}(d_{alpha,beta}^{-1} f_min).
IntegralResult bessel(const Model& M, const BesselSetup& s, const IntegrationOptions& opt = {});

/// vol(o^x \ o_L^x) from the two charts of P^1 with weight |1 + a y^2|^{-1}.
Rational bessel_torus_volume(const Field& F, std::int64_t a, int resolution = 2);

struct CovarianceReport {
  cyclo::CyclotomicValue lhs;     // B_S(v')
  cyclo::CyclotomicValue rhs;     // |lambda det A|^3 B_S~(v)
  Rational factor;
  bool ok() const { return lhs == rhs; }
};

/// Checks B_S(m v) = |lambda det A|^3 B_S~(v) with m v = d^{-1} f_min.
CovarianceReport bessel_covariance_check(const Model& M, const BesselSetup& s, const BesselTwist& tw,
                                         const IntegrationOptions& opt = {});

// ---- formal degree ----

struct FormalDegree {
  std::uint64_t index = 0;  // [K : H cap K]
  Rational volume;          // vol(Z \ H')
  Rational degree;
};

FormalDegree formal_degree_check(int q, std::uint64_t cap = 60'000'000);

}  // namespace ssc::integrals
