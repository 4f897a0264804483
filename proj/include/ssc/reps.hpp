#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssc/cyclo.hpp"
#include "ssc/exec.hpp"
#include "ssc/gsp4.hpp"

namespace ssc::reps {

using gsp4::GSp4Element;
using padic::Field;
using padic::PAdicNumber;

/// sign * zeta_p^k, or zero.
struct CharValue {
  bool nonzero = false;
  int sign = 1;
  std::uint32_t k = 0;

  static CharValue zero() { return {}; }
  static CharValue one() { return {true, 1, 0}; }
  CharValue times(const CharValue& o, int p) const;
  cyclo::CyclotomicValue value(int p) const;
  void add_to(cyclo::RootSum& acc) const {
    if (nonzero) acc.add(cyclo::Root{1, k}, sign);
  }
  bool operator==(const CharValue&) const = default;
};

/**
 * chi_{t1,t2,t3} on H = Z K' with trivial central character:
 * chi(z k') = psi0(t1 k'_12 + t2 k'_23 + t3 k'_41 / pi).
 * The sign selects the extension to H' = H + g_chi H.
 */
class AffineGenericCharacter {
 public:
  AffineGenericCharacter(const Field& F, const PAdicNumber& t1, const PAdicNumber& t2, const PAdicNumber& t3,
                         int sign = 1);
  /// chi_{1,1,t}.
  static AffineGenericCharacter from_t(const Field& F, std::int64_t t, int sign = 1);

  const Field& field() const { return F_; }
  const PAdicNumber& t1() const { return t_[0]; }
  const PAdicNumber& t2() const { return t_[1]; }
  const PAdicNumber& t3() const { return t_[2]; }
  int sign() const { return sign_; }
  const GSp4Element& gchi() const { return gchi_; }
  const GSp4Element& gchi_inverse() const { return gchi_inv_; }

  /// Throws NotInH.
  CharValue on_H(const GSp4Element& h) const;
  CharValue from_residues(const gsp4::HResidues& r) const;
  /// chi on H, sign * chi(g_chi^{-1} g) on g_chi H, zero elsewhere.
  CharValue on_Hprime(const GSp4Element& g) const;

  /// chi^m with m = diag(a, b, c/b, c/a).
  AffineGenericCharacter orbit_act(const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c) const;
  /// t1^2 t2 t3 mod p.
  std::uint32_t orbit_invariant() const;
  /// m0 with chi^{m0} = eta; BadParameter if the invariants differ.
  GSp4Element transporter(const AffineGenericCharacter& eta) const;

 private:
  Field F_;
  std::array<PAdicNumber, 3> t_;
  std::array<std::uint32_t, 3> res_{};
  int sign_ = 1;
  GSp4Element gchi_, gchi_inv_;
};

enum class VectorKind { Minimal, New, ShiftedNew };

/// Base vector translated on the right: v(g) = base(g g0).
struct ModelVector {
  VectorKind kind = VectorKind::Minimal;
  GSp4Element g0;
};

/**
 * The model of sigma_chi^eps = c-Ind_{H'}^G chi^eps with its minimal vector
 * and newvector. Caches the coset representatives S of H' \ H' d K(5).
 */
class Model {
 public:
  explicit Model(const AffineGenericCharacter& chi);

  const AffineGenericCharacter& character() const { return chi_; }
  const Field& field() const { return chi_.field(); }
  int prime() const { return chi_.field().p; }
  const std::vector<gsp4::CosetRep>& representatives() const { return S_; }
  const GSp4Element& d() const { return d_; }

  CharValue f_min(const GSp4Element& g) const;
  CharValue f_new(const GSp4Element& g) const;
  CharValue f_shifted(const GSp4Element& g) const { return f_new(g * d_); }
  /// Number of s in S with g s^{-1} in H'; at most one on any g.
  std::size_t count_matches(const GSp4Element& g) const;

  ModelVector vector(VectorKind kind) const;
  static ModelVector translate(const ModelVector& v, const GSp4Element& g);
  CharValue eval(const ModelVector& v, const GSp4Element& g) const;
  /// Representatives of the H'-cosets making up the support.
  std::vector<GSp4Element> support_representatives(const ModelVector& v) const;
  /// Sum over the support cosets of v1 of v1(s) conj(v2(s)).
  cyclo::CyclotomicValue inner_product(const ModelVector& v1, const ModelVector& v2) const;

  /// The printed right translates whose f_min-sum gives f_new, family by family.
  const std::vector<GSp4Element>& expansion_terms() const { return terms_; }
  cyclo::CyclotomicValue expansion_value(const GSp4Element& g) const;

  /// S d^{-1} elements of one family (0 = all) and their inverses.
  const std::vector<GSp4Element>& shifted_reps(int family) const { return shifted_[static_cast<std::size_t>(family)]; }
  const std::vector<GSp4Element>& shifted_inverses(int family) const {
    return shifted_inv_[static_cast<std::size_t>(family)];
  }

 private:
  AffineGenericCharacter chi_;
  GSp4Element d_;
  std::vector<gsp4::CosetRep> S_;
  std::vector<GSp4Element> S_inv_;
  std::vector<GSp4Element> terms_;
  std::array<std::vector<GSp4Element>, 5> shifted_, shifted_inv_;
};

// ---- matrix coefficients of the shifted newvector on u(a,b,c,e) ----

/// Sum over s, s' in S~ (restricted to one family when family > 0) with s u s'^{-1} in H of chi(s u s'^{-1}).
cyclo::CyclotomicValue matcoeff_bruteforce(const Model& M, const PAdicNumber& a, const PAdicNumber& b,
                                           const PAdicNumber& c, const PAdicNumber& e, int family = 0,
                                           Exec exec = Exec::Parallel);

/// Whether (a,b,c,e) lies in the box where the family-i formula applies.
bool family_box(int family, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c,
                const PAdicNumber& e);
/// Closed character sums of the four families; zero outside the family box.
cyclo::CyclotomicValue matcoeff_family(int family, const PAdicNumber& a, const PAdicNumber& b,
                                       const PAdicNumber& c, const PAdicNumber& e, const PAdicNumber& t);
/// Same, accumulated into a root multiset with every psi-argument shifted by `shift`.
void matcoeff_family_add(int family, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c,
                         const PAdicNumber& e, const PAdicNumber& t, const PAdicNumber& shift,
                         cyclo::RootSum& acc);
/// Lower valuation bounds of the family boxes for (a, b, c, e).
std::array<int, 4> family_box_lows(int family);

// ---- paramodular checks ----

struct CheckReport {
  std::size_t points = 0;
  std::size_t mismatches = 0;
  std::size_t hits = 0;
  std::vector<std::string> notes;
  bool ok() const { return mismatches == 0; }
};

struct HeckeSums {
  cyclo::CyclotomicValue A, B, C, D;
  std::size_t terms = 0;
  cyclo::CyclotomicValue total() const { return A + B + C + D; }
};

/// (T_{0,1} f_new)(d) split into the four sums.
HeckeSums hecke_T01(const Model& M);

/// f(g u5) = eps f(g) at the given points.
CheckReport atkin_lehner_check(const Model& M, const std::vector<GSp4Element>& points);
/// f(g_chi^{-2} g) = f(g) and f(h g) = chi^eps(h) f(g) for random h in H'.
CheckReport involution_check(const Model& M, const ModelVector& v, const std::vector<GSp4Element>& points,
                             Rng& rng);
/// Both evaluators of the newvector agree at the points.
CheckReport newvector_expansion_check(const Model& M, const std::vector<GSp4Element>& points);

/// Pairs i, j >= 1 with 2i + j <= n - 2.
std::int64_t dim_Astar(int n);
std::int64_t dim_Astar_formula(int n);
bool support_pair_admissible(int i, int j, int n);

struct SupportCriterionReport {
  std::size_t trials = 0;
  std::size_t in_H = 0;
  std::size_t nontrivial = 0;
  bool admissible = false;
  /// Admissible pairs must see no nontrivial value; inadmissible ones need a witness.
  bool ok() const { return admissible ? nontrivial == 0 : nontrivial > 0; }
};

/// Samples k in K(n) with d k d^{-1} in H for d = d_{pi^i, pi^j} and records chi(d k d^{-1}).
SupportCriterionReport support_criterion_check(const AffineGenericCharacter& chi, int i, int j, int n,
                                               std::size_t trials, Rng& rng);

/// Random elements of H' d K(5).
GSp4Element random_new_support(const Model& M, Rng& rng);
/// Random elements h d_{pi^i,pi^j} k with (i,j) != (1,1) spread over several double cosets.
GSp4Element random_off_support(const Model& M, Rng& rng);

}  // namespace ssc::reps
