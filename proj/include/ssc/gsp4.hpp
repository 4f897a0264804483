#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssc/exec.hpp"
#include "ssc/padic.hpp"

namespace ssc::gsp4 {

using padic::Field;
using padic::PAdicNumber;

/**
 * Element of GSp4(Q_p) for the form J = antidiag(1, 1, -1, -1).
 * Indices are 0-based: at(0, 3) is the (1,4) entry.
 */
class GSp4Element {
 public:
  using Entries = std::array<PAdicNumber, 16>;

  GSp4Element() = default;

  /// Computes mu from tg J g and checks tg J g = mu J. Throws NotInGroup.
  static GSp4Element make(const Entries& e);
  /// Trusted construction with a known multiplier.
  static GSp4Element make_unchecked(const Entries& e, const PAdicNumber& mu);
  static GSp4Element identity(const Field& F);

  const PAdicNumber& at(int i, int j) const { return e_[static_cast<std::size_t>(4 * i + j)]; }
  const Entries& entries() const { return e_; }
  const PAdicNumber& multiplier() const { return mu_; }
  int prime() const { return mu_.prime(); }

  GSp4Element operator*(const GSp4Element& o) const;
  /// mu^{-1} J^{-1} tg J.
  GSp4Element inverse() const;
  GSp4Element scaled(const PAdicNumber& z) const;
  GSp4Element transpose() const;

  /// Entrywise equality at the available precision.
  bool equals(const GSp4Element& o) const;
  /// Residual symplectic defect check: tg J g = mu J.
  bool is_symplectic() const;
  int min_absolute_precision() const;
  std::string to_string() const;

 private:
  Entries e_;
  PAdicNumber mu_;
};

/// 0-based matrix literal helper: missing entries are exact zeros.
GSp4Element from_rows(const Field& F, const std::array<std::array<PAdicNumber, 4>, 4>& rows);

namespace special {

GSp4Element J(const Field& F);
GSp4Element s1(const Field& F);
GSp4Element s2(const Field& F);
/// d_{alpha,beta} = diag(alpha^2 beta, alpha beta, alpha, 1).
GSp4Element d(const Field& F, const PAdicNumber& alpha, const PAdicNumber& beta);
/// d_{pi^i, pi^j}.
GSp4Element d_pow(const Field& F, int i, int j);
/// diag(a, b, c/b, c/a).
GSp4Element torus(const Field& F, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c);
/// m(u, v) = diag(uv, u, v, 1).
GSp4Element m(const Field& F, const PAdicNumber& u, const PAdicNumber& v);
/// Lower root element with x in position (3,2).
GSp4Element X(const Field& F, const PAdicNumber& x);
/// Root element with c in position (1,4).
GSp4Element Y(const Field& F, const PAdicNumber& c);
/// [[0,0,1,0],[0,0,0,-1],[-pi r,0,0,0],[0,pi r,0,0]] with r = t2/t3.
GSp4Element g_chi(const Field& F, const PAdicNumber& t2_over_t3);
GSp4Element u_n(const Field& F, int n);
GSp4Element t_n(const Field& F, int n);
/// The element written t_5 in the Hecke operator sums: outer block [[1, -pi^-5], [pi^5, 0]].
GSp4Element t5_hecke(const Field& F);
/// Rows [1,a,b+ae,c+ab], [0,1,e,b], [0,0,1,-a], [0,0,0,1].
GSp4Element u(const Field& F, const PAdicNumber& a, const PAdicNumber& b, const PAdicNumber& c,
              const PAdicNumber& e);
/// Siegel unipotent [[1,0,u,z],[0,1,w,u],[0,0,1,0],[0,0,0,1]].
GSp4Element n(const Field& F, const PAdicNumber& u, const PAdicNumber& w, const PAdicNumber& z);

/// Root subgroup elements; `root` in {a1, a2, a1+a2, 2a1+a2} and negatives.
enum class Root { A1, A2, A1A2, A2A1A1, NegA1, NegA2, NegA1A2, NegA2A1A1 };
GSp4Element root_element(const Field& F, Root root, const PAdicNumber& r);

}  // namespace special

enum class Subgroup { K, Kprime, Klingen, Paramodular, ParamodularShifted5, Z, H, E };

struct SubgroupTag {
  Subgroup kind = Subgroup::K;
  int level = 0;
};

bool member(const GSp4Element& g, const SubgroupTag& tag);

/// Data of g = z k' with k' in K'; z = g_44.
struct HDecomposition {
  PAdicNumber z;
  GSp4Element kprime;
};

/**
 * Residues read by an affine generic character: k'_12, k'_23 and k'_41/pi,
 * each mod p, for g = z k'.
 */
struct HResidues {
  PAdicNumber z;
  std::uint32_t r12 = 0;
  std::uint32_t r23 = 0;
  std::uint32_t r41 = 0;
};

/// Throws NotInH.
HDecomposition decompose_H(const GSp4Element& g);
/// Membership in H = Z K' together with the character residues, without building k'.
std::optional<HResidues> h_residues(const GSp4Element& g);
bool in_H(const GSp4Element& g);

enum class HprimeBranch { InH, InGchiH, Neither };

/// H' = H + g_chi H. The branch is selected by the parity of v(mu).
HprimeBranch member_Hprime(const GSp4Element& g, const GSp4Element& gchi);
/// Reference version testing both branches without the parity shortcut.
HprimeBranch member_Hprime_both(const GSp4Element& g, const GSp4Element& gchi);

// ---- random samplers ----

GSp4Element random_Kprime(const Field& F, Rng& rng);
GSp4Element random_H(const Field& F, Rng& rng);
GSp4Element random_Hprime(const Field& F, const GSp4Element& gchi, Rng& rng);
GSp4Element random_K(const Field& F, Rng& rng);
GSp4Element random_klingen(const Field& F, int n, Rng& rng);
GSp4Element random_paramodular(const Field& F, int n, Rng& rng);
/// Random unipotent u(a,b,c,e) with entries of valuation >= vmin.
GSp4Element random_unipotent(const Field& F, int vmin, Rng& rng);

// ---- coset machinery ----

struct CosetRep {
  int family = 0;
  std::int64_t u = 1, v = 1, x = 0, y = 0;
  GSp4Element element;
};

/// Representatives of H' \ H' d_{pi,pi} K(5), four families, (q-1)^2 q^2 (q+1)^2 in all.
std::vector<CosetRep> representatives_S(const Field& F);
std::uint64_t family_size(int q, int family);
/// Representatives of H \ H d_{pi,pi} Kl(5) from the Klingen decomposition.
std::vector<GSp4Element> klingen_representatives(const Field& F);

using ElementTest = std::function<bool(const GSp4Element&)>;
using Sampler = std::function<GSp4Element(Rng&)>;

struct CosetReport {
  std::size_t representatives = 0;
  std::size_t pairs_checked = 0;
  std::size_t disjointness_violations = 0;
  std::size_t samples = 0;
  std::size_t unmatched = 0;
  std::size_t multiply_matched = 0;
  bool probabilistic = true;
  std::vector<std::string> violations;

  bool ok() const { return disjointness_violations == 0 && unmatched == 0 && multiply_matched == 0; }
};

/**
 * Pairwise disjointness (s s'^{-1} fails coset_test for s != s') and sampled
 * completeness (each sample g has exactly one s with g s^{-1} passing coset_test).
 */
CosetReport verify_coset_partition(const std::vector<GSp4Element>& reps, const Sampler& ambient,
                                   std::size_t samples, const ElementTest& coset_test, Rng& rng,
                                   Exec exec = Exec::Parallel);

// ---- residue group ----

struct ResidueGroupOrders {
  std::uint64_t group = 0;  // |GSp4(F_q)|
  std::uint64_t image = 0;  // |image of H cap K mod p|
  std::uint64_t index() const { return group / image; }
};

/// BFS closure over GSp4(F_q); throws BudgetExceeded past `cap` elements.
ResidueGroupOrders residue_group_order(int q, std::uint64_t cap = 60'000'000);
std::uint64_t bfs_closure_size(int q, const std::vector<std::array<std::uint32_t, 16>>& generators,
                               std::uint64_t cap);

}  // namespace ssc::gsp4
