// The A-form over A = Z[q̇_ij^{±1}]: integrality of coefficients, divided
// powers of PBW root vectors and their straightening, the U⁰ bracket
// elements, and the U⁰_A and triangular checks.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mqg/lusztig.hpp"
#include "mqg/report.hpp"

namespace mqg {

/// Membership in A = Z[q̇_ij^{±1}] for one admissible setting.
class AIntegrality {
 public:
  explicit AIntegrality(const AdmissibleData& data);
  /// True iff c is a Laurent polynomial over Z whose monomials lie in the
  /// group generated by the q̇_ij. Throws Error if a root symbol survives.
  bool contains(const Coeff& c) const;
  /// True iff the exponent lies in the lattice of q̇-monomials.
  bool in_lattice(const Exponent& e) const;

 private:
  std::vector<Exponent> basis_;  // echelon form
  std::vector<int> pivot_;
};

/// Π_{t=1}^p (x^{l-t+1} X - Y)/(x^t - 1)
UElement u0_bracket(const UElement& x_elem, const UElement& y_elem, const Coeff& x, int l, int p);
/// [K_{π(i)}, L_{π(i)}, l; p]_{q_ii}
UElement u0_bracket(const AlgebraPtr& u, int i, int l, int p);

enum class Side { plus, minus };

using ExpVec = std::vector<int>;
using PbwPoly = std::map<ExpVec, Coeff>;

/// Ordered divided-power PBW monomials Ē_{n;σ(1)}^{(x_1)}..Ē_{n;σ(ℓ)}^{(x_ℓ)}
/// (or F̄) of U(χ,π) for the base frame. Exponent vectors are indexed by t,
/// not by position in σ.
class DividedPbw {
 public:
  DividedPbw(std::shared_ptr<const AlgebraFamily> fam, WeylWord n, Side side);

  const AlgebraPtr& algebra() const { return u_; }
  const WeylWord& word() const { return n_; }
  Side side() const { return side_; }
  int length() const { return static_cast<int>(roots_.size()); }
  const RootVector& root(int t) const { return roots_.at(t); }
  /// Ē_{n;t} or F̄_{n;t}
  const UElement& bar(int t) const;
  /// (x)_{χ(β_t,β_t)}!
  Coeff factorial(int t, int x) const;
  UElement divided_power(int t, int x) const;
  /// Product of divided powers taken in the given order of t (identity if empty).
  UElement monomial(const ExpVec& x, const std::vector<int>& order = {}) const;
  /// Exponent vectors z with Σ z_t β_t = λ.
  std::vector<ExpVec> component(const LatticeVec& lambda) const;
  /// Coordinates of a homogeneous element in the identity-order divided basis,
  /// by linear algebra in its graded component. Throws Error if x is not
  /// homogeneous, not on this side, or not in the span.
  PbwPoly coordinates(const UElement& x) const;
  /// Re-expansion of the product of divided powers Π bar(t_k)^{(x_k)} (in the
  /// given left-to-right order) in the identity-order divided basis, by
  /// straightening with the pairwise commutation rules.
  PbwPoly straighten(const std::vector<std::pair<int, int>>& factors) const;
  /// Element of U from divided-basis coordinates.
  UElement evaluate(const PbwPoly& p) const;

 private:
  std::shared_ptr<const AlgebraFamily> fam_;
  AlgebraPtr u_;
  WeylWord n_;
  Side side_;
  std::vector<RootVector> roots_;
  std::vector<Coeff> self_;
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, PbwPoly> rules;  // bar(u) bar(t), u > t, plain powers
    std::map<std::pair<ExpVec, int>, PbwPoly> rmul;
  };
  std::shared_ptr<Cache> cache_;

  const PbwPoly& rule(int u, int t) const;
  PbwPoly right_multiply(const ExpVec& m, int t) const;
  PbwPoly right_multiply(const PbwPoly& p, int t) const;
  PbwPoly to_divided(const PbwPoly& plain) const;
  PbwPoly to_plain(const PbwPoly& divided) const;
};

/// Every coefficient of every Ē_{n;s}^{(x)} Ē_{n;t}^{(y)} (s > t, 1 ≤ x, y ≤
/// max_exp) re-expanded in the identity-order basis lies in A.
Report divided_product_check(const DividedPbw& pbw, const AIntegrality& a, int max_exp);
/// Every product of two divided powers of distinct simple generators
/// (Ē_i^x/(x)_{q_ii}! or the F̄ analogue, x ≤ max_exp) expands in the
/// divided basis with coefficients in A.
Report generator_product_check(const DividedPbw& pbw, const AIntegrality& a, int max_exp);
/// Straightening agrees with linear algebra in the graded component for
/// products of total height ≤ max_height.
Report straightening_crosscheck(const DividedPbw& pbw, int max_height);
/// For every component of height ≤ max_height, the σ-ordered basis expands
/// over the identity-order basis with entries in A and unit determinant.
Report order_independence_check(const DividedPbw& pbw, const AIntegrality& a, const std::vector<int>& sigma,
                                int max_height);
/// The two bracket identities for 0 ≤ p ≤ max, |l| ≤ max.
Report bracket_identity_check(const AlgebraPtr& u, int max);
/// Per index i: the elements K^x (KL)^y [K,L,0;z] (x ∈ {0,1}, |y| ≤ bound,
/// z ≤ bound) are independent, and all pairwise products re-expand in that
/// family with coefficients in A.
Report u0a_basis_check(const AlgebraPtr& u, const AIntegrality& a, int bound);
/// Products Ē-monomial · F̄-monomial (each side of height ≤ bound) expand in
/// the triangular basis F̄-monomial · U⁰_A-basis · Ē-monomial with
/// coefficients in A; also [Ē_i, F̄_i] = [K_{π(i)}, L_{π(i)}, 0; 1].
Report triangular_a_check(const DividedPbw& plus, const DividedPbw& minus, const AIntegrality& a, int bound);

}  // namespace mqg
