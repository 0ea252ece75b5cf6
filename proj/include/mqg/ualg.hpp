// The generalized quantum group U(χ,π): elements in the normal form
// F-word · K_λ L_μ · E-word, products, Serre rewriting and graded dimensions.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "mqg/rewrite.hpp"
#include "mqg/weyl.hpp"

namespace mqg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// F-word · K_k L_l · E-word; torus exponents are in ambient coordinates.
struct NormalMonomial {
  Word f;
  LatticeVec k, l;
  Word e;
  auto operator<=>(const NormalMonomial&) const = default;
  bool operator==(const NormalMonomial&) const = default;
};

class UElement {
 public:
  using Terms = std::map<NormalMonomial, Coeff>;

  UElement() = default;  // unbound zero; adopts the other operand's algebra
  UElement(AlgebraPtr alg, Terms terms);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UElement operator+(const UElement& o) const;
  UElement operator-(const UElement& o) const;
  UElement operator-() const;
  UElement operator*(const UElement& o) const;
  UElement operator*(const Coeff& c) const;
  UElement operator/(const Coeff& c) const;
  UElement& operator+=(const UElement& o) { return *this = *this + o; }
  UElement& operator-=(const UElement& o) { return *this = *this - o; }
  UElement& operator*=(const UElement& o) { return *this = *this * o; }
  UElement pow(int n) const;
  bool operator==(const UElement& o) const;
  bool operator!=(const UElement& o) const { return !(*this == o); }

  /// Ambient degree of every term, if homogeneous (zero counts as homogeneous
  /// of any degree and yields false).
  bool homogeneous_degree(LatticeVec& degree) const;

  std::string str() const;
  std::string pretty() const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
  std::string render(bool pretty) const;
};

UElement operator*(const Coeff& c, const UElement& x);

/// Commutator xy - yx.
UElement commutator(const UElement& x, const UElement& y);

enum class SerreVariant { plain, check };

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Throws Error unless χ restricted to the frame is admissible for the
  /// datum of `data`. `chi` may differ from data.chi() (e.g. the opposite).
  static AlgebraPtr create(std::shared_ptr<const AdmissibleData> data, Bicharacter chi, Frame pi,
                           int bound = 12);

  const AdmissibleData& data() const { return *data_; }
  const std::shared_ptr<const AdmissibleData>& data_ptr() const { return data_; }
  const CartanDatum& datum() const { return data_->datum(); }
  const Bicharacter& chi() const { return chi_; }
  const Frame& frame() const { return pi_; }
  const RingPtr& ring() const { return data_->ring(); }
  int rank() const { return pi_.rank(); }
  int bound() const { return bound_; }

  /// q_ij = χ(π(i),π(j)), q̇_ij = √χ(π(i),π(j))
  const Coeff& q(int i, int j) const { return q_[i][j]; }
  const Coeff& qdot(int i, int j) const { return qdot_[i][j]; }
  /// Θ(q_ii - 1)
  Coeff theta(int i) const;

  UElement zero() const;
  UElement scalar(const Coeff& c) const;
  UElement one() const { return scalar(Coeff(ring(), 1)); }
  UElement e(int i) const;
  UElement f(int i) const;
  UElement e_word(const Word& w) const;
  UElement f_word(const Word& w) const;
  UElement k(const LatticeVec& lambda) const;
  UElement l(const LatticeVec& mu) const;
  UElement torus(const LatticeVec& lambda, const LatticeVec& mu) const;
  /// K_{π(i)}^n, L_{π(i)}^n
  UElement k_gen(int i, int n = 1) const { return k(pi_(i) * n); }
  UElement l_gen(int i, int n = 1) const { return l(pi_(i) * n); }
  /// H̄_i = (K_{π(i)} - L_{π(i)})/(q_ii - 1)
  UElement hbar(int i) const;
  /// Ē_i = E_i/Θ(q_ii-1), F̄_i = -F_i/Θ(q_ii-1)
  UElement ebar(int i) const;
  UElement fbar(int i) const;

  UElement e_serre_vector(int m, int i, int j, SerreVariant v = SerreVariant::plain) const;
  UElement f_serre_vector(int m, int i, int j, SerreVariant v = SerreVariant::plain) const;

  /// Unreduced defining Serre polynomials E_{1-a_ij,i,j} (F side if f_side).
  std::vector<WordPoly> serre_relations(bool f_side) const;
  const RewriteSystem& e_rewrite() const;
  const RewriteSystem& f_rewrite() const;
  /// Number of irreducible E-words of ambient degree λ.
  long dim_component(const LatticeVec& lambda) const;
  /// Letter counts c with Σ c_i π(i) = λ, if any.
  bool generator_degree(const LatticeVec& lambda, std::vector<int>& counts) const;

  /// Normal form of a product of two monomials.
  UElement::Terms multiply_monomials(const NormalMonomial& a, const NormalMonomial& b) const;
  /// Ambient degree of a word read as E-letters.
  LatticeVec word_degree(const Word& w) const;
  /// Scalar c with K_λ L_μ X = c X K_λ L_μ for X of ambient degree δ.
  Coeff torus_scalar(const LatticeVec& lambda, const LatticeVec& mu, const LatticeVec& delta) const;

  Algebra(std::shared_ptr<const AdmissibleData> data, Bicharacter chi, Frame pi, int bound);

 private:
  using StraightMap = std::map<NormalMonomial, Coeff>;

  std::shared_ptr<const AdmissibleData> data_;
  Bicharacter chi_;
  Frame pi_;
  int bound_;
  std::vector<std::vector<Coeff>> q_, qdot_;
  mutable std::once_flag e_once_, f_once_;
  mutable std::unique_ptr<RewriteSystem> e_rw_, f_rw_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Word, Word>, StraightMap> straight_memo_;

  // E-word · F-word as a combination of (raw) F-word · torus · E-word
  StraightMap straighten(const Word& e, const Word& f) const;
};

/// Coefficients c with Σ c_k basis_k = target, if target lies in the span of
/// linearly independent `basis`; throws Error if the basis is dependent.
std::optional<std::vector<Coeff>> solve_in_span(const UElement& target, const std::vector<UElement>& basis);

/// True iff both sides have equal normal forms; throws on algebra mismatch.
bool check_identity(const UElement& lhs, const UElement& rhs);

/// Parses "F2*F1 * K[1,0]L[0,-1] * E1^2*E2" style sums; coefficients go in
/// parentheses, e.g. "(qd^2-1)*E1 - 3*F2".
UElement parse_element(const AlgebraPtr& alg, std::string_view text);

}  // namespace mqg
