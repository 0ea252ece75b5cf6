// Hopf structure of U(χ,π): tensor powers, coproduct, counit, antipode.
#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "mqg/ualg.hpp"

namespace mqg {

/// Element of U^{⊗n}; multiplication is slot-wise, (a⊗b)(c⊗d) = ac⊗bd.
class TensorElem {
 public:
  using Key = std::vector<NormalMonomial>;
  using Terms = std::map<Key, Coeff>;

  TensorElem() = default;
  TensorElem(AlgebraPtr alg, int arity, Terms terms);
  /// x_1 ⊗ ... ⊗ x_n
  static TensorElem pure(const std::vector<UElement>& factors);

  const AlgebraPtr& algebra() const { return alg_; }
  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorElem operator+(const TensorElem& o) const;
  TensorElem operator-(const TensorElem& o) const;
  TensorElem operator-() const;
  TensorElem operator*(const TensorElem& o) const;
  TensorElem operator*(const Coeff& c) const;
  TensorElem& operator+=(const TensorElem& o) { return *this = *this + o; }
  bool operator==(const TensorElem& o) const;
  bool operator!=(const TensorElem& o) const { return !(*this == o); }

  /// Applies a linear map given on monomials to one slot; `image` must return
  /// an element of U^{⊗m} and the result has arity n - 1 + m.
  TensorElem map_slot(int slot, const std::function<TensorElem(const NormalMonomial&)>& image) const;
  /// Multiplies all slots together (m: U^{⊗n} → U).
  UElement multiply_out() const;

  /// "x (o) y" terms separated by " + ".
  std::string str() const;

 private:
  AlgebraPtr alg_;
  int arity_ = 0;
  Terms terms_;
};

TensorElem operator*(const Coeff& c, const TensorElem& t);

/// Monomial viewed as an element of U.
UElement monomial_element(const AlgebraPtr& alg, const NormalMonomial& m);

/// Coproduct, counit and antipode with per-word memoization.
class HopfStructure {
 public:
  explicit HopfStructure(AlgebraPtr alg);
  const AlgebraPtr& algebra() const { return alg_; }

  TensorElem coproduct(const UElement& x) const;
  TensorElem coproduct(const NormalMonomial& m) const;
  Coeff counit(const UElement& x) const;
  UElement antipode(const UElement& x) const;
  UElement antipode_inverse(const UElement& x) const;

  /// Δ(E_{r,i,j}) against the closed form
  /// E_{r,i,j}⊗1 + Σ_k (r)!(k;q_ii,q_ii^{r-k}q_ij q_ji)!/((k)!(r-k)!) E_i^k K_{(r-k)π(i)+π(j)} ⊗ E_{r-k,i,j}.
  /// Throws Error if E_{r,i,j} vanishes.
  bool coproduct_serre_formula_check(int r, int i, int j) const;
  TensorElem coproduct_serre_formula(int r, int i, int j) const;

 private:
  AlgebraPtr alg_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<bool, Word>, TensorElem> delta_words_;
  mutable std::map<std::pair<int, Word>, UElement> antipode_words_;

  TensorElem delta_word(bool f_side, const Word& w) const;
  UElement antipode_word(int kind, const Word& w) const;  // kind: 0 E,1 F,2 E inverse,3 F inverse
  UElement antipode_monomial(const NormalMonomial& m, bool inverse) const;
};

}  // namespace mqg
