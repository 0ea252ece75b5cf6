// Drinfeld pairing ϑ: U^{+,♭} × U^{-,♭} → K.
#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mqg/hopf.hpp"
#include "mqg/lusztig.hpp"
#include "mqg/report.hpp"

namespace mqg {

/// Plus-flat: every term has empty F-word and L-exponent 0.
bool is_plus_flat(const UElement& x);
/// Minus-flat: every term has empty E-word and K-exponent 0.
bool is_minus_flat(const UElement& x);

/// Determinant by Gaussian elimination over the coefficient field.
Coeff determinant(std::vector<std::vector<Coeff>> m);

class Pairing {
 public:
  explicit Pairing(AlgebraPtr alg);
  const AlgebraPtr& algebra() const { return alg_; }

  /// ϑ(xp, xm); throws Error on non-flat input or mismatched algebras.
  Coeff pair(const UElement& xp, const UElement& xm) const;
  /// ϑ on E-word / F-word (no torus).
  Coeff pair_words(const Word& e, const Word& f) const;

  /// Independent route: splits the last F letter of xm and uses the
  /// coproduct of xp, ϑ(X, Y F_j) = Σ ϑ(X(1), Y) ϑ(X(2), F_j).
  Coeff pair_sweedler(const UElement& xp, const UElement& xm) const;

  /// Gram matrix [ϑ(b⁺_r, b⁻_s)].
  std::vector<std::vector<Coeff>> gram(const std::vector<UElement>& plus, const std::vector<UElement>& minus) const;
  /// True iff the Gram determinant is nonzero; throws on size mismatch.
  bool gram_nondegenerate(const std::vector<UElement>& plus, const std::vector<UElement>& minus) const;
  /// Gram matrix on the normal-word bases of U⁺_λ and U⁻_{-λ}.
  std::vector<std::vector<Coeff>> gram_component(const LatticeVec& lambda) const;

  /// Reconstructs X⁻X⁺ (and X⁺X⁻) from (id⊗Δ)Δ, S and ϑ and compares with
  /// the product in U.
  UElement reorder_minus_plus(const UElement& xp, const UElement& xm) const;
  UElement reorder_plus_minus(const UElement& xp, const UElement& xm) const;
  bool cross_commutation_check(const UElement& xp, const UElement& xm) const;

  /// ϑ(S(X⁺), X⁻) == ϑ(X⁺, S⁻¹(X⁻))
  bool antipode_compatible(const UElement& xp, const UElement& xm) const;

  const HopfStructure& hopf() const { return hopf_; }

 private:
  AlgebraPtr alg_;
  HopfStructure hopf_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Word, Word>, Coeff> memo_;

  Coeff pair_monomials(const NormalMonomial& p, const NormalMonomial& m) const;
  WordPoly derive(int i, const WordPoly& y) const;
  Coeff pair_polys(const WordPoly& x, const WordPoly& y) const;
  Coeff sweedler_monomials(const NormalMonomial& p, const NormalMonomial& m) const;
  TensorElem double_coproduct(const UElement& x) const;
};

/// ϑ(E_{n;ℓ}^{x_ℓ}..E_{n;1}^{x_1}, F_{n;ℓ}^{y_ℓ}..F_{n;1}^{y_1}) = Π δ_{x_t,y_t} (x_t)_{χ(β_t,β_t)}!
/// for all exponent vectors with Σx, Σy ≤ bound; one record per (x, y).
Report pbw_orthogonality_check(const AlgebraFamily& fam, const std::vector<int>& n, int bound);

/// G2 only: ϑ(Q_1(a), Υ(Q_2(b))) = δ_{a,b} for Σa, Σb ≤ total, where Q_2(b) is
/// formed in the χ^op presentation and Υ maps it into U(χ,π).
Report g2_duality_check(const AlgebraFamily& fam, int total);

/// All vectors in Z≥0^len with entry sum ≤ total.
std::vector<std::vector<int>> exponent_vectors(int len, int total);

}  // namespace mqg
