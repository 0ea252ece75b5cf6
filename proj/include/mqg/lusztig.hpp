// Algebra maps between presentations U(χ,π): Ω, Υ, Γ, ζ_i, the strict
// Lusztig isomorphisms T_i, their composites T_w and PBW root vectors.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mqg/ualg.hpp"

namespace mqg {

/// U(χ,π') and U(χ^op,π') for all frames π' of one admissible setting.
/// Algebras are created on demand and shared, so maps compose by identity.
class AlgebraFamily {
 public:
  explicit AlgebraFamily(std::shared_ptr<const AdmissibleData> data, int bound = 12);
  static std::shared_ptr<AlgebraFamily> create(const std::string& type, int bound = 12);

  const AdmissibleData& data() const { return *data_; }
  const CartanDatum& datum() const { return data_->datum(); }
  int rank() const { return datum().rank(); }
  Frame base_frame() const { return Frame::identity(rank()); }
  /// U(χ,π) (op = false) or U(χ^op,π) (op = true).
  AlgebraPtr get(const Frame& pi, bool op = false) const;
  AlgebraPtr base(bool op = false) const { return get(base_frame(), op); }
  /// τ_i π
  Frame reflect(const Frame& pi, int i) const;

 private:
  std::shared_ptr<const AdmissibleData> data_;
  int bound_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<bool, Frame>, AlgebraPtr> algebras_;
};

/// K_λ L_μ ↦ K_{aλ+bμ} L_{cλ+dμ}
struct TorusRule {
  int a = 1, b = 0, c = 0, d = 1;
  TorusRule after(const TorusRule& inner) const;
  bool operator==(const TorusRule&) const = default;
};

/// (Anti-)homomorphism source → target given by generator images.
class AlgebraMap {
 public:
  /// Throws Error if the images violate a defining relation of the source
  /// (unless check is false, used for composites of checked maps).
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, bool anti, TorusRule torus, std::vector<UElement> e_images,
             std::vector<UElement> f_images, std::string name, bool check = true);
  static AlgebraMap identity(const AlgebraPtr& u);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  bool anti() const { return anti_; }
  const TorusRule& torus_rule() const { return torus_; }
  const std::string& name() const { return name_; }
  const UElement& e_image(int i) const { return e_img_.at(i); }
  const UElement& f_image(int i) const { return f_img_.at(i); }

  UElement operator()(const UElement& x) const;
  /// this ∘ inner; inner.target() must be this->source().
  AlgebraMap after(const AlgebraMap& inner) const;
  /// Same source, target, kind, torus rule and generator images.
  bool same_as(const AlgebraMap& o) const;
  /// First violated defining relation, or "" if all hold.
  std::string relation_failure() const;

 private:
  AlgebraPtr source_, target_;
  bool anti_;
  TorusRule torus_;
  std::vector<UElement> e_img_, f_img_;
  std::string name_;
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<bool, Word>, UElement> words;
  };
  std::shared_ptr<Memo> memo_;

  UElement word_image(bool f_side, const Word& w) const;
  UElement torus_image(const LatticeVec& lambda, const LatticeVec& mu) const;
  UElement mul(const UElement& x, const UElement& y) const { return anti_ ? y * x : x * y; }
};

/// Ω^{χ,π}: automorphism of u, E_i ↦ F_i L_{-π(i)}, F_i ↦ K_{-π(i)} E_i.
AlgebraMap omega(const AlgebraPtr& u);
/// Υ: U(χ^op,π) → U(χ,π) (op = false) or U(χ,π) → U(χ^op,π) (op = true);
/// E_i ↔ F_i, K_λ L_μ ↦ K_μ L_λ.
AlgebraMap upsilon(const AlgebraFamily& fam, const Frame& pi, bool op = false);
/// Γ: same domains as Υ; anti-map fixing E_i, F_i, K_λ L_μ ↦ K_μ L_λ.
AlgebraMap gamma(const AlgebraFamily& fam, const Frame& pi, bool op = false);
/// ζ_i: automorphism of u, E_j ↦ E_j/(q̇_ij q̇_ji), F_j ↦ q̇_ij q̇_ji F_j.
AlgebraMap zeta(const AlgebraPtr& u, int i);

/// The normalization ϖ(j) of the strict T_i in frame π (target frame).
Coeff strict_normalization(const AlgebraPtr& target, int i, int j);
/// Strict T_i: U(τ_iπ) → U(π) within the χ (op = false) or χ^op family.
AlgebraMap lusztig_t(const AlgebraFamily& fam, const Frame& pi, int i, bool op = false);
/// T_{k_1} ∘ ... ∘ T_{k_ℓ}: U(π_ℓ) → U(π); throws Error if w is not reduced.
AlgebraMap lusztig_t_word(const AlgebraFamily& fam, const Frame& pi, const std::vector<int>& w, bool op = false);

struct RootVector {
  LatticeVec beta;
  Coeff self_value;  // χ(β,β)
  UElement e, f, ebar, fbar;
};

/// E_{n;t} = T_{n_1}..T_{n_{t-1}}(E_{n_t}) etc. for t = 1..ℓ(w∘); throws
/// Error if n is not a reduced word of the longest element or if a vector
/// leaves U⁺ (U⁻).
std::vector<RootVector> root_vectors(const AlgebraFamily& fam, const Frame& pi, const std::vector<int>& n,
                                     bool op = false);

/// n_0 with s_{n_0} w∘ s_{n_last} = w∘.
int longest_word_partner(const CartanDatum& datum, int last);

}  // namespace mqg
