// Weyl group of a finite-type Cartan datum: reduced words, the longest
// element, the positive roots β_{n;t} and Kostant partition counts.
#pragma once

#include <map>
#include <vector>

#include "mqg/lattice.hpp"

namespace mqg {

/// Word in the simple reflections; letters are 0-based generator indices.
using WeylWord = std::vector<int>;

struct RootDatum {
  std::vector<LatticeVec> roots;  // β_{n;1..ℓ(w∘)}
  std::vector<Coeff> self_values;  // χ(β_t, β_t)
};

class WeylGroup {
 public:
  explicit WeylGroup(const CartanDatum& datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  /// s_i·λ = λ - (Σ_j a_ij λ_j) π(i)
  LatticeVec reflect(int i, const LatticeVec& lambda) const;
  /// Apply s_{w_1}···s_{w_k} (rightmost letter first).
  LatticeVec act(const WeylWord& w, const LatticeVec& lambda) const;

  const std::vector<LatticeVec>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }

  /// Permutation of the full root set induced by w; equal elements give
  /// equal permutations.
  std::vector<int> permutation(const WeylWord& w) const;
  bool same_element(const WeylWord& a, const WeylWord& b) const {
    return permutation(a) == permutation(b);
  }
  int length(const WeylWord& w) const;
  bool is_reduced(const WeylWord& w) const { return length(w) == static_cast<int>(w.size()); }
  /// Lexicographically smallest reduced word of w∘.
  WeylWord longest_word() const;
  /// β_{n;t} = s_{n_1}···s_{n_{t-1}}·π(n_t); n must be a reduced word of w∘.
  RootDatum beta_sequence(const WeylWord& n, const Bicharacter& chi) const;

 private:
  CartanDatum datum_;
  std::vector<LatticeVec> positive_;
  std::vector<LatticeVec> all_;  // positive then negative
  std::map<LatticeVec, int> index_;
  std::vector<std::vector<int>> simple_perm_;
};

/// Number of multisets of the given positive roots summing to λ.
long long kostant_dim(const std::vector<LatticeVec>& positive_roots, const LatticeVec& lambda);

/// All λ ≥ 0 with height in [1, max_height].
std::vector<LatticeVec> nonnegative_vectors(int rank, int max_height);

}  // namespace mqg
