// The lattice VZ, Cartan data, admissible bicharacters and π-frames.
#pragma once

#include <string>
#include <vector>

#include "mqg/coeff.hpp"

namespace mqg {

/// Integer vector in coordinates of the fixed ambient basis of VZ.
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(int rank) : c_(rank, 0) {}
  LatticeVec(std::initializer_list<int> coords) : c_(coords) {}
  explicit LatticeVec(std::vector<int> coords) : c_(std::move(coords)) {}
  static LatticeVec unit(int rank, int i) {
    LatticeVec v(rank);
    v.c_[i] = 1;
    return v;
  }

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }
  bool is_zero() const;
  bool is_nonnegative() const;
  int height() const;  // sum of coordinates

  LatticeVec operator+(const LatticeVec& o) const;
  LatticeVec operator-(const LatticeVec& o) const;
  LatticeVec operator-() const;
  LatticeVec operator*(int k) const;
  LatticeVec& operator+=(const LatticeVec& o) { return *this = *this + o; }
  auto operator<=>(const LatticeVec&) const = default;
  bool operator==(const LatticeVec&) const = default;

  std::string str() const;  // "[1,0,-2]"

 private:
  std::vector<int> c_;
};

/// Symmetrizable finite-type Cartan matrix with symmetrizers d_i.
/// Convention: a_ij = 2(α_i,α_j)/(α_i,α_i), d_i = (α_i,α_i)/2, Bourbaki numbering.
class CartanDatum {
 public:
  CartanDatum(std::vector<std::vector<int>> a, std::vector<int> d, std::string name = "");
  /// "A1".."A4", "B2".."B4", "C2".."C4", "D4", "F4", "G2".
  static CartanDatum from_type(const std::string& type);

  int rank() const { return static_cast<int>(a_.size()); }
  int a(int i, int j) const { return a_[i][j]; }
  int d(int i) const { return d_[i]; }
  const std::string& name() const { return name_; }

 private:
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  std::string name_;
};

/// Images π(1..θ) of the generator indices in the ambient lattice.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<LatticeVec> images) : images_(std::move(images)) {}
  static Frame identity(int rank);
  int rank() const { return static_cast<int>(images_.size()); }
  const LatticeVec& operator()(int i) const { return images_[i]; }
  const std::vector<LatticeVec>& images() const { return images_; }
  /// Σ coeffs[i] π(i)
  LatticeVec combine(const LatticeVec& coeffs) const;
  auto operator<=>(const Frame&) const = default;
  bool operator==(const Frame&) const = default;
  std::string str() const;

 private:
  std::vector<LatticeVec> images_;
};

/// Bicharacter given by its square root √χ on the ambient basis; every entry is
/// a Laurent monomial in the ring parameters. χ = (√χ)².
class Bicharacter {
 public:
  Bicharacter(RingPtr ring, std::vector<std::vector<Exponent>> sqrt_log);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(log_.size()); }
  /// √χ(λ,μ) = Π q̇_ab^{λ_a μ_b}
  Coeff sqrt_eval(const LatticeVec& l, const LatticeVec& m) const;
  /// χ(λ,μ)
  Coeff eval(const LatticeVec& l, const LatticeVec& m) const;
  /// log-form exponent of √χ(λ,μ)
  Exponent sqrt_log(const LatticeVec& l, const LatticeVec& m) const;
  /// χ^op(x,y) = χ(y,x)
  Bicharacter opposite() const;
  bool operator==(const Bicharacter& o) const { return ring_ == o.ring_ && log_ == o.log_; }

 private:
  RingPtr ring_;
  std::vector<std::vector<Exponent>> log_;
};

/// The generic admissible setting for a Cartan datum: the ring (parameters
/// qd, p_ij for i<j; root symbols th<d> with th<d>² = qd^{4d}-1), the
/// bicharacter, and lookup of Θ(q_kk - 1).
class AdmissibleData {
 public:
  explicit AdmissibleData(const CartanDatum& datum);

  const CartanDatum& datum() const { return datum_; }
  const RingPtr& ring() const { return ring_; }
  const Bicharacter& chi() const { return chi_; }
  /// The formal root of q - 1 where q = qd^{4d}.
  Coeff theta_for_d(int d) const;
  /// Θ(χ(λ,λ) - 1) for λ with χ(λ,λ) = qd^{4d}, d > 0.
  Coeff theta_for_self_value(const LatticeVec& lambda) const;
  Coeff qd() const { return Coeff::param(ring_, 0); }

 private:
  CartanDatum datum_;
  std::vector<int> root_d_;  // root symbol k is Θ(qd^{4 root_d_[k]} - 1)
  RingPtr ring_;
  Bicharacter chi_;
};

/// q_ij := χ(π(i), π(j)) for the given frame.
Coeff frame_q(const Bicharacter& chi, const Frame& pi, int i, int j);
/// q̇_ij := √χ(π(i), π(j)).
Coeff frame_qdot(const Bicharacter& chi, const Frame& pi, int i, int j);

/// N_ij = -a_ij, cross-checked against the generic root-string scan.
int n_ij(const CartanDatum& datum, const Bicharacter& chi, const Frame& pi, int i, int j);
/// Root-string scan: largest t with (t)_{q_ii}!(t;q_ii,q_ij q_ji)! ≠ 0.
int root_string_length(const Bicharacter& chi, const Frame& pi, int i, int j, int limit = 16);
/// τ_i π
Frame tau_reflect(const CartanDatum& datum, const Bicharacter& chi, const Frame& pi, int i);
/// Order of s_i s_j in the Weyl group.
int m_ij(const CartanDatum& datum, int i, int j);

}  // namespace mqg
