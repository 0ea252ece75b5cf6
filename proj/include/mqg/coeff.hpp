// Exact coefficient field: fractions of integer Laurent polynomials in named
// parameters, extended by formal square roots of Laurent polynomials.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mqg/poly.hpp"

namespace mqg {

/// Library-wide error for invalid input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named formal square root θ with θ² = square.
struct SqrtDef {
  std::string name;
  Poly square;
};

/// Display alias: print x_var^(factor*k) as name^k when every exponent of var
/// is divisible by factor. Purely cosmetic.
struct DisplayAlias {
  std::string name;
  int var;
  int factor;
};

class ParamRing {
 public:
  /// Parameters are Laurent variables; the sqrt definitions may only refer to
  /// parameters. Throws Error on duplicate names or a zero square.
  static std::shared_ptr<const ParamRing> create(std::vector<std::string> params,
                                                 std::vector<SqrtDef> sqrt_defs,
                                                 std::vector<DisplayAlias> aliases = {});

  int num_params() const { return static_cast<int>(params_.size()); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<SqrtDef>& roots() const { return roots_; }
  const std::vector<DisplayAlias>& aliases() const { return aliases_; }
  int param_index(std::string_view name) const;  // -1 if absent
  int root_index(std::string_view name) const;   // -1 if absent

 private:
  ParamRing() = default;
  std::vector<std::string> params_;
  std::vector<SqrtDef> roots_;
  std::vector<DisplayAlias> aliases_;
};

using RingPtr = std::shared_ptr<const ParamRing>;

/// An element Σ_S (num[S]/den) θ^S, S ranging over subsets of root symbols
/// (bitmask). Canonical: den is an ordinary polynomial divisible by no
/// variable, with positive leading coefficient, and gcd(den, all num[S]) = 1.
class Coeff {
 public:
  Coeff() = default;  // zero, no ring
  Coeff(RingPtr ring, long c);
  Coeff(RingPtr ring, const Poly& p);
  static Coeff param(RingPtr ring, int index, int power = 1);
  static Coeff param(RingPtr ring, std::string_view name, int power = 1);
  static Coeff root(RingPtr ring, int index);
  static Coeff root(RingPtr ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  /// True iff no root symbol occurs.
  bool is_root_free() const;
  /// Nonzero numerator is a single term and den = 1, no root symbols.
  bool is_unit_monomial() const;
  const std::vector<Poly>& numerators() const { return num_; }
  const Poly& denominator() const { return den_; }

  Coeff operator-() const;
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }
  Coeff inverse() const;
  Coeff pow(int n) const;  // negative n allowed for nonzero values

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Plain-text form accepted by parse_coeff (round-trips exactly).
  std::string str() const;
  /// Same, but using the ring's display aliases where they apply.
  std::string pretty() const;

 private:
  RingPtr ring_;
  std::vector<Poly> num_;  // size 2^num_roots, or empty for the ringless zero
  Poly den_{1};

  void canonicalize();
  void reduce_by(Poly g);
  void normalize_sign();
  Coeff conjugate(int root) const;
  void require_same_ring(const Coeff& o) const;
  std::string render(bool aliases) const;
  friend Coeff make_zero(const RingPtr&);
};

Coeff make_zero(const RingPtr& ring);

/// Parses integers, parameter and root names, ^ (signed integer exponents),
/// * / + - and parentheses.
Coeff parse_coeff(const RingPtr& ring, std::string_view text);

// q-combinatorics
Coeff q_number(int r, const Coeff& x);                      // (r)_x
Coeff q_factorial(int r, const Coeff& x);                   // (r)_x!
Coeff q_binomial(int k, int r, const Coeff& x);             // (k+r)_x!/((k)_x!(r)_x!)
Coeff shifted_term(int r, const Coeff& x, const Coeff& y);  // (r;x,y) = 1 - x^{r-1} y
Coeff shifted_factorial(int r, const Coeff& x, const Coeff& y);  // (r;x,y)!

}  // namespace mqg
