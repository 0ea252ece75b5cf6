// Sparse multivariate Laurent polynomials over the integers.
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mqg {

inline constexpr int kMaxVars = 8;

/// Exponent vector of a Laurent monomial. Entries beyond the ring's variable
/// count are always zero.
struct Exponent {
  std::array<int32_t, kMaxVars> e{};

  int32_t& operator[](int i) { return e[i]; }
  int32_t operator[](int i) const { return e[i]; }
  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;

  Exponent operator+(const Exponent& o) const {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Exponent operator-(const Exponent& o) const {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  bool is_zero() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
};

/// Terms are kept sorted by exponent in strictly decreasing lex order, with no
/// zero coefficients. The empty term list is the zero polynomial.
class Poly {
 public:
  using Term = std::pair<Exponent, mpz_class>;

  Poly() = default;
  explicit Poly(long c);
  explicit Poly(const mpz_class& c);
  static Poly monomial(const Exponent& e, const mpz_class& c = 1);
  static Poly variable(int index, int power = 1);
  static Poly from_terms(std::vector<Term> terms);  // any order, duplicates ok

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const mpz_class& c) const;
  Poly shifted(const Exponent& e) const;  // multiply by x^e
  Poly pow(unsigned n) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order used only for deterministic container keys.
  bool less(const Poly& o) const;

  int degree(int var) const;      // max exponent of var (0 for zero poly)
  int min_degree(int var) const;  // min exponent of var (0 for zero poly)
  Exponent min_exponent() const;  // componentwise minimum
  bool uses(int var) const;
  mpz_class content() const;  // positive gcd of the coefficients

  /// Coefficients of this polynomial as a polynomial in `var`; the keys are
  /// exponents of var and the values do not involve var.
  std::map<int, Poly> split(int var) const;

  /// Exact quotient this / d. Both must be ordinary polynomials (nonnegative
  /// exponents). Returns false if d does not divide this.
  bool divide_exact(const Poly& d, Poly& quotient) const;

  std::string debug_string() const;

 private:
  std::vector<Term> terms_;
  void normalize();
  friend Poly poly_gcd(const Poly&, const Poly&);
};

/// Greatest common divisor of two Laurent polynomials, as an ordinary
/// polynomial not divisible by any variable with positive leading coefficient.
/// gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact division a / b for Laurent polynomials known to divide.
Poly poly_div_exact(const Poly& a, const Poly& b);

}  // namespace mqg
