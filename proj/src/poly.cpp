#include "mqg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mqg {

namespace {

bool exp_greater(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

bool dominates(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] < b[i]) return false;
  return true;
}

Exponent exp_min(const Exponent& a, const Exponent& b) {
  Exponent r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Exponent{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Exponent{}, c});
}

Poly Poly::monomial(const Exponent& e, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Poly Poly::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("Poly::variable index");
  Exponent e;
  e[index] = power;
  return monomial(e);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), exp_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_zero() && terms_[0].second == 1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) {
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.first = t.first + o.terms_[0].first;
      t.second *= o.terms_[0].second;
    }
    return r;
  }
  if (terms_.size() == 1) return o * *this;
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.first + b.first, a.second * b.second});
  return from_terms(std::move(acc));
}

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::shifted(const Exponent& e) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.first = t.first + e;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool Poly::less(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
    int c = cmp(terms_[i].second, o.terms_[i].second);
    if (c != 0) return c < 0;
  }
  return false;
}

int Poly::degree(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first[var];
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

int Poly::min_degree(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first[var];
  for (const auto& t : terms_) d = std::min(d, t.first[var]);
  return d;
}

Exponent Poly::min_exponent() const {
  if (terms_.empty()) return {};
  Exponent m = terms_[0].first;
  for (const auto& t : terms_) m = exp_min(m, t.first);
  return m;
}

bool Poly::uses(int var) const {
  for (const auto& t : terms_)
    if (t.first[var] != 0) return true;
  return false;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::map<int, Poly> Poly::split(int var) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : terms_) {
    Exponent e = t.first;
    int d = e[var];
    e[var] = 0;
    parts[d].push_back({e, t.second});
  }
  std::map<int, Poly> out;
  for (auto& [d, ts] : parts) out[d] = from_terms(std::move(ts));
  return out;
}

bool Poly::divide_exact(const Poly& d, Poly& quotient) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Term> q;
  Poly r = *this;
  const auto& [dexp, dcoef] = d.leading();
  while (!r.is_zero()) {
    const auto& [rexp, rcoef] = r.leading();
    if (!dominates(rexp, dexp)) return false;
    if (!mpz_divisible_p(rcoef.get_mpz_t(), dcoef.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rcoef.get_mpz_t(), dcoef.get_mpz_t());
    Exponent e = rexp - dexp;
    q.push_back({e, c});
    r = r - Poly::monomial(e, c) * d;
  }
  quotient = from_terms(std::move(q));
  return true;
}

std::string Poly::debug_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) os << "*x" << i << "^" << e[i];
  }
  return os.str();
}

namespace {

// Strip the monomial content so that no variable divides p.
Poly strip_monomial(const Poly& p, Exponent* removed = nullptr) {
  Exponent m = p.min_exponent();
  if (removed) *removed = m;
  if (m.is_zero()) return p;
  Exponent neg;
  for (int i = 0; i < kMaxVars; ++i) neg[i] = -m[i];
  return p.shifted(neg);
}

Poly positive_lead(const Poly& p) {
  if (!p.is_zero() && p.leading().second < 0) return -p;
  return p;
}

int first_variable(const Poly& a, const Poly& b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (a.uses(v) || b.uses(v)) return v;
  return -1;
}

Poly exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!a.divide_exact(b, q)) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// gcd of the coefficients of p viewed as a polynomial in var, folded with g0.
Poly content_in(const Poly& p, int var, Poly g0) {
  for (const auto& [d, c] : p.split(var)) {
    g0 = g0.is_zero() ? positive_lead(c) : gcd_rec(g0, c);
    if (g0.is_one()) break;
  }
  return g0;
}

Poly primitive_in(const Poly& p, int var) {
  Poly c = content_in(p, var, Poly());
  return c.is_one() ? p : exact(p, c);
}

Poly lead_coeff_in(const Poly& p, int var) { return p.split(var).rbegin()->second; }

// Pseudo-remainder of a by b with respect to var.
Poly prem(Poly a, const Poly& b, int var) {
  int db = b.degree(var);
  Poly lb = lead_coeff_in(b, var);
  while (!a.is_zero() && a.degree(var) >= db) {
    int da = a.degree(var);
    Poly la = lead_coeff_in(a, var);
    a = lb * a - la * Poly::variable(var, da - db) * b;
  }
  return a;
}

// Both inputs are ordinary polynomials with no monomial content.
Poly gcd_rec(const Poly& a0, const Poly& b0) {
  if (a0.is_zero()) return positive_lead(b0);
  if (b0.is_zero()) return positive_lead(a0);
  Poly a = strip_monomial(a0), b = strip_monomial(b0);
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return Poly(c);
  int v = first_variable(a, b);
  if (!a.uses(v)) std::swap(a, b);
  if (!b.uses(v)) {
    // b is free of v: gcd(a, b) = gcd(b, coefficients of a in v)
    return content_in(a, v, positive_lead(b));
  }
  // cheap divisibility probes
  Poly q;
  if (a.size() >= b.size() && a.divide_exact(b, q)) return positive_lead(b);
  if (b.size() >= a.size() && b.divide_exact(a, q)) return positive_lead(a);

  Poly conta = content_in(a, v, Poly()), contb = content_in(b, v, Poly());
  Poly cont = gcd_rec(conta, contb);
  Poly pa = conta.is_one() ? a : exact(a, conta);
  Poly pb = contb.is_one() ? b : exact(b, contb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      pa = Poly(1);
      break;
    }
    pb = primitive_in(r, v);
  }
  Poly g = primitive_in(pa, v);
  return positive_lead(cont * g);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Poly sa = strip_monomial(a), sb = strip_monomial(b);
  if ((sa.is_monomial() && !sa.is_zero()) || (sb.is_monomial() && !sb.is_zero())) {
    mpz_class ca = sa.content(), cb = sb.content(), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly(c);
  }
  // gcd(a(x^k), b(x^k)) = gcd(a, b)(x^k): compress common exponent strides
  std::array<int, kMaxVars> stride{};
  for (const auto* p : {&sa, &sb})
    for (const auto& t : p->terms())
      for (int v = 0; v < kMaxVars; ++v) stride[v] = std::gcd(stride[v], t.first[v]);
  bool compress = false;
  for (int& k : stride) {
    if (k == 0) k = 1;
    if (k > 1) compress = true;
  }
  if (!compress) return positive_lead(strip_monomial(gcd_rec(sa, sb)));
  auto squeeze = [&](const Poly& p, bool expand) {
    std::vector<Poly::Term> ts;
    ts.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
      Exponent f = e;
      for (int v = 0; v < kMaxVars; ++v) f[v] = expand ? e[v] * stride[v] : e[v] / stride[v];
      ts.push_back({f, c});
    }
    return Poly::from_terms(std::move(ts));
  };
  Poly g = gcd_rec(squeeze(sa, false), squeeze(sb, false));
  return positive_lead(strip_monomial(squeeze(g, true)));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  Exponent ma, mb;
  Poly pa = strip_monomial(a, &ma), pb = strip_monomial(b, &mb);
  Poly q;
  if (!pa.divide_exact(pb, q)) throw std::logic_error("inexact polynomial division");
  return q.shifted(ma - mb);
}

}  // namespace mqg
