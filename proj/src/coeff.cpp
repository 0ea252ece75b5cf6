#include "mqg/coeff.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace mqg {

RingPtr ParamRing::create(std::vector<std::string> params, std::vector<SqrtDef> sqrt_defs,
                          std::vector<DisplayAlias> aliases) {
  if (params.size() > static_cast<size_t>(kMaxVars))
    throw Error("too many parameters (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (p.empty() || !std::isalpha(static_cast<unsigned char>(p[0])))
      throw Error("invalid parameter name '" + p + "'");
    if (!seen.insert(p).second) throw Error("duplicate name '" + p + "'");
  }
  for (const auto& r : sqrt_defs) {
    if (r.name.empty() || !std::isalpha(static_cast<unsigned char>(r.name[0])))
      throw Error("invalid root symbol name '" + r.name + "'");
    if (!seen.insert(r.name).second) throw Error("duplicate name '" + r.name + "'");
    if (r.square.is_zero()) throw Error("root symbol '" + r.name + "' has zero square");
    for (int v = static_cast<int>(params.size()); v < kMaxVars; ++v)
      if (r.square.uses(v)) throw Error("square of '" + r.name + "' uses an unknown variable");
  }
  if (sqrt_defs.size() > 4) throw Error("at most 4 root symbols are supported");
  for (const auto& a : aliases) {
    if (a.var < 0 || a.var >= static_cast<int>(params.size()) || a.factor <= 0)
      throw Error("invalid display alias '" + a.name + "'");
  }
  auto ring = std::shared_ptr<ParamRing>(new ParamRing());
  ring->params_ = std::move(params);
  ring->roots_ = std::move(sqrt_defs);
  ring->aliases_ = std::move(aliases);
  return ring;
}

int ParamRing::param_index(std::string_view name) const {
  for (size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return static_cast<int>(i);
  return -1;
}

int ParamRing::root_index(std::string_view name) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].name == name) return static_cast<int>(i);
  return -1;
}

Coeff make_zero(const RingPtr& ring) {
  Coeff c;
  c.ring_ = ring;
  c.num_.assign(size_t{1} << ring->num_roots(), Poly());
  return c;
}

Coeff::Coeff(RingPtr ring, long c) : Coeff(std::move(ring), Poly(c)) {}

Coeff::Coeff(RingPtr ring, const Poly& p) : ring_(std::move(ring)) {
  if (!ring_) throw Error("Coeff requires a ring");
  num_.assign(size_t{1} << ring_->num_roots(), Poly());
  num_[0] = p;
}

Coeff Coeff::param(RingPtr ring, int index, int power) {
  if (index < 0 || index >= ring->num_params()) throw Error("parameter index out of range");
  return Coeff(std::move(ring), Poly::variable(index, power));
}

Coeff Coeff::param(RingPtr ring, std::string_view name, int power) {
  int i = ring->param_index(name);
  if (i < 0) throw Error("unknown parameter '" + std::string(name) + "'");
  return param(std::move(ring), i, power);
}

Coeff Coeff::root(RingPtr ring, int index) {
  if (index < 0 || index >= ring->num_roots()) throw Error("root index out of range");
  Coeff c = make_zero(ring);
  c.num_[size_t{1} << index] = Poly(1);
  return c;
}

Coeff Coeff::root(RingPtr ring, std::string_view name) {
  int i = ring->root_index(name);
  if (i < 0) throw Error("unknown root symbol '" + std::string(name) + "'");
  return root(std::move(ring), i);
}

bool Coeff::is_zero() const {
  for (const auto& p : num_)
    if (!p.is_zero()) return false;
  return true;
}

bool Coeff::is_one() const {
  if (num_.empty() || !den_.is_one() || !num_[0].is_one()) return false;
  for (size_t s = 1; s < num_.size(); ++s)
    if (!num_[s].is_zero()) return false;
  return true;
}

bool Coeff::is_root_free() const {
  for (size_t s = 1; s < num_.size(); ++s)
    if (!num_[s].is_zero()) return false;
  return true;
}

bool Coeff::is_unit_monomial() const {
  return !num_.empty() && is_root_free() && den_.is_one() && num_[0].is_monomial() &&
         (num_[0].leading().second == 1 || num_[0].leading().second == -1);
}

void Coeff::require_same_ring(const Coeff& o) const {
  if (ring_ != o.ring_) throw Error("coefficient ring mismatch");
}

void Coeff::canonicalize() {
  if (num_.empty()) return;
  if (is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_one()) reduce_by(den_);
  normalize_sign();
}

// Divides numerators and denominator by gcd(g, numerators), where g is a
// factor of the denominator containing every possible common factor.
void Coeff::reduce_by(Poly g) {
  if (is_zero()) {
    den_ = Poly(1);
    return;
  }
  for (const auto& p : num_) {
    if (g.is_one()) break;
    if (p.is_zero()) continue;
    g = poly_gcd(g, p);
  }
  if (!g.is_one()) {
    den_ = poly_div_exact(den_, g);
    for (auto& p : num_)
      if (!p.is_zero()) p = poly_div_exact(p, g);
  }
  normalize_sign();
}

// Moves the monomial part of the denominator into the numerators and makes
// its leading coefficient positive.
void Coeff::normalize_sign() {
  if (is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_one()) return;
  Exponent m = den_.min_exponent();
  if (!m.is_zero()) {
    Exponent neg;
    for (int i = 0; i < kMaxVars; ++i) neg[i] = -m[i];
    den_ = den_.shifted(neg);
    for (auto& p : num_) p = p.shifted(neg);
  }
  if (den_.leading().second < 0) {
    den_ = -den_;
    for (auto& p : num_) p = -p;
  }
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& p : r.num_) p = -p;
  return r;
}

Coeff Coeff::operator+(const Coeff& o) const {
  if (!ring_) return o;
  if (!o.ring_) return *this;
  require_same_ring(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Coeff r = make_zero(ring_);
  if (den_ == o.den_) {
    for (size_t s = 0; s < num_.size(); ++s) r.num_[s] = num_[s] + o.num_[s];
    r.den_ = den_;
    r.reduce_by(den_);
    return r;
  }
  // both operands are reduced, so only common factors of the denominators
  // can survive in the sum
  Poly g = den_.is_one() || o.den_.is_one() ? Poly(1) : poly_gcd(den_, o.den_);
  Poly da = g.is_one() ? den_ : poly_div_exact(den_, g);
  Poly db = g.is_one() ? o.den_ : poly_div_exact(o.den_, g);
  for (size_t s = 0; s < num_.size(); ++s) r.num_[s] = num_[s] * db + o.num_[s] * da;
  r.den_ = da * o.den_;
  if (!g.is_one())
    r.reduce_by(g);
  else
    r.normalize_sign();
  return r;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  if (!ring_) return *this;
  if (!o.ring_) return o;
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return make_zero(ring_);
  // cross-cancel: gcd(content(a), d) and gcd(content(c), b) for a/b * c/d
  std::vector<Poly> na = num_, nc = o.num_;
  Poly b = den_, d = o.den_;
  auto cancel = [](std::vector<Poly>& num, Poly& den) {
    if (den.is_one()) return;
    Poly g = den;
    for (const auto& p : num) {
      if (p.is_zero()) continue;
      g = poly_gcd(g, p);
      if (g.is_one()) return;
    }
    den = poly_div_exact(den, g);
    for (auto& p : num)
      if (!p.is_zero()) p = poly_div_exact(p, g);
  };
  cancel(na, d);
  cancel(nc, b);
  Coeff r = make_zero(ring_);
  const size_t n = na.size();
  for (size_t s = 0; s < n; ++s) {
    if (na[s].is_zero()) continue;
    for (size_t t = 0; t < n; ++t) {
      if (nc[t].is_zero()) continue;
      Poly prod = na[s] * nc[t];
      size_t both = s & t;
      for (int k = 0; both; ++k, both >>= 1)
        if (both & 1u) prod *= ring_->roots()[k].square;
      r.num_[s ^ t] += prod;
    }
  }
  r.den_ = b * d;
  // root-free factors are now coprime; products of root parts may not be
  if (is_root_free() && o.is_root_free())
    r.normalize_sign();
  else
    r.canonicalize();
  return r;
}

Coeff Coeff::conjugate(int root) const {
  Coeff r = *this;
  for (size_t s = 0; s < num_.size(); ++s)
    if (s & (size_t{1} << root)) r.num_[s] = -r.num_[s];
  return r;
}

Coeff Coeff::inverse() const {
  if (!ring_ || is_zero()) throw Error("division by zero");
  // Multiply by conjugates until the numerator is root-free.
  Coeff numer = *this;
  numer.den_ = Poly(1);
  Coeff acc(ring_, 1);
  for (int k = 0; k < ring_->num_roots(); ++k) {
    Coeff c = numer.conjugate(k);
    if (c == numer) continue;
    acc *= c;
    numer *= c;
  }
  // numer is now root-free and (since den was dropped) a Laurent polynomial
  // over its own denominator; fold everything into a single fraction.
  Coeff r = acc;
  r.den_ = r.den_ * numer.num_[0];
  for (auto& p : r.num_) p = p * numer.den_ * den_;
  r.canonicalize();
  return r;
}

Coeff Coeff::operator/(const Coeff& o) const {
  if (!o.ring_ || o.is_zero()) throw Error("division by zero");
  return *this * o.inverse();
}

Coeff Coeff::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (!ring_) return n == 0 ? Coeff() : *this;
  Coeff result(ring_, 1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool Coeff::operator==(const Coeff& o) const {
  if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
  return ring_ == o.ring_ && den_ == o.den_ && num_ == o.num_;
}

namespace {

struct AliasUse {
  int var;
  int factor;
  std::string name;
};

void render_poly(std::ostringstream& os, const Poly& p, const ParamRing& ring, size_t roots,
                 const std::vector<AliasUse>& alias, bool& first) {
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::string> factors;
    for (int v = 0; v < ring.num_params(); ++v) {
      if (e[v] == 0) continue;
      std::string name = ring.params()[v];
      int power = e[v];
      for (const auto& a : alias)
        if (a.var == v) {
          name = a.name;
          power /= a.factor;
        }
      factors.push_back(power == 1 ? name : name + "^" + std::to_string(power));
    }
    for (int k = 0; k < ring.num_roots(); ++k)
      if (roots & (size_t{1} << k)) factors.push_back(ring.roots()[k].name);
    mpz_class mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool need_coef = factors.empty() || mag != 1;
    if (need_coef) os << mag.get_str();
    for (size_t i = 0; i < factors.size(); ++i) {
      if (need_coef || i > 0) os << "*";
      os << factors[i];
    }
  }
}

}  // namespace

std::string Coeff::render(bool use_aliases) const {
  if (!ring_ || is_zero()) return "0";
  std::vector<AliasUse> alias;
  if (use_aliases) {
    for (const auto& a : ring_->aliases()) {
      bool ok = true;
      auto check = [&](const Poly& p) {
        for (const auto& [e, c] : p.terms())
          if (e[a.var] % a.factor != 0) ok = false;
      };
      for (const auto& p : num_) check(p);
      check(den_);
      if (ok) alias.push_back({a.var, a.factor, a.name});
    }
  }
  std::ostringstream os;
  bool multi = false;
  {
    size_t nterms = 0;
    for (const auto& p : num_) nterms += p.size();
    multi = nterms > 1;
  }
  bool has_den = !den_.is_one();
  if (has_den && multi) os << "(";
  bool first = true;
  for (size_t s = 0; s < num_.size(); ++s) render_poly(os, num_[s], *ring_, s, alias, first);
  if (has_den && multi) os << ")";
  if (has_den) {
    os << "/";
    bool dfirst = true;
    bool dmulti = den_.size() > 1 || !den_.leading().first.is_zero();
    if (dmulti) os << "(";
    render_poly(os, den_, *ring_, 0, alias, dfirst);
    if (dmulti) os << ")";
  }
  return os.str();
}

std::string Coeff::str() const { return render(false); }
std::string Coeff::pretty() const { return render(true); }

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

  Coeff parse() {
    Coeff c = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return c;
  }

 private:
  const RingPtr& ring_;
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw Error("coefficient parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Coeff expr() {
    Coeff acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  Coeff term() {
    Coeff acc = factor();
    while (true) {
      if (eat('*'))
        acc *= factor();
      else if (eat('/'))
        acc /= factor();
      else
        return acc;
    }
  }
  Coeff factor() {
    if (eat('-')) return -factor();
    Coeff base = primary();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      long e = integer();
      base = base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Coeff primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Coeff inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Coeff(ring_, Poly(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (ring_->param_index(name) >= 0) return Coeff::param(ring_, name);
      if (ring_->root_index(name) >= 0) return Coeff::root(ring_, name);
      for (const auto& a : ring_->aliases())
        if (a.name == name) return Coeff::param(ring_, a.var, a.factor);
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Coeff parse_coeff(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

Coeff q_number(int r, const Coeff& x) {
  if (r < 0) throw Error("q_number: negative argument");
  Coeff sum = make_zero(x.ring()), p(x.ring(), 1);
  for (int k = 0; k < r; ++k) {
    sum += p;
    p *= x;
  }
  return sum;
}

Coeff q_factorial(int r, const Coeff& x) {
  if (r < 0) throw Error("q_factorial: negative argument");
  Coeff prod(x.ring(), 1);
  for (int k = 1; k <= r; ++k) prod *= q_number(k, x);
  return prod;
}

Coeff q_binomial(int k, int r, const Coeff& x) {
  Coeff den = q_factorial(k, x) * q_factorial(r, x);
  if (den.is_zero()) throw Error("q_binomial: vanishing denominator");
  return q_factorial(k + r, x) / den;
}

Coeff shifted_term(int r, const Coeff& x, const Coeff& y) {
  return Coeff(x.ring(), 1) - x.pow(r - 1) * y;
}

Coeff shifted_factorial(int r, const Coeff& x, const Coeff& y) {
  Coeff prod(x.ring(), 1);
  for (int k = 1; k <= r; ++k) prod *= shifted_term(k, x, y);
  return prod;
}

}  // namespace mqg
