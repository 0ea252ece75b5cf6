#include "mqg/aform.hpp"

#include <numeric>
#include <optional>

#include "mqg/hopf.hpp"
#include "mqg/pairing.hpp"

namespace mqg {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

size_t weight(const Coeff& c) {
  size_t w = c.denominator().terms().size();
  for (const auto& n : c.numerators()) w += n.terms().size();
  return w;
}

// Solves Σ_c x_c col_c = target over the coefficient field by sparse
// Gauss-Jordan elimination with Markowitz pivoting. Throws Error if the
// columns are dependent; nullopt if the target is outside their span.
template <class Key>
std::optional<std::vector<Coeff>> solve(const RingPtr&, const std::vector<std::map<Key, Coeff>>& cols,
                                        const std::map<Key, Coeff>& target) {
  const int n = static_cast<int>(cols.size());
  const int rhs = n;
  std::map<Key, std::map<int, Coeff>> by_key;
  for (int c = 0; c < n; ++c)
    for (const auto& [k, v] : cols[c])
      if (!v.is_zero()) by_key[k][c] = v;
  for (const auto& [k, v] : target)
    if (!v.is_zero()) by_key[k][rhs] = v;
  std::vector<std::map<int, Coeff>> rows;
  for (auto& [k, r] : by_key) rows.push_back(std::move(r));
  std::vector<bool> used(rows.size(), false);
  std::vector<int> pivot_row(n, -1);
  for (int step = 0; step < n; ++step) {
    std::vector<int> col_count(n, 0);
    for (size_t r = 0; r < rows.size(); ++r)
      if (!used[r])
        for (const auto& [c, v] : rows[r])
          if (c != rhs) ++col_count[c];
    long best = -1;
    int br = -1, bc = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      long rc = 0;
      for (const auto& [c, v] : rows[r]) rc += c != rhs;
      for (const auto& [c, v] : rows[r]) {
        if (c == rhs || pivot_row[c] >= 0) continue;
        long cost = ((rc - 1) * (col_count[c] - 1)) * 64 + static_cast<long>(weight(v));
        if (best < 0 || cost < best) best = cost, br = static_cast<int>(r), bc = c;
      }
    }
    if (br < 0) throw Error("basis elements are linearly dependent");
    used[br] = true;
    pivot_row[bc] = br;
    Coeff inv = rows[br].at(bc).inverse();
    for (auto& [c, v] : rows[br]) v *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == br) continue;
      auto it = rows[r].find(bc);
      if (it == rows[r].end()) continue;
      Coeff f = it->second;
      for (const auto& [c, v] : rows[br]) {
        auto [jt, fresh] = rows[r].emplace(c, -(f * v));
        if (!fresh) {
          jt->second -= f * v;
          if (jt->second.is_zero()) rows[r].erase(jt);
        }
      }
    }
  }
  for (size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && rows[r].count(rhs)) return std::nullopt;
  std::vector<Coeff> x;
  for (int c = 0; c < n; ++c) {
    auto it = rows[pivot_row[c]].find(rhs);
    x.push_back(it == rows[pivot_row[c]].end() ? Coeff() : it->second);
  }
  return x;
}

// ---- rank-one torus polynomials in K = K_{π(i)}, L = L_{π(i)} ----

using KL = std::pair<int, int>;  // exponents of K and L
using TorusPoly = std::map<KL, Coeff>;
using Triple = std::array<int, 3>;  // K^x (KL)^y [K,L,0;z]

void add_to(TorusPoly& p, const KL& k, const Coeff& c) {
  auto [it, fresh] = p.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

TorusPoly torus_mul(const TorusPoly& a, const TorusPoly& b) {
  TorusPoly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_to(r, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

TorusPoly basis_element(const RingPtr& ring, const Coeff& q, const Triple& e) {
  TorusPoly r{{{e[0] + e[1], e[1]}, Coeff(ring, 1)}};
  Coeff one(ring, 1);
  for (int t = 1; t <= e[2]; ++t) {
    Coeff den = (q.pow(t) - one).inverse();
    r = torus_mul(r, TorusPoly{{{1, 0}, q.pow(1 - t) * den}, {{0, 1}, -den}});
  }
  return r;
}

// Expansion in the family K^x (KL)^y [K,L,0;z], x ∈ {0,1}, y ∈ Z, z ≥ 0.
std::map<Triple, Coeff> expand_rank_one(const RingPtr& ring, const Coeff& q, const TorusPoly& p) {
  std::map<int, TorusPoly> by_degree;
  for (const auto& [k, c] : p) by_degree[k.first + k.second].emplace(k, c);
  std::map<Triple, Coeff> out;
  for (const auto& [n, part] : by_degree) {
    int lo = part.begin()->first.first, hi = part.rbegin()->first.first;
    bool done = false;
    for (int w = 0; w <= 2 * (hi - lo) + 8 && !done; ++w) {
      std::vector<Triple> cand;
      std::vector<TorusPoly> cols;
      for (int top = lo - w; top <= hi + w; ++top)
        for (int x = 0; x <= 1; ++x) {
          int y = n - top, z = n - x - 2 * y;
          if (z < 0 || x + y < lo - w) continue;
          cand.push_back({x, y, z});
          cols.push_back(basis_element(ring, q, cand.back()));
        }
      auto sol = solve(ring, cols, part);
      if (!sol) continue;
      for (size_t c = 0; c < cand.size(); ++c)
        if (!(*sol)[c].is_zero()) out[cand[c]] += (*sol)[c];
      done = true;
    }
    if (!done) throw Error("torus polynomial outside the span of the U0 family");
  }
  return out;
}

// Multi-index torus coordinates: key is (x_0,y_0,z_0,x_1,...) for the base frame.
std::map<ExpVec, Coeff> torus_coordinates(const AlgebraPtr& u, const std::map<std::pair<LatticeVec, LatticeVec>, Coeff>& t) {
  int n = u->rank();
  // state: partially expanded indices -> remaining torus (as exponent pairs of the rest)
  using Rest = std::pair<std::vector<int>, std::vector<int>>;
  std::map<std::pair<ExpVec, Rest>, Coeff> cur;
  for (const auto& [kl, c] : t) cur[{ExpVec{}, {kl.first.coords(), kl.second.coords()}}] += c;
  for (int i = 0; i < n; ++i) {
    std::map<std::pair<ExpVec, Rest>, TorusPoly> groups;
    for (const auto& [key, c] : cur) {
      if (c.is_zero()) continue;
      auto rest = key.second;
      KL here{rest.first[i], rest.second[i]};
      rest.first[i] = rest.second[i] = 0;
      add_to(groups[{key.first, rest}], here, c);
    }
    std::map<std::pair<ExpVec, Rest>, Coeff> next;
    for (const auto& [key, poly] : groups) {
      for (const auto& [tri, c] : expand_rank_one(u->ring(), u->q(i, i), poly)) {
        ExpVec idx = key.first;
        idx.insert(idx.end(), tri.begin(), tri.end());
        next[{idx, key.second}] += c;
      }
    }
    cur = std::move(next);
  }
  std::map<ExpVec, Coeff> out;
  for (const auto& [key, c] : cur)
    if (!c.is_zero()) out[key.first] += c;
  return out;
}

int height(const LatticeVec& v) {
  int h = 0;
  for (int x : v.coords()) h += x;
  return h;
}

}  // namespace

// ---- AIntegrality ----

AIntegrality::AIntegrality(const AdmissibleData& data) {
  int n = data.datum().rank();
  std::vector<Exponent> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gens.push_back(data.chi().sqrt_log(LatticeVec::unit(n, i), LatticeVec::unit(n, j)));
  // integer row echelon form
  for (int col = 0; col < kMaxVars; ++col) {
    for (;;) {
      int best = -1;
      for (size_t r = 0; r < gens.size(); ++r)
        if (gens[r][col] != 0 && (best < 0 || std::abs(gens[r][col]) < std::abs(gens[best][col]))) best = r;
      if (best < 0) break;
      bool cleared = true;
      for (size_t r = 0; r < gens.size(); ++r) {
        if (static_cast<int>(r) == best || gens[r][col] == 0) continue;
        int f = gens[r][col] / gens[best][col];
        for (int k = 0; k < kMaxVars; ++k) gens[r][k] -= f * gens[best][k];
        if (gens[r][col] != 0) cleared = false;
      }
      if (cleared) {
        basis_.push_back(gens[best]);
        pivot_.push_back(col);
        gens.erase(gens.begin() + best);
        break;
      }
    }
  }
}

bool AIntegrality::in_lattice(const Exponent& e) const {
  Exponent r = e;
  for (size_t b = 0; b < basis_.size(); ++b) {
    int col = pivot_[b];
    if (r[col] % basis_[b][col] != 0) return false;
    int f = r[col] / basis_[b][col];
    for (int k = 0; k < kMaxVars; ++k) r[k] -= f * basis_[b][k];
  }
  return r.is_zero();
}

bool AIntegrality::contains(const Coeff& c) const {
  if (c.is_zero()) return true;
  if (!c.is_root_free()) throw Error("coefficient still contains a root symbol: " + c.pretty());
  const Poly& den = c.denominator();
  if (!den.is_monomial() || abs(den.leading().second) != 1) return false;
  const Exponent& shift = den.leading().first;
  for (const auto& [e, v] : c.numerators()[0].terms())
    if (!in_lattice(e - shift)) return false;
  return true;
}

// ---- brackets ----

UElement u0_bracket(const UElement& xe, const UElement& ye, const Coeff& x, int l, int p) {
  if (p < 0) throw Error("bracket with negative p");
  const AlgebraPtr& u = xe.algebra();
  UElement r = u->one();
  Coeff one(x.ring(), 1);
  for (int t = 1; t <= p; ++t) r = r * ((x.pow(l - t + 1) * xe - ye) / (x.pow(t) - one));
  return r;
}

UElement u0_bracket(const AlgebraPtr& u, int i, int l, int p) {
  return u0_bracket(u->k_gen(i), u->l_gen(i), u->q(i, i), l, p);
}

// ---- DividedPbw ----

DividedPbw::DividedPbw(std::shared_ptr<const AlgebraFamily> fam, WeylWord n, Side side)
    : fam_(std::move(fam)), n_(std::move(n)), side_(side), cache_(std::make_shared<Cache>()) {
  if (!fam_) throw Error("no algebra family");
  u_ = fam_->base();
  roots_ = root_vectors(*fam_, fam_->base_frame(), n_);
  for (const auto& r : roots_) self_.push_back(r.self_value);
}

const UElement& DividedPbw::bar(int t) const { return side_ == Side::plus ? roots_.at(t).ebar : roots_.at(t).fbar; }

Coeff DividedPbw::factorial(int t, int x) const { return q_factorial(x, self_.at(t)); }

UElement DividedPbw::divided_power(int t, int x) const { return bar(t).pow(x) / factorial(t, x); }

UElement DividedPbw::monomial(const ExpVec& x, const std::vector<int>& order) const {
  if (static_cast<int>(x.size()) != length()) throw Error("exponent vector of the wrong length");
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(length());
    std::iota(ord.begin(), ord.end(), 0);
  }
  UElement r = u_->one();
  for (int t : ord)
    if (x.at(t)) r = r * divided_power(t, x[t]);
  return r;
}

std::vector<ExpVec> DividedPbw::component(const LatticeVec& lambda) const {
  std::vector<ExpVec> out;
  ExpVec cur(length(), 0);
  auto rec = [&](auto&& self, int t, const LatticeVec& rest) -> void {
    if (rest.is_zero()) {
      out.push_back(cur);
      return;
    }
    if (t == length()) return;
    LatticeVec r = rest;
    for (int x = 0; r.is_nonnegative(); ++x) {
      cur[t] = x;
      self(self, t + 1, r);
      r = r - roots_[t].beta;
    }
    cur[t] = 0;
  };
  if (lambda.is_nonnegative()) rec(rec, 0, lambda);
  return out;
}

PbwPoly DividedPbw::coordinates(const UElement& x) const {
  if (x.is_zero()) return {};
  if (x.algebra() != u_) throw Error("element from a different algebra");
  std::optional<LatticeVec> deg;
  for (const auto& [m, c] : x.terms()) {
    bool ok = side_ == Side::plus ? m.f.empty() && m.k.is_zero() && m.l.is_zero()
                                  : m.e.empty() && m.k.is_zero() && m.l.is_zero();
    if (!ok) throw Error("element is not in the " + std::string(side_ == Side::plus ? "plus" : "minus") + " part");
    LatticeVec d = u_->word_degree(side_ == Side::plus ? m.e : m.f);
    if (deg && *deg != d) throw Error("element is not homogeneous");
    deg = d;
  }
  auto zs = component(*deg);
  std::vector<UElement::Terms> cols;
  for (const auto& z : zs) cols.push_back(monomial(z).terms());
  auto sol = solve(u_->ring(), cols, x.terms());
  if (!sol) throw Error("element outside the span of the PBW monomials");
  PbwPoly out;
  for (size_t c = 0; c < zs.size(); ++c)
    if (!(*sol)[c].is_zero()) out[zs[c]] = (*sol)[c];
  return out;
}

UElement DividedPbw::evaluate(const PbwPoly& p) const {
  UElement r = u_->zero();
  for (const auto& [z, c] : p) r += c * monomial(z);
  return r;
}

PbwPoly DividedPbw::to_plain(const PbwPoly& d) const {
  PbwPoly r;
  for (const auto& [z, c] : d) {
    Coeff f(u_->ring(), 1);
    for (int t = 0; t < length(); ++t) f *= factorial(t, z[t]);
    r[z] = c / f;
  }
  return r;
}

PbwPoly DividedPbw::to_divided(const PbwPoly& p) const {
  PbwPoly r;
  for (const auto& [z, c] : p) {
    Coeff f(u_->ring(), 1);
    for (int t = 0; t < length(); ++t) f *= factorial(t, z[t]);
    r[z] = c * f;
  }
  return r;
}

const PbwPoly& DividedPbw::rule(int u, int t) const {
  auto key = std::make_pair(u, t);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->rules.find(key);
    if (it != cache_->rules.end()) return it->second;
  }
  PbwPoly r = to_plain(coordinates(bar(u) * bar(t)));
  std::lock_guard lock(cache_->mutex);
  return cache_->rules.emplace(key, std::move(r)).first->second;
}

PbwPoly DividedPbw::right_multiply(const ExpVec& m, int t) const {
  int top = -1;
  for (int v = length() - 1; v >= 0; --v)
    if (m[v] > 0) {
      top = v;
      break;
    }
  if (top <= t) {
    ExpVec r = m;
    ++r[t];
    return {{r, Coeff(u_->ring(), 1)}};
  }
  auto key = std::make_pair(m, t);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->rmul.find(key);
    if (it != cache_->rmul.end()) return it->second;
  }
  // m = m' bar(top), and bar(top) bar(t) is rewritten by the rule
  ExpVec head = m;
  --head[top];
  PbwPoly out;
  for (const auto& [z, c] : rule(top, t)) {
    PbwPoly acc{{head, c}};
    for (int v = 0; v < length(); ++v)
      for (int k = 0; k < z[v]; ++k) acc = right_multiply(acc, v);
    for (const auto& [w, d] : acc) {
      auto [it, fresh] = out.emplace(w, d);
      if (!fresh) {
        it->second += d;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  std::lock_guard lock(cache_->mutex);
  cache_->rmul.emplace(key, out);
  return out;
}

PbwPoly DividedPbw::right_multiply(const PbwPoly& p, int t) const {
  PbwPoly out;
  for (const auto& [m, c] : p)
    for (const auto& [w, d] : right_multiply(m, t)) {
      auto [it, fresh] = out.emplace(w, c * d);
      if (!fresh) {
        it->second += c * d;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

PbwPoly DividedPbw::straighten(const std::vector<std::pair<int, int>>& factors) const {
  Coeff scale(u_->ring(), 1);
  for (const auto& [t, x] : factors) {
    if (t < 0 || t >= length() || x < 0) throw Error("bad divided-power factor");
    scale /= factorial(t, x);
  }
  PbwPoly acc{{ExpVec(length(), 0), scale}};
  for (const auto& [t, x] : factors)
    for (int k = 0; k < x; ++k) acc = right_multiply(acc, t);
  return to_divided(acc);
}

// ---- checks ----

Report divided_product_check(const DividedPbw& pbw, const AIntegrality& a, int max_exp) {
  Report rep;
  rep.suite = "divided-products";
  rep.type = pbw.algebra()->datum().name();
  std::string side = pbw.side() == Side::plus ? "E" : "F";
  for (int s = 0; s < pbw.length(); ++s)
    for (int t = 0; t < s; ++t)
      for (int x = 1; x <= max_exp; ++x)
        for (int y = 1; y <= max_exp; ++y) {
          std::string id = side + vec_str(pbw.word()) + " s=" + std::to_string(s + 1) + " t=" + std::to_string(t + 1) +
                           " x=" + std::to_string(x) + " y=" + std::to_string(y);
          std::string witness;
          try {
            for (const auto& [z, c] : pbw.straighten({{s, x}, {t, y}}))
              if (!a.contains(c)) {
                witness = vec_str(z) + ": " + c.pretty();
                break;
              }
          } catch (const Error& e) {
            witness = e.what();
          }
          rep.add(id, witness.empty(), witness);
        }
  return rep;
}

Report generator_product_check(const DividedPbw& pbw, const AIntegrality& a, int max_exp) {
  const AlgebraPtr& u = pbw.algebra();
  bool plus = pbw.side() == Side::plus;
  Report rep;
  rep.suite = "generator-products";
  rep.type = u->datum().name();
  auto gen = [&](int i, int x) {
    UElement g = plus ? u->e(i) / u->theta(i) : -u->f(i) / u->theta(i);
    return g.pow(x) / q_factorial(x, u->q(i, i));
  };
  std::string side = plus ? "E" : "F";
  for (int i = 0; i < u->rank(); ++i)
    for (int j = 0; j < u->rank(); ++j) {
      if (i == j) continue;
      for (int x = 1; x <= max_exp; ++x)
        for (int y = 1; y <= max_exp; ++y) {
          std::string witness;
          try {
            for (const auto& [z, c] : pbw.coordinates(gen(i, x) * gen(j, y)))
              if (!a.contains(c)) {
                witness = vec_str(z) + ": " + c.pretty();
                break;
              }
          } catch (const Error& e) {
            witness = e.what();
          }
          rep.add(side + vec_str(pbw.word()) + " " + side + std::to_string(i + 1) + "^(" + std::to_string(x) + ") " +
                      side + std::to_string(j + 1) + "^(" + std::to_string(y) + ")",
                  witness.empty(), witness);
        }
    }
  return rep;
}

Report straightening_crosscheck(const DividedPbw& pbw, int max_height) {
  Report rep;
  rep.suite = "straightening";
  rep.type = pbw.algebra()->datum().name();
  for (int s = 0; s < pbw.length(); ++s)
    for (int t = 0; t < pbw.length(); ++t)
      for (int x = 1; x <= max_height; ++x)
        for (int y = 1; y <= max_height; ++y) {
          LatticeVec deg = pbw.root(s).beta * x + pbw.root(t).beta * y;
          if (height(deg) > max_height) continue;
          PbwPoly fast = pbw.straighten({{s, x}, {t, y}});
          PbwPoly slow = pbw.coordinates(pbw.divided_power(s, x) * pbw.divided_power(t, y));
          rep.add("s=" + std::to_string(s + 1) + " t=" + std::to_string(t + 1) + " x=" + std::to_string(x) +
                      " y=" + std::to_string(y),
                  fast == slow, "straightening and linear algebra differ");
        }
  return rep;
}

Report order_independence_check(const DividedPbw& pbw, const AIntegrality& a, const std::vector<int>& sigma,
                                int max_height) {
  Report rep;
  rep.suite = "order-independence";
  rep.type = pbw.algebra()->datum().name();
  for (const auto& lambda : nonnegative_vectors(pbw.algebra()->rank(), max_height)) {
    auto zs = pbw.component(lambda);
    std::vector<std::vector<Coeff>> mat;
    std::string witness;
    for (const auto& z : zs) {
      PbwPoly c = pbw.coordinates(pbw.monomial(z, sigma));
      mat.emplace_back();
      for (const auto& w : zs) {
        auto it = c.find(w);
        Coeff v = it == c.end() ? Coeff(pbw.algebra()->ring(), 0) : it->second;
        if (witness.empty() && !a.contains(v)) witness = "entry " + vec_str(z) + "/" + vec_str(w) + ": " + v.pretty();
        mat.back().push_back(v);
      }
    }
    Coeff det = determinant(mat);
    if (witness.empty() && (det.is_zero() || !a.contains(det) || !a.contains(det.inverse())))
      witness = "determinant " + det.pretty() + " is not a unit";
    rep.add("sigma=" + vec_str(sigma) + " lambda=" + lambda.str(), witness.empty(), witness);
  }
  return rep;
}

Report bracket_identity_check(const AlgebraPtr& u, int max) {
  Report rep;
  rep.suite = "u0-brackets";
  rep.type = u->datum().name();
  for (int i = 0; i < u->rank(); ++i) {
    const Coeff& x = u->q(i, i);
    UElement k = u->k_gen(i);
    std::string base = "i=" + std::to_string(i + 1);
    for (int p = 1; p <= max; ++p)
      for (int l = -max; l <= max; ++l) {
        UElement lhs = u0_bracket(u, i, l, p) - u0_bracket(u, i, l + 1, p);
        UElement rhs = -(x.pow(l - p + 1) * u0_bracket(u, i, l, p - 1) * k);
        rep.add(base + " difference p=" + std::to_string(p) + " l=" + std::to_string(l), lhs == rhs,
                (lhs - rhs).str());
      }
    for (int l = 0; l <= max; ++l)
      for (int p = 0; p <= max; ++p) {
        UElement lhs = u0_bracket(u, i, 0, l) * u0_bracket(u, i, -l, p);
        UElement rhs = q_binomial(p, l, x) * u0_bracket(u, i, 0, p + l);
        rep.add(base + " product l=" + std::to_string(l) + " p=" + std::to_string(p), lhs == rhs, (lhs - rhs).str());
      }
  }
  return rep;
}

Report u0a_basis_check(const AlgebraPtr& u, const AIntegrality& a, int bound) {
  Report rep;
  rep.suite = "u0a-basis";
  rep.type = u->datum().name();
  const RingPtr& ring = u->ring();
  for (int i = 0; i < u->rank(); ++i) {
    const Coeff& q = u->q(i, i);
    std::vector<Triple> fam;
    for (int x = 0; x <= 1; ++x)
      for (int y = -bound; y <= bound; ++y)
        for (int z = 0; z <= bound; ++z) fam.push_back({x, y, z});
    std::string base = "i=" + std::to_string(i + 1);
    // independence within each total degree
    std::map<int, std::vector<TorusPoly>> by_degree;
    for (const auto& e : fam) by_degree[e[0] + 2 * e[1] + e[2]].push_back(basis_element(ring, q, e));
    for (const auto& [n, cols] : by_degree) {
      std::string witness;
      try {
        solve(ring, cols, TorusPoly{});
      } catch (const Error& e) {
        witness = e.what();
      }
      rep.add(base + " independent degree " + std::to_string(n), witness.empty(), witness);
    }
    for (size_t s = 0; s < fam.size(); ++s)
      for (size_t t = s; t < fam.size(); ++t) {
        TorusPoly prod = torus_mul(basis_element(ring, q, fam[s]), basis_element(ring, q, fam[t]));
        std::string witness;
        try {
          auto coords = expand_rank_one(ring, q, prod);
          for (const auto& [tri, c] : coords)
            if (!a.contains(c)) {
              witness = vec_str({tri[0], tri[1], tri[2]}) + ": " + c.pretty();
              break;
            }
          TorusPoly back;
          for (const auto& [tri, c] : coords)
            for (const auto& [k, v] : basis_element(ring, q, tri)) add_to(back, k, c * v);
          if (witness.empty() && back != prod) witness = "expansion does not reproduce the product";
        } catch (const Error& e) {
          witness = e.what();
        }
        rep.add(base + " product " + vec_str({fam[s][0], fam[s][1], fam[s][2]}) + "*" +
                    vec_str({fam[t][0], fam[t][1], fam[t][2]}),
                witness.empty(), witness);
      }
  }
  return rep;
}

Report triangular_a_check(const DividedPbw& plus, const DividedPbw& minus, const AIntegrality& a, int bound) {
  const AlgebraPtr& u = plus.algebra();
  if (minus.algebra() != u || plus.side() != Side::plus || minus.side() != Side::minus)
    throw Error("triangular check needs a plus and a minus basis of one algebra");
  Report rep;
  rep.suite = "triangular";
  rep.type = u->datum().name();
  for (int i = 0; i < u->rank(); ++i) {
    UElement e = u->e(i) / u->theta(i), f = -u->f(i) / u->theta(i);
    UElement lhs = e * f - f * e, rhs = u0_bracket(u, i, 0, 1);
    rep.add("[E" + std::to_string(i + 1) + ",F" + std::to_string(i + 1) + "] = [K,L,0;1]", lhs == rhs,
            (lhs - rhs).str());
  }
  std::vector<ExpVec> emons, fmons;
  emons.push_back(ExpVec(plus.length(), 0));
  for (const auto& lambda : nonnegative_vectors(u->rank(), bound))
    for (const auto& z : plus.component(lambda)) emons.push_back(z);
  fmons = emons;
  // coordinates of normal words in the divided bases
  std::map<Word, PbwPoly> ecoord, fcoord;
  auto word_coords = [&](std::map<Word, PbwPoly>& memo, const DividedPbw& b, const Word& w, bool f_side) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    PbwPoly c;
    if (w.empty()) {
      c[ExpVec(b.length(), 0)] = Coeff(u->ring(), 1);
    } else {
      NormalMonomial m{f_side ? w : Word{}, LatticeVec(u->rank()), LatticeVec(u->rank()), f_side ? Word{} : w};
      c = b.coordinates(monomial_element(u, m));
    }
    return memo.emplace(w, c).first->second;
  };
  for (const auto& ze : emons)
    for (const auto& zf : fmons) {
      std::string id = "E" + vec_str(ze) + " F" + vec_str(zf);
      std::string witness;
      try {
        UElement x = plus.monomial(ze) * minus.monomial(zf);
        // (F-basis, E-basis) -> torus polynomial
        std::map<std::pair<ExpVec, ExpVec>, std::map<std::pair<LatticeVec, LatticeVec>, Coeff>> tri;
        for (const auto& [m, c] : x.terms()) {
          const PbwPoly& cf = word_coords(fcoord, minus, m.f, true);
          const PbwPoly& ce = word_coords(ecoord, plus, m.e, false);
          for (const auto& [bf, vf] : cf)
            for (const auto& [be, ve] : ce) {
              auto& slot = tri[{bf, be}][{m.k, m.l}];
              slot = slot.ring() ? slot + c * vf * ve : c * vf * ve;
            }
        }
        for (const auto& [key, torus] : tri) {
          for (const auto& [idx, c] : torus_coordinates(u, torus))
            if (!a.contains(c)) {
              witness = "F" + vec_str(key.first) + " U0" + vec_str(idx) + " E" + vec_str(key.second) + ": " + c.pretty();
              break;
            }
          if (!witness.empty()) break;
        }
      } catch (const Error& e) {
        witness = e.what();
      }
      rep.add(id, witness.empty(), witness);
    }
  return rep;
}

}  // namespace mqg
