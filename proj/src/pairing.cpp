#include "mqg/pairing.hpp"

#include <algorithm>

#include "mqg/g2.hpp"

namespace mqg {

namespace {

bool same_letters(Word a, Word b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool zero_vec(const LatticeVec& v) {
  for (int x : v.coords())
    if (x) return false;
  return true;
}

// Multiplies every coefficient by the lcm of the denominators and returns
// that lcm, so the recursion below only adds polynomials.
Coeff clear_denominators(const RingPtr& ring, WordPoly& x) {
  Poly l(1);
  for (const auto& [w, c] : x) {
    const Poly& d = c.denominator();
    if (d.is_one()) continue;
    l = l * poly_div_exact(d, poly_gcd(l, d));
  }
  Coeff lc(ring, l);
  if (!l.is_one())
    for (auto& [w, c] : x) c *= lc;
  return lc;
}

}  // namespace

bool is_plus_flat(const UElement& x) {
  for (const auto& [m, c] : x.terms())
    if (!m.f.empty() || !zero_vec(m.l)) return false;
  return true;
}

bool is_minus_flat(const UElement& x) {
  for (const auto& [m, c] : x.terms())
    if (!m.e.empty() || !zero_vec(m.k)) return false;
  return true;
}

Coeff determinant(std::vector<std::vector<Coeff>> m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) throw Error("determinant of an empty matrix");
  const RingPtr& ring = m[0][0].ring();
  Coeff det(ring, 1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return Coeff(ring, 0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Coeff inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Coeff f = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Pairing::Pairing(AlgebraPtr alg) : alg_(alg), hopf_(alg) {}

Coeff Pairing::pair_words(const Word& e, const Word& f) const {
  const RingPtr& ring = alg_->ring();
  if (!same_letters(e, f)) return Coeff(ring, 0);
  if (e.empty()) return Coeff(ring, 1);
  auto key = std::make_pair(e, f);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // ϑ(w E_i, F_{j_1}..F_{j_m}) = Σ_{j_p = i} Π_{s>p} q_{j_s i} ϑ(w, F-word without p)
  Word head(e.begin(), e.end() - 1);
  int i = e.back();
  Coeff r(ring, 0), shift(ring, 1);
  for (size_t p = f.size(); p-- > 0;) {
    if (f[p] == i) {
      Word rest = f;
      rest.erase(rest.begin() + static_cast<long>(p));
      r += shift * pair_words(head, rest);
    }
    shift *= alg_->q(f[p], i);
  }
  std::lock_guard lock(mutex_);
  memo_.emplace(key, r);
  return r;
}

Coeff Pairing::pair_monomials(const NormalMonomial& p, const NormalMonomial& m) const {
  // K_λ w = χ(λ, deg w) w K_λ and ϑ(w K_λ, v L_μ) = ϑ(w, v) χ(λ, μ)
  Coeff w = pair_words(p.e, m.f);
  if (w.is_zero()) return w;
  return w * alg_->chi().eval(p.k, alg_->word_degree(p.e)) * alg_->chi().eval(p.k, m.l);
}

WordPoly Pairing::derive(int i, const WordPoly& y) const {
  // ϑ(X E_i, Y) = ϑ(X, r_i(Y)), r_i(F_{j_1}..F_{j_m}) = Σ_{j_p = i} Π_{s>p} q_{j_s i} (word without p)
  WordPoly r;
  for (const auto& [w, c] : y) {
    Coeff shift = c;
    for (size_t p = w.size(); p-- > 0;) {
      if (w[p] == i) {
        Word rest = w;
        rest.erase(rest.begin() + static_cast<long>(p));
        auto [it, fresh] = r.emplace(std::move(rest), shift);
        if (!fresh) {
          it->second += shift;
          if (it->second.is_zero()) r.erase(it);
        }
      }
      shift *= alg_->q(w[p], i);
    }
  }
  return r;
}

Coeff Pairing::pair_polys(const WordPoly& x, const WordPoly& y) const {
  Coeff r(alg_->ring(), 0);
  if (y.empty()) return r;
  std::map<int, WordPoly> by_last;
  for (const auto& [w, c] : x) {
    if (w.empty()) {
      auto it = y.find(w);
      if (it != y.end()) r += c * it->second;
      continue;
    }
    by_last[w.back()].emplace(Word(w.begin(), w.end() - 1), c);
  }
  for (const auto& [i, head] : by_last) r += pair_polys(head, derive(i, y));
  return r;
}

Coeff Pairing::pair(const UElement& xp, const UElement& xm) const {
  for (const auto* x : {&xp, &xm})
    if (x->algebra() && x->algebra() != alg_) throw Error("pairing argument from a different algebra");
  if (!is_plus_flat(xp)) throw Error("first pairing argument is not plus-flat");
  if (!is_minus_flat(xm)) throw Error("second pairing argument is not minus-flat");
  // K_λ w = χ(λ, deg w) w K_λ and ϑ(w K_λ, v L_μ) = ϑ(w, v) χ(λ, μ)
  std::map<LatticeVec, WordPoly> plus, minus;
  for (const auto& [p, c] : xp.terms()) plus[p.k].emplace(p.e, c * alg_->chi().eval(p.k, alg_->word_degree(p.e)));
  for (const auto& [m, d] : xm.terms()) minus[m.l].emplace(m.f, d);
  Coeff r(alg_->ring(), 0);
  for (const auto& [k, x] : plus)
    for (const auto& [l, y] : minus) {
      WordPoly xs = x, ys = y;
      Coeff dx = clear_denominators(alg_->ring(), xs), dy = clear_denominators(alg_->ring(), ys);
      Coeff v = pair_polys(xs, ys);
      if (!v.is_zero()) r += v * alg_->chi().eval(k, l) / (dx * dy);
    }
  return r;
}

Coeff Pairing::sweedler_monomials(const NormalMonomial& p, const NormalMonomial& m) const {
  const RingPtr& ring = alg_->ring();
  if (m.f.empty()) return p.e.empty() ? alg_->chi().eval(p.k, m.l) : Coeff(ring, 0);
  if (m.f.size() == 1) {
    if (p.e.size() != 1 || p.e[0] != m.f[0]) return Coeff(ring, 0);
    return alg_->chi().eval(p.k, alg_->word_degree(p.e)) * alg_->chi().eval(p.k, m.l);
  }
  // X⁻ = v' · (F_j L_μ)
  NormalMonomial head{Word(m.f.begin(), m.f.end() - 1), m.k, LatticeVec(alg_->rank()), {}};
  NormalMonomial last{Word{m.f.back()}, m.k, m.l, {}};
  Coeff r(ring, 0);
  TensorElem dp = hopf_.coproduct(p);
  for (const auto& [k, c] : dp.terms()) {
    Coeff right = sweedler_monomials(k[1], last);
    if (right.is_zero()) continue;
    r += c * right * sweedler_monomials(k[0], head);
  }
  return r;
}

Coeff Pairing::pair_sweedler(const UElement& xp, const UElement& xm) const {
  if (!is_plus_flat(xp) || !is_minus_flat(xm)) throw Error("pairing arguments are not flat");
  Coeff r(alg_->ring(), 0);
  for (const auto& [p, c] : xp.terms())
    for (const auto& [m, d] : xm.terms()) r += c * d * sweedler_monomials(p, m);
  return r;
}

std::vector<std::vector<Coeff>> Pairing::gram(const std::vector<UElement>& plus,
                                              const std::vector<UElement>& minus) const {
  std::vector<std::vector<Coeff>> g;
  for (const auto& x : plus) {
    g.emplace_back();
    for (const auto& y : minus) g.back().push_back(pair(x, y));
  }
  return g;
}

bool Pairing::gram_nondegenerate(const std::vector<UElement>& plus, const std::vector<UElement>& minus) const {
  if (plus.size() != minus.size()) throw Error("Gram bases of different sizes");
  if (plus.empty()) return true;
  return !determinant(gram(plus, minus)).is_zero();
}

std::vector<std::vector<Coeff>> Pairing::gram_component(const LatticeVec& lambda) const {
  std::vector<int> counts;
  if (!alg_->generator_degree(lambda, counts)) return {};
  auto ews = alg_->e_rewrite().normal_words(counts);
  auto fws = alg_->f_rewrite().normal_words(counts);
  if (ews.size() != fws.size()) throw Error("graded components of different dimensions");
  std::vector<std::vector<Coeff>> g;
  for (const auto& e : ews) {
    g.emplace_back();
    for (const auto& f : fws) g.back().push_back(pair_words(e, f));
  }
  return g;
}

TensorElem Pairing::double_coproduct(const UElement& x) const {
  return hopf_.coproduct(x).map_slot(1, [&](const NormalMonomial& m) { return hopf_.coproduct(m); });
}

UElement Pairing::reorder_minus_plus(const UElement& xp, const UElement& xm) const {
  TensorElem dp = double_coproduct(xp), dm = double_coproduct(xm);
  UElement r = alg_->zero();
  for (const auto& [a, c] : dp.terms())
    for (const auto& [b, d] : dm.terms()) {
      Coeff v = pair_monomials(a[2], b[2]);
      if (v.is_zero()) continue;
      v *= pair(monomial_element(alg_, a[0]), hopf_.antipode(monomial_element(alg_, b[0])));
      if (v.is_zero()) continue;
      r += (c * d * v) * (monomial_element(alg_, a[1]) * monomial_element(alg_, b[1]));
    }
  return r;
}

UElement Pairing::reorder_plus_minus(const UElement& xp, const UElement& xm) const {
  TensorElem dp = double_coproduct(xp), dm = double_coproduct(xm);
  UElement r = alg_->zero();
  for (const auto& [a, c] : dp.terms())
    for (const auto& [b, d] : dm.terms()) {
      Coeff v = pair_monomials(a[0], b[0]);
      if (v.is_zero()) continue;
      v *= pair(monomial_element(alg_, a[2]), hopf_.antipode(monomial_element(alg_, b[2])));
      if (v.is_zero()) continue;
      r += (c * d * v) * (monomial_element(alg_, b[1]) * monomial_element(alg_, a[1]));
    }
  return r;
}

bool Pairing::cross_commutation_check(const UElement& xp, const UElement& xm) const {
  if (!is_plus_flat(xp) || !is_minus_flat(xm)) throw Error("arguments are not flat");
  return reorder_minus_plus(xp, xm) == xm * xp && reorder_plus_minus(xp, xm) == xp * xm;
}

bool Pairing::antipode_compatible(const UElement& xp, const UElement& xm) const {
  return pair(hopf_.antipode(xp), xm) == pair(xp, hopf_.antipode_inverse(xm));
}

std::vector<std::vector<int>> exponent_vectors(int len, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, total);
  return out;
}

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

Report pbw_orthogonality_check(const AlgebraFamily& fam, const std::vector<int>& n, int bound) {
  auto rv = root_vectors(fam, fam.base_frame(), n);
  AlgebraPtr u = fam.base();
  Pairing th(u);
  int len = static_cast<int>(rv.size());
  auto exps = exponent_vectors(len, bound);
  auto product = [&](const std::vector<int>& x, bool f_side) {
    UElement r = u->one();
    for (int t = len; t-- > 0;) r = r * (f_side ? rv[t].f : rv[t].e).pow(x[t]);
    return r;
  };
  std::vector<UElement> plus, minus;
  for (const auto& x : exps) {
    plus.push_back(product(x, false));
    minus.push_back(product(x, true));
  }
  Report rep;
  rep.suite = "pbw-orthogonality";
  rep.type = fam.datum().name();
  for (size_t a = 0; a < exps.size(); ++a)
    for (size_t b = 0; b < exps.size(); ++b) {
      Coeff want(u->ring(), a == b ? 1 : 0);
      if (a == b)
        for (int t = 0; t < len; ++t) want *= q_factorial(exps[a][t], rv[t].self_value);
      Coeff got = th.pair(plus[a], minus[b]);
      rep.add("x=" + vec_str(exps[a]) + " y=" + vec_str(exps[b]), got == want,
              "got " + got.pretty() + ", expected " + want.pretty());
    }
  return rep;
}

Report g2_duality_check(const AlgebraFamily& fam, int total) {
  AlgebraPtr u = fam.base(), uop = fam.base(true);
  g2::require_g2(*u);
  Pairing th(u);
  AlgebraMap up = upsilon(fam, fam.base_frame());
  auto exps = g2::exps_up_to(total);
  std::vector<UElement> dual;
  for (const auto& b : exps) dual.push_back(up(g2::q2(uop, b)));
  Report rep;
  rep.suite = "g2-duality";
  rep.type = "G2";
  for (size_t a = 0; a < exps.size(); ++a) {
    UElement x = g2::q1(u, exps[a]);
    std::vector<int> av(exps[a].begin(), exps[a].end());
    for (size_t b = 0; b < exps.size(); ++b) {
      Coeff got = th.pair(x, dual[b]);
      std::vector<int> bv(exps[b].begin(), exps[b].end());
      rep.add("a=" + vec_str(av) + " b=" + vec_str(bv), got == Coeff(u->ring(), a == b ? 1 : 0),
              "got " + got.pretty());
    }
  }
  return rep;
}

}  // namespace mqg
