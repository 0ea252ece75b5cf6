#include "mqg/hopf.hpp"

namespace mqg {

namespace {

void add_coeff(TensorElem::Terms& t, const TensorElem::Key& k, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

const AlgebraPtr& common(const TensorElem& a, const TensorElem& b) {
  if (!a.algebra()) return b.algebra();
  if (b.algebra() && a.algebra() != b.algebra()) throw Error("tensors over different algebras");
  if (b.algebra() && a.arity() != b.arity()) throw Error("tensor arity mismatch");
  return a.algebra();
}

}  // namespace

UElement monomial_element(const AlgebraPtr& alg, const NormalMonomial& m) {
  return UElement(alg, {{m, Coeff(alg->ring(), 1)}});
}

TensorElem::TensorElem(AlgebraPtr alg, int arity, Terms terms)
    : alg_(std::move(alg)), arity_(arity), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

TensorElem TensorElem::pure(const std::vector<UElement>& factors) {
  if (factors.empty()) throw Error("empty tensor");
  AlgebraPtr alg;
  for (const auto& f : factors) {
    if (!f.algebra()) continue;
    if (alg && alg != f.algebra()) throw Error("tensor factors from different algebras");
    alg = f.algebra();
  }
  if (!alg) return TensorElem(alg, static_cast<int>(factors.size()), {});
  Terms acc{{Key{}, Coeff(alg->ring(), 1)}};
  for (const auto& f : factors) {
    Terms next;
    for (const auto& [k, c] : acc)
      for (const auto& [m, d] : f.terms()) {
        Key k2 = k;
        k2.push_back(m);
        add_coeff(next, k2, c * d);
      }
    acc = std::move(next);
  }
  return TensorElem(alg, static_cast<int>(factors.size()), std::move(acc));
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
  const auto& alg = common(*this, o);
  Terms t = terms_;
  for (const auto& [k, c] : o.terms_) add_coeff(t, k, c);
  return TensorElem(alg, alg_ ? arity_ : o.arity_, std::move(t));
}

TensorElem TensorElem::operator-() const {
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k, -c);
  return TensorElem(alg_, arity_, std::move(t));
}

TensorElem TensorElem::operator-(const TensorElem& o) const { return *this + (-o); }

TensorElem TensorElem::operator*(const TensorElem& o) const {
  const auto& alg = common(*this, o);
  int n = alg_ ? arity_ : o.arity_;
  Terms out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Terms acc{{Key{}, c1 * c2}};
      for (int s = 0; s < n; ++s) {
        Terms next;
        auto prod = alg->multiply_monomials(k1[s], k2[s]);
        for (const auto& [k, c] : acc)
          for (const auto& [m, d] : prod) {
            Key kk = k;
            kk.push_back(m);
            add_coeff(next, kk, c * d);
          }
        acc = std::move(next);
      }
      for (const auto& [k, c] : acc) add_coeff(out, k, c);
    }
  return TensorElem(alg, n, std::move(out));
}

TensorElem TensorElem::operator*(const Coeff& c) const {
  Terms t;
  if (!c.is_zero())
    for (const auto& [k, d] : terms_) t.emplace(k, d * c);
  return TensorElem(alg_, arity_, std::move(t));
}

TensorElem operator*(const Coeff& c, const TensorElem& t) { return t * c; }

bool TensorElem::operator==(const TensorElem& o) const {
  common(*this, o);
  return terms_ == o.terms_;
}

TensorElem TensorElem::map_slot(int slot, const std::function<TensorElem(const NormalMonomial&)>& image) const {
  if (slot < 0 || slot >= arity_) throw Error("tensor slot out of range");
  Terms out;
  int new_arity = arity_;
  std::map<NormalMonomial, TensorElem> cache;
  for (const auto& [k, c] : terms_) {
    auto it = cache.find(k[slot]);
    if (it == cache.end()) it = cache.emplace(k[slot], image(k[slot])).first;
    const TensorElem& img = it->second;
    new_arity = arity_ - 1 + img.arity();
    for (const auto& [ik, ic] : img.terms()) {
      Key nk(k.begin(), k.begin() + slot);
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + slot + 1, k.end());
      add_coeff(out, nk, c * ic);
    }
  }
  if (terms_.empty()) {
    // arity of an empty result: probe the image of the unit monomial
    NormalMonomial unit{{}, LatticeVec(alg_->rank()), LatticeVec(alg_->rank()), {}};
    new_arity = arity_ - 1 + image(unit).arity();
  }
  return TensorElem(alg_, new_arity, std::move(out));
}

UElement TensorElem::multiply_out() const {
  UElement r;
  for (const auto& [k, c] : terms_) {
    UElement p = alg_->scalar(c);
    for (const auto& m : k) p = p * monomial_element(alg_, m);
    r += p;
  }
  if (!r.algebra() && alg_) return alg_->zero();
  return r;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    std::string t;
    for (size_t i = 0; i < k.size(); ++i) {
      std::string part = monomial_element(alg_, k[i]).str();
      t += (i ? " (o) " : "") + part;
    }
    std::string cs = c.is_one() ? "" : "(" + c.str() + ")*";
    s += (s.empty() ? "" : " + ") + cs + t;
  }
  return s;
}

// ---- HopfStructure ----

HopfStructure::HopfStructure(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw Error("no algebra");
}

TensorElem HopfStructure::delta_word(bool f_side, const Word& w) const {
  auto key = std::make_pair(f_side, w);
  {
    std::lock_guard lock(mutex_);
    auto it = delta_words_.find(key);
    if (it != delta_words_.end()) return it->second;
  }
  TensorElem r;
  if (w.empty()) {
    r = TensorElem::pure({alg_->one(), alg_->one()});
  } else {
    Word head(w.begin(), w.end() - 1);
    int i = w.back();
    TensorElem last = f_side ? TensorElem::pure({alg_->f(i), alg_->l_gen(i)}) + TensorElem::pure({alg_->one(), alg_->f(i)})
                             : TensorElem::pure({alg_->e(i), alg_->one()}) + TensorElem::pure({alg_->k_gen(i), alg_->e(i)});
    r = delta_word(f_side, head) * last;
  }
  std::lock_guard lock(mutex_);
  delta_words_.emplace(key, r);
  return r;
}

TensorElem HopfStructure::coproduct(const NormalMonomial& m) const {
  TensorElem torus = TensorElem::pure({alg_->torus(m.k, m.l), alg_->torus(m.k, m.l)});
  return delta_word(true, m.f) * torus * delta_word(false, m.e);
}

TensorElem HopfStructure::coproduct(const UElement& x) const {
  if (x.algebra() && x.algebra() != alg_) throw Error("element from a different algebra");
  TensorElem r(alg_, 2, {});
  for (const auto& [m, c] : x.terms()) r += c * coproduct(m);
  return r;
}

Coeff HopfStructure::counit(const UElement& x) const {
  Coeff r(alg_->ring(), 0);
  for (const auto& [m, c] : x.terms())
    if (m.e.empty() && m.f.empty()) r += c;
  return r;
}

UElement HopfStructure::antipode_word(int kind, const Word& w) const {
  auto key = std::make_pair(kind, w);
  {
    std::lock_guard lock(mutex_);
    auto it = antipode_words_.find(key);
    if (it != antipode_words_.end()) return it->second;
  }
  UElement r;
  if (w.empty()) {
    r = alg_->one();
  } else {
    // anti-map: S(w_1..w_n) = S(w_n) S(w_1..w_{n-1})
    Word head(w.begin(), w.end() - 1);
    int i = w.back();
    UElement s;
    switch (kind) {
      case 0: s = -(alg_->k_gen(i, -1) * alg_->e(i)); break;
      case 1: s = -(alg_->f(i) * alg_->l_gen(i, -1)); break;
      case 2: s = -(alg_->e(i) * alg_->k_gen(i, -1)); break;
      default: s = -(alg_->l_gen(i, -1) * alg_->f(i)); break;
    }
    r = s * antipode_word(kind, head);
  }
  std::lock_guard lock(mutex_);
  antipode_words_.emplace(key, r);
  return r;
}

UElement HopfStructure::antipode_monomial(const NormalMonomial& m, bool inverse) const {
  int ek = inverse ? 2 : 0, fk = inverse ? 3 : 1;
  return antipode_word(ek, m.e) * alg_->torus(-m.k, -m.l) * antipode_word(fk, m.f);
}

UElement HopfStructure::antipode(const UElement& x) const {
  UElement r = alg_->zero();
  for (const auto& [m, c] : x.terms()) r += c * antipode_monomial(m, false);
  return r;
}

UElement HopfStructure::antipode_inverse(const UElement& x) const {
  UElement r = alg_->zero();
  for (const auto& [m, c] : x.terms()) r += c * antipode_monomial(m, true);
  return r;
}

TensorElem HopfStructure::coproduct_serre_formula(int r, int i, int j) const {
  const Coeff& qii = alg_->q(i, i);
  Coeff cross = alg_->q(i, j) * alg_->q(j, i);
  TensorElem t = TensorElem::pure({alg_->e_serre_vector(r, i, j), alg_->one()});
  for (int k = 0; k <= r; ++k) {
    Coeff c = q_factorial(r, qii) * shifted_factorial(k, qii, qii.pow(r - k) * cross) /
              (q_factorial(k, qii) * q_factorial(r - k, qii));
    LatticeVec lam = alg_->frame()(i) * (r - k) + alg_->frame()(j);
    t += c * TensorElem::pure({alg_->e(i).pow(k) * alg_->k(lam), alg_->e_serre_vector(r - k, i, j)});
  }
  return t;
}

bool HopfStructure::coproduct_serre_formula_check(int r, int i, int j) const {
  UElement x = alg_->e_serre_vector(r, i, j);
  if (x.is_zero()) throw Error("E_{r,i,j} vanishes");
  return coproduct(x) == coproduct_serre_formula(r, i, j);
}

}  // namespace mqg
