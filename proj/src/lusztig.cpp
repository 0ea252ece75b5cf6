#include "mqg/lusztig.hpp"

namespace mqg {

// ---- AlgebraFamily ----

AlgebraFamily::AlgebraFamily(std::shared_ptr<const AdmissibleData> data, int bound)
    : data_(std::move(data)), bound_(bound) {
  if (!data_) throw Error("no admissible data");
}

std::shared_ptr<AlgebraFamily> AlgebraFamily::create(const std::string& type, int bound) {
  auto data = std::make_shared<const AdmissibleData>(CartanDatum::from_type(type));
  return std::make_shared<AlgebraFamily>(data, bound);
}

AlgebraPtr AlgebraFamily::get(const Frame& pi, bool op) const {
  auto key = std::make_pair(op, pi);
  std::lock_guard lock(mutex_);
  auto it = algebras_.find(key);
  if (it != algebras_.end()) return it->second;
  Bicharacter chi = op ? data_->chi().opposite() : data_->chi();
  auto u = Algebra::create(data_, chi, pi, bound_);
  algebras_.emplace(key, u);
  return u;
}

Frame AlgebraFamily::reflect(const Frame& pi, int i) const { return tau_reflect(datum(), data_->chi(), pi, i); }

// ---- TorusRule / AlgebraMap ----

TorusRule TorusRule::after(const TorusRule& in) const {
  return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, bool anti, TorusRule torus,
                       std::vector<UElement> e_images, std::vector<UElement> f_images, std::string name, bool check)
    : source_(std::move(source)),
      target_(std::move(target)),
      anti_(anti),
      torus_(torus),
      e_img_(std::move(e_images)),
      f_img_(std::move(f_images)),
      name_(std::move(name)),
      memo_(std::make_shared<Memo>()) {
  if (!source_ || !target_) throw Error("algebra map without algebras");
  if (source_->rank() != target_->rank()) throw Error("algebra map between different ranks");
  int n = source_->rank();
  if (static_cast<int>(e_img_.size()) != n || static_cast<int>(f_img_.size()) != n)
    throw Error("algebra map needs one image per generator");
  for (auto* imgs : {&e_img_, &f_img_})
    for (auto& x : *imgs) {
      if (!x.algebra()) x = target_->zero();
      if (x.algebra() != target_) throw Error("generator image outside the target algebra");
    }
  if (check) {
    std::string failure = relation_failure();
    if (!failure.empty()) throw Error(name_ + ": " + failure);
  }
}

AlgebraMap AlgebraMap::identity(const AlgebraPtr& u) {
  std::vector<UElement> es, fs;
  for (int i = 0; i < u->rank(); ++i) {
    es.push_back(u->e(i));
    fs.push_back(u->f(i));
  }
  return AlgebraMap(u, u, false, TorusRule{}, es, fs, "id", false);
}

UElement AlgebraMap::torus_image(const LatticeVec& lambda, const LatticeVec& mu) const {
  return target_->torus(lambda * torus_.a + mu * torus_.b, lambda * torus_.c + mu * torus_.d);
}

UElement AlgebraMap::word_image(bool f_side, const Word& w) const {
  if (w.empty()) return target_->one();
  auto key = std::make_pair(f_side, w);
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->words.find(key);
    if (it != memo_->words.end()) return it->second;
  }
  Word head(w.begin(), w.end() - 1);
  const UElement& g = f_side ? f_img_[w.back()] : e_img_[w.back()];
  UElement r = mul(word_image(f_side, head), g);
  std::lock_guard lock(memo_->mutex);
  memo_->words.emplace(key, r);
  return r;
}

UElement AlgebraMap::operator()(const UElement& x) const {
  if (x.algebra() && x.algebra() != source_) throw Error(name_ + ": argument outside the source algebra");
  UElement r = target_->zero();
  for (const auto& [m, c] : x.terms())
    r += c * mul(mul(word_image(true, m.f), torus_image(m.k, m.l)), word_image(false, m.e));
  return r;
}

AlgebraMap AlgebraMap::after(const AlgebraMap& inner) const {
  if (inner.target_ != source_) throw Error("composing maps with mismatched frames");
  std::vector<UElement> es, fs;
  for (int i = 0; i < source_->rank(); ++i) {
    es.push_back((*this)(inner.e_img_[i]));
    fs.push_back((*this)(inner.f_img_[i]));
  }
  return AlgebraMap(inner.source_, target_, anti_ != inner.anti_, torus_.after(inner.torus_), es, fs,
                    name_ + "∘" + inner.name_, false);
}

bool AlgebraMap::same_as(const AlgebraMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && anti_ == o.anti_ && torus_ == o.torus_ &&
         e_img_ == o.e_img_ && f_img_ == o.f_img_;
}

std::string AlgebraMap::relation_failure() const {
  const int n = source_->rank();
  const auto& pi = source_->frame();
  LatticeVec z(n);
  for (int j = 0; j < n; ++j)
    for (bool f_side : {false, true}) {
      const UElement& x = f_side ? f_img_[j] : e_img_[j];
      LatticeVec delta = f_side ? -pi(j) : pi(j);
      for (int a = 0; a < n; ++a)
        for (bool l_slot : {false, true}) {
          LatticeVec u = LatticeVec::unit(n, a);
          LatticeVec lam = l_slot ? z : u, mu = l_slot ? u : z;
          Coeff sc = source_->torus_scalar(lam, mu, delta);
          UElement t = torus_image(lam, mu);
          if (mul(t, x) != sc * mul(x, t))
            return "torus relation fails for generator " + std::string(f_side ? "F" : "E") + std::to_string(j + 1);
        }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UElement lhs = mul(e_img_[i], f_img_[j]) - mul(f_img_[j], e_img_[i]);
      UElement rhs = i == j ? torus_image(z, pi(i)) - torus_image(pi(i), z) : target_->zero();
      if (lhs != rhs) return "[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "] relation fails";
    }
  for (bool f_side : {false, true})
    for (const auto& rel : source_->serre_relations(f_side)) {
      UElement s = target_->zero();
      for (const auto& [w, c] : rel) s += c * word_image(f_side, w);
      if (!s.is_zero()) return std::string(f_side ? "F" : "E") + "-side Serre relation fails";
    }
  return "";
}

// ---- the standard maps ----

AlgebraMap omega(const AlgebraPtr& u) {
  std::vector<UElement> es, fs;
  for (int i = 0; i < u->rank(); ++i) {
    es.push_back(u->f(i) * u->l_gen(i, -1));
    fs.push_back(u->k_gen(i, -1) * u->e(i));
  }
  return AlgebraMap(u, u, false, TorusRule{-1, 0, 0, -1}, es, fs, "Omega");
}

AlgebraMap upsilon(const AlgebraFamily& fam, const Frame& pi, bool op) {
  auto src = fam.get(pi, !op), tgt = fam.get(pi, op);
  std::vector<UElement> es, fs;
  for (int i = 0; i < tgt->rank(); ++i) {
    es.push_back(tgt->f(i));
    fs.push_back(tgt->e(i));
  }
  return AlgebraMap(src, tgt, false, TorusRule{0, 1, 1, 0}, es, fs, "Upsilon");
}

AlgebraMap gamma(const AlgebraFamily& fam, const Frame& pi, bool op) {
  auto src = fam.get(pi, !op), tgt = fam.get(pi, op);
  std::vector<UElement> es, fs;
  for (int i = 0; i < tgt->rank(); ++i) {
    es.push_back(tgt->e(i));
    fs.push_back(tgt->f(i));
  }
  return AlgebraMap(src, tgt, true, TorusRule{0, 1, 1, 0}, es, fs, "Gamma");
}

AlgebraMap zeta(const AlgebraPtr& u, int i) {
  std::vector<UElement> es, fs;
  for (int j = 0; j < u->rank(); ++j) {
    Coeff c = u->qdot(i, j) * u->qdot(j, i);
    es.push_back(u->e(j) / c);
    fs.push_back(c * u->f(j));
  }
  return AlgebraMap(u, u, false, TorusRule{}, es, fs, "zeta" + std::to_string(i + 1));
}

Coeff strict_normalization(const AlgebraPtr& u, int i, int j) {
  if (i == j) return Coeff(u->ring(), 1);
  int a = u->datum().a(i, j);
  return u->qdot(i, j).pow(a) / (q_factorial(-a, u->q(i, i)) * u->theta(i).pow(-a));
}

AlgebraMap lusztig_t(const AlgebraFamily& fam, const Frame& pi, int i, bool op) {
  if (i < 0 || i >= fam.rank()) throw Error("generator index out of range");
  auto tgt = fam.get(pi, op), src = fam.get(fam.reflect(pi, i), op);
  std::vector<UElement> es, fs;
  const Coeff& qii = tgt->q(i, i);
  for (int j = 0; j < tgt->rank(); ++j) {
    if (j == i) {
      es.push_back(tgt->f(i) * tgt->l_gen(i, -1));
      fs.push_back(tgt->k_gen(i, -1) * tgt->e(i));
      continue;
    }
    int nij = -tgt->datum().a(i, j);
    Coeff w = strict_normalization(tgt, i, j);
    es.push_back(w * tgt->e_serre_vector(nij, i, j));
    Coeff den = w * q_factorial(nij, qii) * shifted_factorial(nij, qii, tgt->q(i, j) * tgt->q(j, i));
    fs.push_back(tgt->f_serre_vector(nij, i, j) / den);
  }
  return AlgebraMap(src, tgt, false, TorusRule{}, es, fs, "T" + std::to_string(i + 1));
}

AlgebraMap lusztig_t_word(const AlgebraFamily& fam, const Frame& pi, const std::vector<int>& w, bool op) {
  if (!WeylGroup(fam.datum()).is_reduced(w)) throw Error("Weyl word is not reduced");
  std::vector<AlgebraMap> ts;
  Frame cur = pi;
  for (int k : w) {
    ts.push_back(lusztig_t(fam, cur, k, op));
    cur = fam.reflect(cur, k);
  }
  if (ts.empty()) return AlgebraMap::identity(fam.get(pi, op));
  // push each generator through the chain innermost map first
  AlgebraPtr src = ts.back().source();
  std::vector<UElement> es, fs;
  std::string name;
  for (int i = 0; i < src->rank(); ++i) {
    UElement e = src->e(i), f = src->f(i);
    for (size_t s = ts.size(); s-- > 0;) {
      e = ts[s](e);
      f = ts[s](f);
    }
    es.push_back(std::move(e));
    fs.push_back(std::move(f));
  }
  for (const auto& t : ts) name += (name.empty() ? "" : "∘") + t.name();
  return AlgebraMap(src, ts.front().target(), false, TorusRule{}, es, fs, name, false);
}

std::vector<RootVector> root_vectors(const AlgebraFamily& fam, const Frame& pi, const std::vector<int>& n, bool op) {
  WeylGroup wg(fam.datum());
  if (static_cast<int>(n.size()) != wg.num_positive_roots() || !wg.is_reduced(n))
    throw Error("not a reduced word of the longest element");
  AlgebraPtr base = fam.get(pi, op);
  // apply T_{n_{t-1}}, ..., T_{n_1} to one generator at a time
  std::vector<Frame> frames{pi};
  std::vector<AlgebraMap> ts;
  for (size_t t = 0; t + 1 < n.size(); ++t) {
    ts.push_back(lusztig_t(fam, frames.back(), n[t], op));
    frames.push_back(fam.reflect(frames.back(), n[t]));
  }
  std::vector<RootVector> out;
  for (size_t t = 0; t < n.size(); ++t) {
    int k = n[t];
    AlgebraPtr src = fam.get(frames[t], op);
    UElement e = src->e(k), f = src->f(k);
    for (size_t s = t; s-- > 0;) {
      e = ts[s](e);
      f = ts[s](f);
    }
    RootVector rv{frames[t](k), base->chi().eval(frames[t](k), frames[t](k)), e, f, {}, {}};
    rv.ebar = rv.e / src->theta(k);
    rv.fbar = -rv.f / src->theta(k);
    for (const auto& [m, c] : rv.e.terms())
      if (!m.f.empty() || !m.k.is_zero() || !m.l.is_zero() || base->word_degree(m.e) != rv.beta)
        throw Error("root vector E_{n;" + std::to_string(t + 1) + "} is not in U+ of degree " + rv.beta.str());
    for (const auto& [m, c] : rv.f.terms())
      if (!m.e.empty() || !m.k.is_zero() || !m.l.is_zero() || base->word_degree(m.f) != rv.beta)
        throw Error("root vector F_{n;" + std::to_string(t + 1) + "} is not in U- of degree " + (-rv.beta).str());
    out.push_back(std::move(rv));
  }
  return out;
}

int longest_word_partner(const CartanDatum& datum, int last) {
  WeylGroup wg(datum);
  LatticeVec v = wg.act(wg.longest_word(), LatticeVec::unit(datum.rank(), last));
  for (int i = 0; i < datum.rank(); ++i)
    if (v == -LatticeVec::unit(datum.rank(), i)) return i;
  throw Error("longest element does not map a simple root to a negative simple root");
}

}  // namespace mqg
