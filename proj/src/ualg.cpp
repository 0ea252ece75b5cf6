#include "mqg/ualg.hpp"

#include <gmpxx.h>

namespace mqg {

namespace {

LatticeVec zero_vec(int n) { return LatticeVec(n); }

void add_coeff(std::map<NormalMonomial, Coeff>& m, const NormalMonomial& key, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

// ---- Algebra ----

Algebra::Algebra(std::shared_ptr<const AdmissibleData> data, Bicharacter chi, Frame pi, int bound)
    : data_(std::move(data)), chi_(std::move(chi)), pi_(std::move(pi)), bound_(bound) {
  const int n = pi_.rank();
  q_.assign(n, std::vector<Coeff>(n));
  qdot_.assign(n, std::vector<Coeff>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q_[i][j] = frame_q(chi_, pi_, i, j);
      qdot_[i][j] = frame_qdot(chi_, pi_, i, j);
    }
}

AlgebraPtr Algebra::create(std::shared_ptr<const AdmissibleData> data, Bicharacter chi, Frame pi, int bound) {
  if (!data) throw Error("missing admissible data");
  const auto& datum = data->datum();
  const int n = datum.rank();
  if (pi.rank() != n || chi.rank() != n) throw Error("frame or bicharacter rank differs from the Cartan datum");
  for (const auto& v : pi.images())
    if (v.rank() != n) throw Error("frame image has wrong dimension");
  if (chi.ring() != data->ring()) throw Error("bicharacter over a different ring");
  if (bound < 1) throw Error("completion bound must be positive");
  Coeff qd = data->qd();
  for (int i = 0; i < n; ++i) {
    Coeff qii = frame_qdot(chi, pi, i, i);
    if (qii != qd.pow(2 * datum.d(i))) throw Error("bicharacter is not admissible: q̇_ii != qd^(2d_i)");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (frame_qdot(chi, pi, i, j) * frame_qdot(chi, pi, j, i) != qii.pow(datum.a(i, j)))
        throw Error("bicharacter is not admissible: q̇_ij q̇_ji != q̇_ii^a_ij");
    }
  }
  return std::make_shared<Algebra>(std::move(data), std::move(chi), std::move(pi), bound);
}

Coeff Algebra::theta(int i) const { return data_->theta_for_self_value(pi_(i)); }

LatticeVec Algebra::word_degree(const Word& w) const {
  LatticeVec d = zero_vec(rank());
  for (auto x : w) d += pi_(x);
  return d;
}

Coeff Algebra::torus_scalar(const LatticeVec& lambda, const LatticeVec& mu, const LatticeVec& delta) const {
  // χ(λ,δ) χ(δ,μ)^{-1}
  Exponent e = chi_.sqrt_log(lambda, delta) - chi_.sqrt_log(delta, mu);
  return Coeff(ring(), Poly::monomial(e + e));
}

UElement Algebra::zero() const { return UElement(shared_from_this(), {}); }

UElement Algebra::scalar(const Coeff& c) const {
  UElement::Terms t;
  NormalMonomial m{{}, zero_vec(rank()), zero_vec(rank()), {}};
  if (!c.is_zero()) t.emplace(m, c);
  return UElement(shared_from_this(), std::move(t));
}

UElement Algebra::e_word(const Word& w) const {
  UElement::Terms t;
  for (const auto& [x, c] : e_rewrite().normal_form(w))
    t.emplace(NormalMonomial{{}, zero_vec(rank()), zero_vec(rank()), x}, c);
  return UElement(shared_from_this(), std::move(t));
}

UElement Algebra::f_word(const Word& w) const {
  UElement::Terms t;
  for (const auto& [x, c] : f_rewrite().normal_form(w))
    t.emplace(NormalMonomial{x, zero_vec(rank()), zero_vec(rank()), {}}, c);
  return UElement(shared_from_this(), std::move(t));
}

UElement Algebra::e(int i) const {
  if (i < 0 || i >= rank()) throw Error("generator index out of range");
  return e_word({static_cast<uint8_t>(i)});
}

UElement Algebra::f(int i) const {
  if (i < 0 || i >= rank()) throw Error("generator index out of range");
  return f_word({static_cast<uint8_t>(i)});
}

UElement Algebra::torus(const LatticeVec& lambda, const LatticeVec& mu) const {
  if (lambda.rank() != rank() || mu.rank() != rank()) throw Error("lattice dimension mismatch");
  UElement::Terms t;
  t.emplace(NormalMonomial{{}, lambda, mu, {}}, Coeff(ring(), 1));
  return UElement(shared_from_this(), std::move(t));
}

UElement Algebra::k(const LatticeVec& lambda) const { return torus(lambda, zero_vec(rank())); }
UElement Algebra::l(const LatticeVec& mu) const { return torus(zero_vec(rank()), mu); }

UElement Algebra::hbar(int i) const { return (k_gen(i) - l_gen(i)) / (q(i, i) - Coeff(ring(), 1)); }
UElement Algebra::ebar(int i) const { return e(i) / theta(i); }
UElement Algebra::fbar(int i) const { return -f(i) / theta(i); }

UElement Algebra::e_serre_vector(int m, int i, int j, SerreVariant v) const {
  if (i == j) throw Error("Serre vector needs i != j");
  if (m < 0) throw Error("Serre vector needs m >= 0");
  UElement x = e(j), ei = e(i);
  for (int s = 0; s < m; ++s) {
    Coeff c = q(i, i).pow(s);
    if (v == SerreVariant::plain)
      x = ei * x - (c * q(i, j)) * (x * ei);
    else
      x = x * ei - (c * q(j, i)) * (ei * x);
  }
  return x;
}

UElement Algebra::f_serre_vector(int m, int i, int j, SerreVariant v) const {
  if (i == j) throw Error("Serre vector needs i != j");
  if (m < 0) throw Error("Serre vector needs m >= 0");
  UElement x = f(j), fi = f(i);
  for (int s = 0; s < m; ++s) {
    Coeff c = q(i, i).pow(s);
    if (v == SerreVariant::plain)
      x = fi * x - (c * q(j, i)) * (x * fi);
    else
      x = x * fi - (c * q(i, j)) * (fi * x);
  }
  return x;
}

std::vector<WordPoly> Algebra::serre_relations(bool f_side) const {
  std::vector<WordPoly> rels;
  const Coeff one(ring(), 1);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      if (i == j) continue;
      Word wi{static_cast<uint8_t>(i)};
      WordPoly x = word_poly({static_cast<uint8_t>(j)}, one), pi = word_poly(wi, one);
      Coeff cross = f_side ? q(j, i) : q(i, j);
      for (int s = 0; s < 1 - datum().a(i, j); ++s) x = pi * x - scaled(x * pi, q(i, i).pow(s) * cross);
      rels.push_back(std::move(x));
    }
  return rels;
}

const RewriteSystem& Algebra::e_rewrite() const {
  std::call_once(e_once_, [&] { e_rw_ = std::make_unique<RewriteSystem>(ring(), rank(), serre_relations(false), bound_); });
  return *e_rw_;
}

const RewriteSystem& Algebra::f_rewrite() const {
  std::call_once(f_once_, [&] { f_rw_ = std::make_unique<RewriteSystem>(ring(), rank(), serre_relations(true), bound_); });
  return *f_rw_;
}

bool Algebra::generator_degree(const LatticeVec& lambda, std::vector<int>& counts) const {
  const int n = rank();
  if (lambda.rank() != n) throw Error("lattice dimension mismatch");
  // solve Σ c_i π(i) = λ over Q
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = pi_(c)[r];
    m[r][n] = lambda[r];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("frame is degenerate");
    std::swap(m[c], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  counts.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    mpq_class v = m[c][n] / m[c][c];
    if (v.get_den() != 1) return false;
    counts[c] = static_cast<int>(v.get_num().get_si());
  }
  return true;
}

long Algebra::dim_component(const LatticeVec& lambda) const {
  std::vector<int> counts;
  if (!generator_degree(lambda, counts)) return 0;
  for (int c : counts)
    if (c < 0) return 0;
  return static_cast<long>(e_rewrite().normal_words(counts).size());
}

Algebra::StraightMap Algebra::straighten(const Word& e, const Word& f) const {
  const int n = rank();
  if (e.empty() || f.empty()) return {{NormalMonomial{f, zero_vec(n), zero_vec(n), e}, Coeff(ring(), 1)}};
  auto key = std::make_pair(e, f);
  {
    std::lock_guard lock(memo_mutex_);
    auto it = straight_memo_.find(key);
    if (it != straight_memo_.end()) return it->second;
  }
  const uint8_t x = e.back();
  Word e0(e.begin(), e.end() - 1);
  // E_x f_1..f_m = f E_x + Σ_{f_p = x} f_<p (-K_x + L_x) f_>p
  StraightMap step;
  step.emplace(NormalMonomial{f, zero_vec(n), zero_vec(n), {x}}, Coeff(ring(), 1));
  for (size_t p = 0; p < f.size(); ++p) {
    if (f[p] != x) continue;
    Word left(f.begin(), f.begin() + p), right(f.begin() + p + 1, f.end());
    Word fw = concat(left, right);
    LatticeVec rdeg = -word_degree(right);
    add_coeff(step, NormalMonomial{fw, pi_(x), zero_vec(n), {}}, -torus_scalar(pi_(x), zero_vec(n), rdeg));
    add_coeff(step, NormalMonomial{fw, zero_vec(n), pi_(x), {}}, torus_scalar(zero_vec(n), pi_(x), rdeg));
  }
  StraightMap result;
  for (const auto& [m1, c1] : step) {
    for (const auto& [m2, c2] : straighten(e0, m1.f)) {
      // m2.f · m2.t · m2.e · m1.t · m1.e
      Coeff c = c1 * c2 * torus_scalar(m1.k, m1.l, word_degree(m2.e)).inverse();
      add_coeff(result, NormalMonomial{m2.f, m2.k + m1.k, m2.l + m1.l, concat(m2.e, m1.e)}, c);
    }
  }
  std::lock_guard lock(memo_mutex_);
  straight_memo_.emplace(key, result);
  return result;
}

UElement::Terms Algebra::multiply_monomials(const NormalMonomial& a, const NormalMonomial& b) const {
  UElement::Terms out;
  for (const auto& [m, c0] : straighten(a.e, b.f)) {
    // a.f · a.t · m.f · m.t · m.e · b.t · b.e
    Coeff c = c0 * torus_scalar(a.k, a.l, -word_degree(m.f)) *
              torus_scalar(b.k, b.l, word_degree(m.e)).inverse();
    LatticeVec k = a.k + m.k + b.k, l = a.l + m.l + b.l;
    WordPoly fs = f_rewrite().normal_form(concat(a.f, m.f));
    WordPoly es = e_rewrite().normal_form(concat(m.e, b.e));
    for (const auto& [fw, cf] : fs)
      for (const auto& [ew, ce] : es) add_coeff(out, NormalMonomial{fw, k, l, ew}, c * cf * ce);
  }
  return out;
}

// ---- UElement ----

UElement::UElement(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

namespace {

const AlgebraPtr& common_algebra(const UElement& a, const UElement& b) {
  if (!a.algebra()) return b.algebra();
  if (b.algebra() && a.algebra() != b.algebra()) throw Error("elements belong to different algebras");
  return a.algebra();
}

}  // namespace

UElement UElement::operator+(const UElement& o) const {
  const auto& alg = common_algebra(*this, o);
  Terms t = terms_;
  for (const auto& [m, c] : o.terms_) add_coeff(t, m, c);
  return UElement(alg, std::move(t));
}

UElement UElement::operator-() const {
  Terms t;
  for (const auto& [m, c] : terms_) t.emplace(m, -c);
  return UElement(alg_, std::move(t));
}

UElement UElement::operator-(const UElement& o) const { return *this + (-o); }

UElement UElement::operator*(const UElement& o) const {
  const auto& alg = common_algebra(*this, o);
  if (is_zero() || o.is_zero()) return UElement(alg, {});
  Terms t;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Coeff c = c1 * c2;
      for (const auto& [m, d] : alg->multiply_monomials(m1, m2)) add_coeff(t, m, c * d);
    }
  return UElement(alg, std::move(t));
}

UElement UElement::operator*(const Coeff& c) const {
  Terms t;
  if (!c.is_zero())
    for (const auto& [m, d] : terms_) t.emplace(m, d * c);
  return UElement(alg_, std::move(t));
}

UElement UElement::operator/(const Coeff& c) const { return *this * c.inverse(); }

UElement operator*(const Coeff& c, const UElement& x) { return x * c; }

UElement UElement::pow(int n) const {
  if (n < 0) throw Error("negative power of an algebra element");
  if (!alg_) throw Error("power of an unbound element");
  UElement r = alg_->one();
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool UElement::operator==(const UElement& o) const {
  common_algebra(*this, o);
  return terms_ == o.terms_;
}

bool UElement::homogeneous_degree(LatticeVec& degree) const {
  if (terms_.empty()) return false;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    LatticeVec d = alg_->word_degree(m.e) - alg_->word_degree(m.f);
    if (first) {
      degree = d;
      first = false;
    } else if (d != degree) {
      return false;
    }
  }
  return true;
}

UElement commutator(const UElement& x, const UElement& y) { return x * y - y * x; }

std::optional<std::vector<Coeff>> solve_in_span(const UElement& target, const std::vector<UElement>& basis) {
  // rows = monomials, columns = basis elements plus the target
  AlgebraPtr alg = target.algebra();
  for (const auto& b : basis)
    if (b.algebra()) alg = b.algebra();
  const size_t n = basis.size();
  if (!alg) return std::vector<Coeff>(n);
  std::map<NormalMonomial, size_t> rows;
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms()) rows.emplace(m, 0);
  for (const auto& [m, c] : target.terms()) rows.emplace(m, 0);
  size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  const Coeff zero = make_zero(alg->ring());
  std::vector<std::vector<Coeff>> a(rows.size(), std::vector<Coeff>(n + 1, zero));
  for (size_t k = 0; k < n; ++k)
    for (const auto& [m, c] : basis[k].terms()) a[rows[m]][k] = c;
  for (const auto& [m, c] : target.terms()) a[rows[m]][n] = c;
  // forward elimination, choosing the sparsest available pivot
  auto weight = [](const Coeff& c) {
    size_t w = c.denominator().size();
    for (const auto& p : c.numerators()) w += p.size();
    return w;
  };
  std::vector<size_t> pivot_row(n);
  std::vector<bool> used(a.size(), false);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = a.size(), best = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (used[i] || a[i][col].is_zero()) continue;
      size_t w = weight(a[i][col]);
      if (piv == a.size() || w < best) {
        piv = i;
        best = w;
      }
    }
    if (piv == a.size()) throw Error("basis elements are linearly dependent");
    used[piv] = true;
    pivot_row[col] = piv;
    Coeff inv = a[piv][col].inverse();
    for (size_t k = col + 1; k <= n; ++k)
      if (!a[piv][k].is_zero()) a[piv][k] *= inv;
    a[piv][col] = Coeff(alg->ring(), 1);
    for (size_t i = 0; i < a.size(); ++i) {
      if (used[i] || a[i][col].is_zero()) continue;
      Coeff f = a[i][col];
      for (size_t k = col + 1; k <= n; ++k)
        if (!a[piv][k].is_zero()) a[i][k] -= f * a[piv][k];
      a[i][col] = zero;
    }
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (!used[i] && !a[i][n].is_zero()) return std::nullopt;
  // back substitution
  std::vector<Coeff> out(n, zero);
  for (size_t col = n; col-- > 0;) {
    const auto& row = a[pivot_row[col]];
    Coeff v = row[n];
    for (size_t k = col + 1; k < n; ++k)
      if (!row[k].is_zero()) v -= row[k] * out[k];
    out[col] = v;
  }
  return out;
}

bool check_identity(const UElement& lhs, const UElement& rhs) {
  if (!lhs.algebra() || !rhs.algebra()) return lhs.terms() == rhs.terms();
  if (lhs.algebra() != rhs.algebra()) throw Error("identity sides belong to different algebras");
  return lhs == rhs;
}

}  // namespace mqg
