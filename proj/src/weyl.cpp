#include "mqg/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace mqg {

WeylGroup::WeylGroup(const CartanDatum& datum) : datum_(datum) {
  const int n = rank();
  std::set<LatticeVec> seen;
  std::deque<LatticeVec> todo;
  for (int i = 0; i < n; ++i) {
    seen.insert(LatticeVec::unit(n, i));
    todo.push_back(LatticeVec::unit(n, i));
  }
  while (!todo.empty()) {
    LatticeVec v = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      LatticeVec w = reflect(i, v);
      if (seen.insert(w).second) todo.push_back(w);
    }
    if (seen.size() > 1000) throw Error("root system too large");
  }
  for (const auto& v : seen)
    if (v.is_nonnegative()) positive_.push_back(v);
  std::sort(positive_.begin(), positive_.end(), [](const LatticeVec& a, const LatticeVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a > b;
  });
  all_ = positive_;
  for (const auto& v : positive_) all_.push_back(-v);
  for (size_t k = 0; k < all_.size(); ++k) index_[all_[k]] = static_cast<int>(k);
  simple_perm_.assign(n, std::vector<int>(all_.size()));
  for (int i = 0; i < n; ++i)
    for (size_t k = 0; k < all_.size(); ++k) simple_perm_[i][k] = index_.at(reflect(i, all_[k]));
}

LatticeVec WeylGroup::reflect(int i, const LatticeVec& lambda) const {
  if (i < 0 || i >= rank()) throw Error("reflection index out of range");
  if (lambda.rank() != rank()) throw Error("lattice dimension mismatch");
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += datum_.a(i, j) * lambda[j];
  LatticeVec r = lambda;
  r[i] -= pairing;
  return r;
}

LatticeVec WeylGroup::act(const WeylWord& w, const LatticeVec& lambda) const {
  LatticeVec v = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(*it, v);
  return v;
}

std::vector<int> WeylGroup::permutation(const WeylWord& w) const {
  std::vector<int> p(all_.size());
  for (size_t k = 0; k < p.size(); ++k) p[k] = static_cast<int>(k);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 0 || *it >= rank()) throw Error("Weyl word letter out of range");
    for (auto& x : p) x = simple_perm_[*it][x];
  }
  return p;
}

int WeylGroup::length(const WeylWord& w) const {
  auto p = permutation(w);
  int n = 0;
  for (int k = 0; k < num_positive_roots(); ++k)
    if (p[k] >= num_positive_roots()) ++n;
  return n;
}

WeylWord WeylGroup::longest_word() const {
  WeylWord w;
  int len = 0;
  while (len < num_positive_roots()) {
    for (int i = 0; i < rank(); ++i) {
      WeylWord t = w;
      t.push_back(i);
      if (length(t) == len + 1) {
        w = std::move(t);
        ++len;
        break;
      }
    }
  }
  return w;
}

RootDatum WeylGroup::beta_sequence(const WeylWord& n, const Bicharacter& chi) const {
  if (static_cast<int>(n.size()) != num_positive_roots())
    throw Error("word length differs from the length of the longest element");
  if (!is_reduced(n)) throw Error("word is not reduced");
  RootDatum rd;
  WeylWord prefix;
  for (int letter : n) {
    LatticeVec beta = act(prefix, LatticeVec::unit(rank(), letter));
    rd.roots.push_back(beta);
    rd.self_values.push_back(chi.eval(beta, beta));
    prefix.push_back(letter);
  }
  return rd;
}

long long kostant_dim(const std::vector<LatticeVec>& roots, const LatticeVec& lambda) {
  if (!lambda.is_nonnegative()) return 0;
  std::map<std::pair<size_t, LatticeVec>, long long> memo;
  std::function<long long(size_t, const LatticeVec&)> count = [&](size_t k,
                                                                  const LatticeVec& rest) -> long long {
    if (rest.is_zero()) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    LatticeVec r = rest;
    while (r.is_nonnegative()) {
      total += count(k + 1, r);
      r = r - roots[k];
    }
    memo[key] = total;
    return total;
  };
  return count(0, lambda);
}

std::vector<LatticeVec> nonnegative_vectors(int rank, int max_height) {
  std::vector<LatticeVec> out;
  LatticeVec v(rank);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      if (v.height() > 0) out.push_back(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(0, max_height);
  return out;
}

}  // namespace mqg
