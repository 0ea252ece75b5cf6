#include "mqg/rewrite.hpp"

#include <algorithm>
#include <functional>

namespace mqg {

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = w.size();
  for (auto x : w) h = h * 1000003u ^ (x + 0x9e3779b9u + (h << 6) + (h >> 2));
  return h;
}

void add_term(WordPoly& p, const Word& w, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

WordPoly word_poly(const Word& w, const Coeff& c) {
  WordPoly p;
  add_term(p, w, c);
  return p;
}

WordPoly operator+(const WordPoly& a, const WordPoly& b) {
  WordPoly r = a;
  for (const auto& [w, c] : b) add_term(r, w, c);
  return r;
}

WordPoly operator-(const WordPoly& a, const WordPoly& b) {
  WordPoly r = a;
  for (const auto& [w, c] : b) add_term(r, w, -c);
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

WordPoly operator*(const WordPoly& a, const WordPoly& b) {
  WordPoly r;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) add_term(r, concat(u, v), c * d);
  return r;
}

WordPoly scaled(const WordPoly& a, const Coeff& c) {
  WordPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, d] : a) r.emplace(w, d * c);
  return r;
}

namespace {

bool contains(const Word& big, const Word& small) {
  return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

WordPoly rule_poly(const RewriteRule& r, const RingPtr& ring) {
  WordPoly p = r.rhs;
  for (auto& [w, c] : p) c = -c;
  add_term(p, r.lead, Coeff(ring, 1));
  return p;
}

// a * p * c for words a, c
WordPoly sandwich(const Word& a, const WordPoly& p, const Word& c) {
  WordPoly r;
  for (const auto& [w, d] : p) r.emplace(concat(concat(a, w), c), d);
  return r;
}

}  // namespace

RewriteSystem::RewriteSystem(RingPtr ring, int num_letters, std::vector<WordPoly> relations, int bound)
    : ring_(std::move(ring)), letters_(num_letters), bound_(bound) {
  if (bound < 1) throw Error("completion bound must be positive");
  if (num_letters < 1 || num_letters > 255) throw Error("bad number of letters");
  complete(std::move(relations));
}

void RewriteSystem::rebuild_index() {
  lead_index_.clear();
  std::vector<size_t> lens;
  for (size_t k = 0; k < rules_.size(); ++k) {
    lead_index_[rules_[k].lead] = k;
    lens.push_back(rules_[k].lead.size());
  }
  std::sort(lens.begin(), lens.end());
  lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
  lead_lengths_ = lens;
}

std::pair<size_t, size_t> RewriteSystem::find_match(const Word& w) const {
  constexpr size_t npos = static_cast<size_t>(-1);
  for (size_t pos = 0; pos < w.size(); ++pos)
    for (size_t len : lead_lengths_) {
      if (pos + len > w.size()) break;
      Word sub(w.begin() + pos, w.begin() + pos + len);
      auto it = lead_index_.find(sub);
      if (it != lead_index_.end()) return {pos, it->second};
    }
  return {0, npos};
}

bool RewriteSystem::is_reducible(const Word& w) const {
  return find_match(w).second != static_cast<size_t>(-1);
}

WordPoly RewriteSystem::reduce_fully(WordPoly p) const {
  if (p.empty()) return p;
  Word cur = p.rbegin()->first;
  while (true) {
    // largest term <= cur that is reducible
    auto it = p.upper_bound(cur);
    bool found = false;
    while (it != p.begin()) {
      --it;
      auto [pos, idx] = find_match(it->first);
      if (idx == static_cast<size_t>(-1)) continue;
      Word w = it->first;
      Coeff c = it->second;
      p.erase(it);
      const auto& rule = rules_[idx];
      Word a(w.begin(), w.begin() + pos), b(w.begin() + pos + rule.lead.size(), w.end());
      for (const auto& [v, d] : rule.rhs) add_term(p, concat(concat(a, v), b), c * d);
      cur = w;
      found = true;
      break;
    }
    if (!found) return p;
  }
}

void RewriteSystem::complete(std::vector<WordPoly> relations) {
  std::multimap<size_t, WordPoly> pending;
  for (auto& r : relations)
    if (!r.empty()) {
      size_t len = r.rbegin()->first.size();
      if (len > static_cast<size_t>(bound_)) continue;
      pending.emplace(len, std::move(r));
    }

  auto push_overlaps = [&](const RewriteRule& r1, const RewriteRule& r2) {
    const Word &l1 = r1.lead, &l2 = r2.lead;
    size_t m = std::min(l1.size(), l2.size());
    for (size_t k = 1; k < m; ++k) {
      if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
      size_t total = l1.size() + l2.size() - k;
      if (total > static_cast<size_t>(bound_)) continue;
      Word a(l1.begin(), l1.end() - k), c(l2.begin() + k, l2.end());
      pending.emplace(total, sandwich(a, r2.rhs, {}) - sandwich({}, r1.rhs, c));
    }
  };

  while (!pending.empty()) {
    WordPoly p = reduce_fully(std::move(pending.begin()->second));
    pending.erase(pending.begin());
    if (p.empty()) continue;
    Word lead = p.rbegin()->first;
    Coeff inv = p.rbegin()->second.inverse();
    p.erase(std::prev(p.end()));
    RewriteRule rule{lead, scaled(p, -inv)};

    std::vector<RewriteRule> kept;
    for (auto& old : rules_) {
      if (contains(old.lead, lead))
        pending.emplace(old.lead.size(), rule_poly(old, ring_));
      else
        kept.push_back(std::move(old));
    }
    rules_ = std::move(kept);
    rules_.push_back(std::move(rule));
    rebuild_index();
    const RewriteRule& added = rules_.back();
    for (const auto& other : rules_) {
      push_overlaps(added, other);
      if (&other != &added) push_overlaps(other, added);
    }
  }
  std::sort(rules_.begin(), rules_.end(),
            [](const RewriteRule& a, const RewriteRule& b) { return deglex_less(a.lead, b.lead); });
  rebuild_index();
}

WordPoly RewriteSystem::normal_form(const Word& w) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  if (w.size() > static_cast<size_t>(bound_))
    throw Error("word of length " + std::to_string(w.size()) + " exceeds the completion bound " +
                std::to_string(bound_));
  WordPoly result;
  auto [pos, idx] = find_match(w);
  if (idx == static_cast<size_t>(-1)) {
    result.emplace(w, Coeff(ring_, 1));
  } else {
    const auto& rule = rules_[idx];
    Word a(w.begin(), w.begin() + pos), b(w.begin() + pos + rule.lead.size(), w.end());
    for (const auto& [v, d] : rule.rhs)
      for (const auto& [x, e] : normal_form(concat(concat(a, v), b))) add_term(result, x, d * e);
  }
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(w, result);
  return result;
}

WordPoly RewriteSystem::normal_form(const WordPoly& p) const {
  WordPoly r;
  for (const auto& [w, c] : p)
    for (const auto& [x, d] : normal_form(w)) add_term(r, x, c * d);
  return r;
}

std::vector<Word> RewriteSystem::normal_words(const std::vector<int>& counts) const {
  if (static_cast<int>(counts.size()) != letters_) throw Error("letter count vector has wrong size");
  int total = 0;
  for (int c : counts) {
    if (c < 0) return {};
    total += c;
  }
  if (total > bound_) throw Error("degree exceeds the completion bound");
  std::vector<Word> out;
  Word cur;
  std::vector<int> left = counts;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == total) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x < letters_; ++x) {
      if (left[x] == 0) continue;
      cur.push_back(static_cast<uint8_t>(x));
      bool bad = false;
      for (size_t len : lead_lengths_) {
        if (len > cur.size()) break;
        if (lead_index_.count(Word(cur.end() - len, cur.end()))) {
          bad = true;
          break;
        }
      }
      if (!bad) {
        --left[x];
        rec();
        ++left[x];
      }
      cur.pop_back();
    }
  };
  rec();
  return out;
}

long RewriteSystem::check_confluence() const {
  long n = 0;
  for (const auto& r1 : rules_)
    for (const auto& r2 : rules_) {
      const Word &l1 = r1.lead, &l2 = r2.lead;
      size_t m = std::min(l1.size(), l2.size());
      for (size_t k = 1; k < m; ++k) {
        if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
        if (l1.size() + l2.size() - k > static_cast<size_t>(bound_)) continue;
        Word a(l1.begin(), l1.end() - k), c(l2.begin() + k, l2.end());
        ++n;
        if (normal_form(sandwich(a, r2.rhs, {})) != normal_form(sandwich({}, r1.rhs, c))) return -1;
      }
    }
  return n;
}

}  // namespace mqg
