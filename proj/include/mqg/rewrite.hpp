// Free algebra on generator letters and the degree-truncated rewriting
// system (noncommutative Gröbner basis) of a homogeneous ideal.
#pragma once

#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "mqg/coeff.hpp"

namespace mqg {

/// Word in the generators; letters are 0-based generator indices.
using Word = std::vector<uint8_t>;

/// Degree-lexicographic order: shorter words first, then lexicographic with
/// letter 0 < letter 1 < ...
bool deglex_less(const Word& a, const Word& b);
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

/// Linear combination of words, ascending in deglex order, no zero entries.
using WordPoly = std::map<Word, Coeff, DeglexLess>;

void add_term(WordPoly& p, const Word& w, const Coeff& c);
WordPoly word_poly(const Word& w, const Coeff& c);
WordPoly operator+(const WordPoly& a, const WordPoly& b);
WordPoly operator-(const WordPoly& a, const WordPoly& b);
WordPoly operator*(const WordPoly& a, const WordPoly& b);
WordPoly scaled(const WordPoly& a, const Coeff& c);
Word concat(const Word& a, const Word& b);

struct WordHash {
  size_t operator()(const Word& w) const;
};

/// lead -> rhs, where rhs involves only words smaller than lead.
struct RewriteRule {
  Word lead;
  WordPoly rhs;
};

class RewriteSystem {
 public:
  /// Completes the ideal generated by homogeneous `relations` on `num_letters`
  /// letters, considering every overlap of length at most `bound`.
  RewriteSystem(RingPtr ring, int num_letters, std::vector<WordPoly> relations, int bound);
  RewriteSystem(const RewriteSystem&) = delete;
  RewriteSystem& operator=(const RewriteSystem&) = delete;

  int bound() const { return bound_; }
  int num_letters() const { return letters_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  bool is_reducible(const Word& w) const;
  /// Normal form; throws Error if the word is longer than the bound.
  WordPoly normal_form(const Word& w) const;
  WordPoly normal_form(const WordPoly& p) const;
  /// Irreducible words with the given letter counts.
  std::vector<Word> normal_words(const std::vector<int>& counts) const;
  /// Re-checks that every overlap of two rules of length at most the bound
  /// resolves; returns the number of overlaps examined, or -1 on failure.
  long check_confluence() const;

 private:
  RingPtr ring_;
  int letters_;
  int bound_;
  std::vector<RewriteRule> rules_;
  std::map<Word, size_t> lead_index_;
  std::vector<size_t> lead_lengths_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, WordPoly, WordHash> memo_;

  // first match (position, rule index) or rule index = npos
  std::pair<size_t, size_t> find_match(const Word& w) const;
  WordPoly reduce_fully(WordPoly p) const;  // no memo; used during completion
  void rebuild_index();
  void complete(std::vector<WordPoly> relations);
};

}  // namespace mqg
