// Plain-text printer and parser for UElement.
#include <cctype>

#include "mqg/ualg.hpp"

namespace mqg {

namespace {

std::string word_str(char gen, const Word& w) {
  std::string s;
  for (size_t p = 0; p < w.size();) {
    size_t q = p;
    while (q < w.size() && w[q] == w[p]) ++q;
    if (!s.empty()) s += "*";
    s += gen + std::to_string(w[p] + 1);
    if (q - p > 1) s += "^" + std::to_string(q - p);
    p = q;
  }
  return s;
}

std::string monomial_str(const NormalMonomial& m) {
  std::vector<std::string> parts;
  if (!m.f.empty()) parts.push_back(word_str('F', m.f));
  std::string t;
  if (!m.k.is_zero()) t += "K" + m.k.str();
  if (!m.l.is_zero()) t += "L" + m.l.str();
  if (!t.empty()) parts.push_back(t);
  if (!m.e.empty()) parts.push_back(word_str('E', m.e));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " * " + parts[i];
  return s;
}

}  // namespace

std::string UElement::render(bool pretty) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_str(m);
    bool neg = false;
    std::string coeff;
    if (c.is_one()) {
    } else if ((-c).is_one()) {
      neg = true;
    } else {
      std::string cs = pretty ? c.pretty() : c.str();
      if (cs[0] == '-') {
        neg = true;
        cs = pretty ? (-c).pretty() : (-c).str();
      }
      coeff = "(" + cs + ")";
    }
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (coeff.empty())
      s += mono;
    else
      s += mono == "1" ? coeff : coeff + "*" + mono;
  }
  return s;
}

std::string UElement::str() const { return render(false); }
std::string UElement::pretty() const { return render(true); }

namespace {

class ElementParser {
 public:
  ElementParser(const AlgebraPtr& alg, std::string_view text) : alg_(alg), s_(text) {}

  UElement parse() {
    UElement r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  const AlgebraPtr& alg_;
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("element parse error at position " + std::to_string(pos_) + ": " + msg);
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
  int integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }
  LatticeVec vec() {
    if (!eat('[')) fail("expected '['");
    std::vector<int> c;
    do c.push_back(integer());
    while (eat(','));
    if (!eat(']')) fail("expected ']'");
    if (static_cast<int>(c.size()) != alg_->rank()) fail("torus exponent has wrong dimension");
    return LatticeVec(std::move(c));
  }

  UElement sum() {
    bool neg = eat('-');
    if (!neg) eat('+');
    UElement r = product();
    if (neg) r = -r;
    while (true) {
      if (eat('+'))
        r = r + product();
      else if (eat('-'))
        r = r - product();
      else
        return r;
    }
  }
  UElement product() {
    UElement r = factor();
    while (true) {
      if (eat('*')) {
        r = r * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == 'K' || s_[pos_] == 'L')) {
        r = r * factor();  // "K[..]L[..]"
      } else {
        return r;
      }
    }
  }
  UElement factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      // coefficient or parenthesized element: try coefficient first
      size_t depth = 0, end = pos_;
      for (; end < s_.size(); ++end) {
        if (s_[end] == '(') ++depth;
        if (s_[end] == ')' && --depth == 0) break;
      }
      if (end >= s_.size()) fail("unbalanced parenthesis");
      std::string_view inner = s_.substr(pos_ + 1, end - pos_ - 1);
      UElement r;
      try {
        r = alg_->scalar(parse_coeff(alg_->ring(), inner));
      } catch (const Error&) {
        r = ElementParser(alg_, inner).parse();
      }
      pos_ = end + 1;
      return power(r);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = integer();
      return alg_->scalar(Coeff(alg_->ring(), v));
    }
    if (c == 'E' || c == 'F') {
      ++pos_;
      int i = integer() - 1;
      if (i < 0 || i >= alg_->rank()) fail("generator index out of range");
      return power(c == 'E' ? alg_->e(i) : alg_->f(i));
    }
    if (c == 'K' || c == 'L') {
      ++pos_;
      LatticeVec v = vec();
      if (eat('^')) v = v * integer();
      return c == 'K' ? alg_->k(v) : alg_->l(v);
    }
    fail("unexpected character");
  }
  UElement power(const UElement& x) {
    if (!eat('^')) return x;
    int n = integer();
    return x.pow(n);
  }
};

}  // namespace

UElement parse_element(const AlgebraPtr& alg, std::string_view text) {
  if (!alg) throw Error("no algebra");
  return ElementParser(alg, text).parse();
}

}  // namespace mqg
