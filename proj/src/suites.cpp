#include "mqg/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "mqg/aform.hpp"
#include "mqg/g2.hpp"
#include "mqg/hopf.hpp"
#include "mqg/lusztig.hpp"
#include "mqg/pairing.hpp"
#include "mqg/weyl.hpp"

namespace mqg::suites {

namespace {

using Clock = std::chrono::steady_clock;

Report start(std::string suite, std::string type, std::vector<std::pair<std::string, std::string>> params = {}) {
  Report r;
  r.suite = std::move(suite);
  r.type = std::move(type);
  r.params = std::move(params);
  return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs one check; an Error thrown by the library counts as a failure.
void run(Report& rep, const std::string& id, const std::function<bool(std::string&)>& body) {
  std::string witness;
  bool ok = false;
  try {
    ok = body(witness);
  } catch (const Error& e) {
    witness = std::string("error: ") + e.what();
  }
  rep.add(id, ok, witness);
}

bool same(const UElement& a, const UElement& b, std::string& witness) {
  if (a == b) return true;
  witness = "difference: " + (a - b).str();
  return false;
}

bool same(const TensorElem& a, const TensorElem& b, std::string& witness) {
  if (a == b) return true;
  witness = "difference: " + (a - b).str();
  return false;
}

std::vector<int> alternating(int len, int first) {
  std::vector<int> n;
  for (int t = 0; t < len; ++t) n.push_back(t % 2 == 0 ? first : 1 - first);
  return n;
}

std::string word_str(const std::vector<int>& w) {
  std::string s;
  for (int i : w) s += std::to_string(i + 1);
  return s;
}

// Family whose completion covers U⁺ components up to `exps` root vectors
// of maximal height, and words of length `words`.
std::shared_ptr<AlgebraFamily> family(const std::string& type, int exps, int words = 0) {
  WeylGroup wg(CartanDatum::from_type(type));
  int top = 1;
  for (const auto& r : wg.positive_roots()) top = std::max(top, r.height());
  return AlgebraFamily::create(type, std::max({12, exps * top, words}));
}

// ---- G2 tables ----

struct Mon {
  const char* coeff;
  std::vector<const char*> names;
};

struct Rel {
  const char* left;
  const char* right;
  std::vector<Mon> rhs;
  const char* note;  // printed form when it differs
};

// X Y = Σ c M, in the root-vector order 2 < 12 < 11212 < 112 < 1112 < 1.
const std::vector<Rel>& plain_table() {
  static const std::vector<Rel> t{
      {"12", "2", {{"a*q^3", {"2", "12"}}}, ""},
      {"11212", "2", {{"a^3*q^6", {"2", "11212"}}, {"a^2*q^3*(q^2-1)*(q-1)", {"12", "12", "12"}}},
       "printed with left side E_1112E_2"},
      {"112", "2", {{"a^2*q^3", {"2", "112"}}, {"a*q*(q^2-1)", {"12", "12"}}}, ""},
      {"1112",
       "2",
       {{"a^3*q^3", {"2", "1112"}}, {"a*q*(q^2-q-1)", {"11212"}}, {"a^2*q^2*(q^3-1)", {"12", "112"}}},
       ""},
      {"1", "2", {{"a", {"2", "1"}}, {"1", {"12"}}}, ""},
      {"11212", "12", {{"a*q^3", {"12", "11212"}}}, ""},
      {"112", "12", {{"a*q^2", {"12", "112"}}, {"1", {"11212"}}}, ""},
      {"1112", "12", {{"a^2*q^3", {"12", "1112"}}, {"a*q*(q^3-1)/(q+1)", {"112", "112"}}}, ""},
      {"1", "12", {{"a*q", {"12", "1"}}, {"1", {"112"}}}, ""},
      {"112", "11212", {{"a*q^3", {"11212", "112"}}}, "printed with right side a q^3 E_112E_11212"},
      {"1112", "11212", {{"a^3*q^6", {"11212", "1112"}}, {"a^2*q^3*(q^3-1)*(q-1)/(q+1)", {"112", "112", "112"}}}, ""},
      {"1", "11212", {{"a^2*q^3", {"11212", "1"}}, {"a*q*(q^3-1)/(q+1)", {"112", "112"}}}, ""},
      {"1112", "112", {{"a*q^3", {"112", "1112"}}}, ""},
      {"1", "112", {{"a*q^2", {"112", "1"}}, {"1", {"1112"}}}, ""},
      {"1", "1112", {{"a*q^3", {"1112", "1"}}}, ""},
  };
  return t;
}

const std::vector<Rel>& hat_table() {
  static const std::vector<Rel> t{
      {"11212", "2", {{"a^3*q^6", {"2", "11212"}}, {"a^2*q^3*(q^3-1)", {"12", "12", "12"}}},
       "printed with left side Ê_1112Ê_2"},
      {"112", "2", {{"a^2*q^3", {"2", "112"}}, {"a*(q^3-1)", {"12", "12"}}}, ""},
      {"1112",
       "2",
       {{"a^3*q^3", {"2", "1112"}},
        {"a*q^-2*(q^2-q-1)*(q^3-1)", {"11212"}},
        {"a^2*(q^3-1)*(q^2+q+1)", {"12", "112"}}},
       ""},
      {"1", "2", {{"a", {"2", "1"}}, {"q^-3*(q^3-1)", {"12"}}}, ""},
      {"112", "12", {{"a*q^2", {"12", "112"}}, {"q^-1*(q-1)", {"11212"}}}, ""},
      {"1112", "12", {{"a^2*q^3", {"12", "1112"}}, {"a*(q^3-1)", {"112", "112"}}}, "printed with E_12 for Ê_12 on the left"},
      {"1", "12", {{"a*q", {"12", "1"}}, {"q^-2*(q^2-1)", {"112"}}}, "printed with E_12 for Ê_12 on the left"},
      {"1112", "11212", {{"a^3*q^6", {"11212", "1112"}}, {"a^2*q^3*(q^3-1)", {"112", "112", "112"}}}, ""},
      {"1", "11212", {{"a^2*q^3", {"11212", "1"}}, {"a*(q^3-1)", {"112", "112"}}}, ""},
      {"1", "112", {{"a*q^2", {"112", "1"}}, {"q^-1*(q-1)", {"1112"}}}, ""},
  };
  return t;
}

struct CoTerm {
  const char* coeff;
  std::vector<const char*> left;
  int k1, k2;
  std::vector<const char*> right;
};

struct Coproduct {
  const char* name;
  std::vector<CoTerm> terms;
  const char* note;
};

const std::vector<Coproduct>& plain_coproducts() {
  static const std::vector<Coproduct> t{
      {"12", {{"1", {"12"}, 0, 0, {}}, {"1-q^-3", {"1"}, 0, 1, {"2"}}, {"1", {}, 1, 1, {"12"}}}, ""},
      {"112",
       {{"1", {"112"}, 0, 0, {}},
        {"(1-q^-3)*(1-q^-2)", {"1", "1"}, 0, 1, {"2"}},
        {"(1-q^-2)*(1+q)", {"1"}, 1, 1, {"12"}},
        {"1", {}, 2, 1, {"112"}}},
       "printed with E_1^3K_2 (x) E_2"},
      {"1112",
       {{"1", {"1112"}, 0, 0, {}},
        {"(1-q^-3)*(1-q^-2)*(1-q^-1)", {"1", "1", "1"}, 0, 1, {"2"}},
        {"(q^2-1)*(1-q^-3)", {"1", "1"}, 1, 1, {"12"}},
        {"q^-1*(q^3-1)", {"1"}, 2, 1, {"112"}},
        {"1", {}, 3, 1, {"1112"}}},
       ""},
      {"11212",
       {{"1", {"11212"}, 0, 0, {}},
        {"(q^3-1)^2/q^4", {"112", "1"}, 0, 1, {"2"}},
        {"(q^3-1)*(q^2-q-1)/(a*q^5)", {"1112"}, 0, 1, {"2"}},
        {"(q^3-1)/q", {"112"}, 1, 1, {"12"}},
        {"(q^3-1)^2*(q^2-1)*(q-1)/(a*q^12)", {"1", "1", "1"}, 0, 2, {"2", "2"}},
        {"(q^3-1)^2*(q^2-1)/q^6", {"1", "1"}, 1, 2, {"2", "12"}},
        {"(q^3-1)*(q^2-1)/q^3", {"1"}, 2, 2, {"12", "12"}},
        {"1", {}, 3, 2, {"11212"}}},
       "printed with K_1^2 for K_2^2 and K_1K_2 for K_1K_2^2 in the E_2^2 and E_2E_12 terms"},
  };
  return t;
}

const std::vector<Coproduct>& hat_coproducts() {
  static const std::vector<Coproduct> t{
      {"12", {{"1", {"12"}, 0, 0, {}}, {"1", {"1"}, 0, 1, {"2"}}, {"1", {}, 1, 1, {"12"}}}, ""},
      {"112",
       {{"1", {"112"}, 0, 0, {}}, {"1", {"1", "1"}, 0, 1, {"2"}}, {"q+1", {"1"}, 1, 1, {"12"}}, {"1", {}, 2, 1, {"112"}}},
       "printed with Ê_1^3K_2 (x) Ê_2 and K_1^2K_2 (x) E_112"},
      {"1112",
       {{"1", {"1112"}, 0, 0, {}},
        {"1", {"1", "1", "1"}, 0, 1, {"2"}},
        {"q^2+q+1", {"1", "1"}, 1, 1, {"12"}},
        {"q^2+q+1", {"1"}, 2, 1, {"112"}},
        {"1", {}, 3, 1, {"1112"}}},
       ""},
      {"11212",
       {{"1", {"11212"}, 0, 0, {}},
        {"q^2+q+1", {"112", "1"}, 0, 1, {"2"}},
        {"a^-1*q^-2*(q^2-q-1)", {"1112"}, 0, 1, {"2"}},
        {"q^2+q+1", {"112"}, 1, 1, {"12"}},
        {"a^-1*q^-3", {"1", "1", "1"}, 0, 2, {"2", "2"}},
        {"q^2+q+1", {"1", "1"}, 1, 2, {"2", "12"}},
        {"q^2+q+1", {"1"}, 2, 2, {"12", "12"}},
        {"1", {}, 3, 2, {"11212"}}},
       "printed with K_1^2 for K_2^2 and K_1K_2 for K_1K_2^2 in the Ê_2^2 and Ê_2Ê_12 terms"},
  };
  return t;
}

const char* kG2Names[6] = {"2", "12", "11212", "112", "1112", "1"};

std::map<std::string, UElement> g2_vectors(const AlgebraPtr& u, bool hat) {
  auto v = hat ? g2::hat_vectors(u) : std::array<UElement, 6>{u->e(1), g2::e12(u), g2::e11212(u), g2::e112(u),
                                                               g2::e1112(u), u->e(0)};
  std::map<std::string, UElement> m;
  for (int t = 0; t < 6; ++t) m[kG2Names[t]] = v[t];
  return m;
}

UElement product(const AlgebraPtr& u, const std::map<std::string, UElement>& vec, const std::vector<const char*>& names) {
  UElement r = u->one();
  for (const char* n : names) r = r * vec.at(n);
  return r;
}

std::string render(const std::vector<const char*>& names, bool hat) {
  std::string s;
  for (const char* n : names) s += std::string(hat ? "Ê_" : "E_") + n;
  return s.empty() ? "1" : s;
}

std::string render(const Rel& r, bool hat) {
  std::string s = render(std::vector<const char*>{r.left, r.right}, hat) + " =";
  for (size_t k = 0; k < r.rhs.size(); ++k)
    s += std::string(k ? " + " : " ") + "(" + r.rhs[k].coeff + ")" + render(r.rhs[k].names, hat);
  if (*r.note) s += std::string(" [") + r.note + "]";
  return s;
}

void table_checks(Report& rep, const AlgebraPtr& u, bool hat) {
  auto vec = g2_vectors(u, hat);
  for (const auto& r : hat ? hat_table() : plain_table())
    run(rep, render(r, hat), [&](std::string& w) {
      UElement rhs = u->zero();
      for (const auto& m : r.rhs) rhs += parse_coeff(u->ring(), m.coeff) * product(u, vec, m.names);
      return same(vec.at(r.left) * vec.at(r.right), rhs, w);
    });
}

}  // namespace

Report g2_relations() {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create("G2");
  auto u = fam->base();
  Report rep = start("g2-relations", "G2");
  table_checks(rep, u, false);
  table_checks(rep, u, true);
  run(rep, "quartic Serre relation [printed with E_1^2E_2E_1^2 for E_1E_2E_1^3 in the a^3 term]", [&](std::string& w) {
    UElement x = parse_element(u,
                               "E1^4*E2 - ((1+q)*(1+q^2)*a)*E1^3*E2*E1 + (q*(1+q^2)*(1+q+q^2)*a^2)*E1^2*E2*E1^2"
                               " - (q^3*(1+q)*(1+q^2)*a^3)*E1*E2*E1^3 + (q^6*a^4)*E2*E1^4");
    return same(x, u->zero(), w);
  });
  run(rep, "cubic Serre relation [printed with E_1^2E_2 for E_1E_2^2]", [&](std::string& w) {
    UElement x = parse_element(u, "E1*E2^2 - ((1+q)*(1-q+q^2)*a)*E2*E1*E2 + (q^3*a^2)*E2^2*E1");
    return same(x, u->zero(), w);
  });
  rep.seconds = since(t0);
  return rep;
}

Report g2_coproducts() {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create("G2");
  auto u = fam->base();
  HopfStructure h(u);
  Report rep = start("g2-coproducts", "G2");
  for (bool hat : {false, true}) {
    auto vec = g2_vectors(u, hat);
    for (const auto& c : hat ? hat_coproducts() : plain_coproducts()) {
      std::string id = std::string("Delta(") + (hat ? "Ê_" : "E_") + c.name + ")";
      if (*c.note) id += std::string(" [") + c.note + "]";
      run(rep, id, [&](std::string& w) {
        TensorElem rhs;
        for (const auto& t : c.terms) {
          UElement left = product(u, vec, t.left) * u->k(LatticeVec({t.k1, t.k2}));
          TensorElem term = parse_coeff(u->ring(), t.coeff) * TensorElem::pure({left, product(u, vec, t.right)});
          rhs = rhs.algebra() ? rhs + term : term;
        }
        return same(h.coproduct(vec.at(c.name)), rhs, w);
      });
    }
  }
  rep.seconds = since(t0);
  return rep;
}

Report g2_root_vectors() {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create("G2");
  auto pi = fam->base_frame();
  auto u = fam->base(), uop = fam->base(true);
  Report rep = start("g2-root-vectors", "G2");
  const std::vector<int> n{0, 1, 0, 1, 0, 1}, np{1, 0, 1, 0, 1, 0};
  auto rv = root_vectors(*fam, pi, n), rvop = root_vectors(*fam, pi, n, true), rvp = root_vectors(*fam, pi, np);
  Coeff q = u->q(0, 0);
  auto closed = [&](const AlgebraPtr& a, int t) {
    Coeff d = a->qdot(0, 1), t1 = a->theta(0), t3 = a->theta(1);
    switch (t) {
      case 0: return a->e(0) / t1;
      case 1: return d.pow(-3) / (q_factorial(3, q) * t1.pow(3) * t3) * g2::e1112(a);
      case 2: return d.pow(-2) / (q_factorial(2, q) * t3 * t1.pow(2)) * g2::e112(a);
      case 3: return d.pow(-4) / (q_factorial(3, q) * t3.pow(2) * t1.pow(3)) * g2::e11212(a);
      case 4: return d.pow(-1) / (t1 * t3) * g2::e12(a);
      default: return a->e(1) / t3;
    }
  };
  const int fexp[6] = {0, 3, 4, 6, 3, 0};
  auto up = upsilon(*fam, pi);
  auto g = gamma(*fam, pi);
  for (int t = 0; t < 6; ++t) {
    std::string k = std::to_string(t + 1);
    run(rep, "Ebar_{n;" + k + "} closed form", [&](std::string& w) { return same(rv[t].ebar, closed(u, t), w); });
    run(rep, "Fbar_{n;" + k + "} = -qdot_11^" + std::to_string(fexp[t]) + " Upsilon(Ebar_{n;" + k + "}) [printed without the sign]",
        [&](std::string& w) { return same(rv[t].fbar, -u->qdot(0, 0).pow(fexp[t]) * up(rvop[t].ebar), w); });
  }
  // Γ maps the χ^op presentation to U(χ,π)
  for (int t = 0; t < 6; ++t) {
    std::string k = std::to_string(t + 1), m = std::to_string(6 - t);
    run(rep, "Ebar_{n';" + k + "} = Gamma(Ebar_{n;" + m + "})", [&](std::string& w) {
      return same(rvp[t].ebar, g(rvop[5 - t].ebar), w);
    });
    run(rep, "Fbar_{n';" + k + "} = Gamma(Fbar_{n;" + m + "})", [&](std::string& w) {
      return same(rvp[t].fbar, g(rvop[5 - t].fbar), w);
    });
  }
  rep.seconds = since(t0);
  return rep;
}

Report g2_dual_bases(int total) {
  auto t0 = Clock::now();
  auto fam = family("G2", total);
  Report rep = g2_duality_check(*fam, total);
  rep.suite = "g2-dual-bases";
  rep.params = {{"total", std::to_string(total)}};
  rep.seconds = since(t0);
  return rep;
}

namespace {

std::vector<Word> all_words(const std::vector<int>& counts) {
  Word w;
  for (size_t i = 0; i < counts.size(); ++i) w.insert(w.end(), counts[i], static_cast<int>(i));
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

long rank_of(std::vector<std::vector<Coeff>> m) {
  long rank = 0;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Coeff inv = m[rank][c].inverse();
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Coeff f = m[r][c] * inv;
      for (size_t k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Report serre_dimensions(const std::string& type, int height, int oracle_height) {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create(type, std::max(height, 12));
  auto u = fam->base();
  WeylGroup wg(fam->datum());
  Pairing th(u);
  Report rep = start("serre-dimensions", type, {{"height", std::to_string(height)}});
  for (const auto& lam : nonnegative_vectors(u->rank(), height)) {
    long long expect = kostant_dim(wg.positive_roots(), lam);
    run(rep, "dim U+" + lam.str() + " = " + std::to_string(expect), [&](std::string& w) {
      long got = u->dim_component(lam);
      if (got != expect) w = "normal words give " + std::to_string(got);
      return got == expect;
    });
    if (lam.height() > oracle_height) continue;
    run(rep, "rank of the word pairing on " + lam.str() + " = " + std::to_string(expect), [&](std::string& w) {
      auto words = all_words(lam.coords());
      std::vector<std::vector<Coeff>> g;
      for (const auto& e : words) {
        g.emplace_back();
        for (const auto& f : words) g.back().push_back(th.pair_words(e, f));
      }
      long r = rank_of(g);
      if (r != expect) w = "rank " + std::to_string(r) + " on " + std::to_string(words.size()) + " words";
      return r == expect;
    });
  }
  rep.seconds = since(t0);
  return rep;
}

Report pairing_suite(const std::string& type, int bound, int gram_height) {
  auto t0 = Clock::now();
  auto fam = family(type, bound, gram_height);
  auto u = fam->base();
  WeylGroup wg(fam->datum());
  Report rep = start("pairing", type, {{"bound", std::to_string(bound)}, {"gram-height", std::to_string(gram_height)}});
  for (int first : {0, 1}) {
    auto n = alternating(wg.num_positive_roots(), first);
    Report orth = pbw_orthogonality_check(*fam, n, bound);
    for (auto& r : orth.records) r.id = "PBW n=" + word_str(n) + " " + r.id;
    rep.append(orth);
  }
  Pairing th(u);
  for (const auto& lam : nonnegative_vectors(u->rank(), gram_height))
    run(rep, "Gram determinant on " + lam.str() + " is nonzero", [&](std::string& w) {
      auto g = th.gram_component(lam);
      bool ok = !determinant(g).is_zero();
      if (!ok) w = "singular Gram matrix of size " + std::to_string(g.size());
      return ok;
    });
  rep.seconds = since(t0);
  return rep;
}

namespace {

std::vector<UElement> probes(const AlgebraPtr& u) {
  std::vector<UElement> out;
  int n = u->rank();
  for (int j = 0; j < n; ++j) {
    out.push_back(u->e(j));
    out.push_back(u->f(j));
    out.push_back(u->k(LatticeVec::unit(n, j)));
    out.push_back(u->l(LatticeVec::unit(n, j) * 2));
  }
  return out;
}

bool agree(const AlgebraMap& a, const AlgebraMap& b, std::string& w) {
  for (const auto& x : probes(a.source()))
    if (a(x) != b(x)) {
      w = "maps differ on " + x.str() + ": " + a(x).str() + " vs " + b(x).str();
      return false;
    }
  return true;
}

bool is_identity(const AlgebraMap& m, std::string& w) {
  for (const auto& x : probes(m.source()))
    if (m(x) != x) {
      w = "not the identity on " + x.str() + ": " + m(x).str();
      return false;
    }
  return true;
}

}  // namespace

Report lusztig_suite(const std::string& type) {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create(type);
  auto pi = fam->base_frame();
  WeylGroup wg(fam->datum());
  Report rep = start("lusztig", type);
  int len = wg.num_positive_roots();
  if (fam->rank() == 2) {
    run(rep, "T_{w0} along 1212.. and 2121.. agree", [&](std::string& w) {
      auto a = lusztig_t_word(*fam, pi, alternating(len, 0)), b = lusztig_t_word(*fam, pi, alternating(len, 1));
      if (!a.same_as(b)) {
        w = "composites have different targets";
        return false;
      }
      return agree(a, b, w);
    });
  }
  for (int i = 0; i < fam->rank(); ++i) {
    std::string k = std::to_string(i + 1);
    Frame tp = fam->reflect(pi, i);
    auto t = lusztig_t(*fam, pi, i), top = lusztig_t(*fam, pi, i, true);
    auto fwd = lusztig_t(*fam, tp, i);
    auto inv = gamma(*fam, pi).after(top.after(gamma(*fam, tp, true)));
    run(rep, "T_" + k + " inverse: Gamma T^op_" + k + " Gamma after T_" + k, [&](std::string& w) {
      return is_identity(inv.after(fwd), w);
    });
    run(rep, "T_" + k + " inverse: T_" + k + " after Gamma T^op_" + k + " Gamma", [&](std::string& w) {
      return is_identity(fwd.after(inv), w);
    });
    run(rep, "Omega T_" + k + " = T_" + k + " Omega", [&](std::string& w) {
      return agree(omega(t.target()).after(t), t.after(omega(t.source())), w);
    });
    run(rep, "T_" + k + " Upsilon = zeta_" + k + " Upsilon T^op_" + k, [&](std::string& w) {
      return agree(t.after(upsilon(*fam, tp)), zeta(t.target(), i).after(upsilon(*fam, pi).after(top)), w);
    });
  }
  std::vector<std::vector<int>> words{wg.longest_word()};
  if (fam->rank() == 2) words = {alternating(len, 0), alternating(len, 1)};
  auto u = fam->base();
  for (const auto& n : words) {
    auto rv = root_vectors(*fam, pi, n);
    auto rd = wg.beta_sequence(n, fam->data().chi());
    run(rep, "root vector degrees for n=" + word_str(n), [&](std::string& w) {
      for (size_t t = 0; t < rv.size(); ++t)
        if (rv[t].beta != rd.roots[t] || rv[t].self_value != rd.self_values[t]) {
          w = "position " + std::to_string(t + 1) + " has degree " + rv[t].beta.str();
          return false;
        }
      return rv.size() == rd.roots.size();
    });
    int n0 = longest_word_partner(fam->datum(), n.back());
    run(rep, "E_{n;l} = E_" + std::to_string(n0 + 1) + " for n=" + word_str(n), [&](std::string& w) {
      return same(rv.back().e, u->e(n0), w);
    });
    run(rep, "F_{n;l} = F_" + std::to_string(n0 + 1) + " for n=" + word_str(n), [&](std::string& w) {
      return same(rv.back().f, u->f(n0), w);
    });
  }
  rep.seconds = since(t0);
  return rep;
}

Report aform_suite(const std::string& type, int max_exp, int bracket_max, int bound) {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create(type);
  WeylGroup wg(fam->datum());
  AIntegrality a(fam->data());
  auto u = fam->base();
  Report rep = start("aform", type,
                     {{"max-exp", std::to_string(max_exp)},
                      {"bracket-max", std::to_string(bracket_max)},
                      {"bound", std::to_string(bound)}});
  std::vector<std::vector<int>> words{wg.longest_word()};
  if (fam->rank() == 2) words = {alternating(wg.num_positive_roots(), 0), alternating(wg.num_positive_roots(), 1)};
  for (const auto& n : words)
    for (Side side : {Side::plus, Side::minus}) {
      DividedPbw pbw(fam, n, side);
      rep.append(divided_product_check(pbw, a, max_exp));
      rep.append(generator_product_check(pbw, a, 3));
    }
  rep.append(bracket_identity_check(u, bracket_max));
  rep.append(u0a_basis_check(u, a, bound));
  DividedPbw plus(fam, wg.longest_word(), Side::plus), minus(fam, wg.longest_word(), Side::minus);
  rep.append(triangular_a_check(plus, minus, a, bound));
  rep.seconds = since(t0);
  return rep;
}

Report aform_order_suite(const std::string& type, int height) {
  auto t0 = Clock::now();
  auto fam = AlgebraFamily::create(type);
  WeylGroup wg(fam->datum());
  AIntegrality a(fam->data());
  Report rep = start("aform-order", type, {{"height", std::to_string(height)}});
  for (Side side : {Side::plus, Side::minus}) {
    DividedPbw pbw(fam, wg.longest_word(), side);
    std::vector<int> rev;
    for (int t = pbw.length() - 1; t >= 0; --t) rev.push_back(t);
    Report r = order_independence_check(pbw, a, rev, height);
    for (auto& x : r.records) x.id = std::string(side == Side::plus ? "E " : "F ") + x.id;
    rep.append(r);
  }
  rep.seconds = since(t0);
  return rep;
}

namespace {

std::vector<NormalMonomial> hopf_monomials(const AlgebraPtr& u, int h) {
  std::vector<Word> ews{{}}, fws{{}};
  for (const auto& c : nonnegative_vectors(u->rank(), h)) {
    for (auto& w : u->e_rewrite().normal_words(c.coords())) ews.push_back(w);
    for (auto& w : u->f_rewrite().normal_words(c.coords())) fws.push_back(w);
  }
  std::vector<NormalMonomial> out;
  LatticeVec z(u->rank()), k1 = u->frame()(0), l2 = -u->frame()(u->rank() - 1);
  for (const auto& f : fws)
    for (const auto& e : ews) {
      if (static_cast<int>(f.size() + e.size()) > h) continue;
      out.push_back({f, z, z, e});
      if (f.size() + e.size() <= 2) out.push_back({f, k1, l2, e});
    }
  return out;
}

}  // namespace

Report hopf_suite(const std::string& type, int height) {
  auto t0 = Clock::now();
  auto fam = family(type, 0, height + 2);
  auto u = fam->base();
  HopfStructure h(u);
  Report rep = start("hopf", type, {{"height", std::to_string(height)}});
  auto delta = [&](const NormalMonomial& m) { return h.coproduct(m); };
  auto eps = [&](const NormalMonomial& m) { return TensorElem::pure({u->scalar(h.counit(monomial_element(u, m)))}); };
  auto ident = [&](const NormalMonomial& m) { return TensorElem::pure({monomial_element(u, m)}); };
  auto anti = [&](const NormalMonomial& m) { return TensorElem::pure({h.antipode(monomial_element(u, m))}); };
  for (const auto& m : hopf_monomials(u, height)) {
    UElement x = monomial_element(u, m);
    std::string id = x.str();
    TensorElem d = h.coproduct(m);
    UElement ex = u->scalar(h.counit(x));
    run(rep, "coassociativity " + id, [&](std::string& w) { return same(d.map_slot(0, delta), d.map_slot(1, delta), w); });
    run(rep, "left counit " + id, [&](std::string& w) { return same(d.map_slot(0, eps).map_slot(1, ident).multiply_out(), x, w); });
    run(rep, "right counit " + id, [&](std::string& w) { return same(d.map_slot(1, eps).multiply_out(), x, w); });
    run(rep, "left antipode " + id, [&](std::string& w) { return same(d.map_slot(0, anti).multiply_out(), ex, w); });
    run(rep, "right antipode " + id, [&](std::string& w) { return same(d.map_slot(1, anti).multiply_out(), ex, w); });
  }
  for (int i = 0; i < u->rank(); ++i)
    for (int j = 0; j < u->rank(); ++j) {
      if (i == j) continue;
      for (int r = 0; r <= std::min(3, -u->datum().a(i, j)); ++r)
        run(rep, "Delta(E_{" + std::to_string(r) + "," + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}) closed form",
            [&](std::string&) { return h.coproduct_serre_formula_check(r, i, j); });
    }
  rep.seconds = since(t0);
  return rep;
}

Report identity_suite(const std::string& type, int max) {
  auto t0 = Clock::now();
  auto fam = family(type, 0, 2 * max + 2);
  auto pi = fam->base_frame();
  auto u = fam->base(), uop = fam->base(true);
  Report rep = start("identities", type, {{"max", std::to_string(max)}});
  const int n = u->rank();
  for (int i = 0; i < n; ++i) {
    std::string si = std::to_string(i + 1);
    const Coeff& q = u->q(i, i);
    for (int k = 0; k <= max; ++k)
      for (int m = 0; m <= max; ++m)
        run(rep, "E_" + si + "^" + std::to_string(k) + " F_" + si + "^" + std::to_string(m) + " expansion",
            [&](std::string& w) {
              UElement rhs = u->zero();
              for (int r = 0; r <= std::min(k, m); ++r) {
                Coeff c = q_factorial(r, q) * q_binomial(m - r, r, q) * q_binomial(k - r, r, q) *
                          q.pow((r * (-2 * k + r + 1)) / 2);
                UElement prod = u->one();
                for (int s = 0; s < r; ++s) prod = prod * (-u->k_gen(i) + q.pow(-m + k + s) * u->l_gen(i));
                rhs += c * (prod * u->f(i).pow(m - r) * u->e(i).pow(k - r));
              }
              return same(u->e(i).pow(k) * u->f(i).pow(m), rhs, w);
            });
  }
  auto om = omega(u);
  auto g = gamma(*fam, pi), gop = gamma(*fam, pi, true);
  auto up = upsilon(*fam, pi);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Coeff &qii = u->q(i, i), qij = u->q(i, j), qji = u->q(j, i), cross = qij * qji;
      std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      for (int m = 1; m <= max; ++m) {
        std::string tag = "{" + std::to_string(m) + "," + ij + "}";
        Coeff t = shifted_term(m, qii, cross), tf = shifted_factorial(m, qii, cross);
        run(rep, "[E_i, F_" + tag + "]", [&](std::string& w) {
          return same(commutator(u->e(i), u->f_serre_vector(m, i, j)),
                      -q_number(m, qii) * t * (u->k_gen(i) * u->f_serre_vector(m - 1, i, j)), w);
        });
        run(rep, "[F_i, E_" + tag + "]", [&](std::string& w) {
          return same(commutator(u->f(i), u->e_serre_vector(m, i, j)),
                      -q_number(m, qii) * t * (u->l_gen(i) * u->e_serre_vector(m - 1, i, j)), w);
        });
        run(rep, "[E_j, F_" + tag + "]", [&](std::string& w) {
          return same(commutator(u->e(j), u->f_serre_vector(m, i, j)), tf * (u->f(i).pow(m) * u->l_gen(j)), w);
        });
        run(rep, "[F_j, E_" + tag + "]", [&](std::string& w) {
          return same(commutator(u->f(j), u->e_serre_vector(m, i, j)), tf * (u->e(i).pow(m) * u->k_gen(j)), w);
        });
        run(rep, "[E_" + tag + ", F_" + tag + "]", [&](std::string& w) {
          LatticeVec deg = pi(j) + pi(i) * m;
          return same(commutator(u->e_serre_vector(m, i, j), u->f_serre_vector(m, i, j)),
                      q_factorial(m, qii) * tf * (u->l(deg) - u->k(deg)), w);
        });
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          for (int mp = 0; mp <= max; ++mp)
            run(rep, "[E_" + tag + ", F_{" + std::to_string(mp) + "," + std::to_string(i + 1) + "," +
                         std::to_string(k + 1) + "}] = 0",
                [&](std::string& w) {
                  return same(commutator(u->e_serre_vector(m, i, j), u->f_serre_vector(mp, i, k)), u->zero(), w);
                });
        }
      }
      for (int r = 0; r <= max; ++r) {
        std::string tag = "{" + std::to_string(r) + "," + ij + "}";
        int tri = r * (r - 1) / 2;
        LatticeVec d = pi(j) + pi(i) * r;
        auto e = u->e_serre_vector(r, i, j), ec = u->e_serre_vector(r, i, j, SerreVariant::check);
        auto f = u->f_serre_vector(r, i, j), fc = u->f_serre_vector(r, i, j, SerreVariant::check);
        run(rep, "Omega(E_" + tag + ")", [&](std::string& w) { return same(om(e), qii.pow(-tri) * qji.pow(-r) * f * u->l(-d), w); });
        run(rep, "Omega(Echeck_" + tag + ")", [&](std::string& w) { return same(om(ec), qii.pow(-tri) * qij.pow(-r) * fc * u->l(-d), w); });
        run(rep, "Omega(F_" + tag + ")", [&](std::string& w) { return same(om(f), qii.pow(tri) * qji.pow(r) * u->k(-d) * e, w); });
        run(rep, "Omega(Fcheck_" + tag + ")", [&](std::string& w) { return same(om(fc), qii.pow(tri) * qij.pow(r) * u->k(-d) * ec, w); });
        run(rep, "Gamma(E_" + tag + ") = Echeck", [&](std::string& w) { return same(g(uop->e_serre_vector(r, i, j)), ec, w); });
        run(rep, "Gamma(F_" + tag + ") = Fcheck", [&](std::string& w) { return same(g(uop->f_serre_vector(r, i, j)), fc, w); });
        run(rep, "Gamma Gamma^op(E_" + tag + ") = E", [&](std::string& w) { return same(g(gop(e)), e, w); });
        run(rep, "Upsilon(E_" + tag + ") = F", [&](std::string& w) { return same(up(uop->e_serre_vector(r, i, j)), f, w); });
        run(rep, "Upsilon(F_" + tag + ") = E", [&](std::string& w) { return same(up(uop->f_serre_vector(r, i, j)), e, w); });
        run(rep, "Upsilon(Echeck_" + tag + ") = Fcheck", [&](std::string& w) {
          return same(up(uop->e_serre_vector(r, i, j, SerreVariant::check)), fc, w);
        });
        run(rep, "Upsilon(Fcheck_" + tag + ") = Echeck", [&](std::string& w) {
          return same(up(uop->f_serre_vector(r, i, j, SerreVariant::check)), ec, w);
        });
      }
    }
  rep.seconds = since(t0);
  return rep;
}

namespace {

bool compound(const std::string& s) {
  for (size_t k = 0; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '/' || (s[k] == '-' && k > 0 && s[k - 1] != '^')) return true;
  return false;
}

std::string term_text(const Coeff& c, const std::string& mon, bool first) {
  std::string body = c.pretty();
  bool neg = body.front() == '-' && !compound(body);
  if (neg) body.erase(0, 1);
  std::string coef = body == "1" ? "" : (compound(body) ? "(" + body + ")" : body) + " ";
  return (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) + coef + mon;
}

}  // namespace

std::string relation_table(const std::string& type) {
  auto fam = AlgebraFamily::create(type);
  auto u = fam->base();
  WeylGroup wg(fam->datum());
  std::vector<UElement> vec;
  std::vector<LatticeVec> deg;
  std::vector<std::string> name;
  std::string out;
  if (type == "G2") {
    auto m = g2_vectors(u, false);
    for (const char* n : kG2Names) {
      vec.push_back(m.at(n));
      name.push_back(std::string("E_") + n);
      LatticeVec d;
      vec.back().homogeneous_degree(d);
      deg.push_back(d);
    }
    out += "# G2 root vectors in the order E_2 < E_12 < E_11212 < E_112 < E_1112 < E_1\n";
  } else {
    auto n = wg.longest_word();
    auto rv = root_vectors(*fam, fam->base_frame(), n);
    out += "# " + type + " root vectors E[t] = T_{n_1}..T_{n_(t-1)}(E_{n_t}), n = " + word_str(n) + "\n";
    for (size_t t = 0; t < rv.size(); ++t) {
      vec.push_back(rv[t].e);
      deg.push_back(rv[t].beta);
      name.push_back("E[" + std::to_string(t + 1) + "]");
      out += "# " + name.back() + " has degree " + rv[t].beta.str() + "\n";
    }
  }
  const int len = static_cast<int>(vec.size());
  // ordered monomials of a degree, as exponent vectors
  auto ordered = [&](const LatticeVec& lambda) {
    std::vector<std::vector<int>> res;
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int t, const LatticeVec& rest) -> void {
      if (rest.is_zero()) {
        res.push_back(cur);
        return;
      }
      if (t == len) return;
      LatticeVec r = rest;
      for (int x = 0; r.is_nonnegative(); ++x) {
        cur[t] = x;
        self(self, t + 1, r);
        r = r - deg[t];
      }
      cur[t] = 0;
    };
    rec(rec, 0, lambda);
    return res;
  };
  auto mono_name = [&](const std::vector<int>& z) {
    std::string s;
    for (int t = 0; t < len; ++t)
      if (z[t]) s += name[t] + (z[t] > 1 ? "^" + std::to_string(z[t]) : "");
    return s;
  };
  for (int x = len - 1; x >= 0; --x)
    for (int y = x - 1; y >= 0; --y) {
      auto zs = ordered(deg[x] + deg[y]);
      std::vector<UElement> basis;
      for (const auto& z : zs) {
        UElement b = u->one();
        for (int t = 0; t < len; ++t) b = b * vec[t].pow(z[t]);
        basis.push_back(b);
      }
      auto sol = solve_in_span(vec[x] * vec[y], basis);
      std::string line = name[x] + name[y] + " =";
      if (!sol) {
        line += " (outside the span of ordered monomials)";
      } else {
        std::vector<size_t> order;
        for (size_t k = 0; k < zs.size(); ++k)
          if (!(*sol)[k].is_zero()) order.push_back(k);
        // the reordered product y x first
        std::stable_partition(order.begin(), order.end(), [&](size_t k) { return zs[k][x] == 1 && zs[k][y] == 1; });
        bool first = true;
        for (size_t k : order) {
          line += (first ? " " : "") + term_text((*sol)[k], mono_name(zs[k]), first);
          first = false;
        }
        if (first) line += " 0";
      }
      out += line + "\n";
    }
  return out;
}

}  // namespace mqg::suites
