#include "doctest.h"
#include "mqg/pairing.hpp"
#include "mqg/weyl.hpp"

using namespace mqg;

namespace {

AlgebraPtr make_algebra(const std::string& type, int bound = 12) {
  auto datum = CartanDatum::from_type(type);
  auto ad = std::make_shared<const AdmissibleData>(datum);
  return Algebra::create(ad, ad->chi(), Frame::identity(datum.rank()), bound);
}

std::vector<Word> words(const AlgebraPtr& u, bool f_side, int h) {
  std::vector<Word> out{{}};
  for (const auto& c : nonnegative_vectors(u->rank(), h))
    for (auto& w : (f_side ? u->f_rewrite() : u->e_rewrite()).normal_words(c.coords())) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("base values") {
  auto u = make_algebra("B2");
  Pairing th(u);
  auto one = Coeff(u->ring(), 1), zero = Coeff(u->ring(), 0);
  CHECK(th.pair(u->e(0), u->f(0)) == one);
  CHECK(th.pair(u->e(0), u->f(1)) == zero);
  LatticeVec lam{2, -1}, mu{1, 3};
  CHECK(th.pair(u->k(lam), u->l(mu)) == u->chi().eval(lam, mu));
  CHECK(th.pair(u->k(lam), u->f(1)) == zero);
  CHECK(th.pair(u->e(1), u->l(mu)) == zero);
  CHECK(th.pair(u->one(), u->one()) == one);
  CHECK(th.pair(u->e(0).pow(2), u->f(0).pow(2)) == one + u->q(0, 0));
  CHECK(th.pair(u->e(0).pow(3), u->f(0).pow(3)) == q_factorial(3, u->q(0, 0)));
  CHECK(th.pair(u->e(0) * u->e(1), u->f(0)).is_zero());
  CHECK(th.pair(u->e(0) * u->k(lam), u->f(0) * u->l(mu)) == u->chi().eval(lam, mu));
  CHECK_THROWS_AS(th.pair(u->f(0), u->f(0)), Error);
  CHECK_THROWS_AS(th.pair(u->e(0), u->e(0)), Error);
  CHECK_THROWS_AS(th.pair(u->e(0) * u->l(mu), u->f(0)), Error);
  CHECK_THROWS_AS(th.pair(u->e(0), u->k(lam)), Error);
}

TEST_CASE("word recursion agrees with the coproduct route") {
  for (auto [type, h] : {std::pair{"A2", 4}, {"B2", 4}, {"G2", 3}}) {
    auto u = make_algebra(type);
    Pairing th(u);
    auto ews = words(u, false, h), fws = words(u, true, h);
    LatticeVec lam{1, -2}, mu{0, 1};
    for (const auto& e : ews)
      for (const auto& f : fws) {
        UElement xp = u->k(lam) * u->e_word(e), xm = u->f_word(f) * u->l(mu);
        CHECK(th.pair(xp, xm) == th.pair_sweedler(xp, xm));
      }
  }
}

TEST_CASE("bilinearity and degree orthogonality") {
  auto u = make_algebra("A2");
  Pairing th(u);
  auto ews = words(u, false, 4), fws = words(u, true, 4);
  Coeff c1 = parse_coeff(u->ring(), "qd^2+p12"), c2 = parse_coeff(u->ring(), "1/(qd-1)");
  for (size_t a = 0; a + 1 < ews.size(); a += 2)
    for (size_t b = 0; b + 1 < fws.size(); b += 3) {
      UElement x = u->e_word(ews[a]), y = u->e_word(ews[a + 1]);
      UElement v = u->f_word(fws[b]), w = u->f_word(fws[b + 1]);
      CHECK(th.pair(c1 * x + c2 * y, v) == c1 * th.pair(x, v) + c2 * th.pair(y, v));
      CHECK(th.pair(x, c1 * v + c2 * w) == c1 * th.pair(x, v) + c2 * th.pair(x, w));
      if (u->word_degree(ews[a]) != u->word_degree(fws[b])) CHECK(th.pair(x, v).is_zero());
    }
  // elements given in non-normal order pair through their normal forms
  CHECK(th.pair(u->e(1) * u->e(0) * u->e(0), u->f(0) * u->f(1) * u->f(0)) ==
        th.pair_sweedler(u->e(1) * u->e(0) * u->e(0), u->f(0) * u->f(1) * u->f(0)));
}

TEST_CASE("Gram determinants") {
  auto a2 = make_algebra("A2");
  Pairing th(a2);
  CHECK(determinant(th.gram({a2->e(0)}, {a2->f(0)})).is_one());
  // hand expansion: [[1, q12], [q21, 1]]
  auto g = th.gram({a2->e(0) * a2->e(1), a2->e(1) * a2->e(0)}, {a2->f(0) * a2->f(1), a2->f(1) * a2->f(0)});
  CHECK(g[0][1] == a2->q(0, 1));
  CHECK(g[1][0] == a2->q(1, 0));
  CHECK(determinant(g) == Coeff(a2->ring(), 1) - a2->q(0, 1) * a2->q(1, 0));
  CHECK(th.gram_nondegenerate({a2->e(0) * a2->e(1), a2->e(1) * a2->e(0)}, {a2->f(0) * a2->f(1), a2->f(1) * a2->f(0)}));
  CHECK_THROWS_AS(th.gram_nondegenerate({a2->e(0)}, {}), Error);
  CHECK_FALSE(th.gram_nondegenerate({a2->e(0), a2->e(0)}, {a2->f(0), a2->f(0)}));

  for (auto [type, h] : {std::pair{"A2", 6}, {"B2", 6}, {"G2", 6}}) {
    auto u = make_algebra(type);
    Pairing p(u);
    for (const auto& c : nonnegative_vectors(2, h)) {
      LatticeVec lam = u->frame()(0) * c.coords()[0] + u->frame()(1) * c.coords()[1];
      auto gm = p.gram_component(lam);
      if (gm.empty()) continue;
      CHECK_FALSE(determinant(gm).is_zero());
    }
  }
  auto g2 = make_algebra("G2");
  Pairing p2(g2);
  auto gm = p2.gram_component(LatticeVec{2, 1});
  CHECK(gm.size() == 3);
  CHECK_FALSE(determinant(gm).is_zero());
}

TEST_CASE("antipode compatibility") {
  for (auto type : {"A2", "G2"}) {
    auto u = make_algebra(type);
    Pairing th(u);
    auto ews = words(u, false, 2), fws = words(u, true, 2);
    LatticeVec lam{1, 1}, mu{-1, 2};
    for (const auto& e : ews)
      for (const auto& f : fws) {
        CHECK(th.antipode_compatible(u->e_word(e), u->f_word(f)));
        CHECK(th.antipode_compatible(u->k(lam) * u->e_word(e), u->f_word(f) * u->l(mu)));
      }
  }
}

TEST_CASE("reordering through the pairing") {
  auto a2 = make_algebra("A2");
  Pairing th(a2);
  CHECK(th.reorder_minus_plus(a2->e(0), a2->f(0)) == a2->f(0) * a2->e(0));
  CHECK(th.reorder_plus_minus(a2->e(0), a2->f(0)) == a2->e(0) * a2->f(0));
  CHECK(th.reorder_minus_plus(a2->e(0), a2->f(1)) == a2->e(0) * a2->f(1));
  CHECK(th.cross_commutation_check(a2->e(0) * a2->e(1), a2->f(0)));
  CHECK_THROWS_AS(th.cross_commutation_check(a2->f(0), a2->f(0)), Error);
  for (auto type : {"A2", "B2", "G2"}) {
    auto u = make_algebra(type);
    Pairing p(u);
    auto ews = words(u, false, 3), fws = words(u, true, 3);
    LatticeVec lam{1, 0}, mu{0, -1};
    for (size_t a = 0; a < ews.size(); ++a)
      for (size_t b = 0; b < fws.size(); ++b) {
        if (ews[a].size() + fws[b].size() > 3) continue;
        CHECK(p.cross_commutation_check(u->e_word(ews[a]), u->f_word(fws[b])));
        if ((a + b) % 3 == 0) CHECK(p.cross_commutation_check(u->k(lam) * u->e_word(ews[a]), u->f_word(fws[b]) * u->l(mu)));
      }
  }
}

TEST_CASE("PBW root vectors are orthogonal") {
  CHECK(exponent_vectors(3, 0).size() == 1);
  CHECK(exponent_vectors(6, 2).size() == 28);
  for (auto [type, bound] : {std::pair<std::string, int>{"A2", 3}, {"B2", 3}, {"G2", 2}}) {
    CAPTURE(type);
    auto fam = AlgebraFamily::create(type);
    WeylGroup wg(fam->datum());
    for (const auto& n : {wg.longest_word(), std::vector<int>{}}) {
      std::vector<int> word = n;
      if (word.empty())
        for (int t = 0; t < wg.num_positive_roots(); ++t) word.push_back(1 - t % 2);
      auto rep = pbw_orthogonality_check(*fam, word, bound);
      CHECK(rep.records.size() == exponent_vectors(wg.num_positive_roots(), bound).size() *
                                      exponent_vectors(wg.num_positive_roots(), bound).size());
      CHECK(rep.failures() == 0);
      for (const auto& r : rep.records)
        if (!r.passed) MESSAGE(r.id << ": " << r.witness);
    }
  }
  auto a2 = AlgebraFamily::create("A2");
  CHECK_THROWS_AS(pbw_orthogonality_check(*a2, {0, 1}, 1), Error);
}

TEST_CASE("G2 dual bases") {
  auto fam = AlgebraFamily::create("G2");
  auto rep = g2_duality_check(*fam, 2);
  CHECK(rep.records.size() == 28 * 28);
  CHECK(rep.failures() == 0);
  CHECK_THROWS_AS(g2_duality_check(*AlgebraFamily::create("B2"), 1), Error);
}
