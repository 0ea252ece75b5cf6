#include "doctest.h"
#include "mqg/aform.hpp"
#include "mqg/weyl.hpp"

using namespace mqg;

namespace {

void expect_clean(const Report& rep, size_t count) {
  CAPTURE(rep.suite);
  CAPTURE(rep.type);
  CHECK(rep.records.size() == count);
  CHECK(rep.failures() == 0);
  for (const auto& r : rep.records)
    if (!r.passed) MESSAGE(r.id << ": " << r.witness);
}

}  // namespace

TEST_CASE("A-integrality") {
  auto fam = AlgebraFamily::create("B2");
  AIntegrality a(fam->data());
  auto ring = fam->base()->ring();
  auto c = [&](const char* s) { return parse_coeff(ring, s); };
  CHECK(a.contains(c("1+qd^4")));
  CHECK_FALSE(a.contains(c("1/(1+qd^4)")));
  CHECK(a.contains(c("p12^-3*qd^20")));
  CHECK(a.contains(c("p12^-1")));
  CHECK(a.contains(c("qd^-2")));  // q̇_11 for the short root
  CHECK_FALSE(a.contains(c("qd")));
  CHECK(a.contains(c("(qd^2+p12)/(-qd^6*p12)")));
  CHECK(a.contains(Coeff(ring, 0)));
  CHECK_FALSE(a.contains(c("1/2")));
  CHECK_THROWS_AS(a.contains(c("th1")), Error);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(a.contains(fam->base()->qdot(i, j)));
  CHECK(a.contains(fam->base()->theta(0) * fam->base()->theta(0)));
}

TEST_CASE("U0 bracket elements") {
  auto fam = AlgebraFamily::create("A2");
  auto u = fam->base();
  Coeff x = u->q(0, 0), one(u->ring(), 1);
  UElement k = u->k_gen(0), l = u->l_gen(0);
  for (int lv = -2; lv <= 2; ++lv) CHECK(u0_bracket(u, 0, lv, 0) == u->one());
  CHECK(u0_bracket(u, 0, 0, 1) == (k - l) / (x - one));
  CHECK(u0_bracket(u, 0, 1, 1) == (x * k - l) / (x - one));
  CHECK(u0_bracket(u, 0, 0, 1) * u0_bracket(u, 0, -1, 1) == (one + x) * u0_bracket(u, 0, 0, 2));
  CHECK(u0_bracket(u, 0, 0, 2) == u0_bracket(u, 0, 0, 1) * (x.inverse() * k - l) / (x * x - one));
  CHECK_THROWS_AS(u0_bracket(u, 0, 0, -1), Error);
  expect_clean(bracket_identity_check(u, 2), 2 * (2 * 5 + 3 * 3));
}

TEST_CASE("divided powers and straightening") {
  auto fam = AlgebraFamily::create("A2");
  WeylGroup wg(fam->datum());
  AIntegrality a(fam->data());
  for (Side side : {Side::plus, Side::minus}) {
    DividedPbw pbw(fam, wg.longest_word(), side);
    CHECK(pbw.length() == 3);
    for (int t = 0; t < 3; ++t) {
      Coeff chi = pbw.root(t).self_value;
      auto r = pbw.straighten({{t, 1}, {t, 1}});
      ExpVec two(3, 0);
      two[t] = 2;
      REQUIRE(r.size() == 1);
      CHECK(r.at(two) == Coeff(chi.ring(), 1) + chi);
      CHECK(pbw.divided_power(t, 2) * Coeff(chi.ring(), 1) * (Coeff(chi.ring(), 1) + chi) ==
            pbw.bar(t) * pbw.bar(t));
    }
    CHECK(pbw.straighten({}).at(ExpVec(3, 0)) == Coeff(fam->base()->ring(), 1));
    CHECK(pbw.component(LatticeVec({1, 1})).size() == 2);
    CHECK(pbw.component(LatticeVec({2, 1})).size() == 2);
    CHECK(pbw.component(LatticeVec({-1, 1})).empty());
    // coordinates round-trip through evaluate
    UElement x = pbw.monomial({1, 0, 1}) * pbw.monomial({0, 1, 0}) + pbw.monomial({1, 1, 1}, {2, 1, 0});
    CHECK(pbw.evaluate(pbw.coordinates(x)) == x);
    size_t pairs = 0;
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t)
        for (int x = 1; x <= 4; ++x)
          for (int y = 1; y <= 4; ++y) {
            LatticeVec deg = pbw.root(s).beta * x + pbw.root(t).beta * y;
            int h = 0;
            for (int c : deg.coords()) h += c;
            pairs += h <= 4;
          }
    expect_clean(straightening_crosscheck(pbw, 4), pairs);
    expect_clean(divided_product_check(pbw, a, 2), 12);
  }
  DividedPbw plus(fam, wg.longest_word(), Side::plus);
  CHECK_THROWS_AS(plus.coordinates(fam->base()->f(0)), Error);
  CHECK_THROWS_AS(plus.coordinates(fam->base()->e(0) + fam->base()->e(0) * fam->base()->e(1)), Error);
  CHECK_THROWS_AS(plus.straighten({{3, 1}}), Error);
}

TEST_CASE("G2 divided products are A-integral") {
  auto fam = AlgebraFamily::create("G2");
  WeylGroup wg(fam->datum());
  AIntegrality a(fam->data());
  DividedPbw pbw(fam, wg.longest_word(), Side::plus);
  auto r = pbw.straighten({{5, 1}, {0, 1}});
  CHECK(r.size() > 1);
  for (const auto& [z, c] : r) CHECK(a.contains(c));
  CHECK(pbw.evaluate(r) == pbw.bar(5) * pbw.bar(0));
  // Ē^3 = (3)! Ē^(3); the factorial is in A but its inverse is not
  ExpVec three(6, 0);
  three[0] = 3;
  CHECK(pbw.coordinates(pbw.bar(0).pow(3)) == PbwPoly{{three, pbw.factorial(0, 3)}});
  CHECK(a.contains(pbw.factorial(0, 3)));
  CHECK_FALSE(a.contains(pbw.factorial(0, 3).inverse()));
  expect_clean(generator_product_check(pbw, a, 2), 8);
}

TEST_CASE("order independence") {
  for (const char* type : {"A2", "B2"}) {
    auto fam = AlgebraFamily::create(type);
    WeylGroup wg(fam->datum());
    AIntegrality a(fam->data());
    DividedPbw pbw(fam, wg.longest_word(), Side::plus);
    std::vector<int> rev;
    for (int t = pbw.length() - 1; t >= 0; --t) rev.push_back(t);
    expect_clean(order_independence_check(pbw, a, rev, 3), 9);
  }
}

TEST_CASE("U0_A basis") {
  for (auto [type, bound] : {std::pair<const char*, int>{"A1", 2}, {"G2", 1}}) {
    auto fam = AlgebraFamily::create(type);
    AIntegrality a(fam->data());
    auto rep = u0a_basis_check(fam->base(), a, bound);
    CHECK(rep.records.size() > 0);
    CHECK(rep.failures() == 0);
    for (const auto& r : rep.records)
      if (!r.passed) MESSAGE(r.id << ": " << r.witness);
  }
}

TEST_CASE("triangular A-decomposition") {
  auto fam = AlgebraFamily::create("A2");
  WeylGroup wg(fam->datum());
  AIntegrality a(fam->data());
  DividedPbw plus(fam, wg.longest_word(), Side::plus), minus(fam, wg.longest_word(), Side::minus);
  expect_clean(triangular_a_check(plus, minus, a, 0), 2 + 1);
  expect_clean(triangular_a_check(plus, minus, a, 2), 2 + 7 * 7);
  CHECK_THROWS_AS(triangular_a_check(minus, plus, a, 1), Error);
}
