#include <set>

#include "doctest.h"
#include "mqg/g2.hpp"
#include "mqg/hopf.hpp"
#include "mqg/lusztig.hpp"
#include "mqg/suites.hpp"

using namespace mqg;

namespace {

void expect_clean(const Report& rep) {
  CAPTURE(rep.suite);
  CAPTURE(rep.type);
  CHECK(!rep.records.empty());
  CHECK(rep.failures() == 0);
  for (const auto& r : rep.records)
    if (!r.passed) MESSAGE(r.id << ": " << r.witness);
}

}  // namespace

TEST_CASE("G2 tables") {
  auto rel = suites::g2_relations();
  CHECK(rel.records.size() == 15 + 10 + 2);
  expect_clean(rel);
  auto cop = suites::g2_coproducts();
  CHECK(cop.records.size() == 8);
  expect_clean(cop);
  std::set<std::string> ids;
  for (const auto& r : rel.records) ids.insert(r.id);
  CHECK(ids.size() == rel.records.size());
}

TEST_CASE("misprinted G2 forms do not hold") {
  auto fam = AlgebraFamily::create("G2");
  auto u = fam->base();
  auto p = [&](const char* s) { return parse_element(u, s); };
  // quartic with E1^2 E2 E1^2 in the a^3 term
  CHECK(p("E1^4*E2 - ((1+q)*(1+q^2)*a)*E1^3*E2*E1 + (q*(1+q^2)*(1+q+q^2)*a^2)*E1^2*E2*E1^2"
          " - (q^3*(1+q)*(1+q^2)*a^3)*E1^2*E2*E1^2 + (q^6*a^4)*E2*E1^4") != u->zero());
  // cubic starting with E1^2 E2
  CHECK(p("E1^2*E2 - ((1+q)*(1-q+q^2)*a)*E2*E1*E2 + (q^3*a^2)*E2^2*E1") != u->zero());
  Coeff q = u->q(0, 0), a = parse_coeff(u->ring(), "a");
  auto e2 = u->e(1), e12 = g2::e12(u), e112 = g2::e112(u), e1112 = g2::e1112(u), e11212 = g2::e11212(u);
  // left side E_1112 E_2 with the right side of the E_11212 E_2 row
  Coeff one(u->ring(), 1);
  CHECK(e1112 * e2 != a.pow(3) * q.pow(6) * e2 * e11212 +
                          a.pow(2) * q.pow(3) * (q * q - one) * (q - one) * e12.pow(3));
  // right side order E_112 E_11212
  CHECK(e112 * e11212 != a * q.pow(3) * e112 * e11212);
  // Δ(E_112) with E_1^3 K_2 ⊗ E_2
  HopfStructure h(u);
  Coeff c = (one - q.pow(-3)) * (one - q.pow(-2));
  auto k = [&](int x, int y) { return u->k(LatticeVec({x, y})); };
  TensorElem printed = TensorElem::pure({e112, u->one()}) + c * TensorElem::pure({u->e(0).pow(3) * k(0, 1), e2}) +
                       (one - q.pow(-2)) * (one + q) * TensorElem::pure({u->e(0) * k(1, 1), e12}) +
                       TensorElem::pure({k(2, 1), e112});
  CHECK(h.coproduct(e112) != printed);
}

TEST_CASE("small suite runs") {
  expect_clean(suites::serre_dimensions("A2", 4, 4));
  expect_clean(suites::pairing_suite("A2", 2, 3));
  expect_clean(suites::lusztig_suite("A2"));
  expect_clean(suites::aform_suite("A2", 1, 2, 1));
  expect_clean(suites::aform_order_suite("B2", 2));
  expect_clean(suites::hopf_suite("B2", 2));
  expect_clean(suites::identity_suite("A2", 2));
  expect_clean(suites::identity_suite("A3", 1));
  expect_clean(suites::g2_dual_bases(1));
}

TEST_CASE("G2 dimensions from the word pairing") {
  auto rep = suites::serre_dimensions("G2", 5, 5);
  expect_clean(rep);
  bool saw21 = false, saw32 = false;
  for (const auto& r : rep.records) {
    saw21 |= r.id == "rank of the word pairing on " + LatticeVec({2, 1}).str() + " = 3";
    saw32 |= r.id == "rank of the word pairing on " + LatticeVec({3, 2}).str() + " = 7";
  }
  CHECK(saw21);
  CHECK(saw32);
}

TEST_CASE("relation table") {
  auto g2 = suites::relation_table("G2");
  CHECK(g2.find("E_1E_2 = a E_2E_1 + E_12\n") != std::string::npos);
  CHECK(g2.find("E_12E_2 = q^3*a E_2E_12\n") != std::string::npos);
  auto a2 = suites::relation_table("A2");
  CHECK(a2.find("E[3]E[1] =") != std::string::npos);
  CHECK(a2.find("outside") == std::string::npos);
}
