#include "doctest.h"
#include "mqg/hopf.hpp"

using namespace mqg;

namespace {

AlgebraPtr make_algebra(const std::string& type, int bound = 12) {
  auto datum = CartanDatum::from_type(type);
  auto ad = std::make_shared<const AdmissibleData>(datum);
  return Algebra::create(ad, ad->chi(), Frame::identity(datum.rank()), bound);
}

// Normal monomials F-word · torus · E-word with |f| + |e| <= h.
std::vector<NormalMonomial> sample_monomials(const AlgebraPtr& u, int h) {
  std::vector<Word> ews{{}}, fws{{}};
  for (const auto& c : nonnegative_vectors(u->rank(), h)) {
    for (auto& w : u->e_rewrite().normal_words(c.coords())) ews.push_back(w);
    for (auto& w : u->f_rewrite().normal_words(c.coords())) fws.push_back(w);
  }
  std::vector<NormalMonomial> out;
  LatticeVec z(u->rank());
  LatticeVec k1 = u->frame()(0), l2 = -u->frame()(1);
  for (const auto& f : fws)
    for (const auto& e : ews) {
      if (static_cast<int>(f.size() + e.size()) > h) continue;
      out.push_back({f, z, z, e});
      if (f.size() + e.size() <= 2) out.push_back({f, k1, l2, e});
    }
  return out;
}

}  // namespace

TEST_CASE("generator formulas") {
  auto u = make_algebra("B2");
  HopfStructure h(u);
  for (int i = 0; i < 2; ++i) {
    CHECK(h.coproduct(u->e(i)) == TensorElem::pure({u->e(i), u->one()}) + TensorElem::pure({u->k_gen(i), u->e(i)}));
    CHECK(h.coproduct(u->f(i)) == TensorElem::pure({u->f(i), u->l_gen(i)}) + TensorElem::pure({u->one(), u->f(i)}));
    CHECK(h.antipode(u->e(i)) == -(u->k_gen(i, -1) * u->e(i)));
    CHECK(h.antipode(u->f(i)) == -(u->f(i) * u->l_gen(i, -1)));
    CHECK(h.counit(u->e(i) * u->f(i)).is_zero());
    CHECK(h.counit(u->f(i) * u->e(i) + u->k_gen(i)).is_one());
  }
  LatticeVec lam{2, -1};
  CHECK(h.antipode(u->k(lam)) == u->k(-lam));
  CHECK(h.antipode(u->l(lam)) == u->l(-lam));
  CHECK(h.coproduct(u->one()) == TensorElem::pure({u->one(), u->one()}));
  CHECK(h.coproduct(u->k(lam) * u->l(lam)) == TensorElem::pure({u->k(lam) * u->l(lam), u->k(lam) * u->l(lam)}));
  CHECK(h.coproduct(u->e(0)).str() == "E1 (o) 1 + K[1,0] (o) E1");
}

TEST_CASE("coproduct is an algebra map and the antipode an anti-map") {
  auto u = make_algebra("G2");
  HopfStructure h(u);
  auto ms = sample_monomials(u, 2);
  for (size_t a = 0; a < ms.size(); a += 3)
    for (size_t b = 0; b < ms.size(); b += 5) {
      UElement x = monomial_element(u, ms[a]), y = monomial_element(u, ms[b]);
      CHECK(h.coproduct(x * y) == h.coproduct(x) * h.coproduct(y));
      CHECK(h.antipode(x * y) == h.antipode(y) * h.antipode(x));
      CHECK(h.counit(x * y) == h.counit(x) * h.counit(y));
    }
}

TEST_CASE("hopf axioms on monomials") {
  for (auto type : {"A2", "B2", "G2"}) {
    auto u = make_algebra(type);
    HopfStructure h(u);
    auto delta = [&](const NormalMonomial& m) { return h.coproduct(m); };
    auto eps = [&](const NormalMonomial& m) {
      return TensorElem::pure({u->scalar(h.counit(monomial_element(u, m)))});
    };
    auto ident = [&](const NormalMonomial& m) { return TensorElem::pure({monomial_element(u, m)}); };
    auto anti = [&](const NormalMonomial& m) { return TensorElem::pure({h.antipode(monomial_element(u, m))}); };
    for (const auto& m : sample_monomials(u, 3)) {
      UElement x = monomial_element(u, m);
      TensorElem d = h.coproduct(m);
      CHECK(d.map_slot(0, delta) == d.map_slot(1, delta));
      CHECK(d.map_slot(0, eps).map_slot(1, ident).multiply_out() == x);
      CHECK(d.map_slot(1, eps).multiply_out() == x);
      CHECK(d.map_slot(0, anti).multiply_out() == u->scalar(h.counit(x)));
      CHECK(d.map_slot(1, anti).multiply_out() == u->scalar(h.counit(x)));
      CHECK(h.antipode(h.antipode_inverse(x)) == x);
      CHECK(h.antipode_inverse(h.antipode(x)) == x);
    }
  }
}

TEST_CASE("closed form of the Serre vector coproduct") {
  for (auto type : {"A2", "B2", "G2"}) {
    auto u = make_algebra(type);
    HopfStructure h(u);
    for (int i = 0; i < 2; ++i)
      for (int r = 0; r <= -u->datum().a(i, 1 - i); ++r) CHECK(h.coproduct_serre_formula_check(r, i, 1 - i));
    CHECK_THROWS_AS(h.coproduct_serre_formula_check(1 - u->datum().a(0, 1), 0, 1), Error);
  }
  auto a3 = make_algebra("A3");
  HopfStructure h3(a3);
  CHECK(h3.coproduct_serre_formula_check(1, 1, 2));
  CHECK(h3.coproduct_serre_formula_check(0, 0, 2));
}
