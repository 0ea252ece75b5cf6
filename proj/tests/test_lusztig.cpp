#include "doctest.h"
#include "mqg/lusztig.hpp"
#include "mqg/weyl.hpp"

using namespace mqg;

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

bool agree(const AlgebraMap& a, const AlgebraMap& b) {
  for (const auto& x : probes(a.source()))
    if (a(x) != b(x)) return false;
  return true;
}

bool is_identity(const AlgebraMap& m) {
  for (const auto& x : probes(m.source()))
    if (m(x) != x) return false;
  return true;
}

UElement e11212(const AlgebraPtr& u) {
  UElement e12 = u->e_serre_vector(1, 0, 1), e112 = u->e_serre_vector(2, 0, 1);
  return e112 * e12 - u->q(0, 1) * u->q(0, 0).pow(2) * e12 * e112;
}

}  // namespace

TEST_CASE("standard maps on generators") {
  auto fam = AlgebraFamily::create("B2");
  auto pi = fam->base_frame();
  auto u = fam->base(), uop = fam->base(true);
  LatticeVec lam{2, -1}, mu{0, 3};
  auto om = omega(u);
  CHECK(om(u->one()) == u->one());
  CHECK(om(u->e(0)) == u->f(0) * u->l_gen(0, -1));
  CHECK(om(u->f(1)) == u->k_gen(1, -1) * u->e(1));
  CHECK(om(u->k(lam) * u->l(mu)) == u->k(-lam) * u->l(-mu));
  auto up = upsilon(*fam, pi), upop = upsilon(*fam, pi, true);
  CHECK(up.source() == uop);
  CHECK(up(uop->e(1)) == u->f(1));
  CHECK(up(uop->k(lam) * uop->l(mu)) == u->k(mu) * u->l(lam));
  CHECK(is_identity(up.after(upop)));
  CHECK(is_identity(upop.after(up)));
  auto g = gamma(*fam, pi), gop = gamma(*fam, pi, true);
  CHECK(g.anti());
  CHECK(g(uop->e(0) * uop->e(1)) == u->e(1) * u->e(0));
  CHECK(is_identity(g.after(gop)));
  CHECK(is_identity(gop.after(g)));
  for (int i = 0; i < 2; ++i) {
    auto z = zeta(u, i);
    Coeff c = u->qdot(i, 1) * u->qdot(1, i);
    CHECK(z(u->k(lam)) == u->k(lam));
    CHECK(z(u->f(1)) == c * u->f(1));
    CHECK(z(u->e(1)) == u->e(1) / c);
  }
  CHECK(is_identity(AlgebraMap::identity(u)));
}

TEST_CASE("relation check rejects bad images") {
  auto fam = AlgebraFamily::create("A2");
  auto u = fam->base();
  std::vector<UElement> es{u->e(0), u->e(1)}, fs{u->f(0), u->f(1)};
  CHECK_NOTHROW(AlgebraMap(u, u, false, TorusRule{}, es, fs, "ok"));
  std::vector<UElement> swapped{u->e(1), u->e(0)};
  CHECK_THROWS_AS(AlgebraMap(u, u, false, TorusRule{}, swapped, fs, "bad"), Error);
  std::vector<UElement> scaled{u->e(0) * Coeff(u->ring(), 2), u->e(1)};
  CHECK_THROWS_AS(AlgebraMap(u, u, false, TorusRule{}, scaled, fs, "bad"), Error);
  CHECK_THROWS_AS(AlgebraMap(u, u, false, TorusRule{}, {u->e(0)}, fs, "bad"), Error);
  auto b2 = AlgebraFamily::create("B2")->base();
  CHECK_THROWS_AS(omega(u)(b2->e(0)), Error);
}

TEST_CASE("Omega, Gamma, Upsilon on E_{r,i,j} and their check variants") {
  for (const std::string type : {"A2", "B2", "G2"}) {
    CAPTURE(type);
    auto fam = AlgebraFamily::create(type);
    auto pi = fam->base_frame();
    auto u = fam->base(), uop = fam->base(true);
    auto om = omega(u);
    auto g = gamma(*fam, pi);
    auto up = upsilon(*fam, pi);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (i == j) continue;
        for (int r = 0; r <= 3; ++r) {
          CAPTURE(i);
          CAPTURE(r);
          Coeff qii = u->q(i, i), qij = u->q(i, j), qji = u->q(j, i);
          int tri = r * (r - 1) / 2;
          LatticeVec d = pi(j) + pi(i) * r;
          auto e = u->e_serre_vector(r, i, j), ec = u->e_serre_vector(r, i, j, SerreVariant::check);
          auto f = u->f_serre_vector(r, i, j), fc = u->f_serre_vector(r, i, j, SerreVariant::check);
          CHECK(om(e) == qii.pow(-tri) * qji.pow(-r) * f * u->l(-d));
          CHECK(om(ec) == qii.pow(-tri) * qij.pow(-r) * fc * u->l(-d));
          CHECK(om(f) == qii.pow(tri) * qji.pow(r) * u->k(-d) * e);
          CHECK(om(fc) == qii.pow(tri) * qij.pow(r) * u->k(-d) * ec);
          CHECK(g(uop->e_serre_vector(r, i, j)) == ec);
          CHECK(g(uop->f_serre_vector(r, i, j)) == fc);
          CHECK(up(uop->e_serre_vector(r, i, j)) == f);
          CHECK(up(uop->f_serre_vector(r, i, j)) == e);
          CHECK(up(uop->e_serre_vector(r, i, j, SerreVariant::check)) == fc);
          CHECK(up(uop->f_serre_vector(r, i, j, SerreVariant::check)) == ec);
        }
      }
  }
}

TEST_CASE("T_i: generators, closed forms, inverse, Omega and zeta compatibility") {
  for (const std::string type : {"A2", "B2", "G2"}) {
    CAPTURE(type);
    auto fam = AlgebraFamily::create(type);
    auto pi = fam->base_frame();
    for (int i = 0; i < 2; ++i) {
      CAPTURE(i);
      Frame tp = fam->reflect(pi, i);
      CHECK(fam->reflect(tp, i) == pi);
      auto t = lusztig_t(*fam, pi, i), top = lusztig_t(*fam, pi, i, true);
      auto src = t.source(), tgt = t.target();
      CHECK(src == fam->get(tp));
      CHECK(tgt == fam->get(pi));
      LatticeVec lam{1, -2};
      CHECK(t(src->k(lam)) == tgt->k(lam));
      CHECK(t(src->l(lam)) == tgt->l(lam));
      CHECK(t(src->e(i)) == tgt->f(i) * tgt->l_gen(i, -1));
      CHECK(t(src->f(i)) == tgt->k_gen(i, -1) * tgt->e(i));
      int j = 1 - i, a = tgt->datum().a(i, j);
      Coeff qii = tgt->q(i, i);
      for (int r = 0; r <= -a; ++r) {
        CAPTURE(r);
        Coeff base = q_factorial(r, qii) * tgt->theta(i).pow(a + 2 * r) / q_factorial(-a - r, qii);
        Coeff ce = base * tgt->qdot(i, j).pow(a + 2 * r);
        Coeff cf = base * tgt->qdot(i, i).pow((a + 2 * r) * (a - 1)) * tgt->qdot(i, j).pow(-a - 2 * r);
        CHECK(t(src->e_serre_vector(r, i, j, SerreVariant::check)) == ce * tgt->e_serre_vector(-a - r, i, j));
        CHECK(t(src->f_serre_vector(r, i, j, SerreVariant::check)) == cf * tgt->f_serre_vector(-a - r, i, j));
      }
      // the inverse of T_i: U(π) → U(τ_iπ)
      auto fwd = lusztig_t(*fam, tp, i);
      auto inv = gamma(*fam, pi).after(top.after(gamma(*fam, tp, true)));
      CHECK(is_identity(inv.after(fwd)));
      CHECK(is_identity(fwd.after(inv)));
      CHECK(agree(omega(tgt).after(t), t.after(omega(src))));
      auto lhs = t.after(upsilon(*fam, tp));
      auto rhs = zeta(tgt, i).after(upsilon(*fam, pi).after(top));
      CHECK(agree(lhs, rhs));
    }
  }
}

TEST_CASE("T_w: reduced words only, empty word is the identity") {
  auto fam = AlgebraFamily::create("A2");
  auto pi = fam->base_frame();
  CHECK(is_identity(lusztig_t_word(*fam, pi, {})));
  CHECK_THROWS_AS(lusztig_t_word(*fam, pi, {0, 0}), Error);
  CHECK_THROWS_AS(lusztig_t(*fam, pi, 2), Error);
  CHECK_THROWS_AS(root_vectors(*fam, pi, {0, 1}), Error);
  CHECK_THROWS_AS(root_vectors(*fam, pi, {0, 1, 1}), Error);
}

TEST_CASE("longest-word composites agree") {
  for (const std::string type : {"A2", "B2", "G2"}) {
    CAPTURE(type);
    auto fam = AlgebraFamily::create(type);
    auto pi = fam->base_frame();
    WeylGroup wg(fam->datum());
    std::vector<int> n1, n2;
    for (int t = 0; t < wg.num_positive_roots(); ++t) {
      n1.push_back(t % 2);
      n2.push_back(1 - t % 2);
    }
    auto a = lusztig_t_word(*fam, pi, n1), b = lusztig_t_word(*fam, pi, n2);
    CHECK(a.source() == b.source());
    CHECK(a.same_as(b));
    CHECK(agree(a, b));
  }
}

TEST_CASE("root vectors: degrees and the last vector") {
  for (const std::string type : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(type);
    auto fam = AlgebraFamily::create(type);
    auto pi = fam->base_frame();
    WeylGroup wg(fam->datum());
    std::vector<std::vector<int>> words{wg.longest_word()};
    if (fam->rank() == 2) {
      std::vector<int> n;
      for (int t = 0; t < wg.num_positive_roots(); ++t) n.push_back(1 - t % 2);
      words.push_back(n);
    } else {
      words.push_back({1, 0, 1, 2, 1, 0});
    }
    for (const auto& n : words) {
      REQUIRE(wg.is_reduced(n));
      auto rv = root_vectors(*fam, pi, n);
      auto rd = wg.beta_sequence(n, fam->data().chi());
      REQUIRE(rv.size() == rd.roots.size());
      auto u = fam->base();
      CHECK(rv[0].e == u->e(n[0]));
      CHECK(rv[0].fbar == -u->f(n[0]) / u->theta(n[0]));
      for (size_t t = 0; t < rv.size(); ++t) {
        CHECK(rv[t].beta == rd.roots[t]);
        CHECK(rv[t].self_value == rd.self_values[t]);
      }
      int n0 = longest_word_partner(fam->datum(), n.back());
      CHECK(rv.back().e == u->e(n0));
      CHECK(rv.back().f == u->f(n0));
      CHECK(rv.back().ebar == u->e(n0) / u->theta(n0));
      CHECK(rv.back().fbar == -u->f(n0) / u->theta(n0));
    }
  }
}

TEST_CASE("G2 root vectors in closed form") {
  auto fam = AlgebraFamily::create("G2");
  auto pi = fam->base_frame();
  auto u = fam->base(), uop = fam->base(true);
  REQUIRE(u->datum().a(0, 1) == -3);
  auto rv = root_vectors(*fam, pi, {0, 1, 0, 1, 0, 1});
  auto rvop = root_vectors(*fam, pi, {0, 1, 0, 1, 0, 1}, true);
  auto rvp = root_vectors(*fam, pi, {1, 0, 1, 0, 1, 0});
  Coeff q = u->q(0, 0), t1 = u->theta(0), t3 = u->theta(1);
  CHECK(u->q(1, 1) == q.pow(3));
  auto closed = [&](const AlgebraPtr& a, int t) {
    Coeff d = a->qdot(0, 1);
    switch (t) {
      case 0: return a->e(0) / t1;
      case 1: return d.pow(-3) / (q_factorial(3, q) * t1.pow(3) * t3) * a->e_serre_vector(3, 0, 1);
      case 2: return d.pow(-2) / (q_factorial(2, q) * t3 * t1.pow(2)) * a->e_serre_vector(2, 0, 1);
      case 3: return d.pow(-4) / (q_factorial(3, q) * t3.pow(2) * t1.pow(3)) * e11212(a);
      case 4: return d.pow(-1) / (t1 * t3) * a->e_serre_vector(1, 0, 1);
      default: return a->e(1) / t3;
    }
  };
  const int fexp[6] = {0, 3, 4, 6, 3, 0};
  auto up = upsilon(*fam, pi);
  auto g = gamma(*fam, pi);
  for (int t = 0; t < 6; ++t) {
    CAPTURE(t + 1);
    CHECK(rv[t].ebar == closed(u, t));
    CHECK(rvop[t].ebar == closed(uop, t));
    // F̄_{n;t} = -q̇_11^k Υ(Ē_{n;t}), Ē taken in the χ^op presentation
    CHECK(rv[t].fbar == -u->qdot(0, 0).pow(fexp[t]) * up(rvop[t].ebar));
    CHECK(rvp[t].ebar == g(rvop[5 - t].ebar));
    CHECK(rvp[t].fbar == g(rvop[5 - t].fbar));
  }
}
