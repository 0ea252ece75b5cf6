#include <random>
#include <set>

#include "doctest.h"
#include "mqg/weyl.hpp"

using namespace mqg;

TEST_CASE("cartan types") {
  auto g2 = CartanDatum::from_type("G2");
  CHECK(g2.a(0, 1) == -3);
  CHECK(g2.a(1, 0) == -1);
  CHECK(g2.d(0) == 1);
  CHECK(g2.d(1) == 3);
  auto b2 = CartanDatum::from_type("B2");
  CHECK(b2.d(0) * b2.a(0, 1) == b2.d(1) * b2.a(1, 0));
  for (auto t : {"A1", "A2", "A3", "A4", "B3", "C3", "D4", "F4"}) CHECK_NOTHROW(CartanDatum::from_type(t));
  CHECK_THROWS_AS(CartanDatum::from_type("E9"), Error);
  CHECK_THROWS_AS(CartanDatum::from_type("X2"), Error);
  // affine A1: not finite type
  CHECK_THROWS_AS(CartanDatum({{2, -2}, {-2, 2}}, {1, 1}), Error);
}

TEST_CASE("bicharacter evaluation") {
  AdmissibleData g2(CartanDatum::from_type("G2"));
  const auto& chi = g2.chi();
  auto ring = g2.ring();
  Coeff q = parse_coeff(ring, "qd^4"), a = parse_coeff(ring, "p12^2");
  LatticeVec e1{1, 0}, e2{0, 1}, zero{0, 0};
  CHECK(chi.eval(e1, e1) == q);
  CHECK(chi.eval(e1, e2) == a);
  CHECK(chi.eval(e2, e1) == q.pow(-3) * a.inverse());
  CHECK(chi.eval(e2, e2) == q.pow(3));
  CHECK(chi.eval(zero, e2).is_one());
  CHECK(chi.eval(e1, e2).pretty() == "a");

  AdmissibleData a2(CartanDatum::from_type("A2"));
  CHECK(a2.chi().sqrt_eval(e1, e2) * a2.chi().sqrt_eval(e2, e1) == parse_coeff(a2.ring(), "qd^-2"));
  AdmissibleData a1(CartanDatum::from_type("A1"));
  CHECK(a1.chi().eval(LatticeVec{1}, LatticeVec{1}) == parse_coeff(a1.ring(), "qd^4"));
}

TEST_CASE("bicharacter is biadditive") {
  AdmissibleData b2(CartanDatum::from_type("B2"));
  const auto& chi = b2.chi();
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int it = 0; it < 30; ++it) {
    LatticeVec l{c(rng), c(rng)}, l2{c(rng), c(rng)}, m{c(rng), c(rng)};
    CHECK(chi.eval(l + l2, m) == chi.eval(l, m) * chi.eval(l2, m));
    CHECK(chi.eval(m, l + l2) == chi.eval(m, l) * chi.eval(m, l2));
  }
}

TEST_CASE("N_ij, tau reflections and m_ij") {
  auto datum = CartanDatum::from_type("G2");
  AdmissibleData g2(datum);
  Frame pi = Frame::identity(2);
  CHECK(n_ij(datum, g2.chi(), pi, 0, 1) == 3);
  CHECK(n_ij(datum, g2.chi(), pi, 1, 0) == 1);
  CHECK_THROWS_AS(n_ij(datum, g2.chi(), pi, 0, 0), Error);
  Frame t1 = tau_reflect(datum, g2.chi(), pi, 0);
  CHECK(t1(1) == LatticeVec{3, 1});
  CHECK(t1(0) == LatticeVec{-1, 0});
  CHECK(tau_reflect(datum, g2.chi(), t1, 0) == pi);
  CHECK(m_ij(datum, 0, 1) == 6);
  auto a1a1 = CartanDatum({{2, 0}, {0, 2}}, {1, 1});
  AdmissibleData orth(a1a1);
  CHECK(n_ij(a1a1, orth.chi(), pi, 0, 1) == 0);
  CHECK(m_ij(a1a1, 0, 1) == 2);
  CHECK(m_ij(CartanDatum::from_type("A2"), 0, 1) == 3);
  CHECK(m_ij(CartanDatum::from_type("B2"), 0, 1) == 4);
}

TEST_CASE("admissibility is preserved by reflection") {
  for (auto type : {"A2", "B2", "G2", "A3"}) {
    auto datum = CartanDatum::from_type(type);
    AdmissibleData ad(datum);
    const auto& chi = ad.chi();
    Frame pi = Frame::identity(datum.rank());
    for (int i = 0; i < datum.rank(); ++i) {
      Frame t = tau_reflect(datum, chi, pi, i);
      for (int j = 0; j < datum.rank(); ++j) {
        CHECK(frame_qdot(chi, t, j, j) == frame_qdot(chi, pi, j, j));
        for (int k = 0; k < datum.rank(); ++k)
          CHECK(frame_qdot(chi, t, j, k) * frame_qdot(chi, t, k, j) ==
                frame_qdot(chi, pi, j, k) * frame_qdot(chi, pi, k, j));
      }
    }
  }
}

TEST_CASE("weyl action and lengths") {
  WeylGroup g2(CartanDatum::from_type("G2"));
  CHECK(g2.reflect(0, LatticeVec{0, 1}) == LatticeVec{3, 1});
  CHECK(g2.reflect(1, LatticeVec{0, 1}) == LatticeVec{0, -1});
  CHECK(g2.num_positive_roots() == 6);
  CHECK(g2.length({0, 1, 0, 1, 0, 1}) == 6);
  CHECK(g2.length({}) == 0);
  CHECK(g2.length({0, 0}) == 0);
  CHECK(g2.longest_word() == WeylWord{0, 1, 0, 1, 0, 1});
  CHECK(g2.same_element({0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0}));
  WeylGroup a2(CartanDatum::from_type("A2"));
  CHECK(a2.longest_word() == WeylWord{0, 1, 0});
  CHECK(WeylGroup(CartanDatum::from_type("A1")).longest_word() == WeylWord{0});
  CHECK(WeylGroup(CartanDatum::from_type("A3")).num_positive_roots() == 6);
  CHECK(WeylGroup(CartanDatum::from_type("B3")).num_positive_roots() == 9);
}

TEST_CASE("length properties") {
  for (auto type : {"A2", "B2", "G2", "A3"}) {
    WeylGroup w(CartanDatum::from_type(type));
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> letter(0, w.rank() - 1), len(0, 8);
    for (int it = 0; it < 50; ++it) {
      WeylWord word;
      for (int k = len(rng); k > 0; --k) word.push_back(letter(rng));
      for (int i = 0; i < w.rank(); ++i) {
        WeylWord ws = word;
        ws.push_back(i);
        CHECK(std::abs(w.length(ws) - w.length(word)) == 1);
      }
    }
    // ℓ(w∘) = ℓ(w) + ℓ(w⁻¹w∘) for all words of length ≤ 4
    WeylWord w0 = w.longest_word();
    int n = w.num_positive_roots();
    std::vector<WeylWord> words{{}};
    for (int l = 0; l < 4; ++l) {
      std::vector<WeylWord> next;
      for (auto& x : words)
        for (int i = 0; i < w.rank(); ++i) {
          auto y = x;
          y.push_back(i);
          next.push_back(y);
        }
      words.insert(words.end(), next.begin(), next.end());
      if (words.size() > 400) break;
    }
    for (const auto& x : words) {
      if (x.size() > 4) continue;
      WeylWord inv(x.rbegin(), x.rend());
      inv.insert(inv.end(), w0.begin(), w0.end());
      CHECK(n == w.length(x) + w.length(inv));
    }
  }
}

TEST_CASE("beta sequence") {
  auto datum = CartanDatum::from_type("G2");
  AdmissibleData ad(datum);
  WeylGroup w(datum);
  auto rd = w.beta_sequence({0, 1, 0, 1, 0, 1}, ad.chi());
  std::vector<LatticeVec> expected{{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}};
  CHECK(rd.roots == expected);
  // (3,1) and (3,2) are long, (2,1) and (1,1) short
  CHECK(rd.self_values[1] == parse_coeff(ad.ring(), "qd^12"));
  CHECK(rd.self_values[2] == parse_coeff(ad.ring(), "qd^4"));
  CHECK(rd.self_values[3] == parse_coeff(ad.ring(), "qd^12"));
  std::set<LatticeVec> classical(w.positive_roots().begin(), w.positive_roots().end());
  CHECK(std::set<LatticeVec>(rd.roots.begin(), rd.roots.end()) == classical);
  CHECK_THROWS_AS(w.beta_sequence({0, 0, 1, 0, 1, 0}, ad.chi()), Error);
  CHECK_THROWS_AS(w.beta_sequence({0, 1}, ad.chi()), Error);

  WeylGroup a2(CartanDatum::from_type("A2"));
  AdmissibleData ad2(CartanDatum::from_type("A2"));
  auto r2 = a2.beta_sequence({0, 1, 0}, ad2.chi());
  CHECK(r2.roots == std::vector<LatticeVec>{{1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("reflections agree with frame reflections along the longest word") {
  for (auto type : {"A2", "B2", "G2", "A3", "C3"}) {
    auto datum = CartanDatum::from_type(type);
    AdmissibleData ad(datum);
    WeylGroup w(datum);
    WeylWord n = w.longest_word();
    Frame pi = Frame::identity(datum.rank());
    WeylWord prefix;
    for (int letter : n) {
      CHECK(w.act(prefix, LatticeVec::unit(datum.rank(), letter)) == pi(letter));
      pi = tau_reflect(datum, ad.chi(), pi, letter);
      prefix.push_back(letter);
    }
  }
}

TEST_CASE("kostant partition counts") {
  WeylGroup g2(CartanDatum::from_type("G2"));
  const auto& roots = g2.positive_roots();
  CHECK(kostant_dim(roots, LatticeVec{0, 0}) == 1);
  CHECK(kostant_dim(roots, LatticeVec{2, 1}) == 3);
  CHECK(kostant_dim(roots, LatticeVec{3, 2}) == 7);
  CHECK(kostant_dim(roots, LatticeVec{-1, 2}) == 0);
  WeylGroup a2(CartanDatum::from_type("A2"));
  CHECK(kostant_dim(a2.positive_roots(), LatticeVec{1, 1}) == 2);
  CHECK(kostant_dim(a2.positive_roots(), LatticeVec{2, 2}) == 3);
}
