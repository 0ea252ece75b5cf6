#include "mqg/g2.hpp"

namespace mqg::g2 {

void require_g2(const Algebra& u) {
  if (u.rank() != 2 || u.datum().a(0, 1) != -3 || u.datum().a(1, 0) != -1)
    throw Error("G2 elements need a G2 datum with a_12 = -3");
}

UElement e12(const AlgebraPtr& u) {
  require_g2(*u);
  return u->e_serre_vector(1, 0, 1);
}

UElement e112(const AlgebraPtr& u) {
  require_g2(*u);
  return u->e_serre_vector(2, 0, 1);
}

UElement e1112(const AlgebraPtr& u) {
  require_g2(*u);
  return u->e_serre_vector(3, 0, 1);
}

UElement e11212(const AlgebraPtr& u) {
  UElement x = e12(u), y = e112(u);
  return y * x - u->q(0, 1) * u->q(0, 0).pow(2) * x * y;
}

std::array<UElement, 6> hat_vectors(const AlgebraPtr& u) {
  require_g2(*u);
  const Coeff q = u->q(0, 0), one(u->ring(), 1);
  Coeff m1 = q - one, m2 = q.pow(2) - one, m3 = q.pow(3) - one;
  return {u->e(1),
          q.pow(3) / m3 * e12(u),
          q.pow(9) / (m3.pow(2) * m2 * m1) * e11212(u),
          q.pow(5) / (m3 * m2) * e112(u),
          q.pow(6) / (m3 * m2 * m1) * e1112(u),
          u->e(0)};
}

std::array<UElement, 6> q1_vectors(const AlgebraPtr& u) {
  require_g2(*u);
  const Coeff q = u->q(0, 0);
  Coeff f2 = q_factorial(2, q), f3 = q_factorial(3, q);
  return {u->e(1), e12(u), e11212(u) / f3, e112(u) / f2, e1112(u) / f3, u->e(0)};
}

std::array<Coeff, 6> q1_bases(const AlgebraPtr& u) {
  const Coeff q = u->q(0, 0), q3 = q.pow(3);
  return {q3, q, q3, q, q3, q};
}

UElement q1(const AlgebraPtr& u, const Exps& a) {
  auto v = q1_vectors(u);
  auto b = q1_bases(u);
  UElement r = u->one();
  Coeff den(u->ring(), 1);
  for (int t = 0; t < 6; ++t) {
    r = r * v[t].pow(a[t]);
    den *= q_factorial(a[t], b[t]);
  }
  return r / den;
}

UElement q2(const AlgebraPtr& u, const Exps& a) {
  auto v = hat_vectors(u);
  UElement r = u->one();
  for (int t = 0; t < 6; ++t) r = r * v[t].pow(a[t]);
  return r;
}

std::vector<Exps> exps_up_to(int total) {
  std::vector<Exps> out;
  Exps cur{};
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == 6) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace mqg::g2
