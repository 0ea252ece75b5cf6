// Named elements of U(χ,π) for the G2 setting with q = q_11, a = q_12
// (index 0 is the short root): E_12, E_112, E_1112, E_11212, their hatted
// rescalings and the monomial families Q_1(a), Q_2(a).
#pragma once

#include <array>

#include "mqg/ualg.hpp"

namespace mqg::g2 {

using Exps = std::array<int, 6>;

/// Throws Error unless u is of type G2 with a_12 = -3.
void require_g2(const Algebra& u);

UElement e12(const AlgebraPtr& u);
UElement e112(const AlgebraPtr& u);
UElement e1112(const AlgebraPtr& u);
/// E_112 E_12 - a q² E_12 E_112
UElement e11212(const AlgebraPtr& u);

/// Ê in the order 2, 12, 11212, 112, 1112, 1 used by Q_1, Q_2.
std::array<UElement, 6> hat_vectors(const AlgebraPtr& u);
/// The un-hatted vectors in the same order, with the divided-power
/// rescalings of Q_1: E_2, E_12, E_11212/(3)!, E_112/(2), E_1112/(3)!, E_1.
std::array<UElement, 6> q1_vectors(const AlgebraPtr& u);
/// Factorial bases of Q_1: q³ for E_2, E_11212, E_1112 and q otherwise.
std::array<Coeff, 6> q1_bases(const AlgebraPtr& u);

UElement q1(const AlgebraPtr& u, const Exps& a);
UElement q2(const AlgebraPtr& u, const Exps& a);

/// All exponent vectors with entry sum ≤ total.
std::vector<Exps> exps_up_to(int total);

}  // namespace mqg::g2
