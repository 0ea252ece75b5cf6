// Verification suites over the library, shared by the acceptance binary and
// the command-line tool. Every suite returns a Report with one record per
// check; nothing here is cached between calls.
#pragma once

#include <string>
#include <vector>

#include "mqg/report.hpp"

namespace mqg::suites {

/// G2 relation tables (plain and hatted root vectors) and the two Serre
/// consequences, as exact identities.
Report g2_relations();
/// The four coproduct formulas for E_12, E_112, E_1112, E_11212 and their
/// hatted versions.
Report g2_coproducts();
/// Closed forms of Ē_{n;t}, F̄_{n;t} for n = (1,2,1,2,1,2) and the n′ mirror.
Report g2_root_vectors();
/// ϑ(Q_1(a), Υ(Q_2(b))) = δ_{a,b} for Σa, Σb ≤ total.
Report g2_dual_bases(int total);

/// dim U⁺_λ from normal words against the Kostant partition count for every
/// λ of height ≤ height; components of height ≤ oracle_height are also
/// checked against the rank of the free-algebra pairing on all words.
Report serre_dimensions(const std::string& type, int height, int oracle_height = 7);

/// PBW orthogonality (both alternating longest words, Σ ≤ bound) and Gram
/// nondegeneracy on every component of height ≤ gram_height.
Report pairing_suite(const std::string& type, int bound, int gram_height = 4);

/// Longest-word composites, inverse of T_i, Ω-equivariance, the ζ relation,
/// and the last root vector.
Report lusztig_suite(const std::string& type);

/// Divided-power products (x, y ≤ max_exp, both alternating words, both
/// sides), simple-generator products, bracket identities (p, l ≤ bracket_max),
/// U⁰_A basis and triangular checks at `bound`.
Report aform_suite(const std::string& type, int max_exp, int bracket_max, int bound);
/// Order-independence of the divided bases (reversed order), height ≤ height.
Report aform_order_suite(const std::string& type, int height);

/// Coassociativity, counit, antipode on normal monomials of height ≤ height,
/// and the closed form of Δ(E_{r,i,j}) for r ≤ 3.
Report hopf_suite(const std::string& type, int height);

/// E_i^k F_i^m expansion (k, m ≤ max), the six commutation identities with
/// E_{m,i,j}, F_{m,i,j} (m ≤ max), and Ω, Γ, Υ on E_{r,i,j} (r ≤ max).
Report identity_suite(const std::string& type, int max = 3);

/// Straightening table: for each pair of root vectors out of order, its
/// expansion in ordered monomials. G2 uses the named vectors E_1, E_12, ...
std::string relation_table(const std::string& type);

}  // namespace mqg::suites
