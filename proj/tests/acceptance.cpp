// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
// A criterion fails if any check fails or if it exceeds its time budget.
// Usage: acceptance [k ...]   (default: all)
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>

#include "mqg/suites.hpp"

using namespace mqg;
namespace s = mqg::suites;

namespace {

struct Criterion {
  int number;
  const char* title;
  double budget;  // seconds
  std::function<std::vector<Report>()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "G2 relation tables, Serre consequences, coproducts", 120,
       [] { return std::vector<Report>{s::g2_relations(), s::g2_coproducts()}; }},
      {2, "dim U+ against Kostant partitions and the word-pairing rank", 300,
       [] {
         return std::vector<Report>{s::serre_dimensions("A2", 8), s::serre_dimensions("B2", 8),
                                    s::serre_dimensions("G2", 10)};
       }},
      {3, "PBW orthogonality, G2 dual bases, Gram nondegeneracy", 600,
       [] {
         return std::vector<Report>{s::pairing_suite("A2", 3), s::pairing_suite("B2", 3), s::pairing_suite("G2", 2),
                                    s::g2_dual_bases(2)};
       }},
      {4, "Lusztig isomorphisms and G2 root vectors", 300,
       [] {
         return std::vector<Report>{s::lusztig_suite("A2"), s::lusztig_suite("B2"), s::lusztig_suite("G2"),
                                    s::g2_root_vectors()};
       }},
      {5, "A-form integrality", 600,
       [] {
         return std::vector<Report>{s::aform_suite("A2", 2, 4, 3), s::aform_suite("G2", 2, 4, 3),
                                    s::aform_order_suite("A2", 3), s::aform_order_suite("G2", 3)};
       }},
      {6, "Hopf axioms and the coproduct of E_{r,i,j}", 300,
       [] { return std::vector<Report>{s::hopf_suite("A2", 4), s::hopf_suite("B2", 4), s::hopf_suite("G2", 4)}; }},
      {7, "rank-one expansion, commutation identities, Omega/Gamma/Upsilon", 300,
       [] {
         return std::vector<Report>{s::identity_suite("A2"), s::identity_suite("B2"), s::identity_suite("G2"),
                                    s::identity_suite("A3")};
       }},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> pick;
  for (int a = 1; a < argc; ++a) pick.insert(std::atoi(argv[a]));
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!pick.empty() && !pick.count(c.number)) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Report> reps;
    std::string crash;
    try {
      reps = c.run();
    } catch (const std::exception& e) {
      crash = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    size_t checks = 0;
    int failed = 0;
    for (const auto& r : reps) checks += r.records.size(), failed += r.failures();
    bool ok = crash.empty() && failed == 0 && checks > 0 && secs <= c.budget;
    all_ok = all_ok && ok;
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << checks
              << " checks, " << failed << " failed, " << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s of " << c.budget << " s)\n";
    if (!crash.empty()) std::cout << "  aborted: " << crash << "\n";
    int shown = 0;
    for (const auto& r : reps)
      for (const auto& x : r.records)
        if (!x.passed && shown++ < 5) std::cout << "  " << r.suite << " " << r.type << ": " << x.id << ": " << x.witness << "\n";
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
