// mqg: batch verification harness over the library suites.
//
//   mqg verify g2|serre|pairing|lusztig|aform|hopf|identities [--type T] [--height H] [--bound B]
//   mqg dump relations --type T
//
// Common flags: --out <path> (text report; JSON companion at <path>.json),
// --jobs <n>. MQG_MEMORY_MB caps the address space and the admissible bounds.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or resource error.
#include <sys/resource.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mqg/coeff.hpp"
#include "mqg/lattice.hpp"
#include "mqg/suites.hpp"

using namespace mqg;
namespace s = mqg::suites;
using Task = std::function<Report()>;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  std::string command, type = "G2", out;
  int height = -1, bound = -1, jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Peak-memory model in MiB, calibrated on single-threaded runs.
double estimate_mb(const Options& o, int h, int b) {
  double rank_growth = o.type == "G2" ? 3.0 : o.type.size() > 1 && o.type[1] > '2' ? 2.5 : 2.0;
  if (o.command == "serre") return 20 + std::pow(1.6, std::max(0, h - 6)) * (o.type == "G2" ? 4 : 1);
  if (o.command == "pairing") return 20 + 10 * std::pow(rank_growth, b);
  if (o.command == "aform") return 40 + 15 * std::pow(rank_growth, b);
  if (o.command == "hopf") return 20 + 5 * std::pow(rank_growth, h);
  if (o.command == "g2") return 60 + 20 * std::pow(3.0, b);
  return 60;
}

std::vector<Task> schedule(const Options& o) {
  const std::string& t = o.type;
  auto pick = [](int v, int dflt) { return v < 0 ? dflt : v; };
  if (o.command == "g2") {
    int b = pick(o.bound, 2);
    return {s::g2_relations, s::g2_coproducts, s::g2_root_vectors, [b] { return s::g2_dual_bases(b); }};
  }
  if (o.command == "serre") {
    int h = pick(o.height, t == "G2" ? 10 : 8);
    return {[t, h] { return s::serre_dimensions(t, h); }};
  }
  if (o.command == "pairing") {
    int b = pick(o.bound, t == "G2" ? 2 : 3), h = pick(o.height, 4);
    return {[t, b, h] { return s::pairing_suite(t, b, h); }};
  }
  if (o.command == "lusztig") {
    std::vector<Task> v{[t] { return s::lusztig_suite(t); }};
    if (t == "G2") v.push_back(s::g2_root_vectors);
    return v;
  }
  if (o.command == "aform") {
    int b = pick(o.bound, 3), h = pick(o.height, 3);
    return {[t, b] { return s::aform_suite(t, 2, 4, b); }, [t, h] { return s::aform_order_suite(t, h); }};
  }
  if (o.command == "hopf") {
    int h = pick(o.height, 4);
    return {[t, h] { return s::hopf_suite(t, h); }};
  }
  if (o.command == "identities") {
    int b = pick(o.bound, 3);
    return {[t, b] { return s::identity_suite(t, b); }};
  }
  throw UsageError("unknown verify target '" + o.command + "'");
}

std::vector<Report> run_all(const std::vector<Task>& tasks, int jobs) {
  std::vector<Report> out(tasks.size());
  std::vector<std::future<Report>> running(tasks.size());
  size_t next = 0;
  // at most `jobs` in flight; results are stored by schedule position
  for (size_t k = 0; k < tasks.size(); ++k) {
    while (next < tasks.size() && next < k + static_cast<size_t>(jobs)) {
      running[next] = std::async(jobs > 1 ? std::launch::async : std::launch::deferred, tasks[next]);
      ++next;
    }
    out[k] = running[k].get();
  }
  return out;
}

std::string text_report(const Options& o, const std::vector<Report>& reps) {
  std::ostringstream os;
  size_t checks = 0;
  int failed = 0;
  os << "mqg report schema " << kSchemaVersion << "\n";
  os << "command: verify " << o.command << "\n";
  for (const auto& r : reps) {
    os << "\nsuite: " << r.suite << "\ntype: " << r.type << "\n";
    for (const auto& [k, v] : r.params) os << "param " << k << ": " << v << "\n";
    for (const auto& c : r.records) {
      os << (c.passed ? "PASS " : "FAIL ") << c.id << "\n";
      if (!c.passed) os << "  witness: " << c.witness << "\n";
    }
    os << "checks: " << r.records.size() << ", failed: " << r.failures() << "\n";
    os << "wall-time: " << r.seconds << " s\n";
    checks += r.records.size();
    failed += r.failures();
  }
  os << "\ntotal: " << checks << " checks, " << failed << " failed\n";
  return os.str();
}

nlohmann::ordered_json json_report(const Options& o, const std::vector<Report>& reps) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify " + o.command;
  j["reports"] = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& r : reps) {
    nlohmann::ordered_json jr;
    jr["suite"] = r.suite;
    jr["type"] = r.type;
    jr["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) jr["params"][k] = v;
    jr["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.records) {
      nlohmann::ordered_json jc{{"id", c.id}, {"status", c.passed ? "pass" : "fail"}};
      if (!c.passed) jc["witness"] = c.witness;
      jr["checks"].push_back(jc);
    }
    jr["wall_time_seconds"] = r.seconds;
    ok = ok && r.passed();
    j["reports"].push_back(jr);
  }
  j["passed"] = ok;
  return j;
}

void emit(const Options& o, const std::string& text, const std::string& json) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream t(o.out), js(o.out + ".json");
  if (!t || !js) throw UsageError("cannot write " + o.out);
  t << text;
  js << json << "\n";
}

long memory_ceiling_mb() {
  const char* env = std::getenv("MQG_MEMORY_MB");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v <= 0) throw UsageError("MQG_MEMORY_MB must be a positive integer");
  return v;
}

void check_ceiling(const Options& o) {
  long cap = memory_ceiling_mb();
  if (!cap) return;
  int h = o.height, b = o.bound;
  if (o.command == "serre" && h < 0) h = o.type == "G2" ? 10 : 8;
  if (b < 0) b = o.command == "g2" ? 2 : o.command == "pairing" ? (o.type == "G2" ? 2 : 3) : 3;
  if (o.command == "hopf" && h < 0) h = 4;
  double need = estimate_mb(o, h, b) * std::max(1, o.jobs);
  if (need > cap) {
    std::ostringstream m;
    m << "refusing: verify " << o.command << " at these bounds needs about " << static_cast<long>(need)
      << " MiB, above MQG_MEMORY_MB=" << cap;
    throw UsageError(m.str());
  }
  rlimit lim{static_cast<rlim_t>(cap) << 20, static_cast<rlim_t>(cap) << 20};
  setrlimit(RLIMIT_AS, &lim);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for multiparameter quantum groups"};
  app.require_subcommand(1);
  Options o;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.command, "g2, serre, pairing, lusztig, aform, hopf or identities")->required();
  verify->add_option("--type", o.type, "Cartan type (A1..A4, B2..B4, C2..C4, D4, F4, G2)");
  verify->add_option("--height", o.height, "height bound (serre, hopf, Gram components, aform order)");
  verify->add_option("--bound", o.bound, "exponent bound (pairing, aform, g2 dual bases, identities)");
  verify->add_option("--out", o.out, "write the text report here and JSON to <path>.json");
  verify->add_option("--jobs", o.jobs, "suites run concurrently")->check(CLI::Range(1, 64));
  auto* dump = app.add_subcommand("dump", "print a table");
  std::string what;
  dump->add_option("table", what, "relations")->required()->check(CLI::IsMember({"relations"}));
  dump->add_option("--type", o.type, "Cartan type");
  dump->add_option("--out", o.out, "write the table here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (o.height > 40 || o.bound > 20) throw UsageError("bound out of range");
    CartanDatum::from_type(o.type);
    if (*dump) {
      std::string table = s::relation_table(o.type);
      if (o.out.empty()) {
        std::cout << table;
      } else {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot write " + o.out);
        f << table;
      }
      return 0;
    }
    if (o.command == "g2" && o.type != "G2") throw UsageError("verify g2 takes no other type");
    auto tasks = schedule(o);
    check_ceiling(o);
    auto reps = run_all(tasks, o.jobs);
    emit(o, text_report(o, reps), json_report(o, reps).dump(2));
    for (const auto& r : reps)
      if (!r.passed()) return 1;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "mqg: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "mqg: out of memory under MQG_MEMORY_MB\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "mqg: " << e.what() << "\n";
    return 2;
  }
}
