// Acceptance suite: one deterministic criterion per line, PASS/FAIL with
// timing, nonzero exit when anything fails. CLI-facing criteria run the
// actual binary (path in argv[1] or ORBITRES_CLI); the rest use the
// library directly.

#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitres/deformation.hpp"
#include "orbitres/fiber_graph.hpp"
#include "orbitres/linalg.hpp"
#include "orbitres/orbit.hpp"
#include "orbitres/partition.hpp"
#include "orbitres/polarization.hpp"
#include "orbitres/springer.hpp"

using nlohmann::json;
using namespace orbitres;

namespace {

std::string g_cli;

struct CliResult {
  int status = -1;
  json doc;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot spawn " + command);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.doc = json::parse(output);
  return result;
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

// 1. The six polarizations of sl(6):[3,2,1]: three reversal pairs exactly
// as expected, pairwise distinct fibration fingerprints.
Check criterion_six_polarizations() {
  Check c;
  const CliResult r = run_cli("polarizations 'sl(6):[3,2,1]'");
  c.require(r.status == 0, "nonzero exit");
  if (!c.ok) return c;
  c.require(r.doc["polarizations"].size() == 6, "expected 6 polarizations");

  std::set<std::set<std::string>> pairs;
  for (const auto& cls : r.doc["reversal_class_displays"]) {
    std::set<std::string> pair;
    for (const auto& display : cls) pair.insert(display.get<std::string>());
    pairs.insert(std::move(pair));
  }
  const std::set<std::set<std::string>> expected = {
      {"T*F(6,3,1)", "T*F(6,5,3)"},
      {"T*F(6,3,2)", "T*F(6,4,3)"},
      {"T*F(6,5,2)", "T*F(6,4,1)"}};
  c.require(pairs == expected, "reversal pairs do not match the expected three");

  // Fiber fingerprints of the three class representatives.
  std::map<std::string, std::set<std::string>> fibers;
  std::map<std::string, std::size_t> index;
  for (const auto& entry : r.doc["polarizations"]) {
    const std::string display = entry["display"].get<std::string>();
    index[display] = entry["index"].get<std::size_t>();
    std::set<std::string> fingerprint;
    for (const auto& f : entry["fibers"]) fingerprint.insert(f.get<std::string>());
    fibers[display] = std::move(fingerprint);
  }
  c.require(fibers["T*F(6,3,1)"] == std::set<std::string>{"P2", "Gr(5,2)"}, "fibers of F(6,3,1)");
  c.require(fibers["T*F(6,3,2)"] == std::set<std::string>{"P2", "P3"}, "fibers of F(6,3,2)");
  c.require(fibers["T*F(6,5,2)"] == std::set<std::string>{"Gr(5,2)", "P3"}, "fibers of F(6,5,2)");

  auto verdict = [&](const std::string& a, const std::string& b) {
    const std::size_t ia = std::min(index[a], index[b]);
    const std::size_t ib = std::max(index[a], index[b]);
    for (const auto& v : r.doc["fibration_verdicts"])
      if (v["a"] == ia && v["b"] == ib) return v["verdict"].get<std::string>();
    return std::string("missing");
  };
  c.require(verdict("T*F(6,3,1)", "T*F(6,3,2)") == "distinct", "F(6,3,1) vs F(6,3,2)");
  c.require(verdict("T*F(6,3,1)", "T*F(6,5,2)") == "distinct", "F(6,3,1) vs F(6,5,2)");
  c.require(verdict("T*F(6,3,2)", "T*F(6,5,2)") == "distinct", "F(6,3,2) vs F(6,5,2)");
  return c;
}

// 2. Minimal orbits [2,1^(n-1)] in sl(n+1), n+1 = 3..10: two polarizations,
// one reversal class, unique up to equivalence.
Check criterion_minimal_orbits() {
  Check c;
  for (int total = 3; total <= 10; ++total) {
    const int ones = total - 2;
    const std::string descriptor =
        "sl(" + std::to_string(total) + "):[2,1^" + std::to_string(ones) + "]";
    const CliResult r = run_cli("analyze '" + descriptor + "'");
    c.require(r.status == 0, descriptor + ": nonzero exit");
    if (!c.ok) return c;
    c.require(r.doc["verdict"] == "unique-up-to-equivalence", descriptor + ": verdict");
    c.require(r.doc["polarization_count"] == 2, descriptor + ": polarization count");
    c.require(r.doc["reversal_class_count"] == 1, descriptor + ": class count");
  }
  return c;
}

// 3. The five curated descriptors are unique up to isomorphism; sp(4):[2,2]
// also matches the B/C/D parity criterion.
Check criterion_curated_list() {
  Check c;
  const std::vector<std::string> descriptors = {
      "so(5):[3,1,1]", "sp(4):[2,2]", "so(8):[3,3,1,1]", "so(8):[3,1^5]", "so(8):[2,2,2,2]"};
  for (const std::string& descriptor : descriptors) {
    const CliResult r = run_cli("analyze '" + descriptor + "'");
    c.require(r.status == 0, descriptor + ": nonzero exit");
    if (!c.ok) return c;
    c.require(r.doc["verdict"] == "unique-up-to-iso", descriptor + ": verdict");
    if (descriptor == "sp(4):[2,2]") {
      bool parity_matched = false;
      for (const auto& crit : r.doc["criteria"])
        if (crit["id"] == "bcd-parity" && crit["matched"] == true) parity_matched = true;
      c.require(parity_matched, "sp(4):[2,2] should match the parity criterion");
    }
  }
  return c;
}

// 4. The commuting square holds exactly: every partition of n <= 6, every
// ordering of its dual, 25 seeded samples.
Check criterion_commuting_square() {
  Check c;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& d : all_partitions(n)) {
      for (const FlagType& f : enumerate_polarizations(d, n)) {
        const CommutingSquareReport report = verify_commuting_square(f, 25, 42, 10);
        c.require(report.passed(),
                  "failure at " + f.display() + " (" + std::to_string(report.failures.size()) +
                      " samples)");
      }
    }
  }
  return c;
}

// 5. Over a head with distinct completed scalars, every section is
// semisimple with the forced spectrum.
Check criterion_generic_fiber() {
  Check c;
  struct Case {
    Partition s;
    std::vector<Rational> head;
  };
  const std::vector<Case> cases = {
      {Partition({2, 1}), {Rational(1)}},
      {Partition({2, 2}), {Rational(3)}},
      {Partition({3, 2, 1}), {Rational(1), Rational(2)}},
  };
  for (const Case& item : cases) {
    std::vector<int> steps = item.s.parts();
    const FlagType f{Composition(steps)};
    const GenericFiberReport report = generic_fiber_check(f, item.head, 20, 42, 10);
    c.require(report.passed(), "non-semisimple sample for s=[" + item.s.to_string() + "]");
  }
  return c;
}

// 6. The combinatorial dimension formula agrees with the exact rank of the
// commutator map for every partition of n <= 6.
Check criterion_dimension_oracle() {
  Check c;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& d : all_partitions(n)) {
      const int formula = orbit_dim_A(d);
      const int oracle = tangent_dim_oracle(d, n);
      c.require(formula == oracle, "[" + d.to_string() + "]: " + std::to_string(formula) +
                                       " vs oracle " + std::to_string(oracle));
    }
  }
  return c;
}

// 7. Generic Jordan type: 10 seeded trials per flag type, at least 8 hits,
// and domination 10/10.
Check criterion_generic_jordan() {
  Check c;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& d : all_partitions(n)) {
      for (const FlagType& f : enumerate_polarizations(d, n)) {
        const GenericJordanReport report = generic_jordan_check(f, 10, 42, 100);
        c.require(report.all_dominated, f.display() + ": domination violated");
        c.require(report.hits >= 8, f.display() + ": only " + std::to_string(report.hits) +
                                        "/10 generic samples");
      }
    }
  }
  return c;
}

// 8. The dihedral quotient suite.
Check criterion_dihedral_suite() {
  Check c;
  const CliResult r = run_cli("group-example");
  c.require(r.status == 0, "nonzero exit");
  if (!c.ok) return c;
  c.require(r.doc["order"] == 8, "group order");
  c.require(r.doc["conjugacy_class_count"] == 5, "conjugacy class count");
  c.require(r.doc["reflection_class_count"] == 2, "reflection class count");
  c.require(r.doc["single_class_hypothesis"] == false, "hypothesis verdict");
  c.require(r.doc["intertwiner"].size() == 3, "three relations expected");
  for (const auto& relation : r.doc["intertwiner"])
    c.require(relation["holds"] == true, "relation failed: " + relation["relation"].dump());
  return c;
}

// 9. The flop certificate: the local configurations are not isomorphic and
// the flop carries one to the other.
Check criterion_flop_certificate() {
  Check c;
  const CliResult check = run_cli("fiber check sec5-local-before sec5-local-after");
  c.require(check.status == 0, "fiber check exit");
  if (!c.ok) return c;
  c.require(check.doc["isomorphic"] == false, "configurations must differ");
  const CliResult flop =
      run_cli("fiber flop sec5-local-before --at P_D --expect sec5-local-after");
  c.require(flop.status == 0, "fiber flop exit");
  if (!c.ok) return c;
  c.require(flop.doc["matches_expected"] == true, "flop result mismatch");
  return c;
}

// 10. Duality involution, antitone property and reversal-class accounting,
// exhaustively for n <= 12.
Check criterion_partition_exhaustive() {
  Check c;
  for (int n = 0; n <= 12; ++n) {
    const auto parts = all_partitions(n);
    for (const Partition& d : parts) {
      c.require(dual(dual(d)) == d, "involution fails at [" + d.to_string() + "]");
      const Partition s = dual(d);
      const auto all = orderings(s);
      c.require(all.size() == ordering_count(s), "count formula at [" + d.to_string() + "]");
      std::size_t total = 0;
      for (const auto& cls : reversal_classes(all)) {
        c.require(cls.size() == 1 || cls.size() == 2, "class size");
        total += cls.size();
      }
      c.require(total == all.size(), "class sizes must add up");
    }
    for (const Partition& p : parts)
      for (const Partition& q : parts)
        c.require(dominates(p, q) == dominates(dual(q), dual(p)),
                  "antitone fails at [" + p.to_string() + "] vs [" + q.to_string() + "]");
  }
  return c;
}

struct Criterion {
  std::string name;
  Check (*run)();
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    g_cli = argv[1];
  } else if (const char* env = std::getenv("ORBITRES_CLI")) {
    g_cli = env;
  } else {
    std::cerr << "usage: orbitres_acceptance <path-to-cli>\n";
    return 2;
  }

  const std::vector<Criterion> criteria = {
      {"six-polarizations-three-classes", criterion_six_polarizations, 1.0},
      {"minimal-orbit-pair", criterion_minimal_orbits, 1.0},
      {"curated-list-uniqueness", criterion_curated_list, 1.0},
      {"commuting-square-exact", criterion_commuting_square, 30.0},
      {"generic-fiber-semisimple", criterion_generic_fiber, 5.0},
      {"dimension-oracle-agreement", criterion_dimension_oracle, 10.0},
      {"generic-jordan-type", criterion_generic_jordan, 60.0},
      {"dihedral-quotient-suite", criterion_dihedral_suite, 1.0},
      {"flop-certificate", criterion_flop_certificate, 1.0},
      {"partition-duality-exhaustive", criterion_partition_exhaustive, 10.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criteria[i].limit_seconds) {
      result.ok = false;
      result.detail = "time limit exceeded (" + std::to_string(elapsed) + "s of " +
                      std::to_string(criteria[i].limit_seconds) + "s)";
    }
    char line[256];
    std::snprintf(line, sizeof(line), "%s %2zu %-34s (%.3fs)%s%s", result.ok ? "PASS" : "FAIL",
                  i + 1, criteria[i].name.c_str(), elapsed, result.ok ? "" : " -- ",
                  result.detail.c_str());
    std::cout << line << "\n";
    if (!result.ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
