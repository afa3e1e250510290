// orbitres: exact-arithmetic classification of symplectic resolutions of
// nilpotent orbit closures in the classical families, with verifiable
// deformation, quotient-group and exceptional-fiber computations.
//
// Every subcommand prints a single JSON document on stdout. Identical
// invocations produce byte-identical output; all randomness flows from one
// --seed flag (fallback: the ORBITRES_SEED environment variable, then 42).
// Exit status: 0 when nothing failed, 1 on verification failures, 2 on
// usage or input errors.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "orbitres/deformation.hpp"
#include "orbitres/fiber_graph.hpp"
#include "orbitres/linalg.hpp"
#include "orbitres/matrix_group.hpp"
#include "orbitres/orbit.hpp"
#include "orbitres/partition.hpp"
#include "orbitres/polarization.hpp"
#include "orbitres/springer.hpp"
#include "orbitres/version.hpp"

namespace {

using nlohmann::json;
using namespace orbitres;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_error = 2;

void emit(const json& doc, bool pretty) {
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

json document(const std::string& command, json config) {
  json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["config"] = std::move(config);
  return doc;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ORBITRES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("ORBITRES_SEED is not an unsigned integer");
    }
  }
  return 42;
}

int run_analyze(const std::string& descriptor_text, bool pretty) {
  const OrbitDescriptor descriptor = OrbitDescriptor::parse(descriptor_text);
  const UniquenessReport report = uniqueness_report(descriptor);

  json doc = document("analyze", {{"descriptor", descriptor_text}});
  doc["descriptor"] = descriptor.to_string();
  doc["family"] = std::string(1, family_letter(descriptor.family));
  json body = report;
  doc.update(body);
  emit(doc, pretty);
  return exit_ok;
}

int run_polarizations(const std::string& descriptor_text, bool pretty) {
  const OrbitDescriptor descriptor = OrbitDescriptor::parse(descriptor_text);
  if (descriptor.family != LieFamily::A)
    throw std::invalid_argument("polarization enumeration is defined for sl(n) descriptors");

  const Partition& d = descriptor.partition;
  const Partition s = dual(d);
  const std::vector<FlagType> flags = enumerate_polarizations(d, descriptor.size);

  json doc = document("polarizations", {{"descriptor", descriptor_text}});
  doc["descriptor"] = descriptor.to_string();
  doc["n"] = descriptor.size;
  doc["partition"] = d.parts();
  doc["dual"] = s.parts();
  doc["orbit_dim"] = orbit_dim_A(d);

  json list = json::array();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    json item;
    item["index"] = i;
    item["steps"] = flags[i].steps().parts();
    item["display"] = flags[i].cotangent_display();
    item["flag_dim"] = flag_dim(flags[i]);
    if (flags[i].step_count() == 3) {
      const auto [first, second] = two_step_fibrations(flags[i]);
      item["fibers"] = json::array({first.display(), second.display()});
    }
    list.push_back(std::move(item));
  }
  doc["polarizations"] = std::move(list);

  std::vector<Composition> comps;
  for (const FlagType& f : flags) comps.push_back(f.steps());
  json classes = json::array();
  json class_displays = json::array();
  for (const auto& cls : reversal_classes(comps)) {
    json members = json::array();
    json displays = json::array();
    for (const Composition& c : cls) {
      members.push_back(c.parts());
      displays.push_back(FlagType(c).cotangent_display());
    }
    classes.push_back(std::move(members));
    class_displays.push_back(std::move(displays));
  }
  doc["reversal_classes"] = std::move(classes);
  doc["reversal_class_displays"] = std::move(class_displays);

  json verdicts = json::array();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i].step_count() != 3) continue;
    for (std::size_t j = i + 1; j < flags.size(); ++j) {
      if (flags[j].step_count() != 3) continue;
      verdicts.push_back(
          {{"a", i},
           {"b", j},
           {"verdict", fibration_verdict_name(distinguish_by_fibrations(flags[i], flags[j]))}});
    }
  }
  doc["fibration_verdicts"] = std::move(verdicts);
  emit(doc, pretty);
  return exit_ok;
}

int run_deform_verify(const std::string& partition_text, int n, int samples,
                      const std::optional<std::uint64_t>& seed_flag, int bound,
                      const std::string& head_text, bool pretty) {
  const Partition d = Partition::parse(partition_text);
  if (d.sum() != n) throw std::invalid_argument("mismatched n");
  const std::uint64_t seed = resolve_seed(seed_flag);

  json config{{"partition", d.parts()}, {"n", n},         {"samples", samples},
              {"seed", seed},           {"bound", bound}};
  std::optional<std::vector<Rational>> head;
  if (!head_text.empty()) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= head_text.size()) {
      std::size_t end = head_text.find(',', start);
      if (end == std::string::npos) end = head_text.size();
      values.push_back(parse_rational(head_text.substr(start, end - start)));
      start = end + 1;
      if (end == head_text.size()) break;
    }
    head = std::move(values);
    json rendered = json::array();
    for (const Rational& q : *head) rendered.push_back(q.get_str());
    config["head"] = std::move(rendered);
  }
  json doc = document("deform-verify", config);

  int failures_total = 0;
  json orderings_json = json::array();
  for (const FlagType& f : enumerate_polarizations(d, n)) {
    json item;
    item["flag"] = f.steps().parts();
    item["display"] = f.cotangent_display();
    const FiberDimensionReport dims = fiber_dimension_check(f);
    item["fiber_dimensions"] = dims;
    if (!dims.passed()) ++failures_total;
    const CommutingSquareReport square = verify_commuting_square(f, samples, seed, bound);
    item["square"] = square;
    failures_total += static_cast<int>(square.failures.size());
    if (head) {
      const GenericFiberReport generic = generic_fiber_check(f, *head, samples, seed, bound);
      item["generic_fiber"] = generic;
      failures_total += static_cast<int>(generic.failures.size());
    }
    orderings_json.push_back(std::move(item));
  }
  doc["orderings"] = std::move(orderings_json);
  doc["failures_total"] = failures_total;
  doc["passed"] = failures_total == 0;
  emit(doc, pretty);
  return failures_total == 0 ? exit_ok : exit_verification_failure;
}

int run_jordan_check(const std::string& flag_text, const std::string& partition_text, int n,
                     int trials, const std::optional<std::uint64_t>& seed_flag, int bound,
                     bool pretty) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::vector<FlagType> flags;
  json config{{"trials", trials}, {"seed", seed}, {"bound", bound}};
  if (!flag_text.empty()) {
    flags.emplace_back(Composition::parse(flag_text));
    config["flag"] = flags.front().steps().parts();
  } else {
    const Partition d = Partition::parse(partition_text);
    if (d.sum() != n) throw std::invalid_argument("mismatched n");
    flags = enumerate_polarizations(d, n);
    config["partition"] = d.parts();
    config["n"] = n;
  }

  json doc = document("jordan-check", config);
  bool all_dominated = true;
  json reports = json::array();
  for (const FlagType& f : flags) {
    const GenericJordanReport report = generic_jordan_check(f, trials, seed, bound);
    all_dominated = all_dominated && report.all_dominated;
    reports.push_back(report);
  }
  doc["reports"] = std::move(reports);
  doc["all_dominated"] = all_dominated;
  emit(doc, pretty);
  return all_dominated ? exit_ok : exit_verification_failure;
}

int run_group_example(bool pretty) {
  const MatrixGroup group = MatrixGroup::generate(dihedral_generators(), 64);
  const SymplecticForm form(standard_symplectic_form());
  const auto classes = group.conjugacy_classes();
  const auto reflections = symplectic_reflections(group, form);
  const SingleClassResult hypothesis = single_class_hypothesis(group, form);
  const auto relation_results = verify_intertwiner(
      plane_swap_intertwiner(), dihedral_generator_map(), intertwiner_relations());

  json doc = document("group-example", json::object());
  doc["order"] = group.order();
  doc["conjugacy_class_count"] = classes.size();
  json sizes = json::array();
  for (const auto& cls : classes) sizes.push_back(cls.size());
  doc["class_sizes"] = std::move(sizes);
  doc["reflection_count"] = reflections.size();
  doc["reflection_class_count"] = hypothesis.reflection_class_count;
  doc["single_class_hypothesis"] = hypothesis.holds;
  doc["no_reflections"] = hypothesis.no_reflections;

  bool relations_hold = true;
  json relations = json::array();
  for (const RelationResult& r : relation_results) {
    relations.push_back({{"relation", r.relation}, {"holds", r.holds}});
    relations_hold = relations_hold && r.holds;
  }
  doc["intertwiner"] = std::move(relations);
  doc["passed"] = relations_hold;
  emit(doc, pretty);
  return relations_hold ? exit_ok : exit_verification_failure;
}

FiberConfig resolve_config(const std::string& reference) {
  const auto& fixtures = builtin_fixtures();
  if (const auto it = fixtures.find(reference); it != fixtures.end()) return it->second;
  std::ifstream in(reference);
  if (!in) throw std::invalid_argument("no fixture or readable file named '" + reference + "'");
  json j;
  in >> j;
  return FiberConfig::from_json(j);
}

int run_fiber_check(const std::string& before, const std::string& after, bool pretty) {
  const FiberConfig a = resolve_config(before);
  const FiberConfig b = resolve_config(after);
  json doc = document("fiber-check", {{"before", before}, {"after", after}});
  doc["isomorphic"] = is_isomorphic(a, b);
  emit(doc, pretty);
  return exit_ok;
}

int run_fiber_flop(const std::string& reference, const std::string& center,
                   const std::string& expect, bool pretty) {
  const FiberConfig config = resolve_config(reference);

  // Default action per center edge: contract when the neighbor-side curve
  // has self-intersection -1, otherwise leave the edge alone.
  FlopTransition transition;
  transition.center = center;
  for (const Edge* e : config.edges_at(center)) {
    const bool center_is_a = e->a == center;
    const std::string& neighbor = center_is_a ? e->b : e->a;
    const CurveClass& in_neighbor = center_is_a ? e->contact.in_b : e->contact.in_a;
    const SurfaceLabel& label = config.component(neighbor).label;
    const bool contractible =
        !e->contact.point &&
        (in_neighbor.kind == CurveClass::Kind::MinusOneCurve ||
         (in_neighbor.kind == CurveClass::Kind::NegativeSection &&
          label.kind == SurfaceLabel::Kind::Hirzebruch && label.param == 1));
    transition.set_action(e->a, e->b,
                          contractible ? FlopAction::contract() : FlopAction::unchanged());
  }

  const FiberConfig result = apply_flop(config, transition);
  json config_json{{"config", reference}, {"at", center}};
  if (!expect.empty()) config_json["expect"] = expect;
  json doc = document("fiber-flop", config_json);
  doc["result"] = result;

  int status = exit_ok;
  if (!expect.empty()) {
    const bool matches = is_isomorphic(result, resolve_config(expect));
    doc["matches_expected"] = matches;
    if (!matches) status = exit_verification_failure;
  }
  emit(doc, pretty);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of symplectic resolutions of nilpotent orbit closures"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string descriptor;
  auto* analyze = app.add_subcommand("analyze", "Uniqueness report for an orbit descriptor");
  analyze->add_option("descriptor", descriptor, "e.g. sl(6):[3,2,1]")->required();

  std::string pol_descriptor;
  auto* polarizations =
      app.add_subcommand("polarizations", "Polarizations, reversal classes, fibration verdicts");
  polarizations->add_option("descriptor", pol_descriptor, "sl(n) descriptor")->required();

  std::string dv_partition;
  int dv_n = 0, dv_samples = 100, dv_bound = 10;
  std::optional<std::uint64_t> dv_seed;
  std::string dv_head;
  auto* deform = app.add_subcommand("deform-verify",
                                    "Exact commuting-square and fiber checks per ordering");
  deform->add_option("--partition", dv_partition, "Jordan type, e.g. 3,2,1")->required();
  deform->add_option("--n", dv_n, "matrix size")->required();
  deform->add_option("--samples", dv_samples, "samples per ordering");
  deform->add_option("--seed", dv_seed, "PRNG seed");
  deform->add_option("--bound", dv_bound, "entry bound");
  deform->add_option("--head", dv_head, "fixed head for the generic-fiber check, e.g. 1,2");

  std::string jc_flag, jc_partition;
  int jc_n = 0, jc_trials = 10, jc_bound = 10;
  std::optional<std::uint64_t> jc_seed;
  auto* jordan = app.add_subcommand("jordan-check", "Generic Jordan type of nilradical samples");
  auto* jc_flag_opt = jordan->add_option("--flag", jc_flag, "flag steps, e.g. 1,2,3");
  auto* jc_part_opt =
      jordan->add_option("--partition", jc_partition, "run every ordering of the dual");
  jordan->add_option("--n", jc_n, "matrix size (with --partition)");
  jordan->add_option("--trials", jc_trials, "trials per flag");
  jordan->add_option("--seed", jc_seed, "PRNG seed");
  jordan->add_option("--bound", jc_bound, "entry bound");
  jc_flag_opt->excludes(jc_part_opt);

  auto* group = app.add_subcommand("group-example",
                                   "Dihedral quotient suite: closure, classes, reflections");

  auto* fiber = app.add_subcommand("fiber", "Exceptional-fiber configurations");
  fiber->require_subcommand(1);
  std::string fc_before, fc_after;
  auto* fiber_check = fiber->add_subcommand("check", "Label-preserving isomorphism test");
  fiber_check->add_option("before,--before", fc_before, "fixture name or JSON file")->required();
  fiber_check->add_option("after,--after", fc_after, "fixture name or JSON file")->required();
  std::string ff_config, ff_at, ff_expect;
  auto* fiber_flop = fiber->add_subcommand("flop", "Flop along a projective-plane component");
  fiber_flop->add_option("config", ff_config, "fixture name or JSON file")->required();
  fiber_flop->add_option("--at", ff_at, "center component id")->required();
  fiber_flop->add_option("--expect", ff_expect, "compare the result against this config");

  for (CLI::App* sub : {analyze, polarizations, deform, jordan, group, fiber_check, fiber_flop})
    sub->add_flag("--pretty", pretty, "Indent the JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(descriptor, pretty);
    if (*polarizations) return run_polarizations(pol_descriptor, pretty);
    if (*deform)
      return run_deform_verify(dv_partition, dv_n, dv_samples, dv_seed, dv_bound, dv_head, pretty);
    if (*jordan) {
      if (jc_flag.empty() && jc_partition.empty())
        throw std::invalid_argument("jordan-check needs --flag or --partition");
      return run_jordan_check(jc_flag, jc_partition, jc_n, jc_trials, jc_seed, jc_bound, pretty);
    }
    if (*group) return run_group_example(pretty);
    if (*fiber_check) return run_fiber_check(fc_before, fc_after, pretty);
    if (*fiber_flop) return run_fiber_flop(ff_config, ff_at, ff_expect, pretty);
  } catch (const std::exception& e) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["error"] = e.what();
    emit(doc, pretty);
    return exit_error;
  }
  return exit_error;
}
