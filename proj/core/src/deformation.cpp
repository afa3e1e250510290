#include "orbitres/deformation.hpp"

#include <set>
#include <stdexcept>

#include "orbitres/rng.hpp"
#include "orbitres/springer.hpp"

namespace orbitres {

namespace {

nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& q : values) out.push_back(q.get_str());
  return out;
}

// Label of each flag position: equal-sized blocks take the smallest unused
// label of matching size, left to right.
std::vector<std::size_t> position_labels(const FlagType& flag, const Partition& s) {
  if (flag.steps().sorted() != s)
    throw std::invalid_argument("flag steps do not order the dual partition");
  std::vector<bool> used(s.size(), false);
  std::vector<std::size_t> labels(flag.step_count());
  for (std::size_t j = 0; j < flag.step_count(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!used[i] && s.at(i) == flag.steps().at(j)) {
        used[i] = true;
        labels[j] = i;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("flag steps do not order the dual partition");
  }
  return labels;
}

std::vector<Rational> random_upper_entries(const FlagType& f, SplitMix64& rng, int bound) {
  const std::size_t count = upper_block_positions(f).size();
  std::vector<Rational> upper;
  upper.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    upper.emplace_back(static_cast<long>(rng.next_in_range(-bound, bound)));
  return upper;
}

}  // namespace

AVector::AVector(Partition s_, std::vector<Rational> a_) : s(std::move(s_)), a(std::move(a_)) {
  if (a.size() != s.size()) throw std::invalid_argument("scalar count does not match part count");
  Rational weighted(0);
  for (std::size_t i = 0; i < a.size(); ++i) weighted += Rational(s.at(i)) * a[i];
  if (weighted != 0) throw std::invalid_argument("trace constraint violated");
}

AVector complete_a(const Partition& s, const std::vector<Rational>& head) {
  const std::size_t m = s.size();
  if (m == 0) throw std::invalid_argument("empty dual partition");
  if (head.size() + 1 != m) throw std::invalid_argument("head must have m-1 entries");
  Rational weighted(0);
  for (std::size_t i = 0; i + 1 < m; ++i) weighted += Rational(s.at(i)) * head[i];
  std::vector<Rational> a = head;
  a.push_back(-weighted / Rational(s.at(m - 1)));
  return AVector(s, std::move(a));
}

ESection::ESection(FlagType flag, AVector avec, const std::vector<Rational>& upper)
    : flag_(std::move(flag)), avec_(std::move(avec)), matrix_(0, 0) {
  const std::vector<std::size_t> labels = position_labels(flag_, avec_.s);
  const auto positions = upper_block_positions(flag_);
  if (upper.size() != positions.size())
    throw std::invalid_argument("upper entry count does not match the block structure");

  const std::size_t n = static_cast<std::size_t>(flag_.n());
  ExactMatrix m(n, n);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < flag_.step_count(); ++j) {
    const std::size_t width = static_cast<std::size_t>(flag_.steps().at(j));
    for (std::size_t k = 0; k < width; ++k)
      m.set(offset + k, offset + k, avec_.a[labels[j]]);
    offset += width;
  }
  for (std::size_t p = 0; p < positions.size(); ++p)
    m.set(positions[p].first, positions[p].second, upper[p]);
  matrix_ = std::move(m);
}

ESection sample_section(const FlagType& f, const AVector& avec, std::uint64_t seed, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  SplitMix64 rng(seed);
  return ESection(f, avec, random_upper_entries(f, rng, bound));
}

std::vector<Rational> eta(const ESection& e) {
  const auto& a = e.avec().a;
  return std::vector<Rational>(a.begin(), a.end() - 1);
}

std::vector<Rational> pi_map(const Partition& s, const std::vector<Rational>& head) {
  const AVector avec = complete_a(s, head);
  std::vector<Rational> diag;
  diag.reserve(static_cast<std::size_t>(s.sum()));
  for (std::size_t i = 0; i < s.size(); ++i)
    diag.insert(diag.end(), static_cast<std::size_t>(s.at(i)), avec.a[i]);
  const std::vector<Rational> coeffs = char_poly(ExactMatrix::diagonal(diag));
  return std::vector<Rational>(coeffs.begin() + 1, coeffs.end());
}

std::vector<Rational> ch(const ExactMatrix& m) {
  if (m.trace() != 0) throw std::domain_error("nonzero trace");
  const std::vector<Rational> coeffs = char_poly(m);
  if (coeffs.empty()) return {};
  return std::vector<Rational>(coeffs.begin() + 1, coeffs.end());
}

CommutingSquareReport verify_commuting_square(const FlagType& f, int samples, std::uint64_t seed,
                                              int bound) {
  if (samples < 0) throw std::invalid_argument("negative sample count");
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  CommutingSquareReport report;
  report.flag = f;
  report.samples = samples;
  report.seed = seed;
  report.bound = bound;

  const Partition s = f.steps().sorted();
  const std::size_t m = s.size();
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    SplitMix64 rng(sample_seed);
    std::vector<Rational> head;
    head.reserve(m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const long num = static_cast<long>(rng.next_in_range(-bound, bound));
      const long den = static_cast<long>(rng.next_in_range(1, bound));
      Rational q(num, den);
      q.canonicalize();
      head.push_back(std::move(q));
    }
    const AVector avec = complete_a(s, head);
    const ESection section(f, avec, random_upper_entries(f, rng, bound));
    const std::vector<Rational> lhs = ch(section.matrix());
    const std::vector<Rational> rhs = pi_map(s, eta(section));
    if (lhs != rhs)
      report.failures.push_back(
          {i, sample_seed, section.matrix().to_literal(), lhs, rhs});
  }
  return report;
}

FiberDimensionReport fiber_dimension_check(const FlagType& f) {
  FiberDimensionReport report;
  report.flag = f;
  report.upper_entries = static_cast<int>(upper_block_positions(f).size());
  report.expected_upper = flag_dim(f);
  const Partition s = f.steps().sorted();
  const std::size_t m = s.size();
  report.section_params = report.upper_entries + static_cast<int>(m) - 1;

  for (std::size_t j = 0; j + 1 < m; ++j) report.probe_head.emplace_back(static_cast<long>(j + 1));
  const AVector avec = complete_a(s, report.probe_head);
  const std::vector<Rational> zeros(upper_block_positions(f).size(), Rational(0));
  const ESection section(f, avec, zeros);
  report.eta_surjective = eta(section) == report.probe_head;
  return report;
}

GenericFiberReport generic_fiber_check(const FlagType& f, const std::vector<Rational>& head,
                                       int samples, std::uint64_t seed, int bound) {
  if (samples < 0) throw std::invalid_argument("negative sample count");
  const Partition s = f.steps().sorted();
  const AVector avec = complete_a(s, head);
  std::set<std::string> distinct;
  for (const Rational& value : avec.a)
    if (!distinct.insert(value.get_str()).second) throw std::domain_error("not generic");

  GenericFiberReport report;
  report.flag = f;
  report.head = head;
  report.completed = avec.a;
  for (std::size_t i = 0; i < s.size(); ++i)
    report.spectrum.push_back({avec.a[i], s.at(i)});
  report.samples = samples;
  report.seed = seed;
  report.bound = bound;

  for (int i = 0; i < samples; ++i) {
    const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    const ESection section = sample_section(f, avec, sample_seed, bound);
    if (!is_semisimple_with_spectrum(section.matrix(), report.spectrum))
      report.failures.push_back({i, sample_seed, section.matrix().to_literal()});
  }
  return report;
}

void to_json(nlohmann::json& j, const CommutingSquareReport& r) {
  j = nlohmann::json::object();
  j["flag"] = r.flag.steps().parts();
  j["display"] = r.flag.cotangent_display();
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"sample", f.sample},
                        {"seed", f.seed},
                        {"matrix", f.matrix_literal},
                        {"lhs", rationals_to_json(f.lhs)},
                        {"rhs", rationals_to_json(f.rhs)}});
  }
  j["failures"] = std::move(failures);
  j["passed"] = r.passed();
}

void to_json(nlohmann::json& j, const FiberDimensionReport& r) {
  j = nlohmann::json::object();
  j["flag"] = r.flag.steps().parts();
  j["upper_entries"] = r.upper_entries;
  j["expected_upper"] = r.expected_upper;
  j["section_params"] = r.section_params;
  j["probe_head"] = rationals_to_json(r.probe_head);
  j["eta_surjective"] = r.eta_surjective;
  j["passed"] = r.passed();
}

void to_json(nlohmann::json& j, const GenericFiberReport& r) {
  j = nlohmann::json::object();
  j["flag"] = r.flag.steps().parts();
  j["head"] = rationals_to_json(r.head);
  j["completed"] = rationals_to_json(r.completed);
  nlohmann::json spectrum = nlohmann::json::array();
  for (const auto& ev : r.spectrum)
    spectrum.push_back({{"value", ev.value.get_str()}, {"multiplicity", ev.multiplicity}});
  j["spectrum"] = std::move(spectrum);
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"sample", f.sample}, {"seed", f.seed}, {"matrix", f.matrix_literal}});
  j["failures"] = std::move(failures);
  j["passed"] = r.passed();
}

}  // namespace orbitres
