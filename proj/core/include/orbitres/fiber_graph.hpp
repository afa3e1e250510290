#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace orbitres {

/// Label of an exceptional-fiber surface component.
struct SurfaceLabel {
  enum class Kind { ProjectivePlane, Hirzebruch, PointBlowupOfQuadric, Other };

  Kind kind = Kind::ProjectivePlane;
  int param = 0;     // Hirzebruch index k >= 0
  std::string name;  // Other only

  static SurfaceLabel projective_plane() { return {Kind::ProjectivePlane, 0, {}}; }
  static SurfaceLabel hirzebruch(int k);
  static SurfaceLabel point_blowup_of_quadric() { return {Kind::PointBlowupOfQuadric, 0, {}}; }
  static SurfaceLabel other(std::string name) { return {Kind::Other, 0, std::move(name)}; }

  std::string display() const;

  friend bool operator==(const SurfaceLabel&, const SurfaceLabel&) = default;
};

/// Symbolic class of an intersection curve inside one component.
struct CurveClass {
  enum class Kind { Line, Conic, NegativeSection, Ruling, MinusOneCurve, Other };

  Kind kind = Kind::Line;
  std::string name;  // Other only

  static CurveClass line() { return {Kind::Line, {}}; }
  static CurveClass conic() { return {Kind::Conic, {}}; }
  static CurveClass negative_section() { return {Kind::NegativeSection, {}}; }
  static CurveClass ruling() { return {Kind::Ruling, {}}; }
  static CurveClass minus_one_curve() { return {Kind::MinusOneCurve, {}}; }
  static CurveClass other(std::string name) { return {Kind::Other, std::move(name)}; }

  std::string display() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// How two components meet: in one point, or along a curve with a class on
/// each side.
struct Contact {
  bool point = true;
  CurveClass in_a;  // class of the curve inside component a
  CurveClass in_b;  // class of the curve inside component b

  static Contact point_contact() { return {}; }
  static Contact curve_contact(CurveClass a, CurveClass b) {
    return {false, std::move(a), std::move(b)};
  }

  friend bool operator==(const Contact&, const Contact&) = default;
};

struct Component {
  std::string id;
  SurfaceLabel label;
};

struct Edge {
  std::string a;
  std::string b;
  Contact contact;
};

/// Labeled graph of exceptional-fiber components. Validation checks unique
/// ids, known endpoints, at most one edge per pair, and curve classes
/// admissible for the surface carrying them (a negative section needs a
/// Hirzebruch surface with k >= 1, a minus-one curve needs the blown-up
/// quadric, lines and conics live on the projective plane).
class FiberConfig {
public:
  FiberConfig(std::vector<Component> components, std::vector<Edge> edges,
              std::map<std::string, std::string> annotations = {});

  const std::vector<Component>& components() const noexcept { return components_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::map<std::string, std::string>& annotations() const noexcept { return annotations_; }

  bool has_component(const std::string& id) const;
  const Component& component(const std::string& id) const;
  std::vector<const Edge*> edges_at(const std::string& id) const;

  static FiberConfig from_json(const nlohmann::json& j);

private:
  std::vector<Component> components_;
  std::vector<Edge> edges_;
  std::map<std::string, std::string> annotations_;
};

void to_json(nlohmann::json& j, const FiberConfig& c);

/// Label-preserving graph isomorphism, brute force over component
/// bijections; configurations here are tiny.
bool is_isomorphic(const FiberConfig& a, const FiberConfig& b);

/// Per-edge action of a flop. Contraction is only meaningful on edges at
/// the flop center whose curve class in the neighbor has self-intersection
/// -1; it rewrites the neighbor's label by a fixed table (blown-up quadric
/// -> Hirzebruch(1), Hirzebruch(1) -> projective plane) and turns the edge
/// into a point contact with the new center.
struct FlopAction {
  enum class Kind { ContractMinusOneCurve, Relabel, Unchanged };

  Kind kind = Kind::Unchanged;
  Contact relabel_to;  // Relabel only

  static FlopAction contract() { return {Kind::ContractMinusOneCurve, {}}; }
  static FlopAction relabel(Contact c) { return {Kind::Relabel, std::move(c)}; }
  static FlopAction unchanged() { return {}; }
};

/// Flop along a projective-plane component. Every edge at the center needs
/// a declared action; other edges default to Unchanged. Actions are keyed
/// by the unordered pair of endpoint ids.
struct FlopTransition {
  std::string center;
  std::map<std::pair<std::string, std::string>, FlopAction> actions;

  void set_action(const std::string& x, const std::string& y, FlopAction action);
};

/// Applies the transition and revalidates the result, so an undeclared
/// relabel that leaves a stale curve class fails loudly. The center keeps
/// its projective-plane label and its id gains a prime mark.
FiberConfig apply_flop(const FiberConfig& c, const FlopTransition& t);

/// Built-in configurations, keyed by name:
///   "example-2.7"       P2 and Hirzebruch(4) glued conic/negative-section
///   "sec5-local-before" P2 and Hirzebruch(1) glued line/negative-section
///   "sec5-local-after"  two P2 meeting in one point
///   "sec5-full"         blown-up quadric meeting two disjoint P2 along
///                       minus-one curves, plus two Hirzebruch(4) bundles
const std::map<std::string, FiberConfig>& builtin_fixtures();

}  // namespace orbitres
