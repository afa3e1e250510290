#include "orbitres/fiber_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbitres {

namespace {

std::pair<std::string, std::string> normalized_pair(const std::string& x, const std::string& y) {
  return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

bool curve_admissible(const SurfaceLabel& surface, const CurveClass& curve) {
  switch (curve.kind) {
    case CurveClass::Kind::Line:
    case CurveClass::Kind::Conic:
      return surface.kind == SurfaceLabel::Kind::ProjectivePlane;
    case CurveClass::Kind::NegativeSection:
      return surface.kind == SurfaceLabel::Kind::Hirzebruch && surface.param >= 1;
    case CurveClass::Kind::Ruling:
      return surface.kind == SurfaceLabel::Kind::Hirzebruch;
    case CurveClass::Kind::MinusOneCurve:
      return surface.kind == SurfaceLabel::Kind::PointBlowupOfQuadric;
    case CurveClass::Kind::Other:
      return true;
  }
  return false;
}

// Self-intersection -1 inside the given surface, the contractibility
// condition for the flop's blow-down step.
bool is_minus_one_curve_on(const SurfaceLabel& surface, const CurveClass& curve) {
  if (curve.kind == CurveClass::Kind::MinusOneCurve) return true;
  return curve.kind == CurveClass::Kind::NegativeSection &&
         surface.kind == SurfaceLabel::Kind::Hirzebruch && surface.param == 1;
}

SurfaceLabel contracted_label(const SurfaceLabel& surface, const std::string& edge_name) {
  if (surface.kind == SurfaceLabel::Kind::PointBlowupOfQuadric) return SurfaceLabel::hirzebruch(1);
  if (surface.kind == SurfaceLabel::Kind::Hirzebruch && surface.param == 1)
    return SurfaceLabel::projective_plane();
  throw std::invalid_argument("no contraction rule for the neighbor of edge " + edge_name);
}

std::string label_to_string(const SurfaceLabel& label) {
  switch (label.kind) {
    case SurfaceLabel::Kind::ProjectivePlane: return "projective-plane";
    case SurfaceLabel::Kind::Hirzebruch: return "hirzebruch";
    case SurfaceLabel::Kind::PointBlowupOfQuadric: return "point-blowup-of-quadric";
    case SurfaceLabel::Kind::Other: return "other";
  }
  return "other";
}

SurfaceLabel label_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("label").get<std::string>();
  if (kind == "projective-plane") return SurfaceLabel::projective_plane();
  if (kind == "hirzebruch") return SurfaceLabel::hirzebruch(j.at("param").get<int>());
  if (kind == "point-blowup-of-quadric") return SurfaceLabel::point_blowup_of_quadric();
  if (kind == "other") return SurfaceLabel::other(j.at("name").get<std::string>());
  throw std::invalid_argument("unknown surface label: " + kind);
}

std::string curve_to_string(const CurveClass& c) {
  switch (c.kind) {
    case CurveClass::Kind::Line: return "line";
    case CurveClass::Kind::Conic: return "conic";
    case CurveClass::Kind::NegativeSection: return "negative-section";
    case CurveClass::Kind::Ruling: return "ruling";
    case CurveClass::Kind::MinusOneCurve: return "minus-one-curve";
    case CurveClass::Kind::Other: return "other:" + c.name;
  }
  return "other:";
}

CurveClass curve_from_string(const std::string& text) {
  if (text == "line") return CurveClass::line();
  if (text == "conic") return CurveClass::conic();
  if (text == "negative-section") return CurveClass::negative_section();
  if (text == "ruling") return CurveClass::ruling();
  if (text == "minus-one-curve") return CurveClass::minus_one_curve();
  if (text.starts_with("other:")) return CurveClass::other(text.substr(6));
  throw std::invalid_argument("unknown curve class: " + text);
}

}  // namespace

SurfaceLabel SurfaceLabel::hirzebruch(int k) {
  if (k < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
  return {Kind::Hirzebruch, k, {}};
}

std::string SurfaceLabel::display() const {
  switch (kind) {
    case Kind::ProjectivePlane: return "P2";
    case Kind::Hirzebruch: return "Sigma_" + std::to_string(param);
    case Kind::PointBlowupOfQuadric: return "Bl_pt(P1xP1)";
    case Kind::Other: return name;
  }
  return name;
}

std::string CurveClass::display() const { return curve_to_string(*this); }

FiberConfig::FiberConfig(std::vector<Component> components, std::vector<Edge> edges,
                         std::map<std::string, std::string> annotations)
    : components_(std::move(components)),
      edges_(std::move(edges)),
      annotations_(std::move(annotations)) {
  std::set<std::string> ids;
  for (const Component& c : components_) {
    if (c.id.empty()) throw std::invalid_argument("component id must not be empty");
    if (!ids.insert(c.id).second) throw std::invalid_argument("duplicate component id: " + c.id);
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (const Edge& e : edges_) {
    if (!ids.contains(e.a) || !ids.contains(e.b))
      throw std::invalid_argument("edge references unknown component: " + e.a + "-" + e.b);
    if (e.a == e.b) throw std::invalid_argument("self edge at " + e.a);
    if (!pairs.insert(normalized_pair(e.a, e.b)).second)
      throw std::invalid_argument("duplicate edge: " + e.a + "-" + e.b);
    if (!e.contact.point) {
      if (!curve_admissible(component(e.a).label, e.contact.in_a))
        throw std::invalid_argument("curve class " + e.contact.in_a.display() +
                                    " is not admissible on component " + e.a);
      if (!curve_admissible(component(e.b).label, e.contact.in_b))
        throw std::invalid_argument("curve class " + e.contact.in_b.display() +
                                    " is not admissible on component " + e.b);
    }
  }
}

bool FiberConfig::has_component(const std::string& id) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Component& c) { return c.id == id; });
}

const Component& FiberConfig::component(const std::string& id) const {
  for (const Component& c : components_)
    if (c.id == id) return c;
  throw std::invalid_argument("unknown component: " + id);
}

std::vector<const Edge*> FiberConfig::edges_at(const std::string& id) const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges_)
    if (e.a == id || e.b == id) out.push_back(&e);
  return out;
}

void to_json(nlohmann::json& j, const FiberConfig& c) {
  j = nlohmann::json::object();
  nlohmann::json components = nlohmann::json::array();
  for (const Component& comp : c.components()) {
    nlohmann::json item{{"id", comp.id}, {"label", label_to_string(comp.label)}};
    if (comp.label.kind == SurfaceLabel::Kind::Hirzebruch) item["param"] = comp.label.param;
    if (comp.label.kind == SurfaceLabel::Kind::Other) item["name"] = comp.label.name;
    components.push_back(std::move(item));
  }
  j["components"] = std::move(components);
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : c.edges()) {
    nlohmann::json item{{"a", e.a}, {"b", e.b}};
    if (e.contact.point) {
      item["contact"] = "point";
    } else {
      item["contact"] = nlohmann::json{{"curveA", curve_to_string(e.contact.in_a)},
                                       {"curveB", curve_to_string(e.contact.in_b)}};
    }
    edges.push_back(std::move(item));
  }
  j["edges"] = std::move(edges);
  if (!c.annotations().empty()) j["annotations"] = c.annotations();
}

FiberConfig FiberConfig::from_json(const nlohmann::json& j) {
  std::vector<Component> components;
  for (const auto& item : j.at("components"))
    components.push_back({item.at("id").get<std::string>(), label_from_json(item)});
  std::vector<Edge> edges;
  for (const auto& item : j.value("edges", nlohmann::json::array())) {
    Edge e;
    e.a = item.at("a").get<std::string>();
    e.b = item.at("b").get<std::string>();
    const auto& contact = item.at("contact");
    if (contact.is_string() && contact.get<std::string>() == "point") {
      e.contact = Contact::point_contact();
    } else {
      e.contact = Contact::curve_contact(curve_from_string(contact.at("curveA").get<std::string>()),
                                         curve_from_string(contact.at("curveB").get<std::string>()));
    }
    edges.push_back(std::move(e));
  }
  std::map<std::string, std::string> annotations;
  if (j.contains("annotations"))
    annotations = j.at("annotations").get<std::map<std::string, std::string>>();
  return FiberConfig(std::move(components), std::move(edges), std::move(annotations));
}

bool is_isomorphic(const FiberConfig& a, const FiberConfig& b) {
  const auto& ca = a.components();
  const auto& cb = b.components();
  if (ca.size() != cb.size() || a.edges().size() != b.edges().size()) return false;

  std::vector<std::size_t> perm(cb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool labels_match = true;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (!(ca[i].label == cb[perm[i]].label)) {
        labels_match = false;
        break;
      }
    }
    if (!labels_match) continue;

    std::map<std::string, std::string> image;
    for (std::size_t i = 0; i < ca.size(); ++i) image[ca[i].id] = cb[perm[i]].id;

    auto edge_matches = [&]() {
      for (const Edge& e : a.edges()) {
        const std::string ma = image[e.a];
        const std::string mb = image[e.b];
        bool found = false;
        for (const Edge& f : b.edges()) {
          if (f.a == ma && f.b == mb) {
            found = f.contact == e.contact;
          } else if (f.a == mb && f.b == ma) {
            found = f.contact.point == e.contact.point && f.contact.in_a == e.contact.in_b &&
                    f.contact.in_b == e.contact.in_a;
          } else {
            continue;
          }
          break;
        }
        if (!found) return false;
      }
      return true;
    };
    if (edge_matches()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void FlopTransition::set_action(const std::string& x, const std::string& y, FlopAction action) {
  actions[normalized_pair(x, y)] = std::move(action);
}

FiberConfig apply_flop(const FiberConfig& c, const FlopTransition& t) {
  const Component& center = c.component(t.center);
  if (!(center.label == SurfaceLabel::projective_plane()))
    throw std::invalid_argument("flop center must be a projective plane: " + t.center);

  for (const Edge* e : c.edges_at(t.center)) {
    if (!t.actions.contains(normalized_pair(e->a, e->b)))
      throw std::invalid_argument("edge " + e->a + "-" + e->b + " at the center has no action");
  }

  const std::string new_center = t.center + "'";
  std::map<std::string, SurfaceLabel> labels;
  for (const Component& comp : c.components()) labels[comp.id] = comp.label;

  std::vector<Edge> edges;
  for (const Edge& e : c.edges()) {
    const auto it = t.actions.find(normalized_pair(e.a, e.b));
    const FlopAction action = it == t.actions.end() ? FlopAction::unchanged() : it->second;
    Edge out = e;
    switch (action.kind) {
      case FlopAction::Kind::Unchanged:
        break;
      case FlopAction::Kind::Relabel:
        out.contact = action.relabel_to;
        break;
      case FlopAction::Kind::ContractMinusOneCurve: {
        const std::string edge_name = e.a + "-" + e.b;
        if (e.a != t.center && e.b != t.center)
          throw std::invalid_argument("contraction outside the center on edge " + edge_name);
        const bool center_is_a = e.a == t.center;
        const std::string neighbor = center_is_a ? e.b : e.a;
        const CurveClass& in_neighbor = center_is_a ? e.contact.in_b : e.contact.in_a;
        if (e.contact.point || !is_minus_one_curve_on(labels[neighbor], in_neighbor))
          throw std::invalid_argument("edge " + edge_name +
                                      " does not meet the neighbor in a (-1)-curve");
        labels[neighbor] = contracted_label(labels[neighbor], edge_name);
        out.contact = Contact::point_contact();
        break;
      }
    }
    if (out.a == t.center) out.a = new_center;
    if (out.b == t.center) out.b = new_center;
    edges.push_back(std::move(out));
  }

  std::vector<Component> components;
  for (const Component& comp : c.components()) {
    const std::string id = comp.id == t.center ? new_center : comp.id;
    components.push_back({id, labels[comp.id]});
  }
  return FiberConfig(std::move(components), std::move(edges), c.annotations());
}

const std::map<std::string, FiberConfig>& builtin_fixtures() {
  static const std::map<std::string, FiberConfig> fixtures = [] {
    std::map<std::string, FiberConfig> out;

    out.emplace("example-2.7",
                FiberConfig({{"P2", SurfaceLabel::projective_plane()},
                             {"F", SurfaceLabel::hirzebruch(4)}},
                            {{"P2", "F",
                              Contact::curve_contact(CurveClass::conic(),
                                                     CurveClass::negative_section())}},
                            {{"curve_C_self_intersection_in_S", "-2"}}));

    out.emplace("sec5-local-before",
                FiberConfig({{"P_D", SurfaceLabel::projective_plane()},
                             {"Q", SurfaceLabel::hirzebruch(1)}},
                            {{"P_D", "Q",
                              Contact::curve_contact(CurveClass::line(),
                                                     CurveClass::negative_section())}}));

    out.emplace("sec5-local-after",
                FiberConfig({{"P_D", SurfaceLabel::projective_plane()},
                             {"Q", SurfaceLabel::projective_plane()}},
                            {{"P_D", "Q", Contact::point_contact()}}));

    out.emplace("sec5-full",
                FiberConfig({{"Q", SurfaceLabel::point_blowup_of_quadric()},
                             {"P_C", SurfaceLabel::projective_plane()},
                             {"P_D", SurfaceLabel::projective_plane()},
                             {"E_C", SurfaceLabel::hirzebruch(4)},
                             {"E_D", SurfaceLabel::hirzebruch(4)}},
                            {{"P_C", "Q",
                              Contact::curve_contact(CurveClass::line(),
                                                     CurveClass::minus_one_curve())},
                             {"P_D", "Q",
                              Contact::curve_contact(CurveClass::line(),
                                                     CurveClass::minus_one_curve())}},
                            {{"l_C.l_D", "0"}, {"l_C.e", "1"}, {"l_D.e", "1"}}));

    return out;
  }();
  return fixtures;
}

}  // namespace orbitres
