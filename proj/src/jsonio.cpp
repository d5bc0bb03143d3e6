#include "foldlab/jsonio.hpp"

namespace foldlab {

Json to_json(const Facemapping& fm) {
  Json cells = Json::array();
  for (int y = 0; y < fm.height(); ++y)
    for (int x = 0; x < fm.width(); ++x)
      if (fm.has({x, y})) {
        Placement p = fm.at({x, y});
        cells.push_back({{"x", x},
                         {"y", y},
                         {"face", face_of(p)},
                         {"corners", {p.bl(), p.br(), p.tr(), p.tl()}}});
      }
  return Json{{"width", fm.width()}, {"height", fm.height()}, {"cells", std::move(cells)}};
}

Facemapping facemapping_from_json(const Json& j) {
  Facemapping fm(j.at("width").get<int>(), j.at("height").get<int>());
  for (const auto& cell : j.at("cells")) {
    const auto& c = cell.at("corners");
    Placement p{{c.at(0).get<CubeVertex>(), c.at(1).get<CubeVertex>(), c.at(2).get<CubeVertex>(),
                 c.at(3).get<CubeVertex>()}};
    if (!is_valid_placement(p)) throw std::invalid_argument("facemapping_from_json: bad corners");
    fm.set({cell.at("x").get<int>(), cell.at("y").get<int>()}, p);
  }
  return fm;
}

Json to_json(const Polyomino& p) {
  Json holes = Json::array();
  for (const auto& h : p.holes()) {
    Json hj;
    switch (h.kind) {
      case HoleKind::UnitSquare: hj = {{"kind", "square"}, {"x", h.x}, {"y", h.y}}; break;
      case HoleKind::Slit2:
      case HoleKind::Slit1:
        hj = {{"kind", h.kind == HoleKind::Slit2 ? "slit2" : "slit1"},
              {"axis", h.axis == Axis::Vertical ? "v" : "h"},
              {"x", h.x},
              {"y", h.y}};
        break;
      case HoleKind::LShape:
        hj = {{"kind", "L"}, {"x", h.x}, {"y", h.y}, {"rot", 90 * int(h.rot)},
              {"flip", h.flipped}};
        break;
      case HoleKind::UShape:
        hj = {{"kind", "U"}, {"x", h.x}, {"y", h.y}, {"rot", 90 * int(h.rot)}};
        break;
    }
    holes.push_back(std::move(hj));
  }
  Json removed = Json::array(), cuts = Json::array();
  for (const auto& c : p.removed_cells()) removed.push_back({{"x", c.x}, {"y", c.y}});
  for (const auto& s : p.cuts())
    cuts.push_back(
        {{"axis", s.axis == Axis::Vertical ? "v" : "h"}, {"x", s.x}, {"y", s.y}});
  return Json{{"width", p.width()},
              {"height", p.height()},
              {"holes", std::move(holes)},
              {"removed", std::move(removed)},
              {"cuts", std::move(cuts)}};
}

Json to_json(const SearchStats& s) {
  return Json{{"nodes", s.nodes},
              {"conflicts", s.conflicts},
              {"emitted", s.emitted},
              {"node_limit_hit", s.node_limit_hit},
              {"seconds", s.seconds}};
}

Json to_json(const Verdict& v) {
  Json j{{"status", to_string(v.status)}, {"reason", v.reason}, {"provenance", v.provenance}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.witness_layers) {
    Json layers = Json::array();
    for (const auto& [c, l] : *v.witness_layers)
      layers.push_back({{"x", c.x}, {"y", c.y}, {"layer", l}});
    j["witness_layers"] = std::move(layers);
  }
  return j;
}

Json to_json(const CooperationReport& r) {
  auto entry = [](const CooperationEntry& e) {
    return Json{{"holes", e.holes}, {"value", to_string(e.value)}, {"provenance", e.provenance}};
  };
  Json coop = Json::array(), minimal = Json::array();
  for (const auto& e : r.cooperating_sets) coop.push_back(entry(e));
  for (const auto& e : r.minimal_sets) minimal.push_back(entry(e));
  return Json{{"cooperating_sets", std::move(coop)},
              {"minimal_sets", std::move(minimal)},
              {"any_unknown", r.any_unknown}};
}

Json to_json(const FixtureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"figure_id", r.figure_id}, {"all_pass", r.all_pass}, {"checks", std::move(checks)}};
}

}  // namespace foldlab
