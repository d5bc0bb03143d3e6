#include "foldlab/constructions.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <sstream>

#include "fixture_data.hpp"

namespace foldlab {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Reads a grid block (top row first) into a per-cell map.
std::map<CellCoord, int> parse_grid_block(const std::vector<std::string>& lines, size_t start,
                                          int w, int h) {
  std::map<CellCoord, int> out;
  for (int row = 0; row < h; ++row) {
    if (start + size_t(row) >= lines.size())
      throw SyntaxError(int(start + size_t(row)) + 1, "", "grid block truncated");
    std::istringstream ls(lines[start + size_t(row)]);
    int y = h - 1 - row;
    for (int x = 0; x < w; ++x) {
      std::string tok;
      if (!(ls >> tok)) throw SyntaxError(int(start + size_t(row)) + 1, "", "short grid row");
      if (tok == ".") continue;
      out[{x, y}] = std::stoi(tok);
    }
  }
  return out;
}

}  // namespace

Fixture parse_fixture(std::string_view text, std::string figure_id, int declared_coverage) {
  auto lines = split_lines(text);
  size_t faces_at = lines.size(), layers_at = lines.size();
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i] == "faces:") faces_at = i;
    if (lines[i] == "layers:") layers_at = i;
  }
  std::string poly_text;
  for (size_t i = 0; i < std::min(faces_at, layers_at); ++i) poly_text += lines[i] + "\n";

  Fixture f;
  f.figure_id = std::move(figure_id);
  f.polyomino = parse_polyomino(poly_text);
  f.declared_coverage = declared_coverage;
  int w = f.polyomino.width(), h = f.polyomino.height();
  if (faces_at < lines.size()) f.face_labels = parse_grid_block(lines, faces_at + 1, w, h);
  if (layers_at < lines.size()) {
    LayerMapping lm = parse_grid_block(lines, layers_at + 1, w, h);
    // Figure layer digits are 0-based; normalize to 1-based.
    int mn = INT_MAX;
    for (const auto& [c, v] : lm) mn = std::min(mn, v);
    if (mn == 0)
      for (auto& [c, v] : lm) ++v;
    f.layer_labels = std::move(lm);
  }
  return f;
}

std::string serialize_fixture(const Fixture& f) {
  std::ostringstream out;
  out << serialize(f.polyomino);
  int w = f.polyomino.width(), h = f.polyomino.height();
  auto block = [&](const std::map<CellCoord, int>& m, int delta) {
    for (int y = h - 1; y >= 0; --y) {
      for (int x = 0; x < w; ++x) {
        if (x) out << ' ';
        auto it = m.find({x, y});
        if (it == m.end())
          out << '.';
        else
          out << it->second + delta;
      }
      out << '\n';
    }
  };
  if (!f.face_labels.empty()) {
    out << "faces:\n";
    block(f.face_labels, 0);
  }
  if (f.layer_labels) {
    out << "layers:\n";
    block(*f.layer_labels, -1);  // back to the printed 0-based digits
  }
  return out.str();
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    int n = 0;
    const detail::RawFixture* raw = detail::raw_fixtures(&n);
    for (int i = 0; i < n; ++i)
      v.push_back(parse_fixture(raw[i].text, raw[i].id, raw[i].coverage));
    return v;
  }();
  return all;
}

const Fixture* find_fixture(std::string_view figure_id) {
  for (const auto& f : fixtures())
    if (f.figure_id == figure_id) return &f;
  return nullptr;
}

const Facemapping& fixture_facemapping(const Fixture& f) {
  static std::map<const Fixture*, Facemapping> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&f);
  if (it != cache.end()) return it->second;
  if (f.face_labels.empty())
    throw std::invalid_argument("fixture_facemapping: fixture has no face labels");
  auto fm = infer_orientations(f.polyomino, f.face_labels);
  if (!fm)
    throw std::runtime_error("fixture_facemapping: orientation inference failed for " +
                             f.figure_id);
  return cache.emplace(&f, std::move(*fm)).first->second;
}

FixtureReport verify_fixture(const Fixture& f) {
  FixtureReport report;
  report.figure_id = f.figure_id;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  if (f.face_labels.empty()) {
    // No folding printed: the fixture documents a negative example.
    Verdict v = exists_onto_facemapping(f.polyomino);
    add("no-onto-facemapping", v.status == VerdictStatus::UnfoldableCertified,
        std::string(to_string(v.status)));
    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const FixtureCheck& c) { return c.pass; });
    return report;
  }

  std::optional<Facemapping> fm = infer_orientations(f.polyomino, f.face_labels);
  add("orientation-inference", fm.has_value());
  if (fm) {
    add("consistency", is_consistent(f.polyomino, *fm));
    int cov = int(covered_faces(*fm).size());
    add("coverage", cov == f.declared_coverage,
        "covers " + std::to_string(cov) + " faces, declared " +
            std::to_string(f.declared_coverage));
    if (f.layer_labels) add("layer-bijectivity", check_layers(f.polyomino, *fm, *f.layer_labels));
    for (int i = 0; i < int(f.polyomino.holes().size()); ++i) {
      HoleFoldClass c = hole_fold_class(f.polyomino, *fm, i);
      add("hole-" + std::to_string(i) + "-class", true, to_string(c));
    }
  }
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const FixtureCheck& c) { return c.pass; });
  return report;
}

Polyomino generate_staircase(int k) {
  if (k < 1) throw std::invalid_argument("generate_staircase: k must be >= 1");
  int w = 4 * k + 2;
  std::vector<HoleSpec> holes;
  holes.push_back({HoleKind::UnitSquare, 1, 2});
  holes.push_back({HoleKind::UnitSquare, w - 2, 2});
  for (int i = 0; i <= 2 * k - 2; ++i)
    holes.push_back({HoleKind::Slit2, 2 + 2 * i, (i % 2 == 0) ? 1 : 2, Rotation::R0, false,
                     Axis::Horizontal});
  return Polyomino::build(w, 4, std::move(holes));
}

FaceLabelMap staircase_witness(int k) {
  if (k < 1) throw std::invalid_argument("staircase_witness: k must be >= 1");
  const Fixture* fig9 = find_fixture("fig9");
  if (!fig9) throw std::logic_error("fig9 fixture missing");
  int w = 4 * k + 2;
  FaceLabelMap out;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < w; ++x) {
      int src_x = x < 2 ? x : (x >= w - 2 ? 8 + (x - (w - 2)) : 2 + (x - 2) % 4);
      auto it = fig9->face_labels.find({src_x, y});
      if ((x == 1 && y == 2) || (x == w - 2 && y == 2)) continue;  // square holes
      if (it == fig9->face_labels.end()) throw std::logic_error("staircase_witness: gap");
      out[{x, y}] = it->second;
    }
  return out;
}

}  // namespace foldlab
