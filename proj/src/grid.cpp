#include "foldlab/grid.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

namespace foldlab {

std::ostream& operator<<(std::ostream& os, const CellCoord& c) {
  return os << '(' << c.x << ',' << c.y << ')';
}

std::ostream& operator<<(std::ostream& os, const CutSegment& s) {
  return os << (s.axis == Axis::Vertical ? 'V' : 'H') << '(' << s.x << ',' << s.y << ')';
}

SyntaxError::SyntaxError(int line_, std::string token_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_ +
                         (token_.empty() ? "" : " near '" + token_ + "'")),
      line(line_),
      token(std::move(token_)) {}

namespace {

enum class Compass { E, N, W, S };

Compass rotate_ccw(Compass c, int times) {
  return Compass((int(c) + times) % 4);
}

Compass mirror_x(Compass c) {
  switch (c) {
    case Compass::E: return Compass::W;
    case Compass::W: return Compass::E;
    default: return c;
  }
}

// The unit cut leaving vertex (x,y) in the given compass direction.
CutSegment arm_cut(int x, int y, Compass c) {
  switch (c) {
    case Compass::E: return {Axis::Horizontal, x, y};
    case Compass::N: return {Axis::Vertical, x, y};
    case Compass::W: return {Axis::Horizontal, x - 1, y};
    case Compass::S: return {Axis::Vertical, x, y - 1};
  }
  throw std::logic_error("bad Compass");
}

// Edges of cell (x,y): bottom, top, left, right.
CutSegment cell_edge_bottom(int x, int y) { return {Axis::Horizontal, x, y}; }
CutSegment cell_edge_top(int x, int y) { return {Axis::Horizontal, x, y + 1}; }
CutSegment cell_edge_left(int x, int y) { return {Axis::Vertical, x, y}; }
CutSegment cell_edge_right(int x, int y) { return {Axis::Vertical, x + 1, y}; }

std::pair<CellCoord, CellCoord> segment_endpoints_as_vertices(const CutSegment& s) {
  if (s.axis == Axis::Vertical) return {{s.x, s.y}, {s.x, s.y + 1}};
  return {{s.x, s.y}, {s.x + 1, s.y}};
}

// Grid vertices on a hole expansion's curve: cut endpoints plus removed-cell corners.
std::set<CellCoord> expansion_vertices(const HoleExpansion& e) {
  std::set<CellCoord> vs;
  for (const auto& c : e.removed) {
    vs.insert({c.x, c.y});
    vs.insert({c.x + 1, c.y});
    vs.insert({c.x, c.y + 1});
    vs.insert({c.x + 1, c.y + 1});
  }
  for (const auto& s : e.cuts) {
    auto [a, b] = segment_endpoints_as_vertices(s);
    vs.insert(a);
    vs.insert(b);
  }
  return vs;
}

int slit_midpoint_doubled(const HoleSpec& h) {
  if (h.kind == HoleKind::Slit2) return 2 * ((h.axis == Axis::Vertical ? h.y : h.x) + 1);
  return 2 * (h.axis == Axis::Vertical ? h.y : h.x) + 1;  // Slit1
}

}  // namespace

HoleExpansion expand_hole(const HoleSpec& h) {
  HoleExpansion e;
  switch (h.kind) {
    case HoleKind::UnitSquare:
      e.removed.push_back({h.x, h.y});
      break;
    case HoleKind::Slit2:
      if (h.axis == Axis::Vertical) {
        e.cuts.push_back({Axis::Vertical, h.x, h.y});
        e.cuts.push_back({Axis::Vertical, h.x, h.y + 1});
      } else {
        e.cuts.push_back({Axis::Horizontal, h.x, h.y});
        e.cuts.push_back({Axis::Horizontal, h.x + 1, h.y});
      }
      break;
    case HoleKind::Slit1:
      e.cuts.push_back({h.axis, h.x, h.y});
      break;
    case HoleKind::LShape: {
      Compass a = Compass::E, b = Compass::N;
      if (h.flipped) {
        a = mirror_x(a);
        b = mirror_x(b);
      }
      a = rotate_ccw(a, int(h.rot));
      b = rotate_ccw(b, int(h.rot));
      e.cuts.push_back(arm_cut(h.x, h.y, a));
      e.cuts.push_back(arm_cut(h.x, h.y, b));
      break;
    }
    case HoleKind::UShape: {
      // Attachment side at R0 is the top; rotations turn it counterclockwise.
      Compass attached = rotate_ccw(Compass::N, int(h.rot));
      std::array<std::pair<Compass, CutSegment>, 4> edges{{
          {Compass::S, cell_edge_bottom(h.x, h.y)},
          {Compass::N, cell_edge_top(h.x, h.y)},
          {Compass::W, cell_edge_left(h.x, h.y)},
          {Compass::E, cell_edge_right(h.x, h.y)},
      }};
      for (const auto& [side, cut] : edges)
        if (side != attached) e.cuts.push_back(cut);
      break;
    }
  }
  std::sort(e.cuts.begin(), e.cuts.end());
  return e;
}

int slit_crease(const HoleSpec& h) {
  if (h.kind != HoleKind::Slit2 && h.kind != HoleKind::Slit1)
    throw std::invalid_argument("slit_crease: not a slit");
  return h.axis == Axis::Vertical ? h.x : h.y;
}

int slit_midpoint(const HoleSpec& h) {
  if (h.kind != HoleKind::Slit2) throw std::invalid_argument("slit_midpoint: not a 2-slit");
  return (h.axis == Axis::Vertical ? h.y : h.x) + 1;
}

SeparationParity separation_parity(const HoleSpec& a, const HoleSpec& b) {
  auto is_slit = [](const HoleSpec& h) {
    return h.kind == HoleKind::Slit2 || h.kind == HoleKind::Slit1;
  };
  if (!is_slit(a) || !is_slit(b) || a.axis != b.axis) return SeparationParity::Incomparable;
  int d = slit_midpoint_doubled(a) - slit_midpoint_doubled(b);
  if (d % 2 != 0) return SeparationParity::Incomparable;  // 1-slit vs 2-slit midpoints
  return ((d / 2) % 2 == 0) ? SeparationParity::Even : SeparationParity::Odd;
}

bool Polyomino::edge_attached(const GridSegment& e) const {
  auto [a, b] = edge_cells(e);
  return cell_present(a) && cell_present(b) && !is_cut(e);
}

std::pair<CellCoord, CellCoord> Polyomino::edge_cells(const GridSegment& e) const {
  if (e.axis == Axis::Vertical) return {{e.x - 1, e.y}, {e.x, e.y}};
  return {{e.x, e.y - 1}, {e.x, e.y}};
}

std::vector<CellCoord> Polyomino::cells() const {
  std::vector<CellCoord> out;
  for (int x = 0; x < width_; ++x)
    for (int y = 0; y < height_; ++y)
      if (cell_present({x, y})) out.push_back({x, y});
  return out;
}

std::vector<GridSegment> Polyomino::attached_edges() const {
  std::vector<GridSegment> out;
  for (int x = 1; x < width_; ++x)
    for (int y = 0; y < height_; ++y) {
      GridSegment e{Axis::Vertical, x, y};
      if (edge_attached(e)) out.push_back(e);
    }
  for (int y = 1; y < height_; ++y)
    for (int x = 0; x < width_; ++x) {
      GridSegment e{Axis::Horizontal, x, y};
      if (edge_attached(e)) out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  return out;
}

int Polyomino::cell_count() const { return width_ * height_ - int(removed_.size()); }

bool operator==(const Polyomino& a, const Polyomino& b) {
  return a.width_ == b.width_ && a.height_ == b.height_ && a.removed_ == b.removed_ &&
         a.cuts_ == b.cuts_;
}

void Polyomino::validate() const {
  if (width_ < 1 || height_ < 1) throw BuildError("polyomino dimensions must be positive");
  for (const auto& c : removed_) {
    if (c.x < 1 || c.x > width_ - 2 || c.y < 1 || c.y > height_ - 2)
      throw BoundaryError("removed cell touches the outer boundary");
    for (CellCoord n : {CellCoord{c.x - 1, c.y}, CellCoord{c.x + 1, c.y}, CellCoord{c.x, c.y - 1},
                        CellCoord{c.x, c.y + 1}})
      if (!cell_present(n)) throw OverlapError("removed cell with a missing neighbor");
  }
  for (const auto& s : cuts_) {
    bool ok;
    if (s.axis == Axis::Vertical)
      ok = s.x >= 1 && s.x <= width_ - 1 && s.y >= 1 && s.y + 1 <= height_ - 1;
    else
      ok = s.y >= 1 && s.y <= height_ - 1 && s.x >= 1 && s.x + 1 <= width_ - 1;
    if (!ok) throw BoundaryError("cut segment touches the outer boundary");
  }
  // Connectivity of the attachment graph.
  auto cs = cells();
  if (cs.empty()) throw BuildError("no cells");
  std::set<CellCoord> seen;
  std::queue<CellCoord> q;
  q.push(cs.front());
  seen.insert(cs.front());
  while (!q.empty()) {
    CellCoord c = q.front();
    q.pop();
    auto try_edge = [&](GridSegment e, CellCoord n) {
      if (edge_attached(e) && !seen.count(n)) {
        seen.insert(n);
        q.push(n);
      }
    };
    try_edge(cell_edge_left(c.x, c.y), {c.x - 1, c.y});
    try_edge(cell_edge_right(c.x, c.y), {c.x + 1, c.y});
    try_edge(cell_edge_bottom(c.x, c.y), {c.x, c.y - 1});
    try_edge(cell_edge_top(c.x, c.y), {c.x, c.y + 1});
  }
  if (seen.size() != cs.size()) throw DisconnectedError("attachment graph is disconnected");
}

Polyomino Polyomino::build(int width, int height, std::vector<HoleSpec> holes) {
  Polyomino p;
  p.width_ = width;
  p.height_ = height;
  std::set<CellCoord> curve_vertices;
  for (const auto& h : holes) {
    HoleExpansion e = expand_hole(h);
    for (const auto& c : e.removed)
      if (!p.removed_.insert(c).second) throw OverlapError("two holes share a removed cell");
    for (const auto& s : e.cuts)
      if (!p.cuts_.insert(s).second) throw OverlapError("two holes share a cut segment");
    // Hole boundary curves must be disjoint, so no shared grid vertices either.
    for (const auto& v : expansion_vertices(e))
      if (!curve_vertices.insert(v).second)
        throw OverlapError("two hole curves touch at a grid vertex");
  }
  for (const auto& s : p.cuts_) {
    auto [a, b] = p.edge_cells(s);
    if (!p.cell_present(a) || !p.cell_present(b))
      throw OverlapError("cut segment borders a removed cell");
  }
  p.holes_ = std::move(holes);
  p.validate();
  return p;
}

Polyomino Polyomino::from_raw(int width, int height, std::vector<CellCoord> removed,
                              std::vector<CutSegment> cuts) {
  Polyomino p;
  p.width_ = width;
  p.height_ = height;
  p.removed_.insert(removed.begin(), removed.end());
  p.cuts_.insert(cuts.begin(), cuts.end());
  p.validate();
  return p;
}

Polyomino fill_holes(const Polyomino& p, const std::set<int>& keep) {
  for (int i : keep)
    if (i < 0 || i >= int(p.holes().size()))
      throw std::out_of_range("fill_holes: hole index out of range");
  if (p.is_raw()) throw BuildError("fill_holes: raw polyomino has no hole list");
  std::vector<HoleSpec> kept;
  for (int i = 0; i < int(p.holes().size()); ++i)
    if (keep.count(i)) kept.push_back(p.holes()[i]);
  return Polyomino::build(p.width(), p.height(), std::move(kept));
}

namespace {

// Shifts hole/raw structure down by `delta` along the axis for entries at or
// beyond `from`, for band/crop rebuilding.
HoleSpec shift_hole(HoleSpec h, BandAxis axis, int from, int delta) {
  int& coord = (axis == BandAxis::Rows) ? h.y : h.x;
  if (coord >= from) coord -= delta;
  return h;
}

Polyomino rebuild_shifted(const Polyomino& p, BandAxis axis, int from, int delta, int new_w,
                          int new_h) {
  if (!p.is_raw()) {
    std::vector<HoleSpec> hs;
    hs.reserve(p.holes().size());
    for (const auto& h : p.holes()) hs.push_back(shift_hole(h, axis, from, delta));
    return Polyomino::build(new_w, new_h, std::move(hs));
  }
  std::vector<CellCoord> removed;
  std::vector<CutSegment> cuts;
  for (auto c : p.removed_cells()) {
    int& coord = (axis == BandAxis::Rows) ? c.y : c.x;
    if (coord >= from) coord -= delta;
    removed.push_back(c);
  }
  for (auto s : p.cuts()) {
    int& coord = (axis == BandAxis::Rows) ? s.y : s.x;
    if (coord >= from) coord -= delta;
    cuts.push_back(s);
  }
  return Polyomino::from_raw(new_w, new_h, std::move(removed), std::move(cuts));
}

bool band_structure_clear(const Polyomino& p, BandAxis axis, int index) {
  // No removed cell or along-axis cut in the two lines, no crossing cut on the
  // band's three bounding creases.
  auto line_of_cell = [&](const CellCoord& c) { return axis == BandAxis::Rows ? c.y : c.x; };
  for (const auto& c : p.removed_cells()) {
    int l = line_of_cell(c);
    if (l == index || l == index + 1) return false;
  }
  for (const auto& s : p.cuts()) {
    bool along = (axis == BandAxis::Rows) == (s.axis == Axis::Vertical);
    int coord = (axis == BandAxis::Rows) ? s.y : s.x;
    if (along) {
      if (coord == index || coord == index + 1) return false;
    } else {
      if (coord >= index && coord <= index + 2) return false;
    }
  }
  return true;
}

}  // namespace

bool band_is_plain(const Polyomino& p, BandAxis axis, int index) {
  int extent = (axis == BandAxis::Rows) ? p.height() : p.width();
  if (index < 0 || index + 1 >= extent || extent - 2 < 1) return false;
  if (!band_structure_clear(p, axis, index)) return false;
  try {
    contract_plain_band(p, axis, index);
    return true;
  } catch (const BuildError&) {
    return false;
  }
}

Polyomino contract_plain_band(const Polyomino& p, BandAxis axis, int index) {
  int extent = (axis == BandAxis::Rows) ? p.height() : p.width();
  if (index < 0 || index + 1 >= extent)
    throw NotPlainError("band index out of range");
  if (!band_structure_clear(p, axis, index))
    throw NotPlainError("band intersects a hole");
  int new_w = p.width() - (axis == BandAxis::Columns ? 2 : 0);
  int new_h = p.height() - (axis == BandAxis::Rows ? 2 : 0);
  try {
    return rebuild_shifted(p, axis, index, 2, new_w, new_h);
  } catch (const BuildError& e) {
    throw NotPlainError(std::string("contraction leaves an invalid polyomino: ") + e.what());
  }
}

bool boundary_line_croppable(const Polyomino& p, BandAxis axis, bool high_side) {
  try {
    crop_boundary_line(p, axis, high_side);
    return true;
  } catch (const BuildError&) {
    return false;
  }
}

Polyomino crop_boundary_line(const Polyomino& p, BandAxis axis, bool high_side) {
  int extent = (axis == BandAxis::Rows) ? p.height() : p.width();
  if (extent < 2) throw NotPlainError("nothing left to crop");
  int new_w = p.width() - (axis == BandAxis::Columns ? 1 : 0);
  int new_h = p.height() - (axis == BandAxis::Rows ? 1 : 0);
  try {
    return rebuild_shifted(p, axis, 0, high_side ? 0 : 1, new_w, new_h);
  } catch (const BuildError& e) {
    throw NotPlainError(std::string("crop leaves an invalid polyomino: ") + e.what());
  }
}

namespace {

const std::map<std::string, Rotation>& rotation_names() {
  static const std::map<std::string, Rotation> m{
      {"r0", Rotation::R0}, {"r90", Rotation::R90}, {"r180", Rotation::R180},
      {"r270", Rotation::R270}};
  return m;
}

}  // namespace

Polyomino parse_polyomino(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_poly = false;
  int w = 0, h = 0;
  std::vector<HoleSpec> holes;
  std::vector<CellCoord> raw_removed;
  std::vector<CutSegment> raw_cuts;

  auto parse_axis = [&](const std::string& tok) {
    if (tok == "v") return Axis::Vertical;
    if (tok == "h") return Axis::Horizontal;
    throw SyntaxError(lineno, tok, "expected axis 'v' or 'h'");
  };
  auto parse_int = [&](const std::string& tok) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (...) {
      throw SyntaxError(lineno, tok, "expected an integer");
    }
    if (pos != tok.size()) throw SyntaxError(lineno, tok, "expected an integer");
    return v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(ls),
                                 std::istream_iterator<std::string>()};
    if (tok.empty()) continue;
    if (tok[0] == "poly") {
      if (have_poly) throw SyntaxError(lineno, tok[0], "duplicate poly line");
      if (tok.size() != 3) throw SyntaxError(lineno, line, "expected: poly <width> <height>");
      w = parse_int(tok[1]);
      h = parse_int(tok[2]);
      have_poly = true;
      continue;
    }
    if (!have_poly) throw SyntaxError(lineno, tok[0], "poly line must come first");
    if (tok[0] == "hole") {
      if (tok.size() < 2) throw SyntaxError(lineno, line, "hole kind missing");
      HoleSpec hs;
      const std::string& kind = tok[1];
      if (kind == "square") {
        if (tok.size() != 4) throw SyntaxError(lineno, line, "expected: hole square <x> <y>");
        hs = {HoleKind::UnitSquare, parse_int(tok[2]), parse_int(tok[3])};
      } else if (kind == "slit2" || kind == "slit1") {
        if (tok.size() != 5)
          throw SyntaxError(lineno, line, "expected: hole " + kind + " <v|h> <x> <y>");
        hs.kind = kind == "slit2" ? HoleKind::Slit2 : HoleKind::Slit1;
        hs.axis = parse_axis(tok[2]);
        hs.x = parse_int(tok[3]);
        hs.y = parse_int(tok[4]);
      } else if (kind == "L" || kind == "U") {
        if (tok.size() < 5) throw SyntaxError(lineno, line, "expected: hole " + kind +
                                                                " <x> <y> <r0|r90|r180|r270>");
        hs.kind = kind == "L" ? HoleKind::LShape : HoleKind::UShape;
        hs.x = parse_int(tok[2]);
        hs.y = parse_int(tok[3]);
        auto it = rotation_names().find(tok[4]);
        if (it == rotation_names().end())
          throw SyntaxError(lineno, tok[4], "expected rotation r0|r90|r180|r270");
        hs.rot = it->second;
        if (tok.size() == 6 && kind == "L" && tok[5] == "flip")
          hs.flipped = true;
        else if (tok.size() != 5)
          throw SyntaxError(lineno, tok.back(), "unexpected trailing token");
      } else {
        throw SyntaxError(lineno, kind, "unknown hole kind");
      }
      holes.push_back(hs);
      continue;
    }
    if (tok[0] == "cut") {
      if (tok.size() != 4) throw SyntaxError(lineno, line, "expected: cut <v|h> <x> <y>");
      raw_cuts.push_back({parse_axis(tok[1]), parse_int(tok[2]), parse_int(tok[3])});
      continue;
    }
    if (tok[0] == "remove") {
      if (tok.size() != 3) throw SyntaxError(lineno, line, "expected: remove <x> <y>");
      raw_removed.push_back({parse_int(tok[1]), parse_int(tok[2])});
      continue;
    }
    throw SyntaxError(lineno, tok[0], "unknown directive");
  }
  if (!have_poly) throw SyntaxError(lineno, "", "missing poly line");
  if (!holes.empty() && (!raw_cuts.empty() || !raw_removed.empty()))
    throw SyntaxError(lineno, "", "cannot mix hole lines with raw cut/remove lines");
  if (!holes.empty()) return Polyomino::build(w, h, std::move(holes));
  return Polyomino::from_raw(w, h, std::move(raw_removed), std::move(raw_cuts));
}

std::string serialize(const Polyomino& p) {
  std::ostringstream out;
  out << "poly " << p.width() << ' ' << p.height() << '\n';
  if (!p.holes().empty()) {
    for (const auto& h : p.holes()) {
      switch (h.kind) {
        case HoleKind::UnitSquare:
          out << "hole square " << h.x << ' ' << h.y << '\n';
          break;
        case HoleKind::Slit2:
        case HoleKind::Slit1:
          out << "hole " << (h.kind == HoleKind::Slit2 ? "slit2" : "slit1") << ' '
              << (h.axis == Axis::Vertical ? 'v' : 'h') << ' ' << h.x << ' ' << h.y << '\n';
          break;
        case HoleKind::LShape:
          out << "hole L " << h.x << ' ' << h.y << " r" << 90 * int(h.rot)
              << (h.flipped ? " flip" : "") << '\n';
          break;
        case HoleKind::UShape:
          out << "hole U " << h.x << ' ' << h.y << " r" << 90 * int(h.rot) << '\n';
          break;
      }
    }
  } else {
    for (const auto& c : p.removed_cells()) out << "remove " << c.x << ' ' << c.y << '\n';
    for (const auto& s : p.cuts())
      out << "cut " << (s.axis == Axis::Vertical ? 'v' : 'h') << ' ' << s.x << ' ' << s.y
          << '\n';
  }
  return out.str();
}

std::optional<std::vector<HoleSpec>> recognize_simple_holes(const Polyomino& p) {
  if (!p.holes().empty()) return p.holes();
  if (p.removed_cells().empty() && p.cuts().empty()) return std::vector<HoleSpec>{};

  // Group cuts and removed cells into hole curves via shared grid vertices.
  struct Item {
    std::optional<CellCoord> removed;
    std::optional<CutSegment> cut;
  };
  std::vector<Item> items;
  for (const auto& c : p.removed_cells()) items.push_back({c, std::nullopt});
  for (const auto& s : p.cuts()) items.push_back({std::nullopt, s});

  std::map<CellCoord, std::vector<int>> by_vertex;
  for (int i = 0; i < int(items.size()); ++i) {
    HoleExpansion e;
    if (items[size_t(i)].removed) e.removed.push_back(*items[size_t(i)].removed);
    if (items[size_t(i)].cut) e.cuts.push_back(*items[size_t(i)].cut);
    for (const auto& v : expansion_vertices(e)) by_vertex[v].push_back(i);
  }
  std::vector<int> parent(items.size());
  for (int i = 0; i < int(parent.size()); ++i) parent[size_t(i)] = i;
  auto find = [&](int a) {
    while (parent[size_t(a)] != a) a = parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
    return a;
  };
  for (const auto& [v, ids] : by_vertex)
    for (size_t k = 1; k < ids.size(); ++k) parent[size_t(find(ids[k]))] = find(ids[0]);

  std::map<int, HoleExpansion> groups;
  for (int i = 0; i < int(items.size()); ++i) {
    auto& g = groups[find(i)];
    if (items[size_t(i)].removed) g.removed.push_back(*items[size_t(i)].removed);
    if (items[size_t(i)].cut) g.cuts.push_back(*items[size_t(i)].cut);
  }

  std::vector<HoleSpec> out;
  for (auto& [root, g] : groups) {
    std::sort(g.cuts.begin(), g.cuts.end());
    std::optional<HoleSpec> match;
    if (g.removed.size() == 1 && g.cuts.empty()) {
      match = HoleSpec{HoleKind::UnitSquare, g.removed[0].x, g.removed[0].y};
    } else if (g.removed.empty() && g.cuts.size() == 1) {
      match = HoleSpec{HoleKind::Slit1, g.cuts[0].x, g.cuts[0].y, Rotation::R0, false,
                       g.cuts[0].axis};
    } else if (g.removed.empty() && (g.cuts.size() == 2 || g.cuts.size() == 3)) {
      // Try every simple-hole spec anchored near the group.
      for (HoleKind kind : {HoleKind::Slit2, HoleKind::LShape, HoleKind::UShape}) {
        for (int dx = -1; dx <= 1 && !match; ++dx)
          for (int dy = -1; dy <= 1 && !match; ++dy)
            for (int rot = 0; rot < 4 && !match; ++rot)
              for (int ax = 0; ax < 2 && !match; ++ax) {
                HoleSpec cand{kind, g.cuts[0].x + dx, g.cuts[0].y + dy, Rotation(rot), false,
                              Axis(ax)};
                auto e = expand_hole(cand);
                if (e.cuts == g.cuts && e.removed.empty()) match = cand;
              }
        if (match) break;
      }
    }
    if (!match) return std::nullopt;
    out.push_back(*match);
  }
  std::sort(out.begin(), out.end(), [](const HoleSpec& a, const HoleSpec& b) {
    return std::tie(a.x, a.y, a.kind, a.axis, a.rot) < std::tie(b.x, b.y, b.kind, b.axis, b.rot);
  });
  return out;
}

}  // namespace foldlab
