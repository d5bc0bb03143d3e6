#include "foldlab/engine.hpp"

#include <algorithm>
#include <climits>
#include <atomic>
#include <cassert>
#include <chrono>
#include <future>
#include <queue>

namespace foldlab {

Facemapping::Facemapping(int width, int height)
    : width_(width), height_(height), idx_(size_t(width * height), -1) {}

bool Facemapping::has(CellCoord c) const { return index_at(c) >= 0; }

int Facemapping::index_at(CellCoord c) const {
  if (c.x < 0 || c.x >= width_ || c.y < 0 || c.y >= height_) return -1;
  return idx_[size_t(c.y * width_ + c.x)];
}

Placement Facemapping::at(CellCoord c) const {
  int i = index_at(c);
  if (i < 0) throw std::out_of_range("Facemapping::at: no placement for cell");
  return placement_from_index(i);
}

void Facemapping::set(CellCoord c, const Placement& p) { set_index(c, placement_index(p)); }

void Facemapping::set_index(CellCoord c, int placement_idx) {
  idx_.at(size_t(c.y * width_ + c.x)) = std::int8_t(placement_idx);
}

void Facemapping::unset(CellCoord c) { idx_.at(size_t(c.y * width_ + c.x)) = -1; }

const char* to_string(HoleFoldClass c) {
  switch (c) {
    case HoleFoldClass::Trivial: return "trivial";
    case HoleFoldClass::SlitFlap: return "slit-flap";
    case HoleFoldClass::SlitRing: return "slit-ring";
    case HoleFoldClass::SquareNontrivial: return "square-nontrivial";
    case HoleFoldClass::LNontrivial: return "L-nontrivial";
    case HoleFoldClass::UAsUnitSquare: return "U-as-unit-square";
    case HoleFoldClass::UTFolded: return "U-T-folded";
  }
  return "?";
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::UnfoldableCertified: return "unfoldable-certified";
    case VerdictStatus::FoldableCertified: return "foldable-certified";
    case VerdictStatus::FacemappingExists: return "facemapping-exists";
    case VerdictStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// The direction from edge_cells(e).first to .second.
Dir edge_dir(const GridSegment& e) {
  return e.axis == Axis::Vertical ? Dir::Right : Dir::Up;
}

}  // namespace

bool is_consistent(const Polyomino& p, const Facemapping& fm) {
  for (const auto& c : p.cells())
    if (!fm.has(c)) return false;
  for (const auto& e : p.attached_edges()) {
    auto [a, b] = p.edge_cells(e);
    int pa = fm.index_at(a), pb = fm.index_at(b);
    Dir d = edge_dir(e);
    if (pb != roll_index(pa, d) && pb != flip_index(pa, d)) return false;
  }
  return true;
}

FoldAngle implied_angle(const Polyomino& p, const Facemapping& fm, const GridSegment& edge) {
  if (!p.edge_attached(edge)) throw InconsistentEdge("edge is not attached");
  auto [a, b] = p.edge_cells(edge);
  int pa = fm.index_at(a), pb = fm.index_at(b);
  if (pa < 0 || pb < 0) throw InconsistentEdge("facemapping does not place both cells");
  Dir d = edge_dir(edge);
  if (pb == flip_index(pa, d)) return FoldAngle::Fold180;
  if (pb == roll_index(pa, d)) return FoldAngle::Fold90;
  throw InconsistentEdge("placements do not satisfy the roll-or-flip relation");
}

std::set<FaceLabel> covered_faces(const Facemapping& fm) {
  std::set<FaceLabel> out;
  for (int y = 0; y < fm.height(); ++y)
    for (int x = 0; x < fm.width(); ++x)
      if (fm.has({x, y})) out.insert(face_of(fm.at({x, y})));
  return out;
}

bool check_layers(const Polyomino& p, const Facemapping& fm, const LayerMapping& lm) {
  std::map<FaceLabel, std::vector<int>> by_face;
  int min_v = INT_MAX;
  for (const auto& c : p.cells()) {
    auto it = lm.find(c);
    if (it == lm.end()) return false;
    by_face[face_of(fm.at(c))].push_back(it->second);
    min_v = std::min(min_v, it->second);
  }
  if (min_v != 0 && min_v != 1) return false;  // accept 0- or 1-based labels
  for (auto& [f, vs] : by_face) {
    std::sort(vs.begin(), vs.end());
    for (int i = 0; i < int(vs.size()); ++i)
      if (vs[size_t(i)] != i + min_v) return false;
  }
  return true;
}

namespace {

// A placement for position `c` consistent with every present neighbor through
// the corresponding edge relation, ignoring whether edges are cut.
std::optional<Placement> fillable_placement(const Polyomino& p, const Facemapping& fm,
                                            CellCoord c) {
  struct Nb {
    CellCoord cell;
    Dir d;
  };
  std::vector<Nb> nbs;
  for (auto [cell, d] : {Nb{{c.x - 1, c.y}, Dir::Left}, Nb{{c.x + 1, c.y}, Dir::Right},
                         Nb{{c.x, c.y - 1}, Dir::Down}, Nb{{c.x, c.y + 1}, Dir::Up}})
    if (p.cell_present(cell)) nbs.push_back({cell, d});
  for (int i = 0; i < 48; ++i) {
    bool ok = true;
    for (const auto& nb : nbs) {
      int q = fm.index_at(nb.cell);
      if (q != roll_index(i, nb.d) && q != flip_index(i, nb.d)) {
        ok = false;
        break;
      }
    }
    if (ok) return placement_from_index(i);
  }
  return std::nullopt;
}

// Does the cut edge still satisfy the crease relation, as if reattached?
bool cut_edge_reattaches(const Polyomino& p, const Facemapping& fm, const CutSegment& s) {
  auto [a, b] = p.edge_cells(s);
  if (!p.cell_present(a) || !p.cell_present(b)) return false;
  int pa = fm.index_at(a), pb = fm.index_at(b);
  Dir d = edge_dir(s);
  return pb == roll_index(pa, d) || pb == flip_index(pa, d);
}

}  // namespace

HoleFoldClass hole_fold_class(const Polyomino& p, const Facemapping& fm, int hole_index) {
  const HoleSpec& h = p.holes().at(size_t(hole_index));
  HoleExpansion e = expand_hole(h);
  bool all_reattach = true;
  for (const auto& s : e.cuts)
    if (!cut_edge_reattaches(p, fm, s)) all_reattach = false;

  switch (h.kind) {
    case HoleKind::UnitSquare:
      return fillable_placement(p, fm, {h.x, h.y}) ? HoleFoldClass::Trivial
                                                   : HoleFoldClass::SquareNontrivial;
    case HoleKind::Slit1:
      return all_reattach ? HoleFoldClass::Trivial : HoleFoldClass::SlitFlap;
    case HoleKind::LShape:
      return all_reattach ? HoleFoldClass::Trivial : HoleFoldClass::LNontrivial;
    case HoleKind::Slit2: {
      if (all_reattach) return HoleFoldClass::Trivial;
      // Flap vs ring by the implied angle of the crease through the slit center.
      GridSegment left, right;
      if (h.axis == Axis::Vertical) {
        left = {Axis::Horizontal, h.x - 1, h.y + 1};
        right = {Axis::Horizontal, h.x, h.y + 1};
      } else {
        left = {Axis::Vertical, h.x + 1, h.y - 1};
        right = {Axis::Vertical, h.x + 1, h.y};
      }
      for (const auto& seg : {left, right})
        if (p.edge_attached(seg)) {
          return implied_angle(p, fm, seg) == FoldAngle::Fold180 ? HoleFoldClass::SlitFlap
                                                                 : HoleFoldClass::SlitRing;
        }
      // Both central creases cut by other holes; fall back to face comparison.
      auto [a, b] = p.edge_cells(left);
      return face_of(fm.at(a)) == face_of(fm.at(b)) ? HoleFoldClass::SlitFlap
                                                    : HoleFoldClass::SlitRing;
    }
    case HoleKind::UShape: {
      if (all_reattach) return HoleFoldClass::Trivial;
      // Ring-trivial test: can the flap position be filled consistently with all
      // four ring neighbors? If so the eight surrounding squares fold like an
      // uncut 3x3 and only the flap diverges.
      return fillable_placement(p, fm, {h.x, h.y}) ? HoleFoldClass::UTFolded
                                                   : HoleFoldClass::UAsUnitSquare;
    }
  }
  throw std::logic_error("bad HoleKind");
}

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

namespace {

struct Edge {
  int a = -1, b = -1;  // compact cell ids; relation b = fold(a, dir)
  Dir dir = Dir::Right;
  GridSegment seg;
};

struct Constraint {
  int other;
  bool equal;  // equal angles; otherwise "not both 90"
};

struct Model {
  const Polyomino* poly = nullptr;
  int W = 0, H = 0;
  std::vector<int> cell_id;               // W*H -> compact id or -1
  std::vector<CellCoord> cells;           // compact id -> coord
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, Dir>>> incident;  // cell -> (edge, dir from cell)
  std::vector<std::vector<Constraint>> cons;               // lemma-rule network
  std::vector<int> branch_order;                           // BFS edge order from anchor
  int anchor = 0;

  int id_at(CellCoord c) const {
    if (c.x < 0 || c.x >= W || c.y < 0 || c.y >= H) return -1;
    return cell_id[size_t(c.y * W + c.x)];
  }
};

int find_edge(const Model& m, const GridSegment& seg) {
  for (int i = 0; i < int(m.edges.size()); ++i)
    if (m.edges[size_t(i)].seg == seg) return i;
  return -1;
}

void add_equal(Model& m, int e, int f) {
  if (e < 0 || f < 0 || e == f) return;
  m.cons[size_t(e)].push_back({f, true});
  m.cons[size_t(f)].push_back({e, true});
}

void add_not_both_90(Model& m, int e, int f) {
  if (e < 0 || f < 0 || e == f) return;
  m.cons[size_t(e)].push_back({f, false});
  m.cons[size_t(f)].push_back({e, false});
}

Model build_model(const Polyomino& p, bool with_lemma_rules) {
  Model m;
  m.poly = &p;
  m.W = p.width();
  m.H = p.height();
  m.cell_id.assign(size_t(m.W * m.H), -1);
  for (const auto& c : p.cells()) {  // (x, then y) order; anchor is cells[0]
    m.cell_id[size_t(c.y * m.W + c.x)] = int(m.cells.size());
    m.cells.push_back(c);
  }
  m.incident.resize(m.cells.size());
  for (const auto& seg : p.attached_edges()) {
    auto [ca, cb] = p.edge_cells(seg);
    Edge e;
    e.a = m.id_at(ca);
    e.b = m.id_at(cb);
    e.dir = edge_dir(seg);
    e.seg = seg;
    int ei = int(m.edges.size());
    m.edges.push_back(e);
    m.incident[size_t(e.a)].push_back({ei, e.dir});
    m.incident[size_t(e.b)].push_back({ei, opposite(e.dir)});
  }
  m.cons.resize(m.edges.size());

  if (with_lemma_rules) {
    // Clean interior vertices: collinear creases agree and the two directions
    // cannot both fold 90 (the hole-free 2x2 case of the rectangular lemma).
    for (int vx = 1; vx < m.W; ++vx)
      for (int vy = 1; vy < m.H; ++vy) {
        int vb = find_edge(m, {Axis::Vertical, vx, vy - 1});
        int va = find_edge(m, {Axis::Vertical, vx, vy});
        int hl = find_edge(m, {Axis::Horizontal, vx - 1, vy});
        int hr = find_edge(m, {Axis::Horizontal, vx, vy});
        if (vb < 0 || va < 0 || hl < 0 || hr < 0) continue;
        add_equal(m, vb, va);
        add_equal(m, hl, hr);
        for (int v : {vb, va})
          for (int h : {hl, hr}) add_not_both_90(m, v, h);
      }
    // Slit rules: fold angles propagate across a 2-slit along its crease and
    // through its center, and a slit folded 90 along itself admits no 90 fold
    // crossing its center.
    auto specs = recognize_simple_holes(p);
    if (specs) {
      for (const auto& h : *specs) {
        if (h.kind != HoleKind::Slit2) continue;
        int beyond0, beyond1, center0, center1;
        if (h.axis == Axis::Vertical) {
          beyond0 = find_edge(m, {Axis::Vertical, h.x, h.y - 1});
          beyond1 = find_edge(m, {Axis::Vertical, h.x, h.y + 2});
          center0 = find_edge(m, {Axis::Horizontal, h.x - 1, h.y + 1});
          center1 = find_edge(m, {Axis::Horizontal, h.x, h.y + 1});
        } else {
          beyond0 = find_edge(m, {Axis::Horizontal, h.x - 1, h.y});
          beyond1 = find_edge(m, {Axis::Horizontal, h.x + 2, h.y});
          center0 = find_edge(m, {Axis::Vertical, h.x + 1, h.y - 1});
          center1 = find_edge(m, {Axis::Vertical, h.x + 1, h.y});
        }
        add_equal(m, beyond0, beyond1);
        add_equal(m, center0, center1);
        for (int u : {beyond0, beyond1})
          for (int v : {center0, center1}) add_not_both_90(m, u, v);
      }
    }
  }

  // Branching order: BFS over edges outward from the anchor cell.
  std::vector<bool> edge_seen(m.edges.size(), false);
  std::vector<bool> cell_seen(m.cells.size(), false);
  std::queue<int> q;
  q.push(m.anchor);
  cell_seen[size_t(m.anchor)] = true;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (auto [ei, d] : m.incident[size_t(c)]) {
      (void)d;
      if (!edge_seen[size_t(ei)]) {
        edge_seen[size_t(ei)] = true;
        m.branch_order.push_back(ei);
      }
      const Edge& e = m.edges[size_t(ei)];
      int n = (e.a == c) ? e.b : e.a;
      if (!cell_seen[size_t(n)]) {
        cell_seen[size_t(n)] = true;
        q.push(n);
      }
    }
  }
  return m;
}

struct Searcher {
  const Model& m;
  SearchConfig cfg;
  EmitFn emit;
  std::atomic<std::uint64_t>* node_counter;  // shared across parallel branches

  std::vector<std::int8_t> angle;  // -1 unknown, 0 = Fold90, 1 = Fold180
  std::vector<std::int8_t> place;  // -1 unplaced, else placement index
  // trail entries: (0, edge) angle set, (1, cell) placement set
  std::vector<std::pair<std::int8_t, int>> trail;
  std::vector<int> dirty;  // work queue of edges to process
  SearchStats stats;

  Searcher(const Model& model, SearchConfig config, EmitFn fn,
           std::atomic<std::uint64_t>* counter)
      : m(model), cfg(std::move(config)), emit(std::move(fn)), node_counter(counter) {
    angle.assign(m.edges.size(), -1);
    place.assign(m.cells.size(), -1);
  }

  bool set_angle(int ei, std::int8_t a) {
    std::int8_t& cur = angle[size_t(ei)];
    if (cur == a) return true;
    if (cur != -1) return false;
    cur = a;
    trail.push_back({0, ei});
    dirty.push_back(ei);
    if (cfg.use_lemma_pruning)
      for (const Constraint& c : m.cons[size_t(ei)]) {
        if (c.equal) {
          if (!set_angle(c.other, a)) return false;
        } else if (a == 0) {
          if (!set_angle(c.other, 1)) return false;
        }
      }
    return true;
  }

  bool set_place(int ci, int pi) {
    std::int8_t& cur = place[size_t(ci)];
    if (cur == std::int8_t(pi)) return true;
    if (cur != -1) return false;
    cur = std::int8_t(pi);
    trail.push_back({1, ci});
    for (auto [ei, d] : m.incident[size_t(ci)]) {
      (void)d;
      dirty.push_back(ei);
    }
    return true;
  }

  // Processes the dirty queue: derive placements over angled edges and imply
  // angles over edges whose both endpoints are placed.
  bool flush() {
    while (!dirty.empty()) {
      int ei = dirty.back();
      dirty.pop_back();
      const Edge& e = m.edges[size_t(ei)];
      std::int8_t a = angle[size_t(ei)];
      int pa = place[size_t(e.a)], pb = place[size_t(e.b)];
      if (pa >= 0 && pb >= 0) {
        if (pb == roll_index(pa, e.dir)) {
          if (!set_angle(ei, 0)) return false;
        } else if (pb == flip_index(pa, e.dir)) {
          if (!set_angle(ei, 1)) return false;
        } else {
          return false;
        }
      } else if (a != -1 && pa >= 0) {
        if (!set_place(e.b, apply_fold_index(pa, e.dir, FoldAngle(a)))) return false;
      } else if (a != -1 && pb >= 0) {
        if (!set_place(e.a, apply_fold_index(pb, opposite(e.dir), FoldAngle(a)))) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      auto [kind, id] = trail.back();
      trail.pop_back();
      if (kind == 0)
        angle[size_t(id)] = -1;
      else
        place[size_t(id)] = -1;
    }
    dirty.clear();
  }

  int pick_branch_edge() const {
    for (int ei : m.branch_order) {
      if (angle[size_t(ei)] != -1) continue;
      const Edge& e = m.edges[size_t(ei)];
      if (place[size_t(e.a)] >= 0 || place[size_t(e.b)] >= 0) return ei;
    }
    return -1;
  }

  bool emit_current() {
    Facemapping fm(m.W, m.H);
    for (int i = 0; i < int(m.cells.size()); ++i) {
      assert(place[size_t(i)] >= 0);
      fm.set_index(m.cells[size_t(i)], place[size_t(i)]);
    }
    ++stats.emitted;
    bool go_on = emit(fm);
    if (!cfg.enumerate_all && covered_faces(fm).size() == 6) go_on = false;
    return go_on;
  }

  // Returns false when the search should stop entirely.
  bool run() {
    int ei = pick_branch_edge();
    if (ei < 0) return emit_current();
    for (std::int8_t a : {std::int8_t(0), std::int8_t(1)}) {
      std::uint64_t n = node_counter->fetch_add(1, std::memory_order_relaxed) + 1;
      ++stats.nodes;
      if (n > cfg.node_limit) {
        stats.node_limit_hit = true;
        return false;
      }
      size_t mark = trail.size();
      if (set_angle(ei, a) && flush()) {
        if (!run()) {
          undo(mark);
          return false;
        }
      } else {
        ++stats.conflicts;
      }
      undo(mark);
    }
    return true;
  }
};

}  // namespace

SearchStats search_facemappings(const Polyomino& p, const SearchConfig& cfg, const EmitFn& emit) {
  auto t0 = std::chrono::steady_clock::now();
  Model m = build_model(p, cfg.use_lemma_pruning);
  std::atomic<std::uint64_t> counter{0};
  SearchStats stats;

  if (!cfg.parallel || m.edges.empty()) {
    Searcher s(m, cfg, emit, &counter);
    if (s.set_place(m.anchor, placement_index(canonical_placement())) && s.flush()) s.run();
    stats = s.stats;
  } else {
    // Explore the two top-level branches concurrently, then replay the collected
    // results in branch order so that emission behaves like the sequential run
    // up to set equality.
    int first = m.branch_order.front();
    auto run_branch = [&](std::int8_t a) {
      auto collected = std::make_shared<std::vector<Facemapping>>();
      SearchConfig sub = cfg;
      sub.parallel = false;
      sub.enumerate_all = true;  // stop logic applied after the merge
      Searcher s(m, sub, [collected](const Facemapping& fm) {
        collected->push_back(fm);
        return true;
      }, &counter);
      if (s.set_place(m.anchor, placement_index(canonical_placement())) && s.flush() &&
          s.set_angle(first, a) && s.flush())
        s.run();
      return std::make_pair(s.stats, collected);
    };
    auto fut = std::async(std::launch::async, run_branch, std::int8_t(0));
    auto [stats1, col1] = run_branch(1);
    auto [stats0, col0] = fut.get();
    stats.nodes = stats0.nodes + stats1.nodes;
    stats.conflicts = stats0.conflicts + stats1.conflicts;
    stats.node_limit_hit = stats0.node_limit_hit || stats1.node_limit_hit;
    for (const auto* col : {col0.get(), col1.get()}) {
      for (const auto& fm : *col) {
        ++stats.emitted;
        bool go_on = emit(fm);
        if (!cfg.enumerate_all && covered_faces(fm).size() == 6) go_on = false;
        if (!go_on) goto done;
      }
    }
  done:;
  }
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats;
}

std::vector<Facemapping> search_all(const Polyomino& p, SearchConfig cfg) {
  cfg.enumerate_all = true;
  std::vector<Facemapping> out;
  SearchStats st = search_facemappings(p, cfg, [&](const Facemapping& fm) {
    out.push_back(fm);
    return true;
  });
  if (st.node_limit_hit) throw NodeLimitExceeded("search_all: node limit exceeded");
  return out;
}

Verdict exists_onto_facemapping(const Polyomino& p, const SearchConfig& cfg) {
  Verdict v;
  std::optional<Facemapping> witness;
  SearchConfig sub = cfg;
  sub.enumerate_all = false;
  v.stats = search_facemappings(p, sub, [&](const Facemapping& fm) {
    if (covered_faces(fm).size() == 6) {
      witness = fm;
      return false;
    }
    return true;
  });
  if (witness) {
    v.status = VerdictStatus::FacemappingExists;
    v.reason = "onto facemapping found by exhaustive search";
    v.provenance = "search";
    v.witness = std::move(witness);
  } else if (v.stats.node_limit_hit) {
    v.status = VerdictStatus::Unknown;
    v.reason = "node limit exceeded";
    v.provenance = "search";
  } else {
    v.status = VerdictStatus::UnfoldableCertified;
    v.reason = "no onto facemapping";
    v.provenance = "search";
  }
  return v;
}

std::optional<CreaseAssignment> propagate(const Polyomino& p, const CreaseAssignment& partial) {
  Model m = build_model(p, true);
  std::vector<std::int8_t> angle(m.edges.size(), -1);
  std::vector<int> todo;

  std::function<bool(int, std::int8_t)> assign = [&](int ei, std::int8_t a) {
    std::int8_t& cur = angle[size_t(ei)];
    if (cur == a) return true;
    if (cur != -1) return false;
    cur = a;
    for (const Constraint& c : m.cons[size_t(ei)]) {
      if (c.equal) {
        if (!assign(c.other, a)) return false;
      } else if (a == 0) {
        if (!assign(c.other, 1)) return false;
      }
    }
    return true;
  };

  for (const auto& [seg, fold] : partial) {
    int ei = find_edge(m, seg);
    if (ei < 0) throw std::invalid_argument("propagate: segment is not an attached crease");
    if (!assign(ei, fold == FoldAngle::Fold90 ? 0 : 1)) return std::nullopt;
  }
  CreaseAssignment out;
  for (int ei = 0; ei < int(m.edges.size()); ++ei)
    if (angle[size_t(ei)] != -1)
      out[m.edges[size_t(ei)].seg] =
          angle[size_t(ei)] == 0 ? FoldAngle::Fold90 : FoldAngle::Fold180;
  return out;
}

std::optional<Facemapping> infer_orientations(const Polyomino& p, const FaceLabelMap& labels) {
  for (const auto& c : p.cells())
    if (!labels.count(c)) return std::nullopt;

  Model m = build_model(p, false);
  // BFS order with a parent edge for each non-anchor cell.
  std::vector<int> order{m.anchor};
  std::vector<std::pair<int, Dir>> parent(m.cells.size(), {-1, Dir::Right});
  std::vector<bool> seen(m.cells.size(), false);
  seen[size_t(m.anchor)] = true;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    for (auto [ei, d] : m.incident[size_t(c)]) {
      const Edge& e = m.edges[size_t(ei)];
      int n = (e.a == c) ? e.b : e.a;
      if (!seen[size_t(n)]) {
        seen[size_t(n)] = true;
        parent[size_t(n)] = {c, d};
        order.push_back(n);
      }
    }
  }

  std::vector<int> place(m.cells.size(), -1);
  auto label_of = [&](int ci) { return labels.at(m.cells[size_t(ci)]); };
  auto consistent_with_placed = [&](int ci, int pi) {
    for (auto [ei, d] : m.incident[size_t(ci)]) {
      const Edge& e = m.edges[size_t(ei)];
      int n = (e.a == ci) ? e.b : e.a;
      if (place[size_t(n)] < 0) continue;
      int q = place[size_t(n)];
      if (q != apply_fold_index(pi, d, FoldAngle::Fold90) &&
          q != apply_fold_index(pi, d, FoldAngle::Fold180))
        return false;
    }
    return true;
  };

  std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
    if (i == order.size()) return true;
    int ci = order[i];
    std::vector<int> cands;
    if (i == 0) {
      for (int pi = 0; pi < 48; ++pi)
        if (face_of(placement_from_index(pi)) == label_of(ci)) cands.push_back(pi);
    } else {
      auto [par, d] = parent[size_t(ci)];
      int pp = place[size_t(par)];
      cands = {roll_index(pp, d), flip_index(pp, d)};
    }
    for (int pi : cands) {
      if (face_of(placement_from_index(pi)) != label_of(ci)) continue;
      if (!consistent_with_placed(ci, pi)) continue;
      place[size_t(ci)] = pi;
      if (dfs(i + 1)) return true;
      place[size_t(ci)] = -1;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;

  Facemapping fm(m.W, m.H);
  for (int i = 0; i < int(m.cells.size()); ++i) fm.set_index(m.cells[size_t(i)], place[size_t(i)]);
  return fm;
}

namespace {

// Copies `reduced` into `parent` coordinates with lines at/above `from` shifted
// up/right by `delta`.
Facemapping shifted_copy(const Polyomino& parent, BandAxis axis, int from, int delta,
                         const Facemapping& reduced) {
  Facemapping fm(parent.width(), parent.height());
  for (int y = 0; y < reduced.height(); ++y)
    for (int x = 0; x < reduced.width(); ++x)
      if (reduced.has({x, y})) {
        CellCoord c{x, y};
        int& coord = (axis == BandAxis::Rows) ? c.y : c.x;
        if (coord >= from) coord += delta;
        fm.set_index(c, reduced.index_at({x, y}));
      }
  return fm;
}

bool line_fully_present(const Polyomino& p, BandAxis axis, int line) {
  int n = (axis == BandAxis::Rows) ? p.width() : p.height();
  for (int i = 0; i < n; ++i) {
    CellCoord c = (axis == BandAxis::Rows) ? CellCoord{i, line} : CellCoord{line, i};
    if (!p.cell_present(c)) return false;
  }
  return true;
}

}  // namespace

// A band line can be derived as a 180-degree fold of `line` only if the line is
// complete and none of its internal edges is cut: a cut edge carries no relation
// for the folded copy to inherit.
bool line_supports_fold_derivation(const Polyomino& p, BandAxis axis, int line) {
  if (line < 0 || line >= ((axis == BandAxis::Rows) ? p.height() : p.width())) return false;
  if (!line_fully_present(p, axis, line)) return false;
  for (const auto& s : p.cuts()) {
    bool along = (axis == BandAxis::Rows) ? (s.axis == Axis::Vertical)
                                          : (s.axis == Axis::Horizontal);
    int coord = (axis == BandAxis::Rows) ? s.y : s.x;
    if (along && coord == line) return false;
  }
  return true;
}

namespace {

void set_line_as_flip(const Polyomino& parent, Facemapping& fm, BandAxis axis, int line,
                      int source_line) {
  int n = (axis == BandAxis::Rows) ? parent.width() : parent.height();
  for (int i = 0; i < n; ++i) {
    CellCoord dst = (axis == BandAxis::Rows) ? CellCoord{i, line} : CellCoord{line, i};
    CellCoord src = (axis == BandAxis::Rows) ? CellCoord{i, source_line} : CellCoord{source_line, i};
    Dir d = (axis == BandAxis::Rows) ? (line > source_line ? Dir::Up : Dir::Down)
                                     : (line > source_line ? Dir::Right : Dir::Left);
    fm.set_index(dst, flip_index(fm.index_at(src), d));
  }
}

}  // namespace

Facemapping lift_contraction(const Polyomino& parent, BandAxis axis, int index,
                             const Facemapping& reduced) {
  Facemapping fm = shifted_copy(parent, axis, index, 2, reduced);
  // Fill the two inserted lines as 180-degree folds, deriving from whichever
  // adjacent line of the parent can seed the fold (complete and cut-free).
  if (line_supports_fold_derivation(parent, axis, index - 1)) {
    set_line_as_flip(parent, fm, axis, index, index - 1);
    set_line_as_flip(parent, fm, axis, index + 1, index);
  } else if (line_supports_fold_derivation(parent, axis, index + 2)) {
    set_line_as_flip(parent, fm, axis, index + 1, index + 2);
    set_line_as_flip(parent, fm, axis, index, index + 1);
  } else {
    throw std::invalid_argument(
        "lift_contraction: no cut-free complete line adjacent to the band");
  }
  return fm;
}

Facemapping lift_crop(const Polyomino& parent, BandAxis axis, bool high_side,
                      const Facemapping& reduced) {
  int extent = (axis == BandAxis::Rows) ? parent.height() : parent.width();
  int line = high_side ? extent - 1 : 0;
  int source = high_side ? extent - 2 : 1;
  Facemapping fm = shifted_copy(parent, axis, 0, high_side ? 0 : 1, reduced);
  set_line_as_flip(parent, fm, axis, line, source);
  return fm;
}

// ---------------------------------------------------------------------------
// D4 transforms
// ---------------------------------------------------------------------------

const std::array<GridTransform, 8>& all_grid_transforms() {
  static const std::array<GridTransform, 8> all = [] {
    std::array<GridTransform, 8> a{};
    int i = 0;
    for (bool t : {false, true})
      for (bool mx : {false, true})
        for (bool my : {false, true}) a[size_t(i++)] = GridTransform{t, mx, my};
    return a;
  }();
  return all;
}

CellCoord transform_cell(const GridTransform& t, int w, int h, CellCoord c) {
  if (t.transpose) {
    std::swap(c.x, c.y);
    std::swap(w, h);
  }
  if (t.mirror_x) c.x = w - 1 - c.x;
  if (t.mirror_y) c.y = h - 1 - c.y;
  return c;
}

namespace {

Placement transform_placement(const GridTransform& t, Placement p) {
  if (t.transpose) p = Placement{{p.bl(), p.tl(), p.tr(), p.br()}};
  if (t.mirror_x) p = Placement{{p.br(), p.bl(), p.tl(), p.tr()}};
  if (t.mirror_y) p = Placement{{p.tl(), p.tr(), p.br(), p.bl()}};
  return p;
}

CutSegment transform_segment(const GridTransform& t, int w, int h, CutSegment s) {
  // Work with the segment's two endpoints as grid vertices.
  auto ends = [&](const CutSegment& seg) -> std::pair<CellCoord, CellCoord> {
    if (seg.axis == Axis::Vertical) return {{seg.x, seg.y}, {seg.x, seg.y + 1}};
    return {{seg.x, seg.y}, {seg.x + 1, seg.y}};
  };
  auto [a, b] = ends(s);
  auto tv = [&](CellCoord v) {
    int ww = w, hh = h;
    if (t.transpose) {
      std::swap(v.x, v.y);
      std::swap(ww, hh);
    }
    if (t.mirror_x) v.x = ww - v.x;
    if (t.mirror_y) v.y = hh - v.y;
    return v;
  };
  CellCoord a2 = tv(a), b2 = tv(b);
  if (a2.x == b2.x) return {Axis::Vertical, a2.x, std::min(a2.y, b2.y)};
  return {Axis::Horizontal, std::min(a2.x, b2.x), a2.y};
}

}  // namespace

Polyomino transform_polyomino(const GridTransform& t, const Polyomino& p) {
  int w = p.width(), h = p.height();
  int nw = t.transpose ? h : w;
  int nh = t.transpose ? w : h;
  std::vector<CellCoord> removed;
  for (const auto& c : p.removed_cells()) removed.push_back(transform_cell(t, w, h, c));
  std::vector<CutSegment> cuts;
  for (const auto& s : p.cuts()) cuts.push_back(transform_segment(t, w, h, s));
  Polyomino raw = Polyomino::from_raw(nw, nh, std::move(removed), std::move(cuts));
  if (p.holes().empty()) return raw;
  auto specs = recognize_simple_holes(raw);
  if (!specs) return raw;  // non-simple raw structure stays raw
  return Polyomino::build(nw, nh, *specs);
}

Facemapping transform_facemapping(const GridTransform& t, const Polyomino& source,
                                  const Facemapping& fm) {
  int w = source.width(), h = source.height();
  Facemapping out(t.transpose ? h : w, t.transpose ? w : h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (fm.has({x, y}))
        out.set(transform_cell(t, w, h, {x, y}), transform_placement(t, fm.at({x, y})));
  return out;
}

}  // namespace foldlab
