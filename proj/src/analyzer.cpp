#include "foldlab/analyzer.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>

namespace foldlab {

const char* to_string(Cooperation c) {
  switch (c) {
    case Cooperation::Yes: return "yes";
    case Cooperation::No: return "no";
    case Cooperation::NecessaryOnly: return "necessary-only";
    case Cooperation::Unknown: return "unknown";
  }
  return "?";
}

Support support(const Polyomino& p, const std::set<int>& hole_indices) {
  if (hole_indices.empty()) throw std::invalid_argument("support: empty hole set");
  int x0 = p.width(), x1 = -1, y0 = p.height(), y1 = -1;
  auto widen_vertex = [&](int vx, int vy) {
    x0 = std::min(x0, vx - 1);
    x1 = std::max(x1, vx);
    y0 = std::min(y0, vy - 1);
    y1 = std::max(y1, vy);
  };
  for (int i : hole_indices) {
    const HoleSpec& h = p.holes().at(size_t(i));
    HoleExpansion e = expand_hole(h);
    for (const auto& c : e.removed) {
      x0 = std::min(x0, c.x - 1);
      x1 = std::max(x1, c.x + 1);
      y0 = std::min(y0, c.y - 1);
      y1 = std::max(y1, c.y + 1);
    }
    for (const auto& s : e.cuts) {
      widen_vertex(s.x, s.y);
      if (s.axis == Axis::Vertical)
        widen_vertex(s.x, s.y + 1);
      else
        widen_vertex(s.x + 1, s.y);
    }
  }
  return Support{x0, y0, x1, y1};
}

namespace {

// Raw polyominoes enter the hole-indexed operations through recognition.
Polyomino with_hole_list(const Polyomino& p) {
  if (!p.is_raw()) return p;
  auto specs = recognize_simple_holes(p);
  if (!specs) throw WrongFamily("raw polyomino with a non-simple hole");
  return Polyomino::build(p.width(), p.height(), *specs);
}

std::vector<int> slit_indices(const Polyomino& p, Axis axis) {
  std::vector<int> out;
  for (int i = 0; i < int(p.holes().size()); ++i) {
    const auto& h = p.holes()[size_t(i)];
    if (h.kind == HoleKind::Slit2 && h.axis == axis) out.push_back(i);
  }
  return out;
}

bool all_slits(const Polyomino& p) {
  for (const auto& h : p.holes())
    if (h.kind != HoleKind::Slit2 && h.kind != HoleKind::Slit1) return false;
  return true;
}

}  // namespace

bool odd_pair_exists(const Polyomino& p_in) {
  Polyomino p = with_hole_list(p_in);
  if (!all_slits(p)) throw WrongFamily("odd_pair_exists: non-slit holes present");
  const auto& hs = p.holes();
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j)
      if (separation_parity(hs[i], hs[j]) == SeparationParity::Odd) return true;
  return false;
}

std::optional<std::array<int, 4>> four_by_n_quadruple(const Polyomino& p_in) {
  Polyomino p = with_hole_list(p_in);
  if (!all_slits(p)) throw WrongFamily("four_by_n_quadruple: non-slit holes present");
  if (p.width() != 4) return std::nullopt;
  auto verts = slit_indices(p, Axis::Vertical);
  auto one_separated = [&](int a, int b) {
    return std::abs(slit_midpoint(p.holes()[size_t(a)]) - slit_midpoint(p.holes()[size_t(b)])) ==
           1;
  };
  for (int l : verts) {
    if (slit_crease(p.holes()[size_t(l)]) != 1) continue;
    for (int c1 : verts) {
      if (slit_crease(p.holes()[size_t(c1)]) != 2 || !one_separated(l, c1)) continue;
      for (int r : verts) {
        if (slit_crease(p.holes()[size_t(r)]) != 3) continue;
        for (int c2 : verts) {
          if (slit_crease(p.holes()[size_t(c2)]) != 2 || !one_separated(r, c2)) continue;
          if (l == c1 || l == r || l == c2 || c1 == r || c1 == c2 || r == c2) continue;
          return std::array<int, 4>{l, c1, r, c2};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fixture reduction matcher
// ---------------------------------------------------------------------------

namespace {

std::string shape_key(const Polyomino& p) {
  std::ostringstream os;
  os << p.width() << 'x' << p.height() << '|';
  for (const auto& c : p.removed_cells()) os << c << ' ';
  os << '|';
  for (const auto& s : p.cuts()) os << s << ' ';
  return os.str();
}

std::multiset<HoleKind> hole_kinds(const Polyomino& p) {
  std::multiset<HoleKind> out;
  auto specs = recognize_simple_holes(p);
  if (specs)
    for (const auto& h : *specs) out.insert(h.kind);
  return out;
}

struct MatcherTarget {
  std::string name;           // fixture id or generator name
  const Fixture* fixture;     // null for generated targets
  GridTransform transform;
  Polyomino shape;
  Facemapping witness;        // already transported onto `shape`
};

const std::vector<MatcherTarget>& matcher_targets() {
  static const std::vector<MatcherTarget> targets = [] {
    std::vector<MatcherTarget> out;
    std::set<std::string> seen;
    for (const auto& f : fixtures()) {
      if (f.declared_coverage != 6 || f.face_labels.empty()) continue;
      for (const auto& t : all_grid_transforms()) {
        Polyomino shape = transform_polyomino(t, f.polyomino);
        if (!seen.insert(shape_key(shape)).second) continue;  // symmetric duplicates
        Facemapping w = transform_facemapping(t, f.polyomino, fixture_facemapping(f));
        out.push_back({f.figure_id, &f, t, std::move(shape), std::move(w)});
      }
    }
    return out;
  }();
  return targets;
}

// The eight images of a staircase family member, used when an input looks like
// one embedded in a larger sheet.
std::vector<MatcherTarget> staircase_targets(int k) {
  std::vector<MatcherTarget> out;
  Polyomino stair = generate_staircase(k);
  auto fm = infer_orientations(stair, staircase_witness(k));
  if (!fm) return out;
  std::set<std::string> seen;
  for (const auto& t : all_grid_transforms()) {
    Polyomino shape = transform_polyomino(t, stair);
    if (!seen.insert(shape_key(shape)).second) continue;
    Facemapping w = transform_facemapping(t, stair, *fm);
    out.push_back({"staircase-generator", nullptr, t, std::move(shape), std::move(w)});
  }
  return out;
}

constexpr int kMatcherStateCap = 20000;

// Free-line structure of one axis: the largest margin and the largest interior
// run of band-contractible positions. Used to size the pre-reduction bounds.
int max_plain_run(const Polyomino& p, BandAxis axis) {
  int extent = axis == BandAxis::Rows ? p.height() : p.width();
  int best = 0, run = 0;
  for (int i = 0; i + 1 < extent; ++i) {
    if (band_is_plain(p, axis, i))
      ++run;
    else
      run = 0;
    best = std::max(best, run);
  }
  return best + 1;  // a run of k band positions spans k+1 free lines
}

// The lowest/highest line touched by hole structure, for margin sizing.
std::pair<int, int> structure_bounds(const Polyomino& p, BandAxis axis) {
  int extent = axis == BandAxis::Rows ? p.height() : p.width();
  int lo = extent, hi = -1;
  auto touch = [&](int a, int b) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  };
  for (const auto& c : p.removed_cells()) {
    int v = axis == BandAxis::Rows ? c.y : c.x;
    touch(v, v);
  }
  for (const auto& s : p.cuts()) {
    bool along = (axis == BandAxis::Rows) == (s.axis == Axis::Vertical);
    int v = axis == BandAxis::Rows ? s.y : s.x;
    if (along)
      touch(v, v);
    else
      touch(v - 1, v);  // a crossing cut on crease v involves the lines beside it
  }
  return {lo, hi};
}

struct TargetBounds {
  int margin = 1;
  int gap = 1;
};

// Largest margin and free run over the candidate targets; pre-reducing an
// input below these bounds can never lose a reachable target.
TargetBounds target_bounds(const std::vector<const MatcherTarget*>& targets) {
  TargetBounds tb;
  for (const auto* t : targets)
    for (BandAxis axis : {BandAxis::Rows, BandAxis::Columns}) {
      auto [lo, hi] = structure_bounds(t->shape, axis);
      int extent = axis == BandAxis::Rows ? t->shape.height() : t->shape.width();
      tb.margin = std::max({tb.margin, lo, extent - 1 - hi});
      tb.gap = std::max(tb.gap, max_plain_run(t->shape, axis));
    }
  return tb;
}

}  // namespace

namespace {

std::optional<FixtureMatch> reduce_to_targets(const Polyomino& p,
                                              const std::vector<MatcherTarget>& targets) {
  auto kinds = hole_kinds(p);
  std::vector<const MatcherTarget*> candidates;
  for (const auto& t : targets)
    if (t.shape.width() <= p.width() && t.shape.height() <= p.height() &&
        hole_kinds(t.shape) == kinds)
      candidates.push_back(&t);
  if (candidates.empty()) return std::nullopt;

  // BFS over reduction steps, smallest-first is irrelevant; memoize shapes.
  struct Node {
    Polyomino shape;
    int parent;
    ReductionOp op;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> seen;
  auto push = [&](Polyomino shape, int parent, ReductionOp op) {
    std::string key = shape_key(shape);
    if (seen.count(key)) return -1;
    seen[key] = int(nodes.size());
    nodes.push_back({std::move(shape), parent, op});
    return int(nodes.size()) - 1;
  };
  push(p, -1, {});

  // Pre-reduce oversized margins and interior gaps: every target needs less of
  // both, crops and in-gap contractions commute with any reduction path, so
  // shrinking first preserves reachability and keeps the state space small.
  size_t bfs_start = 0;
  {
    const TargetBounds tb = target_bounds(candidates);
    int at = 0;
    bool again = true;
    while (again) {
      again = false;
      const Polyomino cur = nodes[size_t(at)].shape;
      for (BandAxis axis : {BandAxis::Rows, BandAxis::Columns}) {
        auto [lo, hi] = structure_bounds(cur, axis);
        int extent = axis == BandAxis::Rows ? cur.height() : cur.width();
        if (lo > tb.margin && boundary_line_croppable(cur, axis, false)) {
          at = push(crop_boundary_line(cur, axis, false), at, {true, axis, 0, false});
          again = true;
          break;
        }
        if (extent - 1 - hi > tb.margin && boundary_line_croppable(cur, axis, true)) {
          at = push(crop_boundary_line(cur, axis, true), at, {true, axis, 0, true});
          again = true;
          break;
        }
        // contract inside an oversized plain run, wherever the fold can seed
        int run = 0;
        for (int i = 0; i + 1 < extent && !again; ++i) {
          run = band_is_plain(cur, axis, i) ? run + 1 : 0;
          if (run + 1 > tb.gap) {
            int mid = i - run / 2;
            if (band_is_plain(cur, axis, mid) &&
                (line_supports_fold_derivation(cur, axis, mid - 1) ||
                 line_supports_fold_derivation(cur, axis, mid + 2))) {
              at = push(contract_plain_band(cur, axis, mid), at, {false, axis, mid, false});
              again = true;
            }
          }
        }
        if (again) break;
      }
      if (at < 0) return std::nullopt;  // shape revisited; cannot happen while shrinking
    }
    bfs_start = size_t(at);
  }

  for (size_t head = bfs_start; head < nodes.size() && nodes.size() < kMatcherStateCap; ++head) {
    const Polyomino cur = nodes[head].shape;  // copy: nodes may reallocate
    for (const auto* cand : candidates) {
      if (cur == cand->shape) {
        // Lift the target witness back up along the reduction path.
        std::vector<int> path;
        for (int i = int(head); i != -1; i = nodes[size_t(i)].parent) path.push_back(i);
        std::reverse(path.begin(), path.end());  // root .. head
        Facemapping fm = cand->witness;
        for (size_t k = path.size(); k-- > 1;) {
          const Node& child = nodes[size_t(path[k])];
          const Polyomino& above = nodes[size_t(path[k - 1])].shape;
          fm = child.op.crop ? lift_crop(above, child.op.axis, child.op.high, fm)
                             : lift_contraction(above, child.op.axis, child.op.index, fm);
        }
        FixtureMatch match;
        match.figure_id = cand->name;
        match.transform = cand->transform;
        for (size_t k = 1; k < path.size(); ++k) match.ops.push_back(nodes[size_t(path[k])].op);
        match.witness = std::move(fm);
        if (!is_consistent(p, match.witness) || covered_faces(match.witness).size() != 6)
          continue;  // this path does not lift; keep exploring
        return match;
      }
    }
    for (BandAxis axis : {BandAxis::Rows, BandAxis::Columns}) {
      int extent = axis == BandAxis::Rows ? cur.height() : cur.width();
      for (bool high : {false, true})
        if (boundary_line_croppable(cur, axis, high))
          push(crop_boundary_line(cur, axis, high), int(head), {true, axis, 0, high});
      for (int i = 0; i + 1 < extent; ++i)
        if (band_is_plain(cur, axis, i) &&
            (line_supports_fold_derivation(cur, axis, i - 1) ||
             line_supports_fold_derivation(cur, axis, i + 2)))
          push(contract_plain_band(cur, axis, i), int(head), {false, axis, i, false});
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FixtureMatch> reduce_to_fixture(const Polyomino& p) {
  return reduce_to_targets(p, matcher_targets());
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

namespace {

Verdict verdict_foldable(std::string reason, std::string provenance, Facemapping witness,
                         std::optional<LayerMapping> layers = std::nullopt) {
  Verdict v;
  v.status = VerdictStatus::FoldableCertified;
  v.reason = std::move(reason);
  v.provenance = std::move(provenance);
  v.witness = std::move(witness);
  v.witness_layers = std::move(layers);
  return v;
}

Verdict verdict_unfoldable(std::string reason, std::string provenance = "theorem") {
  Verdict v;
  v.status = VerdictStatus::UnfoldableCertified;
  v.reason = std::move(reason);
  v.provenance = std::move(provenance);
  return v;
}

// Exact match against the foldable fixture corpus, up to D4.
std::optional<Verdict> match_fixture_exactly(const Polyomino& p) {
  for (const auto& t : matcher_targets())
    if (t.shape == p) {
      Facemapping fm = t.witness;
      std::optional<LayerMapping> layers;
      if (t.fixture->layer_labels) {
        LayerMapping lm;
        for (const auto& [c, v] : *t.fixture->layer_labels)
          lm[transform_cell(t.transform, t.fixture->polyomino.width(),
                            t.fixture->polyomino.height(), c)] = v;
        layers = std::move(lm);
      }
      return verdict_foldable("transcribed fixture", t.fixture->figure_id, std::move(fm),
                              std::move(layers));
    }
  return std::nullopt;
}

// Staircase family recognition: a hole census of two unit squares plus an odd
// number of same-axis 2-slits selects the candidate k; the member may sit
// inside a larger sheet, so reduction is tried after the exact comparison.
std::optional<Verdict> match_staircase(const Polyomino& p) {
  int squares = 0, vslits = 0, hslits = 0, other = 0;
  for (const auto& h : p.holes()) {
    if (h.kind == HoleKind::UnitSquare)
      ++squares;
    else if (h.kind == HoleKind::Slit2)
      ++(h.axis == Axis::Vertical ? vslits : hslits);
    else
      ++other;
  }
  int slits = std::max(vslits, hslits);
  if (other != 0 || squares != 2 || std::min(vslits, hslits) != 0 || slits % 2 == 0)
    return std::nullopt;
  int k = (slits + 1) / 2;
  auto targets = staircase_targets(k);
  if (auto match = reduce_to_targets(p, targets))
    return verdict_foldable("staircase family (k=" + std::to_string(k) + ")",
                            "staircase-generator", std::move(match->witness));
  return std::nullopt;
}

// Candidate hole subsets whose filled polyomino might reduce to a fixture.
std::vector<std::set<int>> fixture_route_candidates(const Polyomino& p) {
  std::vector<std::set<int>> out;
  const auto& hs = p.holes();
  auto vert = slit_indices(p, Axis::Vertical);
  auto horiz = slit_indices(p, Axis::Horizontal);

  auto odd_pairs = [&](const std::vector<int>& idx) {
    std::vector<std::pair<int, int>> ps;
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (separation_parity(hs[size_t(idx[i])], hs[size_t(idx[j])]) == SeparationParity::Odd)
          ps.push_back({idx[i], idx[j]});
    return ps;
  };
  auto vpairs = odd_pairs(vert), hpairs = odd_pairs(horiz);

  for (auto [a, b] : vpairs) out.push_back({a, b});
  for (auto [a, b] : hpairs) out.push_back({a, b});
  // Two odd-separated slits of one axis plus one slit of the other.
  for (auto [a, b] : vpairs)
    for (int h : horiz) out.push_back({a, b, h});
  for (auto [a, b] : hpairs)
    for (int v : vert) out.push_back({a, b, v});
  // Quadruple-style sets: crease-1 and crease-3 slits each 1-separated from a
  // central-crease slit (shared center allowed), and the transposed version.
  auto quad_sets = [&](Axis axis, int width) {
    auto idx = slit_indices(p, axis);
    if ((axis == Axis::Vertical ? p.width() : p.height()) != width) return;
    for (int l : idx)
      for (int c1 : idx)
        for (int r : idx)
          for (int c2 : idx) {
            if (slit_crease(hs[size_t(l)]) != 1 || slit_crease(hs[size_t(r)]) != 3) continue;
            if (slit_crease(hs[size_t(c1)]) != 2 || slit_crease(hs[size_t(c2)]) != 2) continue;
            if (std::abs(slit_midpoint(hs[size_t(l)]) - slit_midpoint(hs[size_t(c1)])) != 1)
              continue;
            if (std::abs(slit_midpoint(hs[size_t(r)]) - slit_midpoint(hs[size_t(c2)])) != 1)
              continue;
            out.push_back({l, c1, r, c2});
          }
  };
  quad_sets(Axis::Vertical, 4);
  quad_sets(Axis::Horizontal, 4);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The width-4 theorem's cooperating-set shape: slits in both off-central
// creases, each 1-separated from some central-crease slit (which may be shared).
bool quadruple_structure_exists(const Polyomino& p, Axis axis) {
  const auto& hs = p.holes();
  auto idx = slit_indices(p, axis);
  auto has_side = [&](int side_crease) {
    for (int s : idx) {
      if (slit_crease(hs[size_t(s)]) != side_crease) continue;
      for (int c : idx)
        if (slit_crease(hs[size_t(c)]) == 2 &&
            std::abs(slit_midpoint(hs[size_t(s)]) - slit_midpoint(hs[size_t(c)])) == 1)
          return true;
    }
    return false;
  };
  return has_side(1) && has_side(3);
}

// Reason string for a fixture-backed certificate found through a hole subset.
std::string route_reason(const Polyomino& p, const std::set<int>& subset) {
  if (subset.size() == 2) return "cor:bigslitsonly";
  bool mixed = false;
  for (int i : subset)
    mixed |= p.holes()[size_t(i)].axis != p.holes()[size_t(*subset.begin())].axis;
  return mixed ? "lem:3slitHorizontal" : "thm:4byn";
}

// The slit-only ladder. Assumes every hole is a 2-slit.
Verdict classify_slits(const Polyomino& p, const SearchConfig& cfg) {
  const auto& hs = p.holes();

  // Positive routes: reduce a filled sub-family to a transcribed fixture and lift.
  for (const auto& subset : fixture_route_candidates(p)) {
    Polyomino filled = fill_holes(p, subset);
    if (auto match = reduce_to_fixture(filled))
      return verdict_foldable(route_reason(p, subset), match->figure_id,
                              std::move(match->witness));
  }

  // Negative certificates. A short dimension of 3 or less forces every slit
  // parallel to it, which is the three-by-n lemma regardless of separations.
  if (std::min(p.width(), p.height()) <= 3)
    return verdict_unfoldable("lem:impossible-three-by-n");
  if (!odd_pair_exists(p)) return verdict_unfoldable("thm:slitsnonfolding");

  auto vert = slit_indices(p, Axis::Vertical);
  auto horiz = slit_indices(p, Axis::Horizontal);
  for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
    const auto& same = axis == Axis::Vertical ? vert : horiz;
    const auto& other = axis == Axis::Vertical ? horiz : vert;
    int w = axis == Axis::Vertical ? p.width() : p.height();
    if (!other.empty() || int(same.size()) != int(hs.size())) continue;
    if (w == 4) {
      // No cooperating pair (fixture routes failed) and no slit in an
      // off-central crease 1-separated from a central one on both sides: the
      // width-4 theorem rules out a folding. When the structure does exist but
      // no fixture was reached, fall through to the search instead.
      if (!quadruple_structure_exists(p, axis))
        return verdict_unfoldable("lem:impossible-four-by-n");
    }
    if (w == 5) {
      bool central_only = true;
      for (int i : same) {
        int c = slit_crease(hs[size_t(i)]);
        central_only &= (c == 2 || c == 3);
      }
      bool same_crease_even = true;
      for (size_t i = 0; i < same.size(); ++i)
        for (size_t j = i + 1; j < same.size(); ++j) {
          const auto& a = hs[size_t(same[i])];
          const auto& b = hs[size_t(same[j])];
          if (slit_crease(a) == slit_crease(b) &&
              separation_parity(a, b) == SeparationParity::Odd)
            same_crease_even = false;
        }
      if (central_only && same_crease_even)
        return verdict_unfoldable("lem:impossible-five-by-n");
    }
  }

  // Anything still undecided goes to the exhaustive search.
  return exists_onto_facemapping(p, cfg);
}

// Square/L/U family: foldable iff some pair cooperates; pair cooperation is
// decided by exhaustive search on the pair-filled polyomino.
Verdict classify_square_lu(const Polyomino& p, const SearchConfig& cfg) {
  int n = int(p.holes().size());
  if (n == 1) return verdict_unfoldable("single simple hole (prior work)", "prior-work");
  bool unknown = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Verdict v = exists_onto_facemapping(fill_holes(p, {i, j}), cfg);
      if (v.status == VerdictStatus::FacemappingExists) {
        v.reason = "thm:3holebound pair candidate {" + std::to_string(i) + "," +
                   std::to_string(j) + "}; facemapping level only";
        return v;
      }
      if (v.status == VerdictStatus::Unknown) unknown = true;
    }
  if (unknown) {
    Verdict v;
    v.status = VerdictStatus::Unknown;
    v.reason = "node limit exceeded during pair sweep";
    return v;
  }
  return verdict_unfoldable("thm:3holebound (no pair cooperates)");
}

Verdict classify_core(const Polyomino& p, const SearchConfig& cfg) {
  if (p.holes().empty() && p.removed_cells().empty() && p.cuts().empty())
    return verdict_unfoldable("lem:rectangularSection (hole-free ring bound)");

  if (auto v = match_fixture_exactly(p)) return *v;
  if (auto v = match_staircase(p)) return *v;

  bool any_square_lu = false, any_slit2 = false, any_slit1 = false;
  for (const auto& h : p.holes()) {
    any_square_lu |= h.kind == HoleKind::UnitSquare || h.kind == HoleKind::LShape ||
                     h.kind == HoleKind::UShape;
    any_slit2 |= h.kind == HoleKind::Slit2;
    any_slit1 |= h.kind == HoleKind::Slit1;
  }
  if (any_slit1) {
    if (!cfg.slit1_inert) return exists_onto_facemapping(p, cfg);
    std::set<int> keep;
    for (int i = 0; i < int(p.holes().size()); ++i)
      if (p.holes()[size_t(i)].kind != HoleKind::Slit1) keep.insert(i);
    Verdict v = classify_core(fill_holes(p, keep), cfg);
    if (v.status == VerdictStatus::UnfoldableCertified)
      v.reason += " (1-slits assumed inert)";
    return v;
  }

  if (any_slit2 && !any_square_lu) return classify_slits(p, cfg);
  if (any_square_lu && !any_slit2) return classify_square_lu(p, cfg);

  // Mixed families: try cooperating slit sub-families first, then search.
  for (const auto& subset : fixture_route_candidates(p)) {
    Polyomino filled = fill_holes(p, subset);
    if (auto match = reduce_to_fixture(filled))
      return verdict_foldable(route_reason(p, subset), match->figure_id,
                              std::move(match->witness));
  }
  return exists_onto_facemapping(p, cfg);
}

}  // namespace

Verdict classify(const Polyomino& p, const SearchConfig& cfg) {
  if (p.is_raw() || p.holes().empty()) {
    auto specs = recognize_simple_holes(p);
    if (!specs) {
      // A hole beyond the five simple holes always admits a folding.
      Verdict v;
      v.status = VerdictStatus::FoldableCertified;
      v.reason = "hole larger than the five simple holes (prior work)";
      v.provenance = "prior-work";
      return v;
    }
    if (!specs->empty() || p.is_raw())
      return classify_core(Polyomino::build(p.width(), p.height(), *specs), cfg);
  }
  return classify_core(p, cfg);
}

CoopResult cooperates(const Polyomino& p_in, const std::set<int>& holes,
                      const SearchConfig& cfg) {
  Verdict v = classify(fill_holes(with_hole_list(p_in), holes), cfg);
  switch (v.status) {
    case VerdictStatus::FoldableCertified:
      // fixture-backed witnesses name the figure, theorem-only ones the result
      if (v.provenance.rfind("fig", 0) == 0)
        return {Cooperation::Yes, "fixture:" + v.provenance};
      return {Cooperation::Yes, "theorem:" + v.provenance};
    case VerdictStatus::UnfoldableCertified: return {Cooperation::No, v.reason};
    case VerdictStatus::FacemappingExists:
      return {Cooperation::NecessaryOnly, "search-necessary-only"};
    case VerdictStatus::Unknown: return {Cooperation::Unknown, v.reason};
  }
  return {Cooperation::Unknown, "?"};
}

CooperationReport minimally_cooperating_sets(const Polyomino& p_in, int max_set_size,
                                             const SearchConfig& cfg) {
  Polyomino p = with_hole_list(p_in);
  int n = int(p.holes().size());
  if (n > 12) throw GuardExceeded("minimally_cooperating_sets: more than 12 holes");
  max_set_size = std::min(max_set_size, n);

  CooperationReport report;
  std::map<std::set<int>, CoopResult> memo;
  auto is_coop = [](Cooperation c) {
    return c == Cooperation::Yes || c == Cooperation::NecessaryOnly;
  };

  std::vector<std::set<int>> by_size;
  std::function<void(std::set<int>&, int, int)> gen = [&](std::set<int>& cur, int next,
                                                          int want) {
    if (int(cur.size()) == want) {
      by_size.push_back(cur);
      return;
    }
    for (int i = next; i < n; ++i) {
      cur.insert(i);
      gen(cur, i + 1, want);
      cur.erase(i);
    }
  };
  for (int size = 0; size <= max_set_size; ++size) {
    std::set<int> cur;
    gen(cur, 0, size);
  }

  for (const auto& s : by_size) {
    // Monotonicity: a superset of a cooperating set cooperates.
    const std::set<int>* covering = nullptr;
    for (const auto& [sub, res] : memo) {
      if (!is_coop(res.value) || sub.size() >= s.size()) continue;
      if (std::includes(s.begin(), s.end(), sub.begin(), sub.end())) {
        covering = &sub;
        break;
      }
    }
    CoopResult res;
    if (covering) {
      res = {memo.at(*covering).value, "superset of a cooperating set"};
    } else {
      res = cooperates(p, s, cfg);
    }
    memo[s] = res;
    if (is_coop(res.value)) {
      CooperationEntry e;
      e.holes.assign(s.begin(), s.end());
      e.value = res.value;
      e.provenance = res.provenance;
      report.cooperating_sets.push_back(e);
      if (!covering) {
        // Re-check minimality against every proper subset.
        bool minimal = true;
        for (const auto& [sub, sub_res] : memo)
          if (sub.size() < s.size() && is_coop(sub_res.value) &&
              std::includes(s.begin(), s.end(), sub.begin(), sub.end()))
            minimal = false;
        if (minimal) report.minimal_sets.push_back(e);
      }
    }
    if (res.value == Cooperation::Unknown) report.any_unknown = true;
  }
  return report;
}

}  // namespace foldlab
