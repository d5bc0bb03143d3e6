#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "foldlab/cube.hpp"
#include "foldlab/grid.hpp"

namespace foldlab {

// Total assignment of cells to cube placements; the facemapping phi.
class Facemapping {
 public:
  Facemapping() = default;
  Facemapping(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool has(CellCoord c) const;
  Placement at(CellCoord c) const;
  int index_at(CellCoord c) const;  // -1 when absent
  void set(CellCoord c, const Placement& p);
  void set_index(CellCoord c, int placement_idx);
  void unset(CellCoord c);

  friend bool operator==(const Facemapping&, const Facemapping&) = default;
  friend auto operator<=>(const Facemapping&, const Facemapping&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int8_t> idx_;  // placement index or -1
};

using LayerMapping = std::map<CellCoord, int>;
using FaceLabelMap = std::map<CellCoord, FaceLabel>;

// Partial assignment of fold angles to attached interior creases.
using CreaseAssignment = std::map<GridSegment, FoldAngle>;

enum class HoleFoldClass : std::uint8_t {
  Trivial,
  SlitFlap,
  SlitRing,
  SquareNontrivial,
  LNontrivial,
  UAsUnitSquare,
  UTFolded,
};
const char* to_string(HoleFoldClass c);

struct SearchConfig {
  bool enumerate_all = false;
  std::uint64_t node_limit = 100'000'000;
  bool use_lemma_pruning = true;
  bool parallel = false;
  // Treat length-1 slits as never changing foldability (classifier only).
  bool slit1_inert = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t emitted = 0;
  bool node_limit_hit = false;
  double seconds = 0.0;
};

enum class VerdictStatus : std::uint8_t {
  UnfoldableCertified,
  FoldableCertified,
  FacemappingExists,
  Unknown,
};
const char* to_string(VerdictStatus s);

// Tiered result. FoldableCertified carries a witness whose provenance is a
// fixture, a fixture reachable by lifting, or the staircase generator; a bare
// search witness only ever yields FacemappingExists.
struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::string reason;       // lemma/theorem identifier or short explanation
  std::string provenance;   // fixture id, generator name, or "search"
  std::optional<Facemapping> witness;
  std::optional<LayerMapping> witness_layers;
  SearchStats stats;
};

struct InconsistentEdge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NodeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True iff every attached edge satisfies the roll-or-flip relation.
bool is_consistent(const Polyomino& p, const Facemapping& fm);

// Fold180 iff the two placements share a face; Fold90 for a roll relation.
// Throws InconsistentEdge when neither holds or the edge is not attached.
FoldAngle implied_angle(const Polyomino& p, const Facemapping& fm, const GridSegment& edge);

std::set<FaceLabel> covered_faces(const Facemapping& fm);

// Per-face layer values must be exactly {1..k}. Accepts 0-based fixture data by
// normalizing each face's values by their minimum.
bool check_layers(const Polyomino& p, const Facemapping& fm, const LayerMapping& lm);

// Classifies how hole `hole_index` folds under fm (Def-2.3 triviality, the
// flap/ring split for slits, the two U-hole regimes).
HoleFoldClass hole_fold_class(const Polyomino& p, const Facemapping& fm, int hole_index);

// Runs the crease-propagation rules to fixpoint; nullopt on conflict.
// Rules: collinear equality and one-all-180 inside hole-free blocks, fold
// propagation across slit ends and through slit centers, and the no-crossing-90
// rule for ring-folded slits.
std::optional<CreaseAssignment> propagate(const Polyomino& p, const CreaseAssignment& partial);

// Depth-first search over crease angles with placement derivation. The anchor
// cell (least (x,y) present cell) is pinned to canonical_placement(); emits every
// consistent anchored facemapping. The callback returns false to stop early.
// With cfg.enumerate_all == false the search stops after the first onto
// facemapping it emits.
using EmitFn = std::function<bool(const Facemapping&)>;
SearchStats search_facemappings(const Polyomino& p, const SearchConfig& cfg, const EmitFn& emit);

std::vector<Facemapping> search_all(const Polyomino& p, SearchConfig cfg = {});

// UnfoldableCertified when the exhaustive search finishes empty,
// FacemappingExists on a witness, Unknown on node limit.
Verdict exists_onto_facemapping(const Polyomino& p, const SearchConfig& cfg = {});

// A consistent facemapping whose face_of projection equals the labels, or
// nullopt. The anchor cell tries the eight orientations of its labeled face.
std::optional<Facemapping> infer_orientations(const Polyomino& p, const FaceLabelMap& labels);

// Re-inserts the two lines deleted by contract_plain_band(parent, axis, index)
// as 180-degree-folded copies. The result is consistent on `parent` and covers
// the same faces.
Facemapping lift_contraction(const Polyomino& parent, BandAxis axis, int index,
                             const Facemapping& reduced);

// True when the line is complete and free of cuts along it, so a neighboring
// inserted line can be derived as its 180-degree fold.
bool line_supports_fold_derivation(const Polyomino& p, BandAxis axis, int line);

// Re-inserts the single boundary line deleted by crop_boundary_line as a
// 180-degree fold of the line next to it.
Facemapping lift_crop(const Polyomino& parent, BandAxis axis, bool high_side,
                      const Facemapping& reduced);

// D4 transforms of polyominoes and facemappings; witnesses transported with
// transform_facemapping stay consistent.
struct GridTransform {
  bool transpose = false;   // applied first: (x,y) -> (y,x)
  bool mirror_x = false;    // then x -> w-1-x
  bool mirror_y = false;    // then y -> h-1-y
};
const std::array<GridTransform, 8>& all_grid_transforms();
CellCoord transform_cell(const GridTransform& t, int w, int h, CellCoord c);
Polyomino transform_polyomino(const GridTransform& t, const Polyomino& p);
Facemapping transform_facemapping(const GridTransform& t, const Polyomino& source,
                                  const Facemapping& fm);

}  // namespace foldlab
