#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foldlab/constructions.hpp"
#include "foldlab/engine.hpp"
#include "foldlab/grid.hpp"

namespace foldlab {

// Smallest cell rectangle in which the given holes' expansions are strictly
// interior (so the holes are holes of that sub-polyomino).
struct Support {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  friend bool operator==(const Support&, const Support&) = default;
  bool overlaps(const Support& o) const {
    return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
  }
};

Support support(const Polyomino& p, const std::set<int>& hole_indices);

struct WrongFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The theorem ladder. Applies, in order: prior-work big-hole rule, the hole-free
// ring bound, the slit family classifiers (with fixture witnesses built by
// contraction/crop reduction and lifting), the square/L/U pair theorem, the
// staircase family, and finally exhaustive search.
Verdict classify(const Polyomino& p, const SearchConfig& cfg = {});

enum class Cooperation : std::uint8_t { Yes, No, NecessaryOnly, Unknown };
const char* to_string(Cooperation c);

struct CoopResult {
  Cooperation value = Cooperation::Unknown;
  std::string provenance;
};

// Does the polyomino fold with every hole outside `holes` folded trivially?
// Evaluates classify(fill_holes(p, holes)). Raw polyominoes are admitted when
// their cuts form simple holes; indices then follow recognize_simple_holes
// order.
CoopResult cooperates(const Polyomino& p, const std::set<int>& holes,
                      const SearchConfig& cfg = {});

struct CooperationEntry {
  std::vector<int> holes;  // sorted indices
  Cooperation value = Cooperation::Unknown;
  std::string provenance;
};

struct CooperationReport {
  std::vector<CooperationEntry> cooperating_sets;
  std::vector<CooperationEntry> minimal_sets;
  bool any_unknown = false;
};

// Subset sweep in increasing size with monotonicity pruning; minimal sets are
// re-checked against all proper subsets. Guard: at most 12 holes.
CooperationReport minimally_cooperating_sets(const Polyomino& p, int max_set_size,
                                             const SearchConfig& cfg = {});

// Slit-family helpers (WrongFamily when non-slit holes are present).
bool odd_pair_exists(const Polyomino& p);
// Hole indices (left-crease slit, central slit, right-crease slit, central
// slit) with the 1-separation structure, for width-4 polyominoes; the four
// holes are distinct.
std::optional<std::array<int, 4>> four_by_n_quadruple(const Polyomino& p);

// One reduction step recorded by the fixture matcher.
struct ReductionOp {
  bool crop = false;  // otherwise a two-line band contraction
  BandAxis axis = BandAxis::Rows;
  int index = 0;      // band position (contractions)
  bool high = false;  // cropped side (crops)
};

struct FixtureMatch {
  std::string figure_id;
  GridTransform transform;          // fixture -> matched shape
  std::vector<ReductionOp> ops;     // applied to the input, in order
  Facemapping witness;              // lifted back onto the input
};

// Reduces `p` by crops and plain-band contractions to a D4 image of a foldable
// fixture, then lifts the fixture folding back up. Nullopt when unreachable.
std::optional<FixtureMatch> reduce_to_fixture(const Polyomino& p);

}  // namespace foldlab
