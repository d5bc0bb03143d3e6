#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace foldlab {

struct CellCoord {
  int x = 0;
  int y = 0;
  friend bool operator==(const CellCoord&, const CellCoord&) = default;
  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

std::ostream& operator<<(std::ostream&, const CellCoord&);

enum class Axis : std::uint8_t { Vertical, Horizontal };

// A unit segment of the grid, identified by its lower/left endpoint.
// Vertical: from (x,y) to (x,y+1), separating cells (x-1,y) and (x,y).
// Horizontal: from (x,y) to (x+1,y), separating cells (x,y-1) and (x,y).
// The same coordinates name both cut segments and creases.
struct CutSegment {
  Axis axis = Axis::Vertical;
  int x = 0;
  int y = 0;
  friend bool operator==(const CutSegment&, const CutSegment&) = default;
  friend auto operator<=>(const CutSegment&, const CutSegment&) = default;
};

using GridSegment = CutSegment;

std::ostream& operator<<(std::ostream&, const CutSegment&);

enum class HoleKind : std::uint8_t { UnitSquare, LShape, UShape, Slit2, Slit1 };
enum class Rotation : std::uint8_t { R0, R90, R180, R270 };

// One of the five simple holes, placed on the grid.
//
// Anchors: UnitSquare anchors at the removed cell. Slits anchor at the lower/left
// endpoint vertex of their cut (a Slit2 covers two collinear unit cuts from there).
// LShape anchors at the shared vertex of its two perpendicular arm cuts; at R0 the
// arms run right and up, rotations turn counterclockwise, `flipped` mirrors the
// arms across the vertical line through the anchor before rotating. UShape anchors
// at its flap cell; at R0 the flap is cut free on the bottom, left and right and
// stays attached above, rotations turn the attachment counterclockwise.
struct HoleSpec {
  HoleKind kind = HoleKind::UnitSquare;
  int x = 0;
  int y = 0;
  Rotation rot = Rotation::R0;
  bool flipped = false;
  Axis axis = Axis::Vertical;

  friend bool operator==(const HoleSpec&, const HoleSpec&) = default;
};

struct HoleExpansion {
  std::vector<CellCoord> removed;
  std::vector<CutSegment> cuts;
};

HoleExpansion expand_hole(const HoleSpec& h);

enum class SeparationParity : std::uint8_t { Even, Odd, Incomparable };

// Parity of the distance between two same-axis slit midpoints; Incomparable for
// axis-mixed or non-slit pairs.
SeparationParity separation_parity(const HoleSpec& a, const HoleSpec& b);

// Midpoint coordinate of a slit along its own axis (a grid-line coordinate).
int slit_midpoint(const HoleSpec& h);
// The grid line the slit's cuts lie on (x for vertical slits, y for horizontal).
int slit_crease(const HoleSpec& h);

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OverlapError : BuildError {
  using BuildError::BuildError;
};
struct BoundaryError : BuildError {
  using BuildError::BuildError;
};
struct DisconnectedError : BuildError {
  using BuildError::BuildError;
};
struct NotPlainError : BuildError {
  using BuildError::BuildError;
};

struct SyntaxError : std::runtime_error {
  int line;
  std::string token;
  SyntaxError(int line_, std::string token_, const std::string& what_);
};

// A rectangular polyomino with holes given as removed cells and cut edges.
// Immutable after construction; all invariants hold by construction.
class Polyomino {
 public:
  // An empty placeholder; real instances come from build()/from_raw()/parse.
  Polyomino() = default;

  // Expands and validates hole specs.
  static Polyomino build(int width, int height, std::vector<HoleSpec> holes);
  // Raw mode: arbitrary cut/removed-cell sets; `holes()` stays empty.
  static Polyomino from_raw(int width, int height, std::vector<CellCoord> removed,
                            std::vector<CutSegment> cuts);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<HoleSpec>& holes() const { return holes_; }
  const std::set<CellCoord>& removed_cells() const { return removed_; }
  const std::set<CutSegment>& cuts() const { return cuts_; }
  bool is_raw() const { return holes_.empty() && !(removed_.empty() && cuts_.empty()); }

  bool in_bounds(CellCoord c) const {
    return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
  }
  bool cell_present(CellCoord c) const { return in_bounds(c) && !removed_.count(c); }
  bool is_cut(const CutSegment& s) const { return cuts_.count(s) != 0; }

  // True when the segment separates two present cells and is not cut.
  bool edge_attached(const GridSegment& e) const;
  // The two cells the segment separates; first is the left/lower cell.
  std::pair<CellCoord, CellCoord> edge_cells(const GridSegment& e) const;

  // Present cells in (x, then y) order.
  std::vector<CellCoord> cells() const;
  // All attached interior edges, sorted.
  std::vector<GridSegment> attached_edges() const;
  int cell_count() const;

  friend bool operator==(const Polyomino& a, const Polyomino& b);

 private:
  void validate() const;

  int width_ = 0;
  int height_ = 0;
  std::set<CellCoord> removed_;
  std::set<CutSegment> cuts_;
  std::vector<HoleSpec> holes_;
};

// Reinstates every hole whose index is not in `keep`.
Polyomino fill_holes(const Polyomino& p, const std::set<int>& keep);

enum class BandAxis : std::uint8_t { Rows, Columns };

// Deletes the two adjacent rows (columns) at index, index+1. The band must be
// plain: no removed cell or cut inside it and none on its three bounding creases.
// Any facemapping of the result lifts to one of the input (lift_contraction).
Polyomino contract_plain_band(const Polyomino& p, BandAxis axis, int index);
bool band_is_plain(const Polyomino& p, BandAxis axis, int index);

// Deletes one boundary row/column (low = row 0 / column 0, high = the last one).
// The line must carry no hole structure and no hole may touch the resulting
// boundary. Any facemapping of the result lifts by folding the line back on at
// 180 degrees (lift_crop).
Polyomino crop_boundary_line(const Polyomino& p, BandAxis axis, bool high_side);
bool boundary_line_croppable(const Polyomino& p, BandAxis axis, bool high_side);

// Grid text format (one item per line, '#' comments):
//   poly <width> <height>
//   hole square <x> <y>
//   hole slit2 <v|h> <x> <y>
//   hole slit1 <v|h> <x> <y>
//   hole L <x> <y> <r0|r90|r180|r270> [flip]
//   hole U <x> <y> <r0|r90|r180|r270>
//   cut <v|h> <x> <y>
//   remove <x> <y>
Polyomino parse_polyomino(std::string_view text);
std::string serialize(const Polyomino& p);

// Groups raw cuts/removed cells into hole curves and matches them against the
// five simple shapes. Returns the specs in a deterministic order, or nullopt if
// some hole is not simple. Polyominoes built from specs return their own list.
std::optional<std::vector<HoleSpec>> recognize_simple_holes(const Polyomino& p);

}  // namespace foldlab
