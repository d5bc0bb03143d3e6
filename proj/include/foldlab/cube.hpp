#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace foldlab {

// Cube vertices are labeled 0..7; bit i of the id is the coordinate along axis i,
// so vertex v sits at (v&1, v>>1&1, v>>2&1).
using CubeVertex = std::uint8_t;

// Face labels 1..6. Opposite pairs are (1,4), (2,6), (3,5): 1 is the face touched by
// the canonical placement, 3 lies right of it, 2 behind it, and 4/5/6 are their
// opposites.
using FaceLabel = int;

enum class Dir : std::uint8_t { Left, Right, Up, Down };
enum class FoldAngle : std::uint8_t { Fold90, Fold180 };

inline constexpr std::array<Dir, 4> kAllDirs{Dir::Left, Dir::Right, Dir::Up, Dir::Down};

Dir opposite(Dir d);
const char* to_string(Dir d);
const char* to_string(FoldAngle a);

// Where one cell of the polyomino lands on the cube: the images of its
// bottom-left, bottom-right, top-right and top-left corners, in that order.
// The tuple is always a corner cycle of one cube face; both handednesses occur
// (reflected placements arise from 180-degree folds), giving 48 placements total.
struct Placement {
  std::array<CubeVertex, 4> corner{};  // bl, br, tr, tl

  CubeVertex bl() const { return corner[0]; }
  CubeVertex br() const { return corner[1]; }
  CubeVertex tr() const { return corner[2]; }
  CubeVertex tl() const { return corner[3]; }

  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

std::ostream& operator<<(std::ostream&, const Placement&);

bool is_valid_placement(const Placement& p);

// The face whose vertex set equals p's corners.
FaceLabel face_of(const Placement& p);

// True when the corner cycle bl->br->tr->tl runs counterclockwise as seen from
// outside the cube. Rolls preserve this sign, flips negate it.
bool orientation_preserving(const Placement& p);

// 90-degree fold: the neighbor cell in direction d tips over the shared edge onto
// the adjacent cube face. The two shared corners keep their images.
Placement roll(const Placement& p, Dir d);

// 180-degree fold: the neighbor cell folds back onto the same face, mirrored.
Placement flip(const Placement& p, Dir d);

Placement apply_fold(const Placement& p, Dir d, FoldAngle a);

// Placement of the cell anchored at face 1 with axis-aligned corners [0,1,3,2].
Placement canonical_placement();

// All 48 valid placements, sorted; index order is stable across runs.
const std::vector<Placement>& all_placements();

// Compact index 0..47 of a placement within all_placements().
int placement_index(const Placement& p);
const Placement& placement_from_index(int idx);

// Table-driven transitions over compact indices.
int roll_index(int p, Dir d);
int flip_index(int p, Dir d);
int apply_fold_index(int p, Dir d, FoldAngle a);

}  // namespace foldlab
