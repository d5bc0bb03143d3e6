#include "foldlab/cube.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace foldlab {

namespace {

bool vertices_adjacent(CubeVertex a, CubeVertex b) {
  unsigned d = a ^ b;
  return d == 1 || d == 2 || d == 4;
}

// The six faces as vertex bitmasks, indexed by label.
constexpr std::array<std::uint8_t, 7> kFaceMask = {
    0,
    0x0F,  // 1: z=0, the canonical bottom
    0xCC,  // 2: y=1
    0xAA,  // 3: x=1
    0xF0,  // 4: z=1
    0x55,  // 5: x=0
    0x33,  // 6: y=0
};

std::uint8_t vertex_mask(const Placement& p) {
  std::uint8_t m = 0;
  for (CubeVertex v : p.corner) m |= std::uint8_t(1u << v);
  return m;
}

// Corners kept by a fold across the edge in direction d, and the corner slots
// they occupy in the neighbor placement. Slot order within Placement::corner is
// bl=0, br=1, tr=2, tl=3.
struct EdgeRoles {
  int keep0, keep1;  // corner slots of p on the shared edge
  int into0, into1;  // slots they occupy in the neighbor
  int far0, far1;    // the neighbor's remaining slots; far0 is cycle-adjacent to into0
};

EdgeRoles edge_roles(Dir d) {
  switch (d) {
    case Dir::Right: return {1, 2, 0, 3, 1, 2};  // (br,tr) -> (bl,tl)
    case Dir::Left: return {0, 3, 1, 2, 0, 3};   // (bl,tl) -> (br,tr)
    case Dir::Up: return {3, 2, 0, 1, 3, 2};     // (tl,tr) -> (bl,br)
    case Dir::Down: return {0, 1, 3, 2, 0, 1};   // (bl,br) -> (tl,tr)
  }
  throw std::logic_error("bad Dir");
}

// Slot adjacency within the corner cycle bl-br-tr-tl.
[[maybe_unused]] bool slots_adjacent(int a, int b) {
  int d = (a - b + 4) % 4;
  return d == 1 || d == 3;
}

}  // namespace

Dir opposite(Dir d) {
  switch (d) {
    case Dir::Left: return Dir::Right;
    case Dir::Right: return Dir::Left;
    case Dir::Up: return Dir::Down;
    case Dir::Down: return Dir::Up;
  }
  throw std::logic_error("bad Dir");
}

const char* to_string(Dir d) {
  switch (d) {
    case Dir::Left: return "left";
    case Dir::Right: return "right";
    case Dir::Up: return "up";
    case Dir::Down: return "down";
  }
  return "?";
}

const char* to_string(FoldAngle a) { return a == FoldAngle::Fold90 ? "90" : "180"; }

std::ostream& operator<<(std::ostream& os, const Placement& p) {
  os << '[' << int(p.bl()) << ',' << int(p.br()) << ',' << int(p.tr()) << ',' << int(p.tl())
     << ']';
  return os;
}

bool is_valid_placement(const Placement& p) {
  std::uint8_t m = vertex_mask(p);
  bool on_face = false;
  for (int f = 1; f <= 6; ++f) on_face |= (m == kFaceMask[f]);
  if (!on_face) return false;
  for (int i = 0; i < 4; ++i)
    if (!vertices_adjacent(p.corner[i], p.corner[(i + 1) % 4])) return false;
  return true;
}

FaceLabel face_of(const Placement& p) {
  std::uint8_t m = vertex_mask(p);
  for (int f = 1; f <= 6; ++f)
    if (m == kFaceMask[f]) return f;
  throw std::invalid_argument("face_of: not a placement");
}

bool orientation_preserving(const Placement& p) {
  // Walk bl -> br -> tr and take the sign of the (axis-aligned) cross product
  // against the outward normal of the face.
  auto coords = [](CubeVertex v) {
    return std::array<int, 3>{int(v & 1), int((v >> 1) & 1), int((v >> 2) & 1)};
  };
  auto a = coords(p.bl()), b = coords(p.br()), c = coords(p.tr());
  std::array<int, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  std::array<int, 3> v{c[0] - b[0], c[1] - b[1], c[2] - b[2]};
  std::array<int, 3> n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                       u[0] * v[1] - u[1] * v[0]};
  // Outward normal points away from the cube center (1/2,1/2,1/2).
  std::array<int, 3> out{4 * (a[0] + b[0] + c[0]) - 6, 4 * (a[1] + b[1] + c[1]) - 6,
                         4 * (a[2] + b[2] + c[2]) - 6};
  int dot = n[0] * out[0] + n[1] * out[1] + n[2] * out[2];
  assert(dot != 0);
  return dot > 0;
}

Placement roll(const Placement& p, Dir d) {
  EdgeRoles r = edge_roles(d);
  CubeVertex e0 = p.corner[r.keep0], e1 = p.corner[r.keep1];
  // The unique other face containing the shared edge.
  std::uint8_t cur = vertex_mask(p);
  std::uint8_t target = 0;
  for (int f = 1; f <= 6; ++f) {
    std::uint8_t m = kFaceMask[f];
    if (m != cur && (m & (1u << e0)) && (m & (1u << e1))) target = m;
  }
  assert(target != 0);
  CubeVertex rest[2];
  int k = 0;
  for (CubeVertex v = 0; v < 8; ++v)
    if ((target & (1u << v)) && v != e0 && v != e1) rest[k++] = v;
  Placement q{};
  q.corner[r.into0] = e0;
  q.corner[r.into1] = e1;
  // far0 is cycle-adjacent to into0, so it gets the rest-vertex adjacent to e0.
  bool first_next_to_e0 = vertices_adjacent(rest[0], e0);
  assert(slots_adjacent(r.far0, r.into0));
  q.corner[r.far0] = first_next_to_e0 ? rest[0] : rest[1];
  q.corner[r.far1] = first_next_to_e0 ? rest[1] : rest[0];
  assert(is_valid_placement(q));
  return q;
}

Placement flip(const Placement& p, Dir d) {
  if (d == Dir::Left || d == Dir::Right)
    return Placement{{p.br(), p.bl(), p.tl(), p.tr()}};
  return Placement{{p.tl(), p.tr(), p.br(), p.bl()}};
}

Placement apply_fold(const Placement& p, Dir d, FoldAngle a) {
  return a == FoldAngle::Fold90 ? roll(p, d) : flip(p, d);
}

Placement canonical_placement() { return Placement{{0, 1, 3, 2}}; }

const std::vector<Placement>& all_placements() {
  static const std::vector<Placement> all = [] {
    std::vector<Placement> v;
    Placement p{};
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c)
          for (int d = 0; d < 8; ++d) {
            p.corner = {CubeVertex(a), CubeVertex(b), CubeVertex(c), CubeVertex(d)};
            if (is_valid_placement(p)) v.push_back(p);
          }
    std::sort(v.begin(), v.end());
    return v;
  }();
  return all;
}

int placement_index(const Placement& p) {
  const auto& all = all_placements();
  auto it = std::lower_bound(all.begin(), all.end(), p);
  if (it == all.end() || *it != p) throw std::invalid_argument("placement_index: not a placement");
  return int(it - all.begin());
}

const Placement& placement_from_index(int idx) { return all_placements().at(size_t(idx)); }

namespace {

struct TransitionTables {
  // [placement][dir] for each of roll and flip
  std::array<std::array<int, 4>, 48> roll_tab{};
  std::array<std::array<int, 4>, 48> flip_tab{};

  TransitionTables() {
    const auto& all = all_placements();
    for (int i = 0; i < 48; ++i)
      for (Dir d : kAllDirs) {
        roll_tab[size_t(i)][size_t(d)] = placement_index(roll(all[size_t(i)], d));
        flip_tab[size_t(i)][size_t(d)] = placement_index(flip(all[size_t(i)], d));
      }
  }
};

const TransitionTables& tables() {
  static const TransitionTables t;
  return t;
}

}  // namespace

int roll_index(int p, Dir d) { return tables().roll_tab[size_t(p)][size_t(d)]; }
int flip_index(int p, Dir d) { return tables().flip_tab[size_t(p)][size_t(d)]; }
int apply_fold_index(int p, Dir d, FoldAngle a) {
  return a == FoldAngle::Fold90 ? roll_index(p, d) : flip_index(p, d);
}

}  // namespace foldlab
