#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foldlab/engine.hpp"
#include "foldlab/grid.hpp"

namespace foldlab {

// A transcribed figure: the polyomino, the printed face digits, and the printed
// layer digits where the figure carries them. Fixtures with declared_coverage 0
// print no folding and are verified as negative examples instead.
struct Fixture {
  std::string figure_id;
  Polyomino polyomino;
  FaceLabelMap face_labels;
  std::optional<LayerMapping> layer_labels;  // 1-based
  int declared_coverage = 6;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view figure_id);

// The facemapping induced by the fixture's face labels (cached orientation
// inference). Throws if the fixture has no labels or inference fails.
const Facemapping& fixture_facemapping(const Fixture& f);

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FixtureReport {
  std::string figure_id;
  std::vector<FixtureCheck> checks;
  bool all_pass = false;
};

// Runs orientation inference, consistency, coverage, layer bijectivity and
// per-hole fold classes; for label-free fixtures, verifies the declared
// negative result by exhaustive search.
FixtureReport verify_fixture(const Fixture& f);

// The 4 x (4k+2) family with two unit-square holes and 2k-1 alternating
// horizontal 2-slits; its 2k+1 holes cooperate minimally.
Polyomino generate_staircase(int k);

// Face labels of the periodic witness folding: the fig9 caps with the 4-column
// middle period repeated k-1 times. Consistent and onto for every k >= 1.
FaceLabelMap staircase_witness(int k);

// Fixture text: the grid format followed by 'faces:' and optional 'layers:'
// blocks, one row per line, top row first, '.' for removed cells.
Fixture parse_fixture(std::string_view text, std::string figure_id, int declared_coverage = 6);
std::string serialize_fixture(const Fixture& f);

}  // namespace foldlab
