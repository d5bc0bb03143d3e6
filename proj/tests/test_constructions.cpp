#include "foldlab/constructions.hpp"

#include <set>

#include "doctest.h"

using namespace foldlab;

TEST_CASE("fixture corpus inventory") {
  const auto& all = fixtures();
  CHECK(all.size() == 30);
  int fig5 = 0, fig6 = 0, fig7 = 0;
  for (const auto& f : all) {
    if (f.figure_id.rfind("fig5", 0) == 0) ++fig5;
    if (f.figure_id.rfind("fig6", 0) == 0) ++fig6;
    if (f.figure_id.rfind("fig7", 0) == 0) ++fig7;
  }
  CHECK(fig5 == 7);
  CHECK(fig6 == 13);
  CHECK(fig7 == 6);
  CHECK(find_fixture("fig2") != nullptr);
  CHECK(find_fixture("fig3") != nullptr);
  CHECK(find_fixture("fig8") != nullptr);
  CHECK(find_fixture("fig9") != nullptr);
  CHECK(find_fixture("nope") == nullptr);
}

TEST_CASE("fig5a is the 4x7 aligned-slit polyomino") {
  const Fixture* f = find_fixture("fig5a");
  REQUIRE(f);
  CHECK(f->polyomino.width() == 4);
  CHECK(f->polyomino.height() == 7);
  REQUIRE(f->polyomino.holes().size() == 2);
  for (const auto& h : f->polyomino.holes()) {
    CHECK(h.kind == HoleKind::Slit2);
    CHECK(h.axis == Axis::Vertical);
    CHECK(h.x == 1);
  }
  CHECK(f->layer_labels.has_value());
}

TEST_CASE("fig3 face labels: frozen spot checks") {
  const Fixture* f = find_fixture("fig3");
  REQUIRE(f);
  // top row then bottom row, as printed
  CHECK(f->face_labels.at({0, 4}) == 1);
  CHECK(f->face_labels.at({1, 4}) == 1);
  CHECK(f->face_labels.at({2, 4}) == 5);
  CHECK(f->face_labels.at({3, 4}) == 5);
  CHECK(f->face_labels.at({0, 2}) == 4);
  CHECK(f->face_labels.at({1, 1}) == 2);
  CHECK(f->face_labels.at({0, 0}) == 1);
  std::set<int> used;
  for (const auto& [c, v] : f->face_labels) used.insert(v);
  CHECK(used == std::set<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("every fixture verifies") {
  for (const auto& f : fixtures()) {
    if (f.figure_id == "fig8") continue;  // exercised in the acceptance suite (search-based)
    FixtureReport r = verify_fixture(f);
    INFO(f.figure_id);
    CHECK(r.all_pass);
  }
}

TEST_CASE("fig2 declares five covered faces") {
  const Fixture* f = find_fixture("fig2");
  CHECK(f->declared_coverage == 5);
  CHECK(covered_faces(fixture_facemapping(*f)).size() == 5);
}

TEST_CASE("a corrupted face digit fails verification") {
  Fixture broken = *find_fixture("fig5a");
  // face 3 next to face 5 across an attached edge cannot happen (not adjacent
  // through a flip, and the corrupted digit breaks the roll relation too)
  broken.face_labels[{1, 0}] = broken.face_labels[{1, 0}] == 1 ? 2 : 1;
  FixtureReport r = verify_fixture(broken);
  CHECK_FALSE(r.all_pass);
}

TEST_CASE("fig5 fixtures: the two slits are odd-separated") {
  for (char c = 'a'; c <= 'g'; ++c) {
    const Fixture* f = find_fixture(std::string("fig5") + c);
    REQUIRE(f);
    REQUIRE(f->polyomino.holes().size() == 2);
    CHECK(separation_parity(f->polyomino.holes()[0], f->polyomino.holes()[1]) ==
          SeparationParity::Odd);
  }
}

TEST_CASE("generate_staircase") {
  CHECK_THROWS_AS(generate_staircase(0), std::invalid_argument);
  Polyomino k1 = generate_staircase(1);
  CHECK(k1.width() == 6);
  CHECK(k1.height() == 4);
  CHECK(k1.holes().size() == 3);

  Polyomino k2 = generate_staircase(2);
  CHECK(k2 == find_fixture("fig9")->polyomino);
  for (int k = 1; k <= 5; ++k)
    CHECK(generate_staircase(k).holes().size() == size_t(2 * k + 1));
}

TEST_CASE("staircase witness is consistent and onto; k=2 equals the printed labels") {
  CHECK(staircase_witness(2) == find_fixture("fig9")->face_labels);
  for (int k = 1; k <= 3; ++k) {
    Polyomino p = generate_staircase(k);
    auto fm = infer_orientations(p, staircase_witness(k));
    REQUIRE(fm.has_value());
    CHECK(is_consistent(p, *fm));
    CHECK(covered_faces(*fm).size() == 6);
  }
}

TEST_CASE("staircase witness folds every hole non-trivially at k=1") {
  Polyomino p = generate_staircase(1);
  auto fm = infer_orientations(p, staircase_witness(1));
  REQUIRE(fm.has_value());
  for (int i = 0; i < int(p.holes().size()); ++i)
    CHECK(hole_fold_class(p, *fm, i) != HoleFoldClass::Trivial);
}

TEST_CASE("fixture text round trip") {
  for (const char* id : {"fig3", "fig5a", "fig9", "fig2"}) {
    const Fixture* f = find_fixture(id);
    REQUIRE(f);
    std::string text = serialize_fixture(*f);
    Fixture back = parse_fixture(text, f->figure_id, f->declared_coverage);
    CHECK(back.polyomino == f->polyomino);
    CHECK(back.face_labels == f->face_labels);
    CHECK(back.layer_labels == f->layer_labels);
  }
}

TEST_CASE("fixture parsing rejects truncated grid blocks") {
  CHECK_THROWS_AS((void)parse_fixture("poly 2 2\nfaces:\n1 1\n", "x", 6), SyntaxError);
  CHECK_THROWS_AS((void)parse_fixture("poly 2 2\nfaces:\n1\n1 1\n", "x", 6), SyntaxError);
}
