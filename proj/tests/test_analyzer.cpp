#include "foldlab/analyzer.hpp"

#include <set>

#include "doctest.h"

using namespace foldlab;

namespace {

Polyomino vslits(int w, int h, std::vector<std::pair<int, int>> vs) {
  std::vector<HoleSpec> hs;
  for (auto [x, y] : vs) hs.push_back({HoleKind::Slit2, x, y, Rotation::R0, false, Axis::Vertical});
  return Polyomino::build(w, h, std::move(hs));
}

}  // namespace

TEST_CASE("support is the strict-interior bounding rectangle") {
  // a 2-slit needs the two adjacent columns and one row beyond each end
  Polyomino p = vslits(6, 7, {{2, 2}});
  CHECK(support(p, {0}) == Support{1, 1, 2, 4});

  // the overlapping-closure configuration: the L support reaches the square
  Polyomino lq = Polyomino::build(5, 5, {{HoleKind::LShape, 1, 1}, {HoleKind::UnitSquare, 2, 2}});
  Support l = support(lq, {0});
  Support q = support(lq, {1});
  CHECK(l.overlaps(q));
  CHECK(l == Support{0, 0, 2, 2});

  // fig3's three slits span the full interior band
  Polyomino f3 = vslits(4, 5, {{1, 2}, {3, 2}, {2, 1}});
  CHECK(support(f3, {0, 1, 2}) == Support{0, 0, 3, 4});
}

TEST_CASE("classify: hole-free and single-hole rectangles") {
  CHECK(classify(Polyomino::build(3, 3, {})).status == VerdictStatus::UnfoldableCertified);
  CHECK(classify(Polyomino::build(1, 1, {})).status == VerdictStatus::UnfoldableCertified);
  Verdict sq = classify(Polyomino::build(4, 4, {{HoleKind::UnitSquare, 1, 1}}));
  CHECK(sq.status == VerdictStatus::UnfoldableCertified);
  Verdict slit = classify(vslits(5, 5, {{2, 1}}));
  CHECK(slit.status == VerdictStatus::UnfoldableCertified);
  CHECK(slit.reason == "thm:slitsnonfolding");
}

TEST_CASE("classify: 3xn slit polyominoes never fold") {
  Verdict v = classify(vslits(3, 6, {{1, 1}, {2, 2}}));
  CHECK(v.status == VerdictStatus::UnfoldableCertified);
  CHECK(v.reason == "lem:impossible-three-by-n");
}

TEST_CASE("classify: even-separated slits are unfoldable at any size") {
  Verdict v = classify(vslits(6, 8, {{2, 1}, {2, 5}}));
  CHECK(v.status == VerdictStatus::UnfoldableCertified);
  CHECK(v.reason == "thm:slitsnonfolding");
  // and the classifier's verdict agrees with the search
  CHECK(exists_onto_facemapping(vslits(6, 8, {{2, 1}, {2, 5}})).status ==
        VerdictStatus::UnfoldableCertified);
}

TEST_CASE("classify: odd pair in a big rectangle folds via a lifted fig5 witness") {
  Polyomino p = vslits(7, 9, {{2, 2}, {4, 5}});
  Verdict v = classify(p);
  REQUIRE(v.status == VerdictStatus::FoldableCertified);
  CHECK(v.reason == "cor:bigslitsonly");
  CHECK(v.provenance.rfind("fig5", 0) == 0);
  REQUIRE(v.witness.has_value());
  CHECK(is_consistent(p, *v.witness));
  CHECK(covered_faces(*v.witness).size() == 6);
}

TEST_CASE("classify: the fig3 triple and its subsets") {
  Polyomino p = vslits(4, 5, {{1, 2}, {3, 2}, {2, 1}});
  Verdict v = classify(p);
  CHECK(v.status == VerdictStatus::FoldableCertified);
  CHECK(v.provenance == "fig3");

  CHECK(cooperates(p, {0, 1, 2}).value == Cooperation::Yes);
  CHECK(cooperates(p, {0, 1}).value == Cooperation::No);
  CHECK(cooperates(p, {0, 2}).value == Cooperation::No);
  CHECK(cooperates(p, {1, 2}).value == Cooperation::No);
  CHECK(cooperates(p, {}).value == Cooperation::No);
}

TEST_CASE("classify: width-4 negative certificate when no quadruple exists") {
  // odd pair in creases 1,2 but nothing in crease 3
  Polyomino p = vslits(4, 9, {{1, 1}, {2, 4}});
  Verdict v = classify(p);
  CHECK(v.status == VerdictStatus::UnfoldableCertified);
  CHECK(v.reason == "lem:impossible-four-by-n");
  CHECK(exists_onto_facemapping(p).status == VerdictStatus::UnfoldableCertified);
}

TEST_CASE("classify: width-5 central even case") {
  // odd pairs only across the central creases; same-crease pairs even
  Polyomino p = vslits(5, 9, {{2, 1}, {3, 4}, {2, 5}});
  Verdict v = classify(p);
  CHECK(v.status == VerdictStatus::UnfoldableCertified);
  CHECK(v.reason == "lem:impossible-five-by-n");
  CHECK(exists_onto_facemapping(p).status == VerdictStatus::UnfoldableCertified);
}

TEST_CASE("classify: width-5 slit in an outer crease cooperates with a central one") {
  // crease 1 slit odd-separated from a crease 3 slit: distance 2, always folds
  Polyomino p = vslits(5, 8, {{1, 1}, {3, 4}});
  Verdict v = classify(p);
  CHECK(v.status == VerdictStatus::FoldableCertified);
  REQUIRE(v.witness.has_value());
  CHECK(covered_faces(*v.witness).size() == 6);
}

TEST_CASE("classify: 4xn mixed slits fold via a fig6 witness") {
  // two odd-separated vertical slits in the central crease plus a horizontal slit
  std::vector<HoleSpec> hs = {{HoleKind::Slit2, 2, 2, Rotation::R0, false, Axis::Vertical},
                              {HoleKind::Slit2, 2, 5, Rotation::R0, false, Axis::Vertical},
                              {HoleKind::Slit2, 1, 1, Rotation::R0, false, Axis::Horizontal}};
  Polyomino p = Polyomino::build(4, 8, hs);
  CHECK(p == find_fixture("fig6a")->polyomino);
  Verdict v = classify(p);
  CHECK(v.status == VerdictStatus::FoldableCertified);

  // a taller variant still reduces onto the fixture
  std::vector<HoleSpec> hs2 = {{HoleKind::Slit2, 2, 4, Rotation::R0, false, Axis::Vertical},
                               {HoleKind::Slit2, 2, 7, Rotation::R0, false, Axis::Vertical},
                               {HoleKind::Slit2, 1, 1, Rotation::R0, false, Axis::Horizontal}};
  Polyomino tall = Polyomino::build(4, 10, hs2);
  Verdict v2 = classify(tall);
  CHECK(v2.status == VerdictStatus::FoldableCertified);
  CHECK(v2.reason == "lem:3slitHorizontal");
  REQUIRE(v2.witness.has_value());
  CHECK(is_consistent(tall, *v2.witness));
  CHECK(covered_faces(*v2.witness).size() == 6);
}

TEST_CASE("classify: quadruple families fold via fig7 witnesses") {
  const Fixture* f = find_fixture("fig7c");
  Verdict v = classify(f->polyomino);
  CHECK(v.status == VerdictStatus::FoldableCertified);
  CHECK(v.provenance == "fig7c");

  // widen fig7e by plain rows: still certified through the quadruple route
  Polyomino p = f->polyomino;
  std::vector<HoleSpec> hs = p.holes();
  for (auto& h : hs) h.y += 2;  // two extra plain rows at the bottom
  Polyomino taller = Polyomino::build(4, p.height() + 2, hs);
  Verdict v2 = classify(taller);
  CHECK(v2.status == VerdictStatus::FoldableCertified);
  REQUIRE(v2.witness.has_value());
  CHECK(is_consistent(taller, *v2.witness));
}

TEST_CASE("classify: non-simple holes fold by prior work") {
  Verdict v = classify(parse_polyomino("poly 6 6\ncut v 2 1\ncut v 2 2\ncut v 2 3\n"));
  CHECK(v.status == VerdictStatus::FoldableCertified);
  CHECK(v.provenance == "prior-work");
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("classify: raw cuts forming simple holes go through the ladder") {
  Verdict v = classify(parse_polyomino("poly 4 5\ncut v 1 2\ncut v 1 3\ncut v 3 2\ncut v 3 3\n"
                                       "cut v 2 1\ncut v 2 2\n"));
  CHECK(v.status == VerdictStatus::FoldableCertified);
  CHECK(v.provenance == "fig3");
}

TEST_CASE("classify: square/L/U families run the pair theorem") {
  // a cooperating square pair (facemapping level): necessary-condition tier
  Polyomino pair = Polyomino::build(5, 5, {{HoleKind::UnitSquare, 1, 1},
                                           {HoleKind::UnitSquare, 1, 3}});
  Verdict v = classify(pair);
  CHECK(v.status == VerdictStatus::FacemappingExists);
  REQUIRE(v.witness.has_value());
  CHECK(covered_faces(*v.witness).size() == 6);

  // two far-apart squares whose pair sweep is empty
  Polyomino lone = Polyomino::build(6, 6, {{HoleKind::UnitSquare, 1, 1},
                                           {HoleKind::UnitSquare, 4, 4}});
  Verdict v2 = classify(lone);
  CHECK(v2.status == VerdictStatus::UnfoldableCertified);
  CHECK(v2.reason == "thm:3holebound (no pair cooperates)");

  // the L-with-U configuration folds at facemapping level
  Polyomino lu = Polyomino::build(4, 4, {{HoleKind::LShape, 1, 1},
                                         {HoleKind::UShape, 2, 2, Rotation::R0}});
  Verdict v3 = classify(lu);
  CHECK(v3.status == VerdictStatus::FacemappingExists);
}

TEST_CASE("classify: staircase family is certified via the generator") {
  for (int k = 1; k <= 2; ++k) {
    Verdict v = classify(generate_staircase(k));
    CHECK(v.status == VerdictStatus::FoldableCertified);
    REQUIRE(v.witness.has_value());
    CHECK(covered_faces(*v.witness).size() == 6);
  }
}

TEST_CASE("slit1 holes are inert by default, honest under the flag") {
  std::vector<HoleSpec> hs = {{HoleKind::Slit2, 2, 1, Rotation::R0, false, Axis::Vertical},
                              {HoleKind::Slit2, 2, 5, Rotation::R0, false, Axis::Vertical},
                              {HoleKind::Slit1, 4, 3, Rotation::R0, false, Axis::Vertical}};
  Polyomino p = Polyomino::build(6, 8, hs);  // even-separated 2-slits plus a 1-slit
  Verdict v = classify(p);
  CHECK(v.status == VerdictStatus::UnfoldableCertified);
  CHECK(v.reason.find("1-slits assumed inert") != std::string::npos);

  SearchConfig honest;
  honest.slit1_inert = false;
  Verdict vh = classify(p, honest);
  CHECK(vh.status == VerdictStatus::UnfoldableCertified);  // the search agrees here
  CHECK(vh.provenance == "search");
}

TEST_CASE("odd_pair_exists and four_by_n_quadruple") {
  Polyomino f3 = vslits(4, 5, {{1, 2}, {3, 2}, {2, 1}});
  CHECK(odd_pair_exists(f3));
  CHECK_FALSE(four_by_n_quadruple(f3).has_value());  // needs four distinct slits

  Polyomino f7c = find_fixture("fig7c")->polyomino;
  auto quad = four_by_n_quadruple(f7c);
  REQUIRE(quad.has_value());
  std::set<int> distinct(quad->begin(), quad->end());
  CHECK(distinct.size() == 4);

  CHECK_FALSE(odd_pair_exists(vslits(6, 8, {{2, 1}, {2, 5}})));
  CHECK_THROWS_AS((void)odd_pair_exists(Polyomino::build(4, 4, {{HoleKind::UnitSquare, 1, 1}})),
                  WrongFamily);
  CHECK_FALSE(four_by_n_quadruple(vslits(6, 8, {{2, 1}, {2, 5}})).has_value());
}

TEST_CASE("minimally_cooperating_sets on fig3") {
  Polyomino p = vslits(4, 5, {{1, 2}, {3, 2}, {2, 1}});
  CooperationReport r = minimally_cooperating_sets(p, 3);
  REQUIRE(r.minimal_sets.size() == 1);
  CHECK(r.minimal_sets[0].holes == std::vector<int>{0, 1, 2});
  CHECK(r.minimal_sets[0].value == Cooperation::Yes);
  // every proper subset of the minimal set fails cooperation
  for (const auto& e : r.cooperating_sets) CHECK(e.holes.size() >= 3);
}

TEST_CASE("minimally_cooperating_sets: a cooperating pair excludes a far slit") {
  std::vector<HoleSpec> hs = {{HoleKind::UnitSquare, 1, 1},
                              {HoleKind::UnitSquare, 1, 3},
                              {HoleKind::Slit2, 5, 3, Rotation::R0, false, Axis::Vertical}};
  Polyomino p = Polyomino::build(7, 7, hs);
  CooperationReport r = minimally_cooperating_sets(p, 3);
  bool pair_minimal = false;
  for (const auto& e : r.minimal_sets)
    if (e.holes == std::vector<int>{0, 1}) pair_minimal = true;
  CHECK(pair_minimal);
  for (const auto& e : r.minimal_sets) {
    CHECK(e.holes != std::vector<int>{2});
    if (e.holes.size() == 1) FAIL("no single hole may cooperate");
  }
}

TEST_CASE("cooperation is monotone under supersets") {
  Polyomino p = vslits(4, 5, {{1, 2}, {3, 2}, {2, 1}});
  CooperationReport r = minimally_cooperating_sets(p, 3);
  for (const auto& e : r.cooperating_sets) {
    std::set<int> s(e.holes.begin(), e.holes.end());
    CHECK(cooperates(p, s).value != Cooperation::No);
  }
}

TEST_CASE("guard on the subset sweep") {
  std::vector<HoleSpec> many;
  for (int i = 0; i < 13; ++i)
    many.push_back({HoleKind::Slit1, 1 + (i % 6) * 2, 1 + (i / 6) * 2, Rotation::R0, false,
                    Axis::Vertical});
  Polyomino p = Polyomino::build(14, 8, many);
  CHECK_THROWS_AS((void)minimally_cooperating_sets(p, 2), GuardExceeded);
}

TEST_CASE("classifier agrees with the search on a 6x6 two-slit slice") {
  // a small slice of the acceptance sweep
  for (int x1 = 1; x1 <= 2; ++x1)
    for (int y1 = 1; y1 <= 2; ++y1)
      for (int x2 = x1; x2 <= 5; ++x2)
        for (int y2 = 1; y2 <= 3; ++y2) {
          if (x1 == x2 && std::abs(y1 - y2) < 3) continue;
          if (x1 == x2 && y1 >= y2) continue;
          Polyomino p = vslits(6, 6, {{x1, y1}, {x2, y2}});
          Verdict c = classify(p);
          Verdict s = exists_onto_facemapping(p);
          bool c_fold = c.status == VerdictStatus::FoldableCertified;
          bool s_fold = s.status == VerdictStatus::FacemappingExists;
          INFO(x1, ",", y1, " ", x2, ",", y2);
          CHECK(c_fold == s_fold);
          CHECK(c_fold == (separation_parity(p.holes()[0], p.holes()[1]) ==
                           SeparationParity::Odd));
        }
}

TEST_CASE("classifier agrees with the search on every 4x7 vertical-slit set") {
  std::vector<std::pair<int, int>> slots;
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y) slots.push_back({x, y});
  int agreements = 0;
  for (unsigned mask = 1; mask < (1u << slots.size()); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<std::pair<int, int>> set;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask & (1u << i)) set.push_back(slots[i]);
    Polyomino p;
    try {
      p = vslits(4, 7, set);
    } catch (const BuildError&) {
      continue;
    }
    Verdict c = classify(p);
    REQUIRE(c.status != VerdictStatus::Unknown);
    REQUIRE(c.status != VerdictStatus::FacemappingExists);  // ladder is exact here
    Verdict s = exists_onto_facemapping(p);
    CHECK((c.status == VerdictStatus::FoldableCertified) ==
          (s.status == VerdictStatus::FacemappingExists));
    ++agreements;
  }
  CHECK(agreements > 50);
}

TEST_CASE("every >=6x6 odd pair reduces to one of the seven fig5 shapes") {
  int found = 0;
  for (const auto& set : {std::vector<std::pair<int, int>>{{2, 1}, {2, 4}},
                          {{1, 1}, {5, 2}},
                          {{2, 2}, {3, 3}},
                          {{1, 1}, {4, 4}},
                          {{3, 1}, {3, 4}}}) {
    Polyomino p = vslits(6, 7, set);
    REQUIRE(separation_parity(p.holes()[0], p.holes()[1]) == SeparationParity::Odd);
    auto m = reduce_to_fixture(p);
    REQUIRE(m.has_value());
    CHECK(m->figure_id.rfind("fig5", 0) == 0);
    CHECK(is_consistent(p, m->witness));
    CHECK(covered_faces(m->witness).size() == 6);
    ++found;
  }
  CHECK(found == 5);
}

TEST_CASE("every onto fixture polyomino classifies as certified foldable") {
  for (const auto& f : fixtures()) {
    if (f.declared_coverage != 6) continue;
    Verdict v = classify(f.polyomino);
    INFO(f.figure_id);
    CHECK(v.status == VerdictStatus::FoldableCertified);
    REQUIRE(v.witness.has_value());
    CHECK(is_consistent(f.polyomino, *v.witness));
    CHECK(covered_faces(*v.witness).size() == 6);
  }
}

TEST_CASE("a staircase member inside a larger sheet is still certified") {
  Polyomino stair = generate_staircase(1);
  std::vector<HoleSpec> hs;
  for (auto h : stair.holes()) {
    h.x += 2;
    h.y += 3;
    hs.push_back(h);
  }
  Polyomino parent = Polyomino::build(stair.width() + 4, stair.height() + 5, hs);
  Verdict v = classify(parent);
  CHECK(v.status == VerdictStatus::FoldableCertified);
  CHECK(v.provenance == "staircase-generator");
  REQUIRE(v.witness.has_value());
  CHECK(is_consistent(parent, *v.witness));
  CHECK(covered_faces(*v.witness).size() == 6);
}
