#include <doctest.h>

#include <memory>

#include "cuttrees/errors.hpp"
#include "cuttrees/families.hpp"
#include "cuttrees/graph_json.hpp"
#include "cuttrees/presets.hpp"

using namespace cuttrees;

TEST_CASE("family spec parsing") {
  CHECK(FamilySpec::parse("line").kind == FamilySpec::Kind::Line);
  CHECK(FamilySpec::parse("ladder").kind == FamilySpec::Kind::Ladder);
  CHECK(FamilySpec::parse("grid2d").kind == FamilySpec::Kind::Grid2d);
  CHECK(FamilySpec::parse("tree:4").degree == 4);
  CHECK(FamilySpec::parse("cross:4").rays == 4);
  CHECK(FamilySpec::parse("cayley:x.json").presentation_path == "x.json");
  CHECK_THROWS_AS(FamilySpec::parse("tree:1"), InputError);
  CHECK_THROWS_AS(FamilySpec::parse("pentagon"), InputError);
  CHECK_THROWS_AS(FamilySpec::parse(""), InputError);
}

TEST_CASE("line truncation sizes") {
  {
    const Truncation t = truncate(make_generator(FamilySpec::parse("line")), 3, 2);
    CHECK(t.model.vertex_count() == 9);  // -3..3 plus two markers
    CHECK(t.model.end_marker_count() == 2);
    CHECK(t.model.edge_count() == 8);
  }
  {
    const Truncation t = truncate(make_generator(FamilySpec::parse("line")), 6, 2);
    CHECK(t.model.vertex_count() == 15);
    CHECK(t.model.end_marker_count() == 2);
    CHECK(t.model.edge_count() == 14);
    CHECK(t.marker_map.size() == 2);
  }
}

TEST_CASE("tree and grid truncations") {
  const Truncation t4 = truncate(make_generator(FamilySpec::parse("tree:4")), 2, 2);
  CHECK(t4.model.vertex_count() == 29);  // 1 + 4 + 12 ball vertices + 12 markers
  CHECK(t4.model.end_marker_count() == 12);

  const Truncation grid = truncate(make_generator(FamilySpec::parse("grid2d")), 6, 2);
  CHECK(grid.model.end_marker_count() == 1);
}

TEST_CASE("cross truncation") {
  const Truncation t = truncate(make_generator(FamilySpec::parse("cross:4")), 6, 2);
  CHECK(t.model.end_marker_count() == 4);
  CHECK(t.model.vertex_count() == 56);
  CHECK(t.model.edge_count() == 108);
  // Every marker edge is protected, nothing else is.
  for (EdgeIndex e = 0; e < t.model.edge_count(); ++e) {
    const auto& ed = t.model.edge(e);
    const bool marker = t.model.is_end_marker(ed.u) || t.model.is_end_marker(ed.v);
    CHECK(ed.is_protected == marker);
  }
}

TEST_CASE("truncation is deterministic") {
  const auto gen = make_generator(FamilySpec::parse("cross:4"));
  const std::string a = graph_to_json(truncate(gen, 4, 2).model);
  const std::string b = graph_to_json(truncate(gen, 4, 2).model);
  CHECK(a == b);
}

TEST_CASE("end classification") {
  CHECK(count_ends(make_generator(FamilySpec::parse("line")), 6).value == EndCount::Two);
  CHECK(count_ends(make_generator(FamilySpec::parse("ladder")), 6).value == EndCount::Two);
  CHECK(count_ends(make_generator(FamilySpec::parse("grid2d")), 6).value == EndCount::One);
  CHECK(count_ends(make_generator(FamilySpec::parse("tree:4")), 4).value ==
        EndCount::InfinitelyMany);
  // Four ends fit none of the one/two/infinitely-many buckets: the stable
  // marker count is reported, the classification stays open.
  const auto cross = count_ends(make_generator(FamilySpec::parse("cross:4")), 6);
  CHECK(cross.value == EndCount::Unstable);
  CHECK(cross.markers_low == 4);
  CHECK(cross.markers_high == 4);
}

TEST_CASE("cayley generator ends") {
  for (const char* name : {"z_hnn", "z_hnn_23"}) {
    const auto pres =
        std::make_shared<Presentation>(Presentation::from_json(preset_presentation(name)));
    CHECK(count_ends(make_cayley_generator(pres), 6).value == EndCount::Two);
  }
  const auto free_ish =
      std::make_shared<Presentation>(Presentation::from_json(preset_presentation("z2_z3")));
  CHECK(count_ends(make_cayley_generator(free_ish), 5).value == EndCount::InfinitelyMany);
}

TEST_CASE("algebraic end criterion on line") {
  const auto pres =
      std::make_shared<Presentation>(Presentation::from_json(preset_presentation("z_hnn")));
  const auto gen = make_cayley_generator(pres);
  const Truncation t = truncate(gen, 5, 2);
  // One side of the obvious two-ending split: non-negative powers of t.
  std::vector<std::string> side;
  for (std::size_t v = 0; v < t.model.vertex_count(); ++v) {
    const std::string& tok = t.model.vertex_token(v);
    if (!t.model.is_end_marker(v) && tok.find("t^-1") == std::string::npos) side.push_back(tok);
  }
  const auto rep = algebraic_end_criterion_check(gen, side, 5, 2);
  CHECK(rep.passed);
  for (const auto& e : rep.entries) CHECK(e.stable);
}
