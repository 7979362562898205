#include <doctest.h>

#include <algorithm>

#include "cuttrees/cut_engine.hpp"
#include "cuttrees/errors.hpp"
#include "cuttrees/families.hpp"

using namespace cuttrees;

namespace {

Truncation model(const char* fam, int r = 6) {
  return truncate(make_generator(FamilySpec::parse(fam)), r, 2);
}

}  // namespace

TEST_CASE("is_cut on the line model") {
  const Truncation t = model("line");
  VertexSet left = t.model.empty_set();
  left.insert(t.model.vertex("end0"));
  for (int i = -6; i <= 0; ++i) left.insert(t.model.vertex(std::to_string(i)));
  CHECK(is_cut(t.model, left));
  CHECK(is_cut(t.model, left.complement()));

  // No marker on one side: not a cut.
  VertexSet inner = t.model.empty_set();
  inner.insert(t.model.vertex("0"));
  CHECK(!is_cut(t.model, inner));
  // Boundary touching a marker is protected: not a cut.
  VertexSet marker_side = t.model.empty_set();
  marker_side.insert(t.model.vertex("end0"));
  CHECK(!is_cut(t.model, marker_side));
}

TEST_CASE("kappa of the bundled families") {
  CHECK(kappa(model("line").model).kappa == 1);
  CHECK(kappa(model("ladder").model).kappa == 2);
  CHECK(kappa(model("tree:4", 3).model).kappa == 1);

  const KappaResult cross = kappa(model("cross:4").model);
  CHECK(cross.kappa == 2);
  CHECK(cross.minimal_cuts.size() == 12);

  CHECK(kappa(model("grid2d").model).status == CutSearchStatus::NoCutFound);
}

TEST_CASE("separator enumeration on a handmade graph") {
  // A 4-cycle: every edge pair that is "opposite or adjacent" splits it.
  EndMarkedGraph::Builder b;
  for (int i = 0; i < 4; ++i) b.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < 4; ++i)
    b.add_edge("e" + std::to_string(i), "c" + std::to_string(i),
               "c" + std::to_string((i + 1) % 4));
  const EndMarkedGraph g = std::move(b).build();

  CHECK(enumerate_separators_containing(g, g.edge_id("e0"), 1).empty());
  const auto seps = enumerate_separators_containing(g, g.edge_id("e0"), 2);
  CHECK(seps.size() == 3);  // e0 with each of the other three edges
  for (const auto& s : seps) {
    CHECK(s.edges.size() == 2);
    CHECK(g.is_connected_subset(s.side));
    CHECK(g.is_connected_subset(s.side.complement()));
  }
}

TEST_CASE("enumeration budget") {
  const Truncation t = model("cross:4");
  CutConfig tiny;
  tiny.k_max = 8;
  tiny.budget = 3;
  CHECK(kappa(t.model, tiny).status == CutSearchStatus::BudgetExhausted);
}

TEST_CASE("corner profile identity on ladder") {
  const Truncation t = model("ladder");
  const KappaResult kr = kappa(t.model);
  REQUIRE(kr.status == CutSearchStatus::Found);
  for (std::size_t i = 0; i < kr.minimal_cuts.size(); ++i)
    for (std::size_t j = i + 1; j < kr.minimal_cuts.size(); ++j) {
      const CornerProfile p =
          corner_profile(t.model, kr.minimal_cuts[i].side, kr.minimal_cuts[j].side);
      CHECK(2 * kr.kappa == p.a + p.b + p.c + p.d + 2 * p.e + 2 * p.f);
    }
}

TEST_CASE("canonical encodings") {
  const Truncation t = model("line");
  const KappaResult kr = kappa(t.model);
  REQUIRE(!kr.minimal_cuts.empty());
  const Cut& c = kr.minimal_cuts.front();
  const std::string sep = canonical_separator(t.model, c.boundary);
  CHECK(!sep.empty());
  CHECK(canonical_cut(t.model, c.side) == canonical_cut(t.model, c.side.complement()));
  // Orientations are listed in pairs.
  std::size_t complements = 0;
  for (const auto& d : kr.minimal_cuts)
    for (const auto& e : kr.minimal_cuts)
      if (d.side == e.side.complement()) ++complements;
  CHECK(complements == kr.minimal_cuts.size());
}
