#include <doctest.h>

#include <algorithm>

#include "cuttrees/families.hpp"
#include "cuttrees/group_action.hpp"
#include "cuttrees/nesting.hpp"

using namespace cuttrees;

namespace {

Truncation model(const char* fam, int r = 6) {
  return truncate(make_generator(FamilySpec::parse(fam)), r, 2);
}

}  // namespace

TEST_CASE("corners partition the vertex set") {
  const Truncation t = model("cross:4");
  const KappaResult kr = kappa(t.model);
  const VertexSet& C = kr.minimal_cuts[0].side;
  const VertexSet& D = kr.minimal_cuts[2].side;
  const Corners c = corners(C, D);
  CHECK((c.cd | c.c_dc | c.cc_d | c.cc_dc) == t.model.full_set());
  CHECK((c.cd & c.c_dc).empty());
  CHECK((c.cd & c.cc_dc).empty());
  CHECK(is_nested(C, C));
  CHECK(is_nested(C, C.complement()));
}

TEST_CASE("non-nestedness index on cross:4") {
  const KappaResult kr = kappa(model("cross:4").model);
  REQUIRE(kr.minimal_cuts.size() == 12);
  const NonNestedIndex idx = m_index(kr.minimal_cuts);
  CHECK(idx.m_star == 0);
  std::vector<std::size_t> sorted = idx.m_values;
  std::sort(sorted.begin(), sorted.end());
  // Eight nested-with-everything corner orientations, four pair cuts each
  // crossing two others.
  const std::vector<std::size_t> expect{0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2};
  CHECK(sorted == expect);
  CHECK(optimal_cuts(kr.minimal_cuts).size() == 8);
}

TEST_CASE("m is constant on complements") {
  const KappaResult kr = kappa(model("cross:4").model);
  const NonNestedIndex idx = m_index(kr.minimal_cuts);
  for (std::size_t i = 0; i < kr.minimal_cuts.size(); ++i)
    for (std::size_t j = 0; j < kr.minimal_cuts.size(); ++j)
      if (kr.minimal_cuts[i].side == kr.minimal_cuts[j].side.complement())
        CHECK(idx.m_values[i] == idx.m_values[j]);
}

TEST_CASE("corner inequality on crossing pairs") {
  const Truncation t = model("cross:4");
  const KappaResult kr = kappa(t.model);
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < kr.minimal_cuts.size(); ++i)
    for (std::size_t j = 0; j < kr.minimal_cuts.size(); ++j) {
      if (i == j) continue;
      const auto rep =
          check_corner_inequality(t.model, kr.minimal_cuts[i], kr.minimal_cuts[j],
                                  kr.minimal_cuts);
      if (!rep.applicable) continue;
      ++applicable;
      CHECK(rep.passed);
      CHECK(rep.m_cd + rep.m_ccdc == 0);
      CHECK(rep.m_c + rep.m_d == 4);
    }
  CHECK(applicable > 0);
}

TEST_CASE("translation along the line") {
  const Truncation t = model("line");
  const LineShiftAction action(&t.model);
  const KappaResult kr = kappa(t.model);
  std::size_t moved = 0;
  for (const Cut& c : kr.minimal_cuts) {
    const auto img = translate_cut(t.model, c, action, "1");
    if (!img) continue;
    ++moved;
    CHECK(is_cut(t.model, *img));
    CHECK(t.model.edge_boundary(*img).size() == c.boundary.size());
  }
  CHECK(moved > 0);

  const OrbitClosure closure = orbit_close(t.model, {kr.minimal_cuts.front()}, action);
  CHECK(closure.cuts.size() == kr.minimal_cuts.size());  // the whole family is one orbit
  CHECK(closure.skipped_translates > 0);                 // the model edge is finite
}
