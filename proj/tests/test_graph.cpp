#include <doctest.h>

#include "cuttrees/errors.hpp"
#include "cuttrees/graph.hpp"
#include "cuttrees/graph_json.hpp"

using namespace cuttrees;

namespace {

EndMarkedGraph path_graph(int n) {
  EndMarkedGraph::Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    b.add_edge("e" + std::to_string(i), "p" + std::to_string(i), "p" + std::to_string(i + 1));
  return std::move(b).build();
}

}  // namespace

TEST_CASE("builder validation") {
  CHECK_THROWS_AS(EndMarkedGraph::Builder().add_vertex("a").add_vertex("a"), InputError);
  {
    EndMarkedGraph::Builder b;
    b.add_vertex("a").add_vertex("b");
    b.add_edge("e0", "a", "b").add_edge("e", "a", "a");
    CHECK_THROWS_AS(std::move(b).build(), InputError);  // loop
  }
  {
    EndMarkedGraph::Builder b;
    b.add_vertex("a").add_vertex("b");
    b.add_edge("e1", "a", "b").add_edge("e2", "b", "a");
    CHECK_THROWS_AS(std::move(b).build(), InputError);  // parallel
  }
  {
    EndMarkedGraph::Builder b;
    b.add_vertex("a").add_vertex("m", true);
    b.add_edge("e", "a", "m", false);  // marker edge must be protected
    CHECK_THROWS_AS(std::move(b).build(), InputError);
  }
  {
    EndMarkedGraph::Builder b;
    b.add_vertex("a").add_vertex("b");
    CHECK_THROWS_AS(std::move(b).build(), InputError);  // disconnected
  }
}

TEST_CASE("boundary and components on a path") {
  const EndMarkedGraph g = path_graph(5);
  VertexSet C = g.empty_set();
  C.insert(g.vertex("p0"));
  C.insert(g.vertex("p1"));
  const auto bd = g.edge_boundary(C);
  REQUIRE(bd.size() == 1);
  CHECK(g.edge(bd[0]).token == "e1");
  CHECK(g.neighbour_set(C).count() == 1);
  CHECK(g.beta(C).count() == 2);

  const auto comps = g.components_minus_edges(bd);
  REQUIRE(comps.size() == 2);
  CHECK(g.is_connected_subset(comps[0]));
  CHECK(g.is_connected_subset(comps[1]));

  VertexSet S = g.empty_set();
  S.insert(g.vertex("p2"));
  CHECK(g.separated_by_vertices(S, g.vertex("p0"), g.vertex("p4")));
  CHECK(!g.separated_by_vertices(S, g.vertex("p0"), g.vertex("p1")));
  CHECK(g.distance(g.vertex("p0"), g.vertex("p4")) == 4);
}

TEST_CASE("json round trip") {
  const EndMarkedGraph g = path_graph(4);
  const std::string text = graph_to_json(g);
  const EndMarkedGraph h = graph_from_json(text);
  CHECK(graph_to_json(h) == text);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 3);

  CHECK_THROWS_AS(graph_from_json("{\"vertices\":[],\"edges\":[],\"extra\":1}"), InputError);
  CHECK_THROWS_AS(graph_from_json("not json"), InputError);
}

TEST_CASE("barycentric subdivision") {
  const EndMarkedGraph g = path_graph(3);
  const Subdivision s = barycentric_subdivision(g);
  CHECK(s.graph.vertex_count() == g.vertex_count() + g.edge_count());
  CHECK(s.graph.edge_count() == 2 * g.edge_count());
  CHECK(s.midpoint_of_edge.size() == g.edge_count());
  CHECK(s.midpoint_of_edge.at("e0#mid") == "e0");
  // Distances double.
  CHECK(s.graph.distance(s.graph.vertex("p0"), s.graph.vertex("p2")) ==
        2 * g.distance(g.vertex("p0"), g.vertex("p2")));
}
