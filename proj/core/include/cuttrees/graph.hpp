#ifndef CUTTREES_GRAPH_HPP
#define CUTTREES_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cuttrees/vertex_set.hpp"

namespace cuttrees {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

// Finite connected simple graph with end-marker vertices and protected
// edges. End markers stand in for contracted infinite parts of a larger
// graph; every edge at an end marker must be protected. Immutable after
// construction, so all queries are safe to run concurrently.
class EndMarkedGraph {
 public:
  struct Edge {
    std::string token;
    VertexIndex u;
    VertexIndex v;
    bool is_protected;
  };

  class Builder {
   public:
    Builder& add_vertex(const std::string& token, bool end_marker = false);
    Builder& add_edge(const std::string& token, const std::string& u,
                      const std::string& v, bool is_protected = false);
    // Validates simplicity, marker protection and connectivity.
    EndMarkedGraph build() &&;

   private:
    friend class EndMarkedGraph;
    std::vector<std::string> vertex_tokens_;
    std::vector<bool> end_marker_;
    std::unordered_map<std::string, VertexIndex> vertex_index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, EdgeIndex> edge_index_;
  };

  std::size_t vertex_count() const { return vertex_tokens_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_token(VertexIndex v) const { return vertex_tokens_[v]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  VertexIndex vertex(const std::string& token) const;      // throws InputError
  EdgeIndex edge_id(const std::string& token) const;       // throws InputError
  std::optional<VertexIndex> find_vertex(const std::string& token) const;

  bool is_end_marker(VertexIndex v) const { return end_marker_[v]; }
  std::size_t end_marker_count() const { return end_marker_count_; }

  // (neighbour, connecting edge) pairs.
  const std::vector<std::pair<VertexIndex, EdgeIndex>>& neighbours(VertexIndex v) const {
    return adjacency_[v];
  }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const;
  VertexSet end_marker_set() const;
  VertexSet set_of(const std::vector<std::string>& tokens) const;

  // Edges with one endpoint in C and one in D.
  std::vector<EdgeIndex> delta(const VertexSet& C, const VertexSet& D) const;
  // delta(C, complement of C).
  std::vector<EdgeIndex> edge_boundary(const VertexSet& C) const;
  // Vertices outside C adjacent to C.
  VertexSet neighbour_set(const VertexSet& C) const;
  // neighbour_set(C) | neighbour_set(complement): endpoints of the boundary.
  VertexSet beta(const VertexSet& C) const;

  // Maximal connected subsets of A in the induced subgraph.
  std::vector<VertexSet> components(const VertexSet& A) const;
  bool is_connected_subset(const VertexSet& A) const;

  bool separated_by_vertices(const VertexSet& S, VertexIndex x, VertexIndex y) const;
  bool separated_by_edges(const std::vector<EdgeIndex>& F, const VertexSet& A,
                          const VertexSet& B) const;

  // Components of the whole vertex set after deleting the edges of F.
  std::vector<VertexSet> components_minus_edges(const std::vector<EdgeIndex>& F) const;

  std::size_t distance(VertexIndex x, VertexIndex y) const;  // throws if unreachable

  void check_subset(const VertexSet& s) const;  // universe-size guard

 private:
  EndMarkedGraph() = default;

  std::vector<std::string> vertex_tokens_;
  std::vector<bool> end_marker_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeIndex> edge_index_;
  std::vector<std::vector<std::pair<VertexIndex, EdgeIndex>>> adjacency_;
  std::size_t end_marker_count_ = 0;
};

// Barycentric subdivision: one new vertex per edge, each edge replaced by a
// path of length two. Subdivision vertices are named "<edge-token>#mid".
struct Subdivision {
  EndMarkedGraph graph;
  // For each vertex token of the subdivided graph: the originating edge
  // token if it is a subdivision point, nothing if it is an original vertex.
  std::unordered_map<std::string, std::string> midpoint_of_edge;
};

Subdivision barycentric_subdivision(const EndMarkedGraph& g);

// Quotient multigraph of a group action on a tree: loops and parallel edges
// are allowed here, unlike in EndMarkedGraph.
struct QuotientMultigraph {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<std::size_t> alpha;  // edge -> origin vertex index
  std::vector<std::size_t> omega;  // edge -> terminal vertex index

  bool is_loop() const { return vertices.size() == 1 && edges.size() == 1; }
  bool is_segment() const {
    return vertices.size() == 2 && edges.size() == 1 && alpha[0] != omega[0];
  }
};

}  // namespace cuttrees

#endif
