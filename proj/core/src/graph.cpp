#include "cuttrees/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cuttrees/errors.hpp"

namespace cuttrees {

EndMarkedGraph::Builder& EndMarkedGraph::Builder::add_vertex(const std::string& token,
                                                             bool end_marker) {
  if (token.empty()) throw InputError("vertex token must be non-empty");
  if (vertex_index_.count(token)) throw InputError("duplicate vertex id: " + token);
  vertex_index_.emplace(token, vertex_tokens_.size());
  vertex_tokens_.push_back(token);
  end_marker_.push_back(end_marker);
  return *this;
}

EndMarkedGraph::Builder& EndMarkedGraph::Builder::add_edge(const std::string& token,
                                                           const std::string& u,
                                                           const std::string& v,
                                                           bool is_protected) {
  if (token.empty()) throw InputError("edge token must be non-empty");
  if (edge_index_.count(token)) throw InputError("duplicate edge id: " + token);
  auto iu = vertex_index_.find(u);
  auto iv = vertex_index_.find(v);
  if (iu == vertex_index_.end()) throw InputError("edge " + token + ": unknown vertex " + u);
  if (iv == vertex_index_.end()) throw InputError("edge " + token + ": unknown vertex " + v);
  edge_index_.emplace(token, edges_.size());
  edges_.push_back(Edge{token, iu->second, iv->second, is_protected});
  return *this;
}

EndMarkedGraph EndMarkedGraph::Builder::build() && {
  EndMarkedGraph g;
  g.vertex_tokens_ = std::move(vertex_tokens_);
  g.end_marker_.assign(end_marker_.begin(), end_marker_.end());
  g.vertex_index_ = std::move(vertex_index_);
  g.edges_ = std::move(edges_);
  g.edge_index_ = std::move(edge_index_);
  g.adjacency_.assign(g.vertex_tokens_.size(), {});

  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    const auto& ed = g.edges_[e];
    if (ed.u == ed.v) throw InputError("loop edge not allowed: " + ed.token);
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert({key.first, key.second}).second)
      throw InputError("parallel edge not allowed: " + ed.token);
    if ((g.end_marker_[ed.u] || g.end_marker_[ed.v]) && !ed.is_protected)
      throw InputError("edge " + ed.token + " touches an end marker but is not protected");
    g.adjacency_[ed.u].emplace_back(ed.v, e);
    g.adjacency_[ed.v].emplace_back(ed.u, e);
  }
  for (std::size_t v = 0; v < g.vertex_tokens_.size(); ++v)
    if (g.end_marker_[v]) ++g.end_marker_count_;

  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (!g.is_connected_subset(g.full_set())) throw InputError("graph is not connected");
  return g;
}

VertexIndex EndMarkedGraph::vertex(const std::string& token) const {
  auto it = vertex_index_.find(token);
  if (it == vertex_index_.end()) throw InputError("unknown vertex id: " + token);
  return it->second;
}

std::optional<VertexIndex> EndMarkedGraph::find_vertex(const std::string& token) const {
  auto it = vertex_index_.find(token);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

EdgeIndex EndMarkedGraph::edge_id(const std::string& token) const {
  auto it = edge_index_.find(token);
  if (it == edge_index_.end()) throw InputError("unknown edge id: " + token);
  return it->second;
}

VertexSet EndMarkedGraph::full_set() const {
  VertexSet s(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) s.insert(v);
  return s;
}

VertexSet EndMarkedGraph::end_marker_set() const {
  VertexSet s(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (end_marker_[v]) s.insert(v);
  return s;
}

VertexSet EndMarkedGraph::set_of(const std::vector<std::string>& tokens) const {
  VertexSet s(vertex_count());
  for (const auto& t : tokens) s.insert(vertex(t));
  return s;
}

void EndMarkedGraph::check_subset(const VertexSet& s) const {
  if (s.universe_size() != vertex_count())
    throw InputError("vertex set belongs to a different graph");
}

std::vector<EdgeIndex> EndMarkedGraph::delta(const VertexSet& C, const VertexSet& D) const {
  check_subset(C);
  check_subset(D);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    const bool uc = C.contains(ed.u), vc = C.contains(ed.v);
    const bool ud = D.contains(ed.u), vd = D.contains(ed.v);
    if ((uc && vd) || (vc && ud)) out.push_back(e);
  }
  return out;
}

std::vector<EdgeIndex> EndMarkedGraph::edge_boundary(const VertexSet& C) const {
  check_subset(C);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (C.contains(ed.u) != C.contains(ed.v)) out.push_back(e);
  }
  return out;
}

VertexSet EndMarkedGraph::neighbour_set(const VertexSet& C) const {
  check_subset(C);
  VertexSet out(vertex_count());
  C.for_each([&](std::size_t v) {
    for (auto [w, e] : adjacency_[v]) {
      (void)e;
      if (!C.contains(w)) out.insert(w);
    }
  });
  return out;
}

VertexSet EndMarkedGraph::beta(const VertexSet& C) const {
  return neighbour_set(C) | neighbour_set(C.complement());
}

std::vector<VertexSet> EndMarkedGraph::components(const VertexSet& A) const {
  check_subset(A);
  std::vector<VertexSet> out;
  VertexSet seen(vertex_count());
  A.for_each([&](std::size_t start) {
    if (seen.contains(start)) return;
    VertexSet comp(vertex_count());
    std::deque<VertexIndex> queue{start};
    seen.insert(start);
    comp.insert(start);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (auto [w, e] : adjacency_[v]) {
        (void)e;
        if (A.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          comp.insert(w);
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

bool EndMarkedGraph::is_connected_subset(const VertexSet& A) const {
  check_subset(A);
  if (A.empty()) return false;
  std::size_t start = 0;
  bool found = false;
  A.for_each([&](std::size_t v) {
    if (!found) {
      start = v;
      found = true;
    }
  });
  VertexSet seen(vertex_count());
  std::deque<VertexIndex> queue{start};
  seen.insert(start);
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (auto [w, e] : adjacency_[v]) {
      (void)e;
      if (A.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == A.count();
}

bool EndMarkedGraph::separated_by_vertices(const VertexSet& S, VertexIndex x,
                                           VertexIndex y) const {
  check_subset(S);
  if (S.contains(x) || S.contains(y)) return false;
  if (x == y) return false;
  const VertexSet rest = full_set() - S;
  for (const auto& comp : components(rest)) {
    if (comp.contains(x)) return !comp.contains(y);
  }
  return false;
}

std::vector<VertexSet> EndMarkedGraph::components_minus_edges(
    const std::vector<EdgeIndex>& F) const {
  std::vector<bool> removed(edges_.size(), false);
  for (EdgeIndex e : F) removed[e] = true;
  std::vector<VertexSet> out;
  VertexSet seen(vertex_count());
  for (std::size_t start = 0; start < vertex_count(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(vertex_count());
    std::deque<VertexIndex> queue{start};
    seen.insert(start);
    comp.insert(start);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (auto [w, e] : adjacency_[v]) {
        if (removed[e] || seen.contains(w)) continue;
        seen.insert(w);
        comp.insert(w);
        queue.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool EndMarkedGraph::separated_by_edges(const std::vector<EdgeIndex>& F,
                                        const VertexSet& A, const VertexSet& B) const {
  check_subset(A);
  check_subset(B);
  if (A.empty() || B.empty()) return false;
  for (const auto& comp : components_minus_edges(F)) {
    if (comp.intersects(A) && comp.intersects(B)) return false;
  }
  return true;
}

std::size_t EndMarkedGraph::distance(VertexIndex x, VertexIndex y) const {
  std::vector<std::size_t> dist(vertex_count(), static_cast<std::size_t>(-1));
  std::deque<VertexIndex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    if (v == y) return dist[v];
    for (auto [w, e] : adjacency_[v]) {
      (void)e;
      if (dist[w] == static_cast<std::size_t>(-1)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  throw InputError("vertices are not connected");
}

Subdivision barycentric_subdivision(const EndMarkedGraph& g) {
  EndMarkedGraph::Builder b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    b.add_vertex(g.vertex_token(v), g.is_end_marker(v));
  std::unordered_map<std::string, std::string> midpoint_of_edge;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const std::string mid = ed.token + "#mid";
    b.add_vertex(mid, false);
    b.add_edge(ed.token + "#a", g.vertex_token(ed.u), mid, ed.is_protected);
    b.add_edge(ed.token + "#b", mid, g.vertex_token(ed.v), ed.is_protected);
    midpoint_of_edge.emplace(mid, ed.token);
  }
  return Subdivision{std::move(b).build(), std::move(midpoint_of_edge)};
}

}  // namespace cuttrees
