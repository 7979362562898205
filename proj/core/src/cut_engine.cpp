#include "cuttrees/cut_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cuttrees/errors.hpp"

namespace cuttrees {

namespace {

// Shortest x-y path avoiding removed edges, ties broken by preferring the
// lexicographically least predecessor token; returns the edge sequence or
// empty if unreachable.
std::vector<EdgeIndex> lex_shortest_path(const EndMarkedGraph& g,
                                         const std::vector<bool>& removed, VertexIndex x,
                                         VertexIndex y) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
  std::deque<VertexIndex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (auto [w, e] : g.neighbours(v)) {
      if (removed[e]) continue;
      if (dist[w] == static_cast<std::size_t>(-1)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[y] == static_cast<std::size_t>(-1)) return {};
  std::vector<EdgeIndex> path;
  VertexIndex cur = y;
  while (cur != x) {
    VertexIndex best_v = cur;
    EdgeIndex best_e = 0;
    bool found = false;
    for (auto [w, e] : g.neighbours(cur)) {
      if (removed[e] || dist[w] != dist[cur] - 1) continue;
      if (!found || g.vertex_token(w) < g.vertex_token(best_v)) {
        best_v = w;
        best_e = e;
        found = true;
      }
    }
    path.push_back(best_e);
    cur = best_v;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct Enumerator {
  const EndMarkedGraph& g;
  std::size_t budget;
  std::size_t nodes = 0;

  void tick() {
    if (++nodes > budget) throw BudgetExhaustedError{nodes};
  }

  // Edge sets F (containing e) that are k-separators of g minus the removed
  // edges.
  std::set<std::vector<EdgeIndex>> run(std::vector<bool>& removed, EdgeIndex e, int k) {
    tick();
    std::set<std::vector<EdgeIndex>> out;
    if (k == 1) {
      std::vector<EdgeIndex> F{e};
      if (is_separator(removed, F)) out.insert(std::move(F));
      return out;
    }
    removed[e] = true;
    const std::vector<EdgeIndex> path =
        lex_shortest_path(g, removed, g.edge(e).u, g.edge(e).v);
    for (EdgeIndex branch : path) {
      if (g.edge(branch).is_protected) continue;
      for (std::vector<EdgeIndex> F : run(removed, branch, k - 1)) {
        F.push_back(e);
        std::sort(F.begin(), F.end());
        removed[e] = false;
        if (is_separator(removed, F)) out.insert(std::move(F));
        removed[e] = true;
      }
    }
    removed[e] = false;
    return out;
  }

  // F is a separator of g-removed iff deleting it leaves exactly two
  // components and every edge of F joins them.
  bool is_separator(const std::vector<bool>& removed, const std::vector<EdgeIndex>& F) {
    std::vector<bool> gone = removed;
    for (EdgeIndex e : F) gone[e] = true;

    const std::size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (VertexIndex start = 0; start < n; ++start) {
      if (comp[start] != -1) continue;
      const int id = ncomp++;
      if (ncomp > 2) return false;
      std::deque<VertexIndex> queue{start};
      comp[start] = id;
      while (!queue.empty()) {
        const VertexIndex v = queue.front();
        queue.pop_front();
        for (auto [w, e] : g.neighbours(v)) {
          if (gone[e] || comp[w] != -1) continue;
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    if (ncomp != 2) return false;
    for (EdgeIndex e : F)
      if (comp[g.edge(e).u] == comp[g.edge(e).v]) return false;
    return true;
  }

  VertexSet side_of(const std::vector<EdgeIndex>& F) {
    std::vector<bool> gone(g.edge_count(), false);
    for (EdgeIndex e : F) gone[e] = true;
    VertexSet side(g.vertex_count());
    std::deque<VertexIndex> queue{g.edge(F.front()).u};
    side.insert(g.edge(F.front()).u);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (auto [w, e] : g.neighbours(v)) {
        if (gone[e] || side.contains(w)) continue;
        side.insert(w);
        queue.push_back(w);
      }
    }
    return side;
  }
};

}  // namespace

bool is_cut(const EndMarkedGraph& g, const VertexSet& side) {
  g.check_subset(side);
  if (side.empty() || side.complement().empty()) return false;
  for (EdgeIndex e : g.edge_boundary(side))
    if (g.edge(e).is_protected) return false;
  const VertexSet markers = g.end_marker_set();
  if (!side.intersects(markers) || !side.complement().intersects(markers)) return false;
  return g.is_connected_subset(side) && g.is_connected_subset(side.complement());
}

std::vector<Separator> enumerate_separators_containing(const EndMarkedGraph& g, EdgeIndex e,
                                                       int k, std::size_t budget) {
  if (k < 1) throw InputError("separator size must be at least 1");
  if (g.edge(e).is_protected)
    throw InputError("separators may not contain the protected edge " + g.edge(e).token);
  Enumerator en{g, budget};
  std::vector<bool> removed(g.edge_count(), false);
  std::vector<Separator> out;
  for (const auto& F : en.run(removed, e, k)) {
    out.push_back(Separator{F, en.side_of(F)});
  }
  return out;
}

KappaResult kappa(const EndMarkedGraph& g, const CutConfig& config) {
  KappaResult result;
  if (g.end_marker_count() < 2) return result;

  Enumerator en{g, config.budget};  // one node budget across all k
  for (int k = 1; k <= config.k_max; ++k) {
    std::set<VertexSet> sides;
    std::vector<bool> removed(g.edge_count(), false);
    try {
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_protected) continue;
        for (const auto& F : en.run(removed, e, k)) {
          const VertexSet side = en.side_of(F);
          if (is_cut(g, side)) {
            sides.insert(side);
            sides.insert(side.complement());
          }
        }
      }
    } catch (const BudgetExhaustedError&) {
      result.status = CutSearchStatus::BudgetExhausted;
      return result;
    }
    if (!sides.empty()) {
      result.status = CutSearchStatus::Found;
      result.kappa = static_cast<std::size_t>(k);
      for (const auto& side : sides)
        result.minimal_cuts.push_back(Cut{side, g.edge_boundary(side)});
      return result;
    }
  }
  return result;
}

CornerProfile corner_profile(const EndMarkedGraph& g, const VertexSet& C,
                             const VertexSet& D) {
  const VertexSet Cc = C.complement();
  const VertexSet Dc = D.complement();
  CornerProfile p;
  p.a = g.delta(C & D, Cc & D).size();
  p.b = g.delta(C & D, C & Dc).size();
  p.c = g.delta(C & Dc, Cc & Dc).size();
  p.d = g.delta(Cc & D, Cc & Dc).size();
  p.e = g.delta(C & D, Cc & Dc).size();
  p.f = g.delta(C & Dc, Cc & D).size();
  return p;
}

CornerMinimalityReport check_corner_minimality(const EndMarkedGraph& g, const Cut& C,
                                               const Cut& D, std::size_t kappa_value) {
  CornerMinimalityReport report;
  report.profile = corner_profile(g, C.side, D.side);
  const VertexSet cd = C.side & D.side;
  const VertexSet ccdc = C.side.complement() & D.side.complement();
  report.boundary_cd = g.edge_boundary(cd).size();
  report.boundary_ccdc = g.edge_boundary(ccdc).size();
  if (!is_cut(g, cd) || !is_cut(g, ccdc)) return report;  // not applicable
  report.applicable = true;
  report.passed = report.boundary_cd == kappa_value &&
                  report.boundary_ccdc == kappa_value && report.profile.f == 0;
  return report;
}

std::string canonical_separator(const EndMarkedGraph& g, const std::vector<EdgeIndex>& F) {
  std::vector<std::string> toks;
  for (EdgeIndex e : F) toks.push_back(g.edge(e).token);
  std::sort(toks.begin(), toks.end());
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

std::string canonical_cut(const EndMarkedGraph& g, const VertexSet& side) {
  // Orient to the side holding the lexicographically least end marker.
  std::string least_marker;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_end_marker(v) &&
        (least_marker.empty() || g.vertex_token(v) < least_marker))
      least_marker = g.vertex_token(v);
  }
  VertexSet oriented = side;
  if (!least_marker.empty() && !side.contains(g.vertex(least_marker)))
    oriented = side.complement();
  std::vector<std::string> toks;
  oriented.for_each([&](std::size_t v) { toks.push_back(g.vertex_token(v)); });
  std::sort(toks.begin(), toks.end());
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

}  // namespace cuttrees
