#include "cuttrees/nesting.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cuttrees/errors.hpp"

namespace cuttrees {

bool is_nested(const VertexSet& C, const VertexSet& D) {
  const VertexSet Cc = C.complement();
  const VertexSet Dc = D.complement();
  return !(C.intersects(D)) || !(C.intersects(Dc)) || !(Cc.intersects(D)) ||
         !(Cc.intersects(Dc));
}

Corners corners(const VertexSet& C, const VertexSet& D) {
  const VertexSet Cc = C.complement();
  const VertexSet Dc = D.complement();
  return Corners{C & D, C & Dc, Cc & D, Cc & Dc};
}

std::vector<std::size_t> not_nested_set(const VertexSet& C, const std::vector<Cut>& all_min) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < all_min.size(); ++i) {
    if (!is_nested(C, all_min[i].side)) out.push_back(i);
  }
  return out;
}

NonNestedIndex m_index(const std::vector<Cut>& all_min) {
  NonNestedIndex idx;
  idx.m_values.resize(all_min.size(), 0);
  for (std::size_t i = 0; i < all_min.size(); ++i)
    idx.m_values[i] = not_nested_set(all_min[i].side, all_min).size();
  idx.m_star = idx.m_values.empty()
                   ? 0
                   : *std::min_element(idx.m_values.begin(), idx.m_values.end());
  return idx;
}

std::vector<Cut> optimal_cuts(const std::vector<Cut>& all_min) {
  const NonNestedIndex idx = m_index(all_min);
  std::vector<Cut> out;
  for (std::size_t i = 0; i < all_min.size(); ++i)
    if (idx.m_values[i] == idx.m_star) out.push_back(all_min[i]);
  // Main-theorem postcondition, kept on in production builds.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!is_nested(out[i].side, out[j].side))
        throw InvariantViolation(
            "optimally nested cuts are not pairwise nested (cuts " + std::to_string(i) +
            ", " + std::to_string(j) + ")");
  return out;
}

CornerInequalityReport check_corner_inequality(const EndMarkedGraph& g, const Cut& C,
                                               const Cut& D,
                                               const std::vector<Cut>& all_min) {
  CornerInequalityReport report;
  if (is_nested(C.side, D.side)) return report;
  const VertexSet cd = C.side & D.side;
  const VertexSet ccdc = C.side.complement() & D.side.complement();
  if (!is_cut(g, cd) || !is_cut(g, ccdc)) return report;
  report.applicable = true;
  report.m_cd = not_nested_set(cd, all_min).size();
  report.m_ccdc = not_nested_set(ccdc, all_min).size();
  report.m_c = not_nested_set(C.side, all_min).size();
  report.m_d = not_nested_set(D.side, all_min).size();
  report.passed = report.m_cd + report.m_ccdc < report.m_c + report.m_d;
  return report;
}

std::optional<VertexSet> translate_cut(const EndMarkedGraph& g, const Cut& cut,
                                       const GroupAction& action, const std::string& elem) {
  std::vector<EdgeIndex> image_edges;
  std::optional<VertexIndex> inside_image;
  for (EdgeIndex e : cut.boundary) {
    const auto& ed = g.edge(e);
    const VertexIndex u = cut.side.contains(ed.u) ? ed.u : ed.v;
    const VertexIndex v = cut.side.contains(ed.u) ? ed.v : ed.u;
    const auto gu = action.apply(elem, g.vertex_token(u));
    const auto gv = action.apply(elem, g.vertex_token(v));
    if (!gu || !gv) return std::nullopt;
    const VertexIndex iu = g.vertex(*gu);
    const VertexIndex iv = g.vertex(*gv);
    bool found = false;
    for (auto [w, f] : g.neighbours(iu)) {
      if (w == iv) {
        image_edges.push_back(f);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    inside_image = iu;
  }
  if (image_edges.empty()) return std::nullopt;
  std::sort(image_edges.begin(), image_edges.end());
  image_edges.erase(std::unique(image_edges.begin(), image_edges.end()), image_edges.end());
  const auto comps = g.components_minus_edges(image_edges);
  if (comps.size() != 2) return std::nullopt;
  for (EdgeIndex e : image_edges) {
    const auto& ed = g.edge(e);
    if (comps[0].contains(ed.u) == comps[0].contains(ed.v)) return std::nullopt;
  }
  const VertexSet side = comps[0].contains(*inside_image) ? comps[0] : comps[1];
  if (!is_cut(g, side)) return std::nullopt;
  if (g.edge_boundary(side).size() != image_edges.size()) return std::nullopt;
  return side;
}

OrbitClosure orbit_close(const EndMarkedGraph& g, const std::vector<Cut>& seed,
                         const GroupAction& action) {
  std::vector<std::string> movers;
  for (const auto& s : action.generator_elements()) {
    movers.push_back(s);
    movers.push_back(action.inv(s));
  }
  std::sort(movers.begin(), movers.end());
  movers.erase(std::unique(movers.begin(), movers.end()), movers.end());

  OrbitClosure out;
  std::set<VertexSet> seen;
  std::deque<Cut> worklist;
  auto push = [&](const VertexSet& side) {
    if (seen.insert(side).second) worklist.push_back(Cut{side, g.edge_boundary(side)});
    const VertexSet comp = side.complement();
    if (seen.insert(comp).second) worklist.push_back(Cut{comp, g.edge_boundary(comp)});
  };
  for (const auto& c : seed) push(c.side);

  while (!worklist.empty()) {
    const Cut cut = worklist.front();
    worklist.pop_front();
    for (const auto& elem : movers) {
      const auto image = translate_cut(g, cut, action, elem);
      if (image)
        push(*image);
      else
        ++out.skipped_translates;
    }
  }
  for (const auto& side : seen) out.cuts.push_back(Cut{side, g.edge_boundary(side)});
  return out;
}

}  // namespace cuttrees
