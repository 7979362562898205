#include "cuttrees/structure_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cuttrees/errors.hpp"
#include "cuttrees/nesting.hpp"

namespace cuttrees {

namespace {

// Deterministic name of an oriented cut: the sorted vertex tokens of its
// side. The two orientations of a cut get different names.
std::string oriented_name(const EndMarkedGraph& g, const VertexSet& side) {
  std::vector<std::string> tokens;
  side.for_each([&](VertexIndex v) { tokens.push_back(g.vertex_token(v)); });
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ',';
    out += tokens[i];
  }
  return out;
}

bool proper_subset(const VertexSet& a, const VertexSet& b) {
  return a.is_subset_of(b) && !(a == b);
}

}  // namespace

CutSystem::CutSystem(const EndMarkedGraph& g, std::vector<Cut> cuts) : graph_(&g) {
  std::sort(cuts.begin(), cuts.end(),
            [](const Cut& x, const Cut& y) { return x.side < y.side; });
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](const Cut& x, const Cut& y) { return x.side == y.side; }),
             cuts.end());
  cuts_ = std::move(cuts);
  for (auto& c : cuts_) {
    g.check_subset(c.side);
    if (!is_cut(g, c.side))
      throw InputError("cut system member is not a cut: {" + oriented_name(g, c.side) + "}");
    c.boundary = g.edge_boundary(c.side);
  }
  complement_.resize(cuts_.size());
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    const auto j = index_of(cuts_[i].side.complement());
    if (!j)
      throw InputError("cut system is not complement-closed: missing complement of {" +
                       oriented_name(g, cuts_[i].side) + "}");
    complement_[i] = *j;
  }
  for (std::size_t i = 0; i < cuts_.size(); ++i)
    for (std::size_t j = i + 1; j < cuts_.size(); ++j)
      if (!is_nested(cuts_[i].side, cuts_[j].side))
        throw InputError("cut system is not nested: {" + oriented_name(g, cuts_[i].side) +
                         "} crosses {" + oriented_name(g, cuts_[j].side) + "}");
}

std::optional<std::size_t> CutSystem::index_of(const VertexSet& side) const {
  const auto it =
      std::lower_bound(cuts_.begin(), cuts_.end(), side,
                       [](const Cut& c, const VertexSet& s) { return c.side < s; });
  if (it == cuts_.end() || !(it->side == side)) return std::nullopt;
  return static_cast<std::size_t>(it - cuts_.begin());
}

bool equivalent(const CutSystem& sys, std::size_t i, std::size_t j) {
  if (i == j) return true;
  const VertexSet& C = sys.cut(i).side;
  const VertexSet& D = sys.cut(j).side;
  auto related = [&](const VertexSet& X, const VertexSet& Y) {
    // Complement of X properly below Y with no system cut strictly between.
    const VertexSet Xc = X.complement();
    if (!proper_subset(Xc, Y)) return false;
    for (std::size_t k = 0; k < sys.size(); ++k) {
      const VertexSet& E = sys.cut(k).side;
      if (proper_subset(Xc, E) && proper_subset(E, Y)) return false;
    }
    return true;
  };
  return related(C, D) || related(D, C);
}

ClassesResult classes(const CutSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool e = equivalent(sys, i, j);
      eq[i][j] = e;
      eq[j][i] = e;
    }

  // Union-find over the pairs the relation declares equivalent.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (eq[i][j]) parent[find(i)] = find(j);

  ClassesResult out;
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (!root_to_class.count(r)) {
      root_to_class[r] = out.classes.size();
      out.classes.emplace_back();
    }
  }
  out.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = root_to_class[find(i)];
    out.class_of[i] = c;
    out.classes[c].push_back(i);
  }

  // The partition is only valid if the relation was transitive to begin
  // with: every pair inside a class must be directly equivalent.
  for (const auto& cls : out.classes)
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (!eq[cls[a]][cls[b]]) {
          for (std::size_t k : cls)
            if (eq[cls[a]][k] && eq[k][cls[b]]) {
              out.violating_triple = {cls[a], k, cls[b]};
              break;
            }
          std::ostringstream msg;
          msg << "cut equivalence is not transitive: cuts " << cls[a] << " and " << cls[b]
              << " share a class but are not equivalent";
          out.diagnostic = msg.str();
          out.ok = false;
          return out;
        }
  out.ok = true;
  return out;
}

StructureTree build_tree(const CutSystem& sys) {
  const ClassesResult cls = classes(sys);
  if (!cls.ok) throw InvariantViolation(cls.diagnostic);

  StructureTree tree;
  tree.class_members = cls.classes;
  tree.class_of_cut = cls.class_of;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const std::size_t j = sys.complement_of(i);
    if (i < j) {
      if (cls.class_of[i] == cls.class_of[j])
        throw InvariantViolation(
            "both orientations of a cut fall into the same class: {" +
            oriented_name(sys.graph(), sys.cut(i).side) + "}");
      tree.edges.push_back(StructureTree::Edge{i, cls.class_of[i], cls.class_of[j]});
    }
  }

  const std::size_t nc = tree.class_members.size();
  if (nc != tree.edges.size() + 1 && nc != 0)
    throw InvariantViolation("structure tree has " + std::to_string(nc) + " classes but " +
                             std::to_string(tree.edges.size()) + " edges");
  if (nc > 0) {
    std::vector<std::vector<std::size_t>> adj(nc);
    for (const auto& e : tree.edges) {
      adj[e.class_a].push_back(e.class_b);
      adj[e.class_b].push_back(e.class_a);
    }
    std::vector<bool> seen(nc, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != nc) throw InvariantViolation("structure tree is disconnected");
  }
  return tree;
}

std::optional<std::size_t> locate_vertex(const CutSystem& sys, const StructureTree& tree,
                                         VertexIndex x) {
  std::optional<std::size_t> found;
  for (std::size_t c = 0; c < tree.class_members.size(); ++c) {
    bool all = true;
    for (std::size_t i : tree.class_members[c])
      if (!sys.cut(i).side.contains(x)) {
        all = false;
        break;
      }
    if (!all) continue;
    if (found)
      throw InvariantViolation("vertex " + sys.graph().vertex_token(x) +
                               " lies in all cuts of two distinct classes");
    found = c;
  }
  return found;
}

namespace {

// Pairwise separation by the boundary-vertex sets of the system.
std::vector<std::vector<bool>> separation_matrix(const CutSystem& sys) {
  const EndMarkedGraph& g = sys.graph();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> sep(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys.complement_of(i) < i) continue;  // one orientation is enough
    const VertexSet S = g.beta(sys.cut(i).side);
    const VertexSet rest = g.full_set() - S;
    const auto comps = g.components(rest);
    std::vector<int> comp_of(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      comps[c].for_each([&](VertexIndex v) { comp_of[v] = static_cast<int>(c); });
    for (VertexIndex x = 0; x < n; ++x)
      for (VertexIndex y = x + 1; y < n; ++y)
        if (comp_of[x] >= 0 && comp_of[y] >= 0 && comp_of[x] != comp_of[y])
          sep[x][y] = sep[y][x] = true;
  }
  return sep;
}

}  // namespace

std::vector<VertexSet> blocks(const CutSystem& sys) {
  const EndMarkedGraph& g = sys.graph();
  const auto sep = separation_matrix(sys);
  std::vector<VertexSet> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (sep[ed.u][ed.v]) continue;
    VertexSet B = g.empty_set();
    B.insert(ed.u);
    B.insert(ed.v);
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
        if (B.contains(w)) continue;
        bool fits = true;
        B.for_each([&](VertexIndex x) {
          if (sep[w][x]) fits = false;
        });
        if (fits) {
          B.insert(w);
          grew = true;
        }
      }
    }
    out.push_back(B);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // Drop non-maximal sets the greedy pass may have produced.
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && out[i].is_subset_of(out[j]) && !(out[i] == out[j])) dominated = true;
    if (!dominated) maximal.push_back(out[i]);
  }
  return maximal;
}

BlockLemmaReport check_block_lemma(const CutSystem& sys) {
  const EndMarkedGraph& g = sys.graph();
  BlockLemmaReport report;
  const std::vector<VertexSet> bs = blocks(sys);

  // C(B): cuts D, minimal under inclusion of sides, with B inside D u ND.
  std::vector<std::vector<std::size_t>> cut_sets(bs.size());
  for (std::size_t b = 0; b < bs.size(); ++b) {
    std::vector<std::size_t> covering;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const VertexSet closure = sys.cut(i).side | g.neighbour_set(sys.cut(i).side);
      if (bs[b].is_subset_of(closure)) covering.push_back(i);
    }
    for (std::size_t i : covering) {
      bool minimal = true;
      for (std::size_t j : covering)
        if (j != i && proper_subset(sys.cut(j).side, sys.cut(i).side)) minimal = false;
      if (minimal) cut_sets[b].push_back(i);
    }
  }

  for (std::size_t i = 0; i < sys.size(); ++i) {
    BlockLemmaReport::PerCut pc;
    pc.cut = i;
    std::optional<std::size_t> match;
    for (std::size_t b = 0; b < bs.size(); ++b)
      if (std::find(cut_sets[b].begin(), cut_sets[b].end(), i) != cut_sets[b].end()) {
        ++pc.matching_blocks;
        match = b;
      }
    if (pc.matching_blocks != 1) {
      report.discrepancies.push_back("cut " + std::to_string(i) + " belongs to " +
                                     std::to_string(pc.matching_blocks) +
                                     " block cut-sets, expected exactly 1");
    } else {
      const VertexSet& B = bs[*match];
      VertexSet beta_union = g.empty_set();
      VertexSet closure_meet = g.full_set();
      for (std::size_t d : cut_sets[*match]) {
        beta_union = beta_union | g.beta(sys.cut(d).side);
        closure_meet = closure_meet & (sys.cut(d).side | g.neighbour_set(sys.cut(d).side));
      }
      pc.union_inclusion = beta_union.is_subset_of(B);
      pc.intersection_equal = closure_meet == B;
      if (!pc.union_inclusion)
        report.discrepancies.push_back("cut " + std::to_string(i) +
                                       ": boundary union escapes its block");
      if (!pc.intersection_equal)
        report.discrepancies.push_back("cut " + std::to_string(i) +
                                       ": block differs from the closure intersection");
    }
    report.per_cut.push_back(pc);
  }

  report.separation_claim_holds = true;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const VertexSet beta_c = g.beta(sys.cut(i).side);
    std::vector<VertexIndex> members;
    beta_c.for_each([&](VertexIndex v) { members.push_back(v); });
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (j == i) continue;
      const VertexSet beta_d = g.beta(sys.cut(j).side);
      for (std::size_t a = 0; a < members.size() && report.separation_claim_holds; ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          if (!beta_d.contains(members[a]) && !beta_d.contains(members[b]) &&
              g.separated_by_vertices(beta_d, members[a], members[b])) {
            report.separation_claim_holds = false;
            report.discrepancies.push_back(
                "boundary vertices of cut " + std::to_string(i) +
                " are separated by the boundary of cut " + std::to_string(j));
            break;
          }
    }
  }
  return report;
}

namespace {

// Class labels "K<i>", numbered by the least oriented-cut name per class.
std::vector<std::string> class_labels(const CutSystem& sys, const StructureTree& tree) {
  const EndMarkedGraph& g = sys.graph();
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t c = 0; c < tree.class_members.size(); ++c) {
    std::string key;
    for (std::size_t i : tree.class_members[c]) {
      const std::string name = oriented_name(g, sys.cut(i).side);
      if (key.empty() || name < key) key = name;
    }
    keyed.emplace_back(key, c);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> labels(tree.class_members.size());
  for (std::size_t rank = 0; rank < keyed.size(); ++rank)
    labels[keyed[rank].second] = "K" + std::to_string(rank);
  return labels;
}

}  // namespace

std::string tree_to_dot(const CutSystem& sys, const StructureTree& tree) {
  const EndMarkedGraph& g = sys.graph();
  const auto labels = class_labels(sys, tree);
  std::vector<std::string> lines;
  for (const auto& e : tree.edges) {
    std::string a = labels[e.class_a];
    std::string b = labels[e.class_b];
    if (b < a) std::swap(a, b);
    lines.push_back("  \"" + a + "\" -- \"" + b + "\" [label=\"" +
                    canonical_separator(g, sys.cut(e.cut).boundary) + "\"];");
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "graph T {\n";
  if (tree.edges.empty())
    for (const auto& l : labels) out += "  \"" + l + "\";\n";
  for (const auto& l : lines) out += l + "\n";
  out += "}\n";
  return out;
}

std::string tree_to_json(const CutSystem& sys, const StructureTree& tree) {
  using nlohmann::ordered_json;
  const EndMarkedGraph& g = sys.graph();
  const auto labels = class_labels(sys, tree);

  std::vector<std::size_t> class_order(tree.class_members.size());
  std::iota(class_order.begin(), class_order.end(), 0);
  std::sort(class_order.begin(), class_order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a].size() != labels[b].size() ? labels[a].size() < labels[b].size()
                                                : labels[a] < labels[b];
  });

  ordered_json doc;
  doc["classes"] = ordered_json::array();
  for (std::size_t c : class_order) {
    ordered_json cls;
    cls["id"] = labels[c];
    std::vector<std::string> names;
    for (std::size_t i : tree.class_members[c])
      names.push_back(oriented_name(g, sys.cut(i).side));
    std::sort(names.begin(), names.end());
    cls["cuts"] = names;
    doc["classes"].push_back(cls);
  }
  std::vector<ordered_json> edges;
  for (const auto& e : tree.edges) {
    std::string a = labels[e.class_a];
    std::string b = labels[e.class_b];
    if (b.size() < a.size() || (b.size() == a.size() && b < a)) std::swap(a, b);
    ordered_json je;
    je["cut"] = canonical_separator(g, sys.cut(e.cut).boundary);
    je["a"] = a;
    je["b"] = b;
    edges.push_back(je);
  }
  std::sort(edges.begin(), edges.end(), [](const ordered_json& x, const ordered_json& y) {
    return x["cut"].get<std::string>() < y["cut"].get<std::string>();
  });
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

}  // namespace cuttrees
