#include "cuttrees/bass_serre.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "cuttrees/errors.hpp"

namespace cuttrees {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> movers(const GroupAction& action) {
  std::vector<std::string> out;
  for (const auto& s : action.generator_elements()) {
    out.push_back(s);
    out.push_back(action.inv(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> tokens_of(const EndMarkedGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](VertexIndex v) { out.push_back(g.vertex_token(v)); });
  std::sort(out.begin(), out.end());
  return out;
}

// Group-property checks shared by all stabilizer scans: identity present,
// closure, inverses, and freeness of every non-identity member.
void finalize_stabilizer(Stabilizer& st, const EndMarkedGraph& g, const GroupAction& action) {
  st.elements.push_back(action.identity());
  std::sort(st.elements.begin(), st.elements.end());
  st.elements.erase(std::unique(st.elements.begin(), st.elements.end()), st.elements.end());
  const std::set<std::string> members(st.elements.begin(), st.elements.end());
  for (const auto& a : st.elements) {
    if (!members.count(action.inv(a)))
      throw InvariantViolation("stabilizer not closed under inverse at " + a);
    for (const auto& b : st.elements)
      if (!members.count(action.mul(a, b)))
        throw InvariantViolation("stabilizer not closed under product at " + a + " * " + b);
  }
  for (const auto& a : st.elements) {
    if (a == action.identity()) continue;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (g.is_end_marker(v)) continue;
      const auto image = action.apply(a, g.vertex_token(v));
      if (image && *image == g.vertex_token(v))
        throw InvariantViolation("non-identity stabilizer element " + a + " fixes vertex " +
                                 g.vertex_token(v));
    }
  }
}

std::vector<std::string> intersect_sorted(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

InducedTreeAction induced_tree_action(const CutSystem& sys, const StructureTree& tree,
                                      const GroupAction& action) {
  InducedTreeAction out;
  out.elements = movers(action);
  const EndMarkedGraph& g = sys.graph();
  out.cut_image.assign(out.elements.size(), {});
  out.class_image.assign(out.elements.size(), {});
  for (std::size_t e = 0; e < out.elements.size(); ++e) {
    out.cut_image[e].assign(sys.size(), std::nullopt);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const auto side = translate_cut(g, sys.cut(i), action, out.elements[e]);
      const auto idx = side ? sys.index_of(*side) : std::nullopt;
      if (idx)
        out.cut_image[e][i] = idx;
      else
        ++out.undefined_cut_images;
    }
    out.class_image[e].assign(tree.class_members.size(), std::nullopt);
    for (std::size_t c = 0; c < tree.class_members.size(); ++c) {
      std::optional<std::size_t> image;
      bool consistent = true;
      for (std::size_t member : tree.class_members[c]) {
        const auto img = out.cut_image[e][member];
        if (!img) continue;
        const std::size_t cls = tree.class_of_cut[*img];
        if (image && *image != cls) consistent = false;
        image = cls;
      }
      if (image && consistent)
        out.class_image[e][c] = image;
      else
        ++out.undefined_class_images;
    }
  }
  return out;
}

Stabilizer setwise_stabilizer(const EndMarkedGraph& g, const VertexSet& S,
                              const GroupAction& action) {
  Stabilizer st;
  const std::vector<std::string> tokens = tokens_of(g, S);
  if (tokens.empty()) {
    finalize_stabilizer(st, g, action);
    return st;
  }
  const std::string& x = tokens.front();
  std::vector<std::string> candidates;
  for (const auto& y : tokens) candidates.push_back(action.mul(y, action.inv(x)));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const std::set<std::string> target(tokens.begin(), tokens.end());
  for (const auto& cand : candidates) {
    bool skipped = false;
    bool fits = true;
    std::set<std::string> images;
    for (const auto& s : tokens) {
      const auto img = action.apply(cand, s);
      if (!img) {
        skipped = true;
        break;
      }
      if (!target.count(*img)) {
        fits = false;
        break;
      }
      images.insert(*img);
    }
    if (skipped) {
      ++st.skipped_candidates;
      continue;
    }
    if (fits && images.size() == tokens.size()) st.elements.push_back(cand);
  }
  finalize_stabilizer(st, g, action);
  return st;
}

Stabilizer class_stabilizer(const CutSystem& sys, const StructureTree& tree,
                            const GroupAction& action, std::size_t class_id) {
  Stabilizer st;
  const EndMarkedGraph& g = sys.graph();
  const auto& members = tree.class_members[class_id];
  std::set<std::size_t> member_set(members.begin(), members.end());
  std::vector<std::string> pool;
  for (std::size_t m : members) {
    const auto toks = tokens_of(g, g.beta(sys.cut(m).side));
    pool.insert(pool.end(), toks.begin(), toks.end());
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const auto anchor_tokens = tokens_of(g, g.beta(sys.cut(members.front()).side));
  const std::string& x = anchor_tokens.front();
  std::vector<std::string> candidates;
  for (const auto& y : pool) candidates.push_back(action.mul(y, action.inv(x)));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& cand : candidates) {
    bool skipped = false;
    bool fits = true;
    std::set<std::size_t> images;
    for (std::size_t m : members) {
      const auto side = translate_cut(g, sys.cut(m), action, cand);
      if (!side) {
        skipped = true;
        break;
      }
      const auto idx = sys.index_of(*side);
      if (!idx || !member_set.count(*idx)) {
        fits = false;
        break;
      }
      images.insert(*idx);
    }
    if (skipped) {
      ++st.skipped_candidates;
      continue;
    }
    if (fits && images.size() == members.size()) st.elements.push_back(cand);
  }
  finalize_stabilizer(st, g, action);
  return st;
}

Stabilizer cut_pair_stabilizer(const CutSystem& sys, std::size_t cut,
                               const GroupAction& action) {
  Stabilizer st;
  const EndMarkedGraph& g = sys.graph();
  const VertexSet side = sys.cut(cut).side;
  const VertexSet comp = side.complement();
  const auto tokens = tokens_of(g, g.beta(side));
  const std::string& x = tokens.front();
  std::vector<std::string> candidates;
  for (const auto& y : tokens) candidates.push_back(action.mul(y, action.inv(x)));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& cand : candidates) {
    const auto image = translate_cut(g, sys.cut(cut), action, cand);
    if (!image) {
      ++st.skipped_candidates;
      continue;
    }
    if (*image == side || *image == comp) st.elements.push_back(cand);
  }
  finalize_stabilizer(st, g, action);
  return st;
}

namespace {

// Tree edges (by the lower-index orientation) ordered centre-out: by the
// distance of the cut boundary to the identity vertex of the action.
std::vector<std::size_t> edges_by_centrality(const CutSystem& sys, const GroupAction& action) {
  const EndMarkedGraph& g = sys.graph();
  const auto id_vertex = g.find_vertex(action.identity());
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys.complement_of(i) < i) continue;
    std::size_t d = 0;
    if (id_vertex) {
      d = static_cast<std::size_t>(-1);
      g.beta(sys.cut(i).side).for_each([&](VertexIndex v) {
        d = std::min(d, g.distance(*id_vertex, v));
      });
    }
    keyed.emplace_back(d, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (const auto& [d, i] : keyed) out.push_back(i);
  return out;
}

std::optional<std::string> inversion_witness_at(const CutSystem& sys, std::size_t cut,
                                                const GroupAction& action) {
  const EndMarkedGraph& g = sys.graph();
  const VertexSet comp = sys.cut(cut).side.complement();
  std::vector<std::string> candidates = movers(action);
  const auto tokens = tokens_of(g, g.beta(sys.cut(cut).side));
  for (const auto& x : tokens)
    for (const auto& y : tokens) candidates.push_back(action.mul(y, action.inv(x)));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& cand : candidates) {
    const auto image = translate_cut(g, sys.cut(cut), action, cand);
    if (image && *image == comp) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeInversion> detect_edge_inversion(const CutSystem& sys,
                                                   const StructureTree& tree,
                                                   const GroupAction& action) {
  (void)tree;
  for (std::size_t i : edges_by_centrality(sys, action)) {
    const auto witness = inversion_witness_at(sys, i, action);
    if (witness) return EdgeInversion{*witness, i};
  }
  return std::nullopt;
}

QuotientResult quotient(const CutSystem& sys, const StructureTree& tree,
                        const InducedTreeAction& action) {
  const std::size_t nc = tree.class_members.size();
  std::vector<std::size_t> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 0; e < action.elements.size(); ++e)
    for (std::size_t c = 0; c < nc; ++c)
      if (action.class_image[e][c]) parent[find(c)] = find(*action.class_image[e][c]);

  // Orbits of unordered tree edges, carried by the cut-level images.
  std::vector<std::size_t> edge_of_cut(sys.size());
  for (std::size_t t = 0; t < tree.edges.size(); ++t) {
    edge_of_cut[tree.edges[t].cut] = t;
    edge_of_cut[sys.complement_of(tree.edges[t].cut)] = t;
  }
  std::vector<std::size_t> eparent(tree.edges.size());
  std::iota(eparent.begin(), eparent.end(), 0);
  std::function<std::size_t(std::size_t)> efind = [&](std::size_t v) {
    while (eparent[v] != v) v = eparent[v] = eparent[eparent[v]];
    return v;
  };
  for (std::size_t e = 0; e < action.elements.size(); ++e)
    for (std::size_t t = 0; t < tree.edges.size(); ++t) {
      const auto img = action.cut_image[e][tree.edges[t].cut];
      if (img) eparent[efind(t)] = efind(edge_of_cut[*img]);
    }

  QuotientResult out;
  out.undefined_images = action.undefined_class_images;
  std::map<std::size_t, std::size_t> vorbit;
  out.vertex_orbit.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t r = find(c);
    if (!vorbit.count(r)) {
      vorbit[r] = out.quotient.vertices.size();
      out.quotient.vertices.push_back("O" + std::to_string(out.quotient.vertices.size()));
    }
    out.vertex_orbit[c] = vorbit[r];
  }
  if (out.quotient.vertices.size() > 2)
    throw InputError("system not single-orbit: quotient has " +
                     std::to_string(out.quotient.vertices.size()) + " vertex orbits");
  std::map<std::size_t, std::size_t> eorbit;
  for (std::size_t t = 0; t < tree.edges.size(); ++t) {
    const std::size_t r = efind(t);
    if (eorbit.count(r)) continue;
    eorbit[r] = out.quotient.edges.size();
    out.quotient.edges.push_back("E" + std::to_string(out.quotient.edges.size()));
    out.quotient.alpha.push_back(out.vertex_orbit[tree.edges[t].class_a]);
    out.quotient.omega.push_back(out.vertex_orbit[tree.edges[t].class_b]);
  }
  return out;
}

ExtractionResult extract_splitting(const CutSystem& sys, const StructureTree& tree,
                                   const GroupAction& action) {
  ExtractionResult result;
  const auto order = edges_by_centrality(sys, action);
  if (order.empty()) {
    result.message = "cut system carries no tree edge";
    return result;
  }

  std::optional<EdgeInversion> inversion;
  for (std::size_t i : order) {
    const auto witness = inversion_witness_at(sys, i, action);
    if (witness) {
      inversion = EdgeInversion{*witness, i};
      break;
    }
  }
  result.inversion_detected = inversion.has_value();

  auto incomplete = [&](const Stabilizer& st) { return st.skipped_candidates > 0; };

  if (inversion) {
    // Subdivide the tree: the inverted edge becomes a segment between the
    // endpoint class and the new midpoint, and the action on the subdivision
    // is inversion-free since classes and midpoints are never exchanged.
    result.subdivided = true;
    result.quotient_shape = "segment";
    const std::size_t cut = inversion->cut;
    const Stabilizer GP = class_stabilizer(sys, tree, action, tree.class_of_cut[cut]);
    const Stabilizer GQ = cut_pair_stabilizer(sys, cut, action);
    if (incomplete(GP) || incomplete(GQ)) {
      result.message = "stabilizer scan incomplete near the model boundary; increase radius";
      return result;
    }
    if (!std::binary_search(GQ.elements.begin(), GQ.elements.end(), inversion->witness))
      throw InvariantViolation(
          "inversion witness survives the barycentric subdivision: " + inversion->witness);
    SplittingDescriptor desc;
    desc.kind = SplittingDescriptor::Kind::Amalgam;
    desc.vertex_group_p = GP.elements;
    desc.vertex_group_q = GQ.elements;
    desc.edge_group = intersect_sorted(GP.elements, GQ.elements);
    if (desc.vertex_group_p.size() <= desc.edge_group.size() ||
        desc.vertex_group_q.size() <= desc.edge_group.size()) {
      result.message = "splitting degenerates to the edge group; increase radius";
      return result;
    }
    result.status = ExtractionResult::Status::Ok;
    result.descriptor = desc;
    return result;
  }

  const auto ita = induced_tree_action(sys, tree, action);
  QuotientResult q;
  try {
    q = quotient(sys, tree, ita);
  } catch (const InputError& e) {
    result.message = e.what();
    return result;
  }
  const std::size_t cut = order.front();
  const std::size_t comp = sys.complement_of(cut);
  const std::size_t P = tree.class_of_cut[cut];
  const std::size_t Q = tree.class_of_cut[comp];

  if (q.quotient.is_segment()) {
    result.quotient_shape = "segment";
    const Stabilizer GP = class_stabilizer(sys, tree, action, P);
    const Stabilizer GQ = class_stabilizer(sys, tree, action, Q);
    if (incomplete(GP) || incomplete(GQ)) {
      result.message = "stabilizer scan incomplete near the model boundary; increase radius";
      return result;
    }
    SplittingDescriptor desc;
    desc.kind = SplittingDescriptor::Kind::Amalgam;
    desc.vertex_group_p = GP.elements;
    desc.vertex_group_q = GQ.elements;
    desc.edge_group = intersect_sorted(GP.elements, GQ.elements);
    if (desc.vertex_group_p.size() <= desc.edge_group.size() ||
        desc.vertex_group_q.size() <= desc.edge_group.size()) {
      result.message = "splitting degenerates to the edge group; increase radius";
      return result;
    }
    result.status = ExtractionResult::Status::Ok;
    result.descriptor = desc;
    return result;
  }

  if (!q.quotient.is_loop()) {
    result.message = "quotient is neither loop nor segment; increase radius";
    return result;
  }

  result.quotient_shape = "loop";
  const EndMarkedGraph& g = sys.graph();
  const Stabilizer GP = class_stabilizer(sys, tree, action, P);
  const Stabilizer GQ = class_stabilizer(sys, tree, action, Q);
  if (incomplete(GP) || incomplete(GQ)) {
    result.message = "stabilizer scan incomplete near the model boundary; increase radius";
    return result;
  }
  const std::vector<std::string> edge_group = intersect_sorted(GP.elements, GQ.elements);

  // Stable letter: an element carrying class P onto class Q.
  std::vector<std::string> candidates = movers(action);
  const auto from = tokens_of(g, g.beta(sys.cut(cut).side));
  std::vector<std::string> to;
  for (std::size_t m : tree.class_members[Q]) {
    const auto toks = tokens_of(g, g.beta(sys.cut(m).side));
    to.insert(to.end(), toks.begin(), toks.end());
  }
  for (const auto& x : from)
    for (const auto& y : to) candidates.push_back(action.mul(y, action.inv(x)));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::optional<std::string> witness;
  for (const auto& cand : candidates) {
    bool any = false;
    bool fits = true;
    for (std::size_t m : tree.class_members[P]) {
      const auto side = translate_cut(g, sys.cut(m), action, cand);
      if (!side) continue;
      const auto idx = sys.index_of(*side);
      if (!idx || tree.class_of_cut[*idx] != Q) {
        fits = false;
        break;
      }
      any = true;
    }
    if (any && fits) {
      witness = cand;
      break;
    }
  }
  if (!witness) {
    result.message = "no stable-letter witness found; increase radius";
    return result;
  }

  SplittingDescriptor desc;
  desc.kind = SplittingDescriptor::Kind::Hnn;
  desc.base = GQ.elements;
  desc.subgroup_a = edge_group;
  desc.stable_letter = *witness;
  for (const auto& a : edge_group) {
    const std::string image = action.mul(action.mul(*witness, a), action.inv(*witness));
    desc.subgroup_b.push_back(image);
    desc.phi.emplace_back(a, image);
  }
  std::sort(desc.subgroup_b.begin(), desc.subgroup_b.end());
  for (const auto& b : desc.subgroup_b)
    if (!std::binary_search(desc.base.begin(), desc.base.end(), b)) {
      result.message = "conjugated edge group leaves the base group; increase radius";
      return result;
    }
  result.status = ExtractionResult::Status::Ok;
  result.descriptor = desc;
  return result;
}

std::string splitting_to_json(const SplittingDescriptor& desc) {
  ordered_json doc;
  if (desc.kind == SplittingDescriptor::Kind::Amalgam) {
    doc["kind"] = "amalgam";
    doc["vertex_groups"] = ordered_json::array({desc.vertex_group_p, desc.vertex_group_q});
    doc["edge_group"] = desc.edge_group;
    ordered_json emb = ordered_json::object();
    for (const auto& e : desc.edge_group) emb[e] = ordered_json::array({e, e});
    doc["embeddings"] = emb;
  } else {
    doc["kind"] = "hnn";
    doc["base"] = desc.base;
    doc["A"] = desc.subgroup_a;
    doc["B"] = desc.subgroup_b;
    ordered_json phi = ordered_json::object();
    for (const auto& [a, b] : desc.phi) phi[a] = b;
    doc["phi"] = phi;
    doc["stable_letter"] = desc.stable_letter;
  }
  return doc.dump(2) + "\n";
}

std::string evidence_to_json(const EvidenceBundle& ev) {
  ordered_json doc;
  doc["ends"] = to_string(ev.ends.value);
  doc["markers_low"] = ev.ends.markers_low;
  doc["markers_high"] = ev.ends.markers_high;
  doc["kappa"] = ev.kappa;
  doc["minimal_cuts_oriented"] = ev.minimal_cut_count;
  doc["m_star"] = ev.m_star;
  doc["m_values"] = ev.m_values;
  doc["optimal_cuts_oriented"] = ev.optimal_cut_count;
  doc["system_size"] = ev.system_size;
  doc["skipped_translates"] = ev.skipped_translates;
  doc["classes"] = ev.class_count;
  doc["undefined_class_images"] = ev.undefined_class_images;
  doc["inversion_detected"] = ev.inversion_detected;
  doc["subdivided"] = ev.subdivided;
  doc["quotient_shape"] = ev.quotient_shape;
  doc["stability_checked"] = ev.stability_checked;
  if (ev.stability_checked) {
    doc["stable"] = ev.stable;
    doc["kappa_low"] = ev.kappa_low;
  }
  if (ev.verified) doc["verified"] = *ev.verified;
  return doc.dump(2) + "\n";
}

PipelineResult stallings_pipeline(std::shared_ptr<const Presentation> pres, int radius,
                                  const CutConfig& config, int probe_depth) {
  PipelineResult out;
  const GraphGenerator gen = make_cayley_generator(pres);
  out.evidence.ends = count_ends(gen, radius, probe_depth);
  switch (out.evidence.ends.value) {
    case EndCount::Zero:
      out.status = PipelineResult::Status::OneEnd;
      out.message = "no splitting: zero ends (finite group)";
      return out;
    case EndCount::One:
      out.status = PipelineResult::Status::OneEnd;
      out.message = "no splitting: one end";
      return out;
    case EndCount::Unstable:
      out.status = PipelineResult::Status::IncreaseRadius;
      out.message = "end count unstable at this radius; increase radius";
      return out;
    default:
      break;
  }

  const Truncation trunc = truncate(gen, radius, probe_depth);
  const KappaResult kres = kappa(trunc.model, config);
  if (kres.status == CutSearchStatus::BudgetExhausted) {
    out.status = PipelineResult::Status::BudgetExhausted;
    out.message = "separator enumeration budget exhausted";
    return out;
  }
  if (kres.status == CutSearchStatus::NoCutFound) {
    out.status = PipelineResult::Status::NoCut;
    out.message = "no cut found up to k_max=" + std::to_string(config.k_max);
    return out;
  }
  out.evidence.kappa = kres.kappa;
  out.evidence.minimal_cut_count = kres.minimal_cuts.size();
  const NonNestedIndex idx = m_index(kres.minimal_cuts);
  out.evidence.m_star = idx.m_star;
  out.evidence.m_values = idx.m_values;
  const std::vector<Cut> optimal = optimal_cuts(kres.minimal_cuts);
  out.evidence.optimal_cut_count = optimal.size();

  const CayleyAction action(pres, &trunc.model);
  const OrbitClosure closure = orbit_close(trunc.model, {optimal.front()}, action);
  out.evidence.system_size = closure.cuts.size();
  out.evidence.skipped_translates = closure.skipped_translates;

  std::optional<CutSystem> sys;
  try {
    sys.emplace(trunc.model, closure.cuts);
  } catch (const InputError& e) {
    out.status = PipelineResult::Status::IncreaseRadius;
    out.message = std::string("orbit closure unusable at this radius: ") + e.what();
    return out;
  }
  const StructureTree tree = build_tree(*sys);
  out.evidence.class_count = tree.class_members.size();
  const InducedTreeAction ita = induced_tree_action(*sys, tree, action);
  out.evidence.undefined_class_images = ita.undefined_class_images;

  const ExtractionResult ex = extract_splitting(*sys, tree, action);
  out.evidence.inversion_detected = ex.inversion_detected;
  out.evidence.subdivided = ex.subdivided;
  out.evidence.quotient_shape = ex.quotient_shape;
  if (ex.status != ExtractionResult::Status::Ok) {
    out.status = PipelineResult::Status::IncreaseRadius;
    out.message = ex.message;
    return out;
  }

  if (radius >= 3) {
    out.evidence.stability_checked = true;
    const KappaResult low = kappa(truncate(gen, radius - 1, probe_depth).model, config);
    out.evidence.kappa_low = low.kappa;
    out.evidence.stable =
        low.status == CutSearchStatus::Found && low.kappa == kres.kappa;
  }

  out.status = PipelineResult::Status::Split;
  out.message = "split";
  out.descriptor = ex.descriptor;
  return out;
}

namespace {

// Cayley adjacency under the canonical generator policy: every non-identity
// factor element, plus the stable letter for HNN extensions.
std::vector<std::string> canonical_neighbours(const Presentation& p, const std::string& tok) {
  const NormalForm nf = p.decode(tok);
  std::vector<Letter> letters;
  if (p.kind() == Presentation::Kind::Amalgam) {
    const auto& D = p.amalgam();
    for (ElementIndex e = 0; e < D.H.order(); ++e)
      if (e != D.H.identity()) letters.push_back(Letter{Letter::Kind::FactorH, e, 0});
    for (ElementIndex e = 0; e < D.J.order(); ++e)
      if (e != D.J.identity()) letters.push_back(Letter{Letter::Kind::FactorJ, e, 0});
  } else {
    const auto& D = p.hnn();
    for (ElementIndex e = 0; e < D.H.order(); ++e)
      if (e != D.H.identity()) letters.push_back(Letter{Letter::Kind::FactorH, e, 0});
    letters.push_back(Letter{Letter::Kind::Stable, 0, +1});
    letters.push_back(Letter{Letter::Kind::Stable, 0, -1});
  }
  std::vector<std::string> out;
  for (const Letter& l : letters) out.push_back(p.encode(p.act(nf, l)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), tok), out.end());
  return out;
}

struct Ball {
  std::vector<std::string> tokens;  // breadth-first order from the root
  std::vector<int> dist;
  std::vector<std::vector<std::size_t>> adj;
};

Ball build_ball(const Presentation& p, int radius) {
  Ball ball;
  std::unordered_map<std::string, std::size_t> index;
  const std::string root = p.encode(p.identity_form());
  ball.tokens.push_back(root);
  ball.dist.push_back(0);
  index[root] = 0;
  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop_front();
    if (ball.dist[v] == radius) continue;
    for (const auto& w : canonical_neighbours(p, ball.tokens[v])) {
      if (index.count(w)) continue;
      index[w] = ball.tokens.size();
      ball.tokens.push_back(w);
      ball.dist.push_back(ball.dist[v] + 1);
      work.push_back(index[w]);
    }
  }
  ball.adj.resize(ball.tokens.size());
  for (std::size_t v = 0; v < ball.tokens.size(); ++v)
    for (const auto& w : canonical_neighbours(p, ball.tokens[v])) {
      const auto it = index.find(w);
      if (it != index.end()) ball.adj[v].push_back(it->second);
    }
  for (auto& nb : ball.adj) std::sort(nb.begin(), nb.end());
  return ball;
}

// Distance-preserving rooted isomorphism search, breadth-first order with
// adjacency-consistency pruning.
bool balls_isomorphic(const Ball& a, const Ball& b) {
  if (a.tokens.size() != b.tokens.size()) return false;
  const std::size_t n = a.tokens.size();
  std::vector<std::size_t> image(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || b.dist[w] != a.dist[v] || b.adj[w].size() != a.adj[v].size()) continue;
      bool ok = true;
      for (std::size_t x : a.adj[v]) {
        if (x >= v) continue;  // only earlier vertices are mapped
        if (!std::binary_search(b.adj[w].begin(), b.adj[w].end(), image[x])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // Mapped non-neighbours must stay non-neighbours.
        for (std::size_t x = 0; x < v && ok; ++x)
          if (!std::binary_search(a.adj[v].begin(), a.adj[v].end(), x) &&
              std::binary_search(b.adj[w].begin(), b.adj[w].end(), image[x]))
            ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (assign(v + 1)) return true;
      used[w] = false;
      image[v] = SIZE_MAX;
    }
    return false;
  };
  return assign(0);
}

// Relabels a token list as p1, p2, ... (identity stays "1") and emits the
// multiplication table through the original group.
struct RelabeledGroup {
  std::vector<std::string> labels;                     // parallel to tokens
  std::vector<std::string> tokens;                     // sorted, identity first
  std::unordered_map<std::string, std::string> label_of;
  ordered_json table_json;
};

RelabeledGroup relabel_group(const std::vector<std::string>& elements, const std::string& id,
                            const Presentation& original, const std::string& prefix) {
  if (elements.size() > FiniteGroupTable::kMaxOrder)
    throw InputError("unverifiable at desk scale: group of order " +
                     std::to_string(elements.size()));
  RelabeledGroup out;
  out.tokens = elements;
  std::sort(out.tokens.begin(), out.tokens.end());
  auto it = std::find(out.tokens.begin(), out.tokens.end(), id);
  if (it == out.tokens.end()) throw InputError("group element list lacks the identity");
  out.tokens.erase(it);
  out.tokens.insert(out.tokens.begin(), id);
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    const std::string label = i == 0 ? "1" : prefix + std::to_string(i);
    out.labels.push_back(label);
    out.label_of[out.tokens[i]] = label;
  }
  ordered_json table = ordered_json::array();
  for (const auto& x : out.tokens) {
    ordered_json row = ordered_json::array();
    for (const auto& y : out.tokens) {
      const std::string prod =
          original.encode(original.multiply(original.decode(x), original.decode(y)));
      const auto f = out.label_of.find(prod);
      if (f == out.label_of.end())
        throw InputError("group element list is not closed under multiplication");
      row.push_back(f->second);
    }
    table.push_back(row);
  }
  out.table_json["elements"] = out.labels;
  out.table_json["table"] = table;
  return out;
}

Presentation rebuild_presentation(const SplittingDescriptor& desc,
                                  const Presentation& original) {
  const std::string id = original.encode(original.identity_form());
  ordered_json doc;
  if (desc.kind == SplittingDescriptor::Kind::Amalgam) {
    const RelabeledGroup P = relabel_group(desc.vertex_group_p, id, original, "p");
    const RelabeledGroup Q = relabel_group(desc.vertex_group_q, id, original, "q");
    doc["kind"] = "amalgam";
    doc["H"] = P.table_json;
    doc["J"] = Q.table_json;
    ordered_json A = ordered_json::array();
    ordered_json B = ordered_json::array();
    ordered_json phi = ordered_json::object();
    for (const auto& e : desc.edge_group) {
      const auto pa = P.label_of.find(e);
      const auto qb = Q.label_of.find(e);
      if (pa == P.label_of.end() || qb == Q.label_of.end())
        throw InputError("edge group is not contained in both vertex groups");
      A.push_back(pa->second);
      B.push_back(qb->second);
      phi[pa->second] = qb->second;
    }
    doc["A"] = A;
    doc["B"] = B;
    doc["phi"] = phi;
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 1; i < P.labels.size(); ++i) gens.push_back(P.labels[i]);
    for (std::size_t i = 1; i < Q.labels.size(); ++i) gens.push_back(Q.labels[i]);
    doc["generators"] = gens;
  } else {
    const RelabeledGroup H = relabel_group(desc.base, id, original, "g");
    doc["kind"] = "hnn";
    doc["H"] = H.table_json;
    ordered_json A = ordered_json::array();
    ordered_json B = ordered_json::array();
    ordered_json phi = ordered_json::object();
    for (const auto& [a, b] : desc.phi) {
      const auto la = H.label_of.find(a);
      const auto lb = H.label_of.find(b);
      if (la == H.label_of.end() || lb == H.label_of.end())
        throw InputError("associated subgroups are not contained in the base group");
      A.push_back(la->second);
      B.push_back(lb->second);
      phi[la->second] = lb->second;
    }
    doc["A"] = A;
    doc["B"] = B;
    doc["phi"] = phi;
    doc["stable_letter"] = "t";
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 1; i < H.labels.size(); ++i) gens.push_back(H.labels[i]);
    gens.push_back("t");
    doc["generators"] = gens;
  }
  return Presentation::from_json(doc.dump());
}

}  // namespace

bool verify_splitting(const SplittingDescriptor& desc,
                      std::shared_ptr<const Presentation> original, int radius) {
  std::optional<Presentation> rebuilt;
  try {
    rebuilt.emplace(rebuild_presentation(desc, *original));
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind("unverifiable", 0) == 0) throw;
    return false;  // a descriptor that defines no presentation cannot verify
  }
  const int r = std::min(radius, 4);
  const Ball a = build_ball(*original, r);
  const Ball b = build_ball(*rebuilt, r);
  return balls_isomorphic(a, b);
}

}  // namespace cuttrees
