#include "cuttrees/families.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cuttrees/errors.hpp"

namespace cuttrees {

namespace {

long to_long(const std::string& s) { return std::stol(s); }

std::vector<std::string> line_neighbours(const std::string& v) {
  const long n = to_long(v);
  return {std::to_string(n - 1), std::to_string(n + 1)};
}

std::vector<std::string> ladder_neighbours(const std::string& v) {
  const auto comma = v.find(',');
  const long n = std::stol(v.substr(0, comma));
  const int r = std::stoi(v.substr(comma + 1));
  return {std::to_string(n - 1) + "," + std::to_string(r),
          std::to_string(n + 1) + "," + std::to_string(r),
          std::to_string(n) + "," + std::to_string(1 - r)};
}

std::vector<std::string> grid_neighbours(const std::string& v) {
  const auto comma = v.find(',');
  const long x = std::stol(v.substr(0, comma));
  const long y = std::stol(v.substr(comma + 1));
  auto tok = [](long a, long b) { return std::to_string(a) + "," + std::to_string(b); };
  return {tok(x - 1, y), tok(x + 1, y), tok(x, y - 1), tok(x, y + 1)};
}

// d-regular tree as reduced words over d involutive letters; "1" is the root.
std::vector<std::string> tree_neighbours(int degree, const std::string& v) {
  std::vector<std::string> out;
  const std::string word = (v == "1") ? "" : v;
  for (int i = 0; i < degree; ++i) {
    const char letter = static_cast<char>('a' + i);
    if (!word.empty() && word.back() == letter) {
      std::string shorter = word.substr(0, word.size() - 1);
      out.push_back(shorter.empty() ? "1" : shorter);
    } else {
      out.push_back(word + letter);
    }
  }
  return out;
}

// k-cycle v1..vk with a one-ended triangulated strip hanging off each cycle
// vertex. The strips are 3-edge-connected towards infinity, so the only
// 2-element cut boundaries of the family are pairs of cycle edges. Strip i
// has vertices r<i>a<n>, r<i>b<n> for n >= 1; its levels are joined by
// a_n-a_{n+1}, b_n-b_{n+1}, a_n-b_n, a_n-b_{n+1}, and the strip is tied to
// its cycle vertex by v-a1, v-b1, v-a2.
std::vector<std::string> cross_neighbours(int rays, const std::string& v) {
  auto cyc = [&](int i) { return "v" + std::to_string((i % rays + rays) % rays + 1); };
  auto strip = [](int i, char side, long n) {
    return "r" + std::to_string(i) + std::string(1, side) + std::to_string(n);
  };
  if (v[0] == 'v') {
    const int i = std::stoi(v.substr(1)) - 1;
    return {cyc(i - 1), cyc(i + 1), strip(i + 1, 'a', 1), strip(i + 1, 'b', 1),
            strip(i + 1, 'a', 2)};
  }
  const auto side_pos = v.find_first_of("ab", 1);
  const int i = std::stoi(v.substr(1, side_pos - 1));
  const char side = v[side_pos];
  const long n = std::stol(v.substr(side_pos + 1));
  std::vector<std::string> out;
  if (side == 'a') {
    if (n > 1) out.push_back(strip(i, 'a', n - 1));
    out.push_back(strip(i, 'a', n + 1));
    out.push_back(strip(i, 'b', n));
    out.push_back(strip(i, 'b', n + 1));
    if (n <= 2) out.push_back("v" + std::to_string(i));
  } else {
    if (n > 1) out.push_back(strip(i, 'b', n - 1));
    out.push_back(strip(i, 'b', n + 1));
    out.push_back(strip(i, 'a', n));
    if (n > 1) out.push_back(strip(i, 'a', n - 1));
    if (n == 1) out.push_back("v" + std::to_string(i));
  }
  return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  if (text == "line") {
    spec.kind = Kind::Line;
  } else if (text == "ladder") {
    spec.kind = Kind::Ladder;
  } else if (text == "grid2d") {
    spec.kind = Kind::Grid2d;
  } else if (text.rfind("tree:", 0) == 0) {
    spec.kind = Kind::RegularTree;
    try {
      spec.degree = std::stoi(text.substr(5));
    } catch (const std::exception&) {
      throw InputError("invalid tree degree in family spec: " + text);
    }
    if (spec.degree < 2 || spec.degree > 26)
      throw InputError("tree degree must be between 2 and 26");
  } else if (text.rfind("cross:", 0) == 0) {
    spec.kind = Kind::CrossRays;
    try {
      spec.rays = std::stoi(text.substr(6));
    } catch (const std::exception&) {
      throw InputError("invalid ray count in family spec: " + text);
    }
    if (spec.rays < 3) throw InputError("cross family needs at least 3 rays");
  } else if (text.rfind("cayley:", 0) == 0) {
    spec.kind = Kind::Cayley;
    spec.presentation_path = text.substr(7);
    if (spec.presentation_path.empty())
      throw InputError("cayley family needs a presentation file");
  } else {
    throw InputError("unknown family spec: " + text);
  }
  return spec;
}

GraphGenerator make_cayley_generator(std::shared_ptr<const Presentation> pres) {
  GraphGenerator gen;
  gen.base_vertex = pres->encode(pres->identity_form());
  gen.presentation = pres;
  gen.neighbours = [pres](const std::string& v) { return pres->neighbours(v); };
  return gen;
}

GraphGenerator make_generator(const FamilySpec& spec) {
  GraphGenerator gen;
  switch (spec.kind) {
    case FamilySpec::Kind::Line:
      gen.base_vertex = "0";
      gen.neighbours = line_neighbours;
      break;
    case FamilySpec::Kind::Ladder:
      gen.base_vertex = "0,0";
      gen.neighbours = ladder_neighbours;
      break;
    case FamilySpec::Kind::Grid2d:
      gen.base_vertex = "0,0";
      gen.neighbours = grid_neighbours;
      break;
    case FamilySpec::Kind::RegularTree: {
      const int d = spec.degree;
      gen.base_vertex = "1";
      gen.neighbours = [d](const std::string& v) { return tree_neighbours(d, v); };
      break;
    }
    case FamilySpec::Kind::CrossRays: {
      const int k = spec.rays;
      gen.base_vertex = "v1";
      gen.neighbours = [k](const std::string& v) { return cross_neighbours(k, v); };
      break;
    }
    case FamilySpec::Kind::Cayley: {
      auto pres = std::make_shared<Presentation>(Presentation::load(spec.presentation_path));
      return make_cayley_generator(std::move(pres));
    }
  }
  return gen;
}

Truncation truncate(const GraphGenerator& gen, int radius, int probe_depth) {
  if (radius < 1 || probe_depth < 1)
    throw InputError("truncation radius and probe depth must be positive");

  const int horizon = radius + probe_depth;
  std::unordered_map<std::string, int> dist;
  std::unordered_map<std::string, std::vector<std::string>> adj;
  std::deque<std::string> queue;
  dist[gen.base_vertex] = 0;
  queue.push_back(gen.base_vertex);
  while (!queue.empty()) {
    const std::string v = queue.front();
    queue.pop_front();
    const int d = dist[v];
    if (d > horizon) continue;
    std::vector<std::string> nb = gen.neighbours(v);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    {
      std::vector<std::string> again = gen.neighbours(v);
      std::sort(again.begin(), again.end());
      again.erase(std::unique(again.begin(), again.end()), again.end());
      if (again != nb)
        throw InputError("generator nondeterminism detected at vertex " + v);
    }
    adj[v] = nb;
    // Adjacency at the horizon itself is recorded (it decides component
    // membership of the outer region) but never expanded further.
    if (d == horizon) continue;
    for (const auto& w : nb) {
      if (!dist.count(w)) {
        dist[w] = d + 1;
        queue.push_back(w);
      }
    }
  }
  // Symmetry spot-check on explored pairs.
  for (const auto& [v, nb] : adj) {
    for (const auto& w : nb) {
      auto it = adj.find(w);
      if (it != adj.end() &&
          !std::binary_search(it->second.begin(), it->second.end(), v))
        throw InputError("generator neighbour relation is not symmetric at " + v + "/" + w);
    }
  }

  auto known = [&](const std::string& v) { return dist.count(v) != 0; };

  // Components of {dist >= radius}; the part beyond the ball is either
  // contracted to a marker or absorbed, depending on whether the component
  // reaches the probe horizon.
  std::set<std::string> outer;
  for (const auto& [v, d] : dist)
    if (d >= radius) outer.insert(v);

  struct Component {
    std::vector<std::string> beyond;  // dist > radius
    bool reaches_horizon = false;
    std::string least;
  };
  std::vector<Component> comps;
  std::set<std::string> comp_seen;
  for (const auto& start : outer) {
    if (comp_seen.count(start)) continue;
    Component comp;
    comp.least = start;
    std::deque<std::string> q{start};
    comp_seen.insert(start);
    while (!q.empty()) {
      const std::string v = q.front();
      q.pop_front();
      comp.least = std::min(comp.least, v);
      if (dist[v] > radius) comp.beyond.push_back(v);
      if (dist[v] == horizon) comp.reaches_horizon = true;
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (const auto& w : it->second) {
        if (known(w) && outer.count(w) && !comp_seen.count(w)) {
          comp_seen.insert(w);
          q.push_back(w);
        }
      }
    }
    if (!comp.beyond.empty()) comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.least < b.least; });

  std::set<std::string> absorbed;
  for (const auto& comp : comps)
    if (!comp.reaches_horizon)
      for (const auto& v : comp.beyond) absorbed.insert(v);

  auto in_model = [&](const std::string& v) {
    return (dist.count(v) && dist[v] <= radius) || absorbed.count(v);
  };

  std::vector<std::string> ordinary;
  for (const auto& [v, d] : dist)
    if (in_model(v)) ordinary.push_back(v);
  std::sort(ordinary.begin(), ordinary.end());

  EndMarkedGraph::Builder b;
  for (const auto& v : ordinary) b.add_vertex(v, false);

  std::map<std::string, std::vector<std::string>> marker_map;
  std::size_t marker_no = 0;
  std::unordered_map<std::string, std::string> marker_of;  // beyond vertex -> marker
  for (const auto& comp : comps) {
    if (!comp.reaches_horizon) continue;
    const std::string marker = "end" + std::to_string(marker_no++);
    b.add_vertex(marker, true);
    std::vector<std::string> shell;
    for (const auto& v : comp.beyond) {
      marker_of[v] = marker;
      if (dist[v] == radius + 1) shell.push_back(v);
    }
    std::sort(shell.begin(), shell.end());
    marker_map[marker] = std::move(shell);
  }

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& v : ordinary) {
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& w : it->second) {
      if (!known(w)) continue;
      if (in_model(w)) {
        auto key = std::minmax(v, w);
        edges.insert({key.first, key.second});
      } else if (marker_of.count(w)) {
        auto key = std::minmax(v, marker_of[w]);
        edges.insert({key.first, key.second});
      }
    }
  }
  for (const auto& [u, v] : edges) {
    const bool prot = marker_map.count(u) || marker_map.count(v);
    b.add_edge(u + "~" + v, u, v, prot);
  }
  return Truncation{radius, probe_depth, std::move(b).build(), std::move(marker_map),
                    gen.presentation};
}

std::string to_string(EndCount c) {
  switch (c) {
    case EndCount::Zero: return "0";
    case EndCount::One: return "1";
    case EndCount::Two: return "2";
    case EndCount::InfinitelyMany: return "infinitely_many";
    case EndCount::Unstable: return "unstable";
  }
  return "unstable";
}

EndCountResult count_ends(const GraphGenerator& gen, int max_radius, int probe_depth) {
  if (max_radius < 3) throw InputError("count_ends needs max_radius >= 3");
  EndCountResult r;
  r.markers_low = truncate(gen, max_radius - 1, probe_depth).model.end_marker_count();
  r.markers_high = truncate(gen, max_radius, probe_depth).model.end_marker_count();
  if (r.markers_low == r.markers_high && r.markers_low <= 2) {
    r.value = r.markers_low == 0   ? EndCount::Zero
              : r.markers_low == 1 ? EndCount::One
                                   : EndCount::Two;
  } else if (r.markers_low >= 3 && r.markers_high > r.markers_low) {
    r.value = EndCount::InfinitelyMany;
  } else {
    r.value = EndCount::Unstable;
  }
  return r;
}

EndCriterionReport algebraic_end_criterion_check(const GraphGenerator& gen,
                                                 const std::vector<std::string>& side_tokens,
                                                 int radius, int probe_depth) {
  if (!gen.presentation)
    throw InputError("the algebraic end criterion needs a cayley generator");
  const Presentation& pres = *gen.presentation;

  EndCriterionReport report;
  report.passed = true;
  for (const GroupWord& g : pres.generators()) {
    // Count elements of C whose right translate leaves C, restricted to the
    // ball of each radius; edge elements whose translate leaves the ball are
    // not counted.
    auto count_at = [&](int r) -> std::size_t {
      Truncation tr = truncate(gen, r, probe_depth);
      std::size_t n = 0;
      for (const auto& c : side_tokens) {
        if (!tr.model.find_vertex(c)) continue;
        NormalForm nf = pres.decode(c);
        for (const Letter& l : g) nf = pres.act(nf, l);
        const std::string img = pres.encode(nf);
        if (!tr.model.find_vertex(img)) continue;
        if (std::find(side_tokens.begin(), side_tokens.end(), img) == side_tokens.end()) ++n;
      }
      return n;
    };
    EndCriterionEntry entry;
    std::string text;
    for (const Letter& l : g) {
      if (!text.empty()) text += ' ';
      if (l.kind == Letter::Kind::Stable)
        text += (l.eps > 0) ? pres.hnn().stable_token : pres.hnn().stable_token + "^-1";
      else if (l.kind == Letter::Kind::FactorH)
        text += (pres.kind() == Presentation::Kind::Amalgam ? pres.amalgam().H : pres.hnn().H)
                    .token(l.elem);
      else
        text += pres.amalgam().J.token(l.elem);
    }
    entry.generator = text;
    entry.count_low = count_at(radius - 1);
    entry.count_high = count_at(radius);
    entry.stable = entry.count_low == entry.count_high;
    report.passed = report.passed && entry.stable;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace cuttrees
