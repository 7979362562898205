#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuttrees/bass_serre.hpp"
#include "cuttrees/cut_engine.hpp"
#include "cuttrees/errors.hpp"
#include "cuttrees/families.hpp"
#include "cuttrees/graph_json.hpp"
#include "cuttrees/nesting.hpp"
#include "cuttrees/presets.hpp"
#include "cuttrees/structure_tree.hpp"

namespace {

using namespace cuttrees;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitNoCut = 3;
constexpr int kExitNoSplitting = 4;
constexpr int kExitInvariant = 5;

struct Options {
  std::string input;
  std::string output;
  int radius = 6;
  int probe = 2;
  int kmax = 8;
  long budget = 1000000;
  std::string format = "json";
  unsigned long seed = 0;
  int threads = 1;
  bool verify = false;
  bool blocks = false;
  std::string only;
};

CutConfig cut_config(const Options& o) {
  CutConfig c;
  c.k_max = o.kmax;
  c.budget = static_cast<std::size_t>(o.budget);
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write output file: " + o.output);
  out << text;
}

struct ResolvedModel {
  EndMarkedGraph model;
  std::shared_ptr<const Presentation> presentation;
};

ResolvedModel resolve_model(const Options& o) {
  std::optional<FamilySpec> fs;
  try {
    fs = FamilySpec::parse(o.input);
  } catch (const InputError&) {
  }
  if (fs) {
    Truncation t = truncate(make_generator(*fs), o.radius, o.probe);
    return ResolvedModel{std::move(t.model), t.presentation};
  }
  if (!std::filesystem::exists(o.input))
    throw InputError("input is neither a family spec nor an existing file: " + o.input);
  return ResolvedModel{load_graph(o.input), nullptr};
}

std::string side_name(const EndMarkedGraph& g, const VertexSet& side) {
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

int cmd_gen(const Options& o) {
  const FamilySpec fs = FamilySpec::parse(o.input);
  const Truncation t = truncate(make_generator(fs), o.radius, o.probe);
  emit(o, graph_to_json(t.model));
  return 0;
}

int cmd_analyze(const Options& o) {
  const ResolvedModel in = resolve_model(o);
  const KappaResult kr = kappa(in.model, cut_config(o));
  if (kr.status == CutSearchStatus::BudgetExhausted) {
    std::cerr << "separator enumeration budget exhausted (budget=" << o.budget << ")\n";
    return kExitNoCut;
  }
  if (kr.status == CutSearchStatus::NoCutFound) {
    std::cerr << "no cut found up to k_max=" << o.kmax << "\n";
    return kExitNoCut;
  }
  const NonNestedIndex idx = m_index(kr.minimal_cuts);
  const std::vector<Cut> optimal = optimal_cuts(kr.minimal_cuts);
  if (o.format == "json") {
    ordered_json doc;
    doc["kappa"] = kr.kappa;
    doc["minimal_cuts"] = ordered_json::array();
    for (const Cut& c : kr.minimal_cuts) {
      ordered_json jc;
      jc["side"] = side_name(in.model, c.side);
      jc["boundary"] = canonical_separator(in.model, c.boundary);
      doc["minimal_cuts"].push_back(jc);
    }
    doc["m_values"] = idx.m_values;
    doc["m_star"] = idx.m_star;
    doc["optimal_cuts"] = ordered_json::array();
    for (const Cut& c : optimal) doc["optimal_cuts"].push_back(side_name(in.model, c.side));
    emit(o, doc.dump(2) + "\n");
  } else if (o.format == "text") {
    std::string out;
    out += "kappa=" + std::to_string(kr.kappa) + "\n";
    out += "minimal cuts (oriented)=" + std::to_string(kr.minimal_cuts.size()) + "\n";
    out += "m*=" + std::to_string(idx.m_star) + "\n";
    out += "optimal cuts (oriented)=" + std::to_string(optimal.size()) + "\n";
    emit(o, out);
  } else {
    throw InputError("analyze supports formats json and text, not " + o.format);
  }
  return 0;
}

int cmd_tree(const Options& o) {
  const ResolvedModel in = resolve_model(o);
  const KappaResult kr = kappa(in.model, cut_config(o));
  if (kr.status != CutSearchStatus::Found) {
    std::cerr << "no cut found up to k_max=" << o.kmax << "\n";
    return kExitNoCut;
  }
  const std::vector<Cut> optimal = optimal_cuts(kr.minimal_cuts);
  const CutSystem sys(in.model, optimal);
  const StructureTree tree = build_tree(sys);
  if (o.format == "dot") {
    emit(o, tree_to_dot(sys, tree));
  } else if (o.format == "json") {
    ordered_json doc = ordered_json::parse(tree_to_json(sys, tree));
    if (o.blocks) {
      const auto bs = blocks(sys);
      ordered_json jb = ordered_json::array();
      for (const auto& b : bs) jb.push_back(side_name(in.model, b));
      doc["blocks"] = jb;
      const BlockLemmaReport rep = check_block_lemma(sys);
      doc["block_lemma"] = ordered_json::object();
      doc["block_lemma"]["separation_claim_holds"] = rep.separation_claim_holds;
      doc["block_lemma"]["discrepancies"] = rep.discrepancies;
    }
    emit(o, doc.dump(2) + "\n");
  } else if (o.format == "text") {
    std::string out;
    out += "classes=" + std::to_string(tree.class_members.size()) + "\n";
    out += "tree edges=" + std::to_string(tree.edges.size()) + "\n";
    if (o.blocks) {
      const BlockLemmaReport rep = check_block_lemma(sys);
      out += "blocks=" + std::to_string(blocks(sys).size()) + "\n";
      out += "block lemma discrepancies=" + std::to_string(rep.discrepancies.size()) + "\n";
    }
    emit(o, out);
  } else {
    throw InputError("unknown format: " + o.format);
  }
  return 0;
}

int cmd_split(const Options& o) {
  std::shared_ptr<const Presentation> pres;
  std::optional<FamilySpec> fs;
  try {
    fs = FamilySpec::parse(o.input);
  } catch (const InputError&) {
  }
  if (fs && fs->kind != FamilySpec::Kind::Cayley) {
    // Non-group family: the end-count gate still applies, but there is no
    // presentation to split.
    const EndCountResult ends = count_ends(make_generator(*fs), o.radius, o.probe);
    if (ends.value == EndCount::One || ends.value == EndCount::Zero) {
      std::cerr << "no splitting: one end\n";
      return kExitNoSplitting;
    }
    if (ends.value == EndCount::Unstable) {
      std::cerr << "end count unstable at this radius; increase radius\n";
      return kExitNoSplitting;
    }
    throw InputError("splitting extraction needs a cayley presentation input");
  }
  if (fs)
    pres = std::make_shared<Presentation>(Presentation::load(fs->presentation_path));
  else if (o.input.rfind("preset:", 0) == 0)
    pres = std::make_shared<Presentation>(
        Presentation::from_json(preset_presentation(o.input.substr(7))));
  else
    pres = std::make_shared<Presentation>(Presentation::load(o.input));

  PipelineResult res = stallings_pipeline(pres, o.radius, cut_config(o), o.probe);
  bool verify_failed = false;
  if (res.status == PipelineResult::Status::Split && o.verify) {
    res.evidence.verified = verify_splitting(*res.descriptor, pres, o.radius);
    verify_failed = !*res.evidence.verified;
  }

  if (o.format == "json") {
    ordered_json doc;
    const char* status = res.status == PipelineResult::Status::Split        ? "split"
                         : res.status == PipelineResult::Status::OneEnd     ? "no-splitting"
                         : res.status == PipelineResult::Status::NoCut      ? "no-cut"
                         : res.status == PipelineResult::Status::IncreaseRadius
                             ? "increase-radius"
                             : "budget-exhausted";
    doc["status"] = status;
    doc["message"] = res.message;
    if (res.descriptor) doc["descriptor"] = ordered_json::parse(splitting_to_json(*res.descriptor));
    doc["evidence"] = ordered_json::parse(evidence_to_json(res.evidence));
    emit(o, doc.dump(2) + "\n");
  } else {
    std::string out = res.message + "\n";
    if (res.descriptor) out += splitting_to_json(*res.descriptor);
    emit(o, out);
  }

  switch (res.status) {
    case PipelineResult::Status::Split:
      return verify_failed ? kExitInvariant : 0;
    case PipelineResult::Status::OneEnd:
    case PipelineResult::Status::IncreaseRadius:
      return kExitNoSplitting;
    case PipelineResult::Status::NoCut:
    case PipelineResult::Status::BudgetExhausted:
      return kExitNoCut;
  }
  return kExitInvariant;
}

// ---- property suites for the check command ----

using Suite = std::function<std::vector<std::string>(std::mt19937_64&)>;

EndMarkedGraph random_connected_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nd(4, 8);
  const int n = nd(rng);
  EndMarkedGraph::Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  std::set<std::pair<int, int>> used;
  int edge_no = 0;
  auto add = [&](int u, int v) {
    if (u == v) return;
    auto key = std::minmax(u, v);
    if (!used.insert(key).second) return;
    b.add_edge("e" + std::to_string(edge_no++), "v" + std::to_string(key.first),
               "v" + std::to_string(key.second));
  };
  for (int i = 1; i < n; ++i) add(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
  std::uniform_int_distribution<int> extra(0, 2 * n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int more = extra(rng);
  for (int i = 0; i < more && edge_no < 16; ++i) add(pick(rng), pick(rng));
  return std::move(b).build();
}

std::vector<std::vector<EdgeIndex>> brute_force_separators(const EndMarkedGraph& g,
                                                           EdgeIndex e0, int k) {
  std::vector<std::vector<EdgeIndex>> out;
  std::vector<EdgeIndex> pool;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (e != e0) pool.push_back(e);
  std::vector<EdgeIndex> pickv;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<int>(pickv.size()) == k - 1) {
      std::vector<EdgeIndex> f = pickv;
      f.push_back(e0);
      std::sort(f.begin(), f.end());
      const auto comps = g.components_minus_edges(f);
      if (comps.size() != 2) return;
      for (EdgeIndex e : f) {
        const auto& ed = g.edge(e);
        if (comps[0].contains(ed.u) == comps[0].contains(ed.v)) return;
      }
      out.push_back(f);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      pickv.push_back(pool[i]);
      go(i + 1);
      pickv.pop_back();
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> suite_finitely(std::mt19937_64& rng) {
  std::vector<std::string> fails;
  for (int trial = 0; trial < 20; ++trial) {
    const EndMarkedGraph g = random_connected_graph(rng);
    for (EdgeIndex e0 = 0; e0 < g.edge_count(); ++e0) {
      for (int k = 1; k <= 3; ++k) {
        auto enumerated = enumerate_separators_containing(g, e0, k);
        std::vector<std::vector<EdgeIndex>> got;
        for (const auto& s : enumerated) got.push_back(s.edges);
        std::sort(got.begin(), got.end());
        const auto expect = brute_force_separators(g, e0, k);
        if (got != expect)
          fails.push_back("graph-core, trial " + std::to_string(trial) + ", edge " +
                          g.edge(e0).token + ", k=" + std::to_string(k) +
                          ": enumeration disagrees with subset filtering");
      }
    }
  }
  return fails;
}

std::vector<std::pair<std::string, Truncation>> bundled_models(int radius) {
  std::vector<std::pair<std::string, Truncation>> out;
  for (const char* name : {"line", "ladder", "cross:4", "tree:4"}) {
    const int r = std::string(name) == "tree:4" ? std::min(radius, 4) : radius;
    out.emplace_back(name, truncate(make_generator(FamilySpec::parse(name)), r, 2));
  }
  return out;
}

std::vector<std::string> suite_intersection(std::mt19937_64&) {
  std::vector<std::string> fails;
  for (const auto& [name, t] : bundled_models(6)) {
    const KappaResult kr = kappa(t.model);
    for (std::size_t i = 0; i < kr.minimal_cuts.size(); ++i)
      for (std::size_t j = i + 1; j < kr.minimal_cuts.size(); ++j) {
        const CornerProfile p =
            corner_profile(t.model, kr.minimal_cuts[i].side, kr.minimal_cuts[j].side);
        if (2 * kr.kappa != p.a + p.b + p.c + p.d + 2 * p.e + 2 * p.f)
          fails.push_back("cut-engine, boundary identity, " + std::string(name) + ": cuts " +
                          std::to_string(i) + "," + std::to_string(j));
        const auto rep =
            check_corner_minimality(t.model, kr.minimal_cuts[i], kr.minimal_cuts[j], kr.kappa);
        if (rep.applicable && !rep.passed)
          fails.push_back("cut-engine, corner minimality, " + std::string(name) + ": cuts " +
                          std::to_string(i) + "," + std::to_string(j));
      }
  }
  return fails;
}

std::vector<std::string> suite_not_nested_corner(std::mt19937_64&) {
  std::vector<std::string> fails;
  const Truncation t = truncate(make_generator(FamilySpec::parse("cross:4")), 6, 2);
  const KappaResult kr = kappa(t.model);
  const auto& cuts = kr.minimal_cuts;
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      if (i == j || is_nested(cuts[i].side, cuts[j].side)) continue;
      const Corners c = corners(cuts[i].side, cuts[j].side);
      for (std::size_t k = 0; k < cuts.size(); ++k) {
        const VertexSet& E = cuts[k].side;
        const bool n_cd = !is_nested(E, c.cd);
        const bool n_cdc = !is_nested(E, c.c_dc);
        const bool n_ccd = !is_nested(E, c.cc_d);
        const bool n_ccdc = !is_nested(E, c.cc_dc);
        const bool n_C = !is_nested(E, cuts[i].side);
        const bool n_D = !is_nested(E, cuts[j].side);
        if (((n_cd && n_ccdc) || (n_cdc && n_ccd)) && !(n_C && n_D))
          fails.push_back("nesting, opposite-corner claim: cuts " + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k));
        if ((n_cd || n_cdc || n_ccd || n_ccdc) && !(n_C || n_D))
          fails.push_back("nesting, single-corner claim: cuts " + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k));
      }
    }
  return fails;
}

std::vector<std::string> suite_corners_equality(std::mt19937_64&) {
  std::vector<std::string> fails;
  const Truncation t = truncate(make_generator(FamilySpec::parse("cross:4")), 6, 2);
  const KappaResult kr = kappa(t.model);
  bool any = false;
  for (std::size_t i = 0; i < kr.minimal_cuts.size(); ++i)
    for (std::size_t j = 0; j < kr.minimal_cuts.size(); ++j) {
      if (i == j) continue;
      const auto rep = check_corner_inequality(t.model, kr.minimal_cuts[i], kr.minimal_cuts[j],
                                               kr.minimal_cuts);
      if (!rep.applicable) continue;
      any = true;
      if (!rep.passed)
        fails.push_back("nesting, corner inequality: cuts " + std::to_string(i) + "," +
                        std::to_string(j));
    }
  if (!any) fails.push_back("nesting, corner inequality: no applicable pair found");
  return fails;
}

std::vector<std::string> suite_optimally(std::mt19937_64&) {
  std::vector<std::string> fails;
  for (const auto& [name, t] : bundled_models(6)) {
    const KappaResult kr = kappa(t.model);
    try {
      optimal_cuts(kr.minimal_cuts);  // postcondition verified internally
    } catch (const InvariantViolation& e) {
      fails.push_back("nesting, optimal nestedness, " + std::string(name) + ": " + e.what());
    }
  }
  return fails;
}

std::vector<std::string> suite_tree(std::mt19937_64&) {
  std::vector<std::string> fails;
  auto degrees = [](const StructureTree& tree) {
    std::vector<std::size_t> deg(tree.class_members.size(), 0);
    for (const auto& e : tree.edges) {
      ++deg[e.class_a];
      ++deg[e.class_b];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
  };
  {
    const Truncation t = truncate(make_generator(FamilySpec::parse("line")), 6, 2);
    const CutSystem sys(t.model, optimal_cuts(kappa(t.model).minimal_cuts));
    const auto deg = degrees(build_tree(sys));
    const bool path = deg.size() >= 2 && deg[0] == 1 && deg[1] == 1 &&
                      (deg.size() == 2 || (deg[2] == 2 && deg.back() == 2));
    if (!path) fails.push_back("structure-tree, line: tree is not a path");
  }
  {
    const Truncation t = truncate(make_generator(FamilySpec::parse("cross:4")), 6, 2);
    const CutSystem sys(t.model, optimal_cuts(kappa(t.model).minimal_cuts));
    const auto deg = degrees(build_tree(sys));
    const std::vector<std::size_t> star{1, 1, 1, 1, 4};
    if (deg != star) fails.push_back("structure-tree, cross:4: tree is not the 4-star");
  }
  return fails;
}

std::vector<std::string> suite_normal_forms(std::mt19937_64& rng) {
  std::vector<std::string> fails;
  for (const char* name : {"z2_z3", "z4_z2_z4", "z4_hnn_z2"}) {
    const Presentation p = Presentation::from_json(preset_presentation(name));
    for (int trial = 0; trial < 200; ++trial) {
      GroupWord w;
      const int len = std::uniform_int_distribution<int>(0, 8)(rng);
      auto random_letter = [&]() -> Letter {
        if (p.kind() == Presentation::Kind::Amalgam) {
          const auto& D = p.amalgam();
          if (std::uniform_int_distribution<int>(0, 1)(rng))
            return Letter{Letter::Kind::FactorH,
                          std::uniform_int_distribution<ElementIndex>(0, D.H.order() - 1)(rng),
                          0};
          return Letter{Letter::Kind::FactorJ,
                        std::uniform_int_distribution<ElementIndex>(0, D.J.order() - 1)(rng),
                        0};
        }
        const auto& D = p.hnn();
        const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        if (kind == 0)
          return Letter{Letter::Kind::FactorH,
                        std::uniform_int_distribution<ElementIndex>(0, D.H.order() - 1)(rng),
                        0};
        return Letter{Letter::Kind::Stable, 0, kind == 1 ? +1 : -1};
      };
      for (int i = 0; i < len; ++i) w.push_back(random_letter());
      // Insert a trivially cancelling pair at a random position.
      GroupWord w2 = w;
      const Letter l = random_letter();
      const std::size_t pos =
          std::uniform_int_distribution<std::size_t>(0, w2.size())(rng);
      w2.insert(w2.begin() + pos, {l, p.inverse_letter(l)});
      const NormalForm a = p.normalize(w);
      const NormalForm b = p.normalize(w2);
      if (p.encode(a) != p.encode(b)) {
        fails.push_back("normal-forms, uniqueness, " + std::string(name) + ", trial " +
                        std::to_string(trial));
        break;
      }
    }
  }
  return fails;
}

std::vector<std::string> suite_ends(std::mt19937_64&) {
  std::vector<std::string> fails;
  auto expect = [&fails](const char* family, EndCount want) {
    const auto got = count_ends(make_generator(FamilySpec::parse(family)), 6, 2);
    if (got.value != want)
      fails.push_back("families, end count, " + std::string(family) + ": got " +
                      to_string(got.value) + ", want " + to_string(want));
  };
  expect("line", EndCount::Two);
  expect("grid2d", EndCount::One);
  expect("tree:4", EndCount::InfinitelyMany);
  for (const char* name : {"z_hnn", "z_hnn_23"}) {
    const auto pres =
        std::make_shared<Presentation>(Presentation::from_json(preset_presentation(name)));
    const auto got = count_ends(make_cayley_generator(pres), 6, 2);
    if (got.value != EndCount::Two)
      fails.push_back("families, end count, preset " + std::string(name) + ": got " +
                      to_string(got.value));
  }
  return fails;
}

int cmd_check(const Options& o) {
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"lemma:finitely", suite_finitely},
      {"lemma:intersection", suite_intersection},
      {"lemma:not_nested_corner", suite_not_nested_corner},
      {"lemma:corners_equality", suite_corners_equality},
      {"theorem:optimally", suite_optimally},
      {"tree:shapes", suite_tree},
      {"lemma:normalform", suite_normal_forms},
      {"ends:classification", suite_ends},
  };
  bool failed = false;
  bool ran = false;
  for (const auto& [name, suite] : suites) {
    if (!o.only.empty() && name.find(o.only) == std::string::npos) continue;
    ran = true;
    std::mt19937_64 rng(o.seed);
    const auto fails = suite(rng);
    if (fails.empty()) {
      std::cout << "[pass] " << name << "\n";
    } else {
      failed = true;
      std::cout << "[fail] " << name << "\n";
      for (const auto& f : fails) std::cout << "       " << f << "\n";
    }
  }
  if (!ran) throw InputError("no suite matches --only " + o.only);
  return failed ? kExitInvariant : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-cut structure trees and group splittings"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("input", o.input, "family spec or input file")->required();
    cmd->add_option("--radius", o.radius, "truncation radius")->check(CLI::PositiveNumber);
    cmd->add_option("--probe", o.probe, "probe depth beyond the radius")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", o.kmax, "largest boundary size searched")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "enumeration node budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--seed", o.seed, "seed for randomized suites");
    cmd->add_option("--threads", o.threads, "worker thread hint")->check(CLI::PositiveNumber);
    cmd->add_option("--output", o.output, "write to a file instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "write the truncation of a family as graph JSON");
  add_common(gen, true);
  CLI::App* analyze = app.add_subcommand("analyze", "cut and nesting report");
  add_common(analyze, true);
  CLI::App* tree = app.add_subcommand("tree", "structure tree of the optimal cuts");
  add_common(tree, true);
  tree->add_flag("--blocks", o.blocks, "add the experimental blocks report");
  CLI::App* split = app.add_subcommand("split", "extract a group splitting");
  add_common(split, true);
  split->add_flag("--verify", o.verify, "verify the descriptor by ball isomorphism");
  CLI::App* check = app.add_subcommand("check", "run the property suites");
  add_common(check, false);
  check->add_option("--only", o.only, "run only suites whose name contains this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (analyze->parsed()) return cmd_analyze(o);
    if (tree->parsed()) return cmd_tree(o);
    if (split->parsed()) return cmd_split(o);
    return cmd_check(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
