#include "cuttrees/graph_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cuttrees/errors.hpp"

namespace cuttrees {

namespace {

using nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj,
                         std::initializer_list<const char*> allowed,
                         const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw InputError(std::string("unknown key \"") + it.key() + "\" in " + where);
  }
}

}  // namespace

EndMarkedGraph graph_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph file: top level must be an object");
  reject_unknown_keys(doc, {"vertices", "edges"}, "graph file");
  if (!doc.contains("vertices") || !doc.contains("edges"))
    throw InputError("graph file: \"vertices\" and \"edges\" are required");

  EndMarkedGraph::Builder b;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object()) throw InputError("graph file: vertex entries must be objects");
    reject_unknown_keys(v, {"id", "end_marker"}, "vertex entry");
    if (!v.contains("id") || !v["id"].is_string())
      throw InputError("graph file: vertex entry needs a string \"id\"");
    const bool marker = v.value("end_marker", false);
    b.add_vertex(v["id"].get<std::string>(), marker);
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw InputError("graph file: edge entries must be objects");
    reject_unknown_keys(e, {"id", "u", "v", "protected"}, "edge entry");
    for (const char* k : {"id", "u", "v"})
      if (!e.contains(k) || !e[k].is_string())
        throw InputError(std::string("graph file: edge entry needs a string \"") + k + "\"");
    b.add_edge(e["id"].get<std::string>(), e["u"].get<std::string>(),
               e["v"].get<std::string>(), e.value("protected", false));
  }
  return std::move(b).build();
}

EndMarkedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

std::string graph_to_json(const EndMarkedGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    doc["vertices"].push_back(
        {{"id", g.vertex_token(v)}, {"end_marker", g.is_end_marker(v)}});
  }
  doc["edges"] = ordered_json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    doc["edges"].push_back({{"id", ed.token},
                            {"u", g.vertex_token(ed.u)},
                            {"v", g.vertex_token(ed.v)},
                            {"protected", ed.is_protected}});
  }
  return doc.dump(2);
}

}  // namespace cuttrees
