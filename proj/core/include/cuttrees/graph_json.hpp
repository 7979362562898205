#ifndef CUTTREES_GRAPH_JSON_HPP
#define CUTTREES_GRAPH_JSON_HPP

#include <iosfwd>
#include <string>

#include "cuttrees/graph.hpp"

namespace cuttrees {

// Graph file schema:
// {"vertices":[{"id":"...","end_marker":false},...],
//  "edges":[{"id":"...","u":"...","v":"...","protected":false},...]}
// Unknown keys and duplicate ids are rejected.
EndMarkedGraph graph_from_json(const std::string& text);
EndMarkedGraph load_graph(const std::string& path);

std::string graph_to_json(const EndMarkedGraph& g);

}  // namespace cuttrees

#endif
