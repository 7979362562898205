#ifndef CUTTREES_FAMILIES_HPP
#define CUTTREES_FAMILIES_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cuttrees/graph.hpp"
#include "cuttrees/normal_forms.hpp"

namespace cuttrees {

// Neighbour oracle for a locally finite infinite graph. The function must be
// deterministic and symmetric; both are spot-checked during truncation.
struct GraphGenerator {
  std::string base_vertex;
  std::function<std::vector<std::string>(const std::string&)> neighbours;
  // Present for cayley generators; the vertex tokens are then the canonical
  // normal-form encodings of group elements.
  std::shared_ptr<const Presentation> presentation;
};

// Parsed form of the CLI family strings: line, ladder, grid2d, tree:<d>,
// cross:<k>, cayley:<presentation-file>.
struct FamilySpec {
  enum class Kind { Line, Ladder, Grid2d, RegularTree, CrossRays, Cayley };
  Kind kind = Kind::Line;
  int degree = 0;               // RegularTree
  int rays = 0;                 // CrossRays
  std::string presentation_path;  // Cayley

  static FamilySpec parse(const std::string& text);
};

GraphGenerator make_generator(const FamilySpec& spec);
// Cayley generator from an already-loaded presentation.
GraphGenerator make_cayley_generator(std::shared_ptr<const Presentation> pres);

// Finite model of the infinite graph: the ball of the given radius around
// the base vertex, one end-marker vertex per complement component that still
// reaches the probe shell at distance radius + probe_depth, and finite
// complement components absorbed as ordinary vertices.
struct Truncation {
  int radius = 0;
  int probe_depth = 0;
  EndMarkedGraph model;
  // marker token -> contracted first-shell vertices of its component
  std::map<std::string, std::vector<std::string>> marker_map;
  std::shared_ptr<const Presentation> presentation;
};

Truncation truncate(const GraphGenerator& gen, int radius, int probe_depth);

enum class EndCount { Zero, One, Two, InfinitelyMany, Unstable };

struct EndCountResult {
  EndCount value = EndCount::Unstable;
  std::size_t markers_low = 0;   // at max_radius - 1
  std::size_t markers_high = 0;  // at max_radius
};

std::string to_string(EndCount c);

EndCountResult count_ends(const GraphGenerator& gen, int max_radius, int probe_depth = 2);

// Per-generator counts |Cs \ C| inside the ball, compared across the two
// largest radii; stable counts back the algebraic more-than-one-end
// criterion.
struct EndCriterionEntry {
  std::string generator;
  std::size_t count_low = 0;
  std::size_t count_high = 0;
  bool stable = false;
};

struct EndCriterionReport {
  std::vector<EndCriterionEntry> entries;
  bool passed = false;
};

EndCriterionReport algebraic_end_criterion_check(const GraphGenerator& gen,
                                                 const std::vector<std::string>& side_tokens,
                                                 int radius, int probe_depth = 2);

}  // namespace cuttrees

#endif
