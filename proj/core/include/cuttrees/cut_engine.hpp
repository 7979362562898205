#ifndef CUTTREES_CUT_ENGINE_HPP
#define CUTTREES_CUT_ENGINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cuttrees/graph.hpp"

namespace cuttrees {

// A k-element edge boundary whose two sides are both connected. The witness
// side is the component containing the first endpoint of the first edge.
struct Separator {
  std::vector<EdgeIndex> edges;  // sorted
  VertexSet side;
};

// An oriented cut: a side whose boundary is free of protected edges, with
// both the side and its complement connected and holding an end marker.
struct Cut {
  VertexSet side;
  std::vector<EdgeIndex> boundary;
};

// The six edge counts of the corner picture for a cut pair (C, D):
//   a = |delta(C&D, Cc&D)|   b = |delta(C&D, C&Dc)|
//   c = |delta(C&Dc, Cc&Dc)| d = |delta(Cc&D, Cc&Dc)|
//   e = |delta(C&D, Cc&Dc)|  f = |delta(C&Dc, Cc&D)|
struct CornerProfile {
  std::size_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

struct CutConfig {
  int k_max = 8;
  std::size_t budget = 1000000;  // recursion-node budget for the enumeration
};

enum class CutSearchStatus { Found, NoCutFound, BudgetExhausted };

struct KappaResult {
  CutSearchStatus status = CutSearchStatus::NoCutFound;
  std::size_t kappa = 0;
  // Oriented: each unordered cut contributes both sides. Sorted by the side
  // set, so order is deterministic.
  std::vector<Cut> minimal_cuts;
};

bool is_cut(const EndMarkedGraph& g, const VertexSet& side);

// All k-separators of g containing the unprotected edge e, computed by the
// path recursion: branch over the edges of a shortest path joining the
// endpoints of e after deleting e. Throws BudgetExhaustedError when the
// recursion-node budget runs out.
struct BudgetExhaustedError {
  std::size_t nodes;
};
std::vector<Separator> enumerate_separators_containing(const EndMarkedGraph& g, EdgeIndex e,
                                                       int k, std::size_t budget = 1000000);

KappaResult kappa(const EndMarkedGraph& g, const CutConfig& config = {});

CornerProfile corner_profile(const EndMarkedGraph& g, const VertexSet& C, const VertexSet& D);

// Checks the corner-minimality lemma on a pair of minimal cuts: when both
// C&D and Cc&Dc are cuts they must again have boundary kappa and the
// diagonal count f must vanish.
struct CornerMinimalityReport {
  bool applicable = false;
  CornerProfile profile;
  std::size_t boundary_cd = 0;    // |delta(C&D)|
  std::size_t boundary_ccdc = 0;  // |delta(Cc&Dc)|
  bool passed = false;
};

CornerMinimalityReport check_corner_minimality(const EndMarkedGraph& g, const Cut& C,
                                               const Cut& D, std::size_t kappa_value);

// Canonical encodings used wherever results are serialized or deduplicated.
std::string canonical_separator(const EndMarkedGraph& g, const std::vector<EdgeIndex>& F);
// Sorted vertex tokens of the side containing the lexicographically least
// end marker.
std::string canonical_cut(const EndMarkedGraph& g, const VertexSet& side);

}  // namespace cuttrees

#endif
