#ifndef CUTTREES_NESTING_HPP
#define CUTTREES_NESTING_HPP

#include <cstddef>
#include <vector>

#include "cuttrees/cut_engine.hpp"
#include "cuttrees/group_action.hpp"

namespace cuttrees {

// The four corners of a cut pair, with opposite pairing
// (cd <-> cc_dc, cc_d <-> c_dc). They partition the vertex set.
struct Corners {
  VertexSet cd;     // C & D
  VertexSet c_dc;   // C & Dc
  VertexSet cc_d;   // Cc & D
  VertexSet cc_dc;  // Cc & Dc
};

// True iff at least one corner is empty.
bool is_nested(const VertexSet& C, const VertexSet& D);

Corners corners(const VertexSet& C, const VertexSet& D);

// Indices into all_min of the cuts not nested with C. Counts orientations
// separately; never contains C itself or its complement.
std::vector<std::size_t> not_nested_set(const VertexSet& C, const std::vector<Cut>& all_min);

// m(C) per cut plus the global minimum m*.
struct NonNestedIndex {
  std::vector<std::size_t> m_values;  // parallel to all_min
  std::size_t m_star = 0;
};

NonNestedIndex m_index(const std::vector<Cut>& all_min);

// All cuts achieving m*. The pairwise-nestedness postcondition of the main
// theorem is always verified; a failure throws InvariantViolation.
std::vector<Cut> optimal_cuts(const std::vector<Cut>& all_min);

struct CornerInequalityReport {
  bool applicable = false;
  std::size_t m_cd = 0;     // m(C & D)
  std::size_t m_ccdc = 0;   // m(Cc & Dc)
  std::size_t m_c = 0;
  std::size_t m_d = 0;
  bool passed = false;      // strict inequality
};

// m(C&D) + m(Cc&Dc) < m(C) + m(D) for non-nested minimal pairs whose
// diagonal corners are cuts.
CornerInequalityReport check_corner_inequality(const EndMarkedGraph& g, const Cut& C,
                                               const Cut& D, const std::vector<Cut>& all_min);

// Moves a cut by one group element via its boundary edges; empty when any
// endpoint image is undefined or the image is not a cut of the model.
std::optional<VertexSet> translate_cut(const EndMarkedGraph& g, const Cut& cut,
                                       const GroupAction& action, const std::string& elem);

// Closure of a set of cuts under complement and those group translates that
// stay inside the model. Translates are moved boundary-first: an image is
// accepted only if every boundary edge maps to a model edge and the
// translated side is again a cut.
struct OrbitClosure {
  std::vector<Cut> cuts;          // sorted by side, complement-closed
  std::size_t skipped_translates = 0;
};

OrbitClosure orbit_close(const EndMarkedGraph& g, const std::vector<Cut>& seed,
                         const GroupAction& action);

}  // namespace cuttrees

#endif
