#ifndef CUTTREES_BASS_SERRE_HPP
#define CUTTREES_BASS_SERRE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuttrees/cut_engine.hpp"
#include "cuttrees/families.hpp"
#include "cuttrees/group_action.hpp"
#include "cuttrees/nesting.hpp"
#include "cuttrees/structure_tree.hpp"

namespace cuttrees {

// Partial action of the group on the cuts and classes of a structure tree.
// Images that fall off the model are recorded, never invented.
struct InducedTreeAction {
  std::vector<std::string> elements;  // generators and their inverses, sorted
  // [element][cut index] -> image cut index when the translate stays in the
  // system.
  std::vector<std::vector<std::optional<std::size_t>>> cut_image;
  // [element][class id] -> image class id; defined when at least one member
  // image is defined and all defined member images agree.
  std::vector<std::vector<std::optional<std::size_t>>> class_image;
  std::size_t undefined_cut_images = 0;
  std::size_t undefined_class_images = 0;
};

InducedTreeAction induced_tree_action(const CutSystem& sys, const StructureTree& tree,
                                      const GroupAction& action);

// Element list of a stabilizer, all canonical tokens including the identity.
struct Stabilizer {
  std::vector<std::string> elements;  // sorted
  std::size_t skipped_candidates = 0;  // action undefined on part of the target
};

// All elements mapping S onto itself, from the candidate scan g = y * x^-1
// with x fixed in S and y ranging over S; freeness of the action makes the
// scan exhaustive. Closure and freeness of the result are verified.
Stabilizer setwise_stabilizer(const EndMarkedGraph& g, const VertexSet& S,
                              const GroupAction& action);

// Elements permuting the member cuts of one tree class, scanned over
// boundary-vertex candidates of the members.
Stabilizer class_stabilizer(const CutSystem& sys, const StructureTree& tree,
                            const GroupAction& action, std::size_t class_id);

// Elements fixing or swapping the two orientations of the cut.
Stabilizer cut_pair_stabilizer(const CutSystem& sys, std::size_t cut,
                               const GroupAction& action);

struct EdgeInversion {
  std::string witness;
  std::size_t cut;  // the inverted tree edge, by one orientation
};

// An element carrying some system cut onto its own complement, if any exists
// among the generators and the boundary-candidate scans.
std::optional<EdgeInversion> detect_edge_inversion(const CutSystem& sys,
                                                   const StructureTree& tree,
                                                   const GroupAction& action);

struct QuotientResult {
  QuotientMultigraph quotient;
  std::vector<std::size_t> vertex_orbit;  // class id -> orbit id
  std::size_t undefined_images = 0;       // partiality carried from the action
};

// Orbit quotient of the induced action; callers must resolve inversions
// first. More than two vertex orbits is an error.
QuotientResult quotient(const CutSystem& sys, const StructureTree& tree,
                        const InducedTreeAction& action);

struct SplittingDescriptor {
  enum class Kind { Amalgam, Hnn };
  Kind kind = Kind::Amalgam;
  // Amalgam: two vertex groups and the edge group, element tokens.
  std::vector<std::string> vertex_group_p;
  std::vector<std::string> vertex_group_q;
  std::vector<std::string> edge_group;
  // Hnn: base group, associated subgroups and the conjugating witness.
  std::vector<std::string> base;
  std::vector<std::string> subgroup_a;
  std::vector<std::string> subgroup_b;
  std::vector<std::pair<std::string, std::string>> phi;  // a -> t a t^-1
  std::string stable_letter;
};

std::string splitting_to_json(const SplittingDescriptor& desc);

struct ExtractionResult {
  enum class Status { Ok, IncreaseRadius };
  Status status = Status::IncreaseRadius;
  std::string message;
  std::optional<SplittingDescriptor> descriptor;
  bool inversion_detected = false;
  bool subdivided = false;
  std::string quotient_shape;  // "loop" or "segment"
};

// Splitting of the acting group over an edge stabilizer of the tree. With an
// edge inversion present the tree is barycentrically subdivided first, which
// turns the loop into a segment; a segment yields an amalgam, a loop an HNN
// extension.
ExtractionResult extract_splitting(const CutSystem& sys, const StructureTree& tree,
                                   const GroupAction& action);

struct EvidenceBundle {
  EndCountResult ends;
  std::size_t kappa = 0;
  std::size_t minimal_cut_count = 0;  // oriented
  std::size_t m_star = 0;
  std::vector<std::size_t> m_values;
  std::size_t optimal_cut_count = 0;
  std::size_t system_size = 0;  // oriented cuts after orbit closure
  std::size_t skipped_translates = 0;
  std::size_t class_count = 0;
  std::size_t undefined_class_images = 0;
  bool inversion_detected = false;
  bool subdivided = false;
  std::string quotient_shape;
  // comparison against the same run one radius lower
  bool stability_checked = false;
  bool stable = false;
  std::size_t kappa_low = 0;
  std::optional<bool> verified;
};

std::string evidence_to_json(const EvidenceBundle& ev);

struct PipelineResult {
  enum class Status { Split, OneEnd, NoCut, IncreaseRadius, BudgetExhausted };
  Status status = Status::NoCut;
  std::string message;
  std::optional<SplittingDescriptor> descriptor;
  EvidenceBundle evidence;
};

// End count gate, truncation, cut search, nesting, orbit closure of one
// optimal cut, tree construction and splitting extraction, with a stability
// probe one radius lower.
PipelineResult stallings_pipeline(std::shared_ptr<const Presentation> pres, int radius,
                                  const CutConfig& config = {}, int probe_depth = 2);

// Rebuilds a presentation from the descriptor and compares rooted Cayley
// balls of radius min(radius, 4) against the original, with both sides
// generated by every non-identity factor element (plus the stable letter).
bool verify_splitting(const SplittingDescriptor& desc,
                      std::shared_ptr<const Presentation> original, int radius);

}  // namespace cuttrees

#endif
