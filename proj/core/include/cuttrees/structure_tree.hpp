#ifndef CUTTREES_STRUCTURE_TREE_HPP
#define CUTTREES_STRUCTURE_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cuttrees/cut_engine.hpp"

namespace cuttrees {

// A complement-closed, pairwise nested family of oriented cuts. Both
// closure properties are verified at construction; violations throw
// InputError with the offending pair.
class CutSystem {
 public:
  CutSystem(const EndMarkedGraph& g, std::vector<Cut> cuts);

  const EndMarkedGraph& graph() const { return *graph_; }
  std::size_t size() const { return cuts_.size(); }
  const Cut& cut(std::size_t i) const { return cuts_[i]; }
  std::size_t complement_of(std::size_t i) const { return complement_[i]; }
  std::optional<std::size_t> index_of(const VertexSet& side) const;

 private:
  const EndMarkedGraph* graph_;
  std::vector<Cut> cuts_;  // sorted by side for deterministic indices
  std::vector<std::size_t> complement_;
};

// Equivalence of cuts: C ~ D iff C = D, or the complement of one is a
// proper subset of the other with no system cut strictly between.
bool equivalent(const CutSystem& sys, std::size_t i, std::size_t j);

// Partition of the system into equivalence classes. Transitivity of the
// computed relation is verified, not assumed.
struct ClassesResult {
  bool ok = false;
  std::vector<std::vector<std::size_t>> classes;  // cut indices, each sorted
  std::vector<std::size_t> class_of;              // cut index -> class id
  // Witness when the relation fails to be transitive.
  std::vector<std::size_t> violating_triple;
  std::string diagnostic;
};

ClassesResult classes(const CutSystem& sys);

struct StructureTree {
  struct Edge {
    std::size_t cut;        // one orientation of the pair
    std::size_t class_a;    // class of `cut`
    std::size_t class_b;    // class of its complement
  };
  std::vector<std::vector<std::size_t>> class_members;
  std::vector<std::size_t> class_of_cut;
  std::vector<Edge> edges;  // one per unordered cut pair
};

// Builds and verifies the tree: connected, acyclic, and the two
// orientations of every cut land in different classes. Verification
// failures throw InvariantViolation.
StructureTree build_tree(const CutSystem& sys);

// The class all of whose member cuts contain x, nothing when no class
// qualifies; two qualifying classes are an invariant violation.
std::optional<std::size_t> locate_vertex(const CutSystem& sys, const StructureTree& tree,
                                         VertexIndex x);

// Experimental: maximal sets no pair of which is separated by any beta(C),
// grown greedily from edges.
std::vector<VertexSet> blocks(const CutSystem& sys);

struct BlockLemmaReport {
  struct PerCut {
    std::size_t cut = 0;
    std::size_t matching_blocks = 0;  // blocks B with C in C(B); 1 expected
    bool union_inclusion = false;    // union of beta(D) inside B_C
    bool intersection_equal = false; // B_C equals the intersection of D u ND
  };
  std::vector<PerCut> per_cut;
  bool separation_claim_holds = false;  // no beta C pair split by any beta D
  std::vector<std::string> discrepancies;
};

// Experimental report on the block lemma; discrepancies are recorded, never
// fatal.
BlockLemmaReport check_block_lemma(const CutSystem& sys);

// Serialization. Class ids are "K<i>" with classes ordered by the canonical
// encoding of their least member cut; cut ids are the canonical (sorted
// edge-token) encoding of the boundary.
std::string tree_to_dot(const CutSystem& sys, const StructureTree& tree);
std::string tree_to_json(const CutSystem& sys, const StructureTree& tree);

}  // namespace cuttrees

#endif
