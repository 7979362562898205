#ifndef CUTTREES_GROUP_TABLE_HPP
#define CUTTREES_GROUP_TABLE_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace cuttrees {

using ElementIndex = std::size_t;

// Finite group given by a full multiplication table. The identity must carry
// the token "1". Group axioms are checked exhaustively at construction
// (orders are capped at 64, so the associativity scan is cheap).
class FiniteGroupTable {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  FiniteGroupTable(std::vector<std::string> elements,
                   std::vector<std::vector<std::string>> table);

  std::size_t order() const { return elements_.size(); }
  ElementIndex identity() const { return identity_; }
  const std::string& token(ElementIndex e) const { return elements_[e]; }
  ElementIndex element(const std::string& token) const;  // throws InputError
  bool has_element(const std::string& token) const {
    return index_.count(token) != 0;
  }

  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[a][b]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, ElementIndex> index_;
  std::vector<std::vector<ElementIndex>> table_;
  std::vector<ElementIndex> inverse_;
  ElementIndex identity_ = 0;
};

// A subgroup A of a parent group together with the left-coset transversal
// that represents each coset by its lexicographically least token. The coset
// of A itself is represented by the identity.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(const FiniteGroupTable& parent,
                    std::vector<std::string> subgroup_tokens);

  const FiniteGroupTable& parent() const { return *parent_; }
  const std::vector<ElementIndex>& members() const { return members_; }
  bool contains(ElementIndex e) const { return member_flag_[e]; }
  std::size_t subgroup_order() const { return members_.size(); }

  const std::vector<ElementIndex>& transversal() const { return transversal_; }
  bool is_representative(ElementIndex e) const { return rep_flag_[e]; }

  // h = rep * remainder with rep in the transversal and remainder in A.
  struct Decomposition {
    ElementIndex rep;
    ElementIndex remainder;
  };
  Decomposition coset_decompose(ElementIndex h) const {
    return {rep_of_[h], rem_of_[h]};
  }

 private:
  const FiniteGroupTable* parent_;
  std::vector<ElementIndex> members_;
  std::vector<bool> member_flag_;
  std::vector<ElementIndex> transversal_;
  std::vector<bool> rep_flag_;
  std::vector<ElementIndex> rep_of_;
  std::vector<ElementIndex> rem_of_;
};

}  // namespace cuttrees

#endif
