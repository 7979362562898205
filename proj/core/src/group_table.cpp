#include "cuttrees/group_table.hpp"

#include <algorithm>

#include "cuttrees/errors.hpp"

namespace cuttrees {

FiniteGroupTable::FiniteGroupTable(std::vector<std::string> elements,
                                   std::vector<std::vector<std::string>> table)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw InputError("group axiom violated: no elements");
  if (n > kMaxOrder)
    throw InputError("group order exceeds the table limit of 64 elements");
  for (ElementIndex i = 0; i < n; ++i) {
    if (elements_[i].empty()) throw InputError("group element token must be non-empty");
    if (!index_.emplace(elements_[i], i).second)
      throw InputError("duplicate group element token: " + elements_[i]);
  }
  auto id_it = index_.find("1");
  if (id_it == index_.end())
    throw InputError("group axiom violated: no identity element with token \"1\"");
  identity_ = id_it->second;

  if (table.size() != n) throw InputError("multiplication table must have one row per element");
  table_.assign(n, std::vector<ElementIndex>(n));
  for (ElementIndex i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw InputError("multiplication table row has wrong length");
    for (ElementIndex j = 0; j < n; ++j) {
      auto it = index_.find(table[i][j]);
      if (it == index_.end())
        throw InputError("multiplication table entry is not an element: " + table[i][j]);
      table_[i][j] = it->second;
    }
  }

  for (ElementIndex i = 0; i < n; ++i) {
    if (table_[identity_][i] != i || table_[i][identity_] != i)
      throw InputError("group axiom violated: identity law fails at " + elements_[i]);
  }
  inverse_.assign(n, identity_);
  for (ElementIndex i = 0; i < n; ++i) {
    bool found = false;
    for (ElementIndex j = 0; j < n; ++j) {
      if (table_[i][j] == identity_ && table_[j][i] == identity_) {
        inverse_[i] = j;
        found = true;
        break;
      }
    }
    if (!found)
      throw InputError("group axiom violated: no inverse for " + elements_[i]);
  }
  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = 0; b < n; ++b)
      for (ElementIndex c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("group axiom violated: associativity fails at (" + elements_[a] +
                           ", " + elements_[b] + ", " + elements_[c] + ")");
}

ElementIndex FiniteGroupTable::element(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) throw InputError("unknown group element: " + token);
  return it->second;
}

SubgroupEmbedding::SubgroupEmbedding(const FiniteGroupTable& parent,
                                     std::vector<std::string> subgroup_tokens)
    : parent_(&parent) {
  const std::size_t n = parent.order();
  member_flag_.assign(n, false);
  for (const auto& t : subgroup_tokens) {
    const ElementIndex e = parent.element(t);
    if (!member_flag_[e]) {
      member_flag_[e] = true;
      members_.push_back(e);
    }
  }
  if (!member_flag_[parent.identity()])
    throw InputError("subgroup axiom violated: identity missing from subgroup");
  for (ElementIndex a : members_) {
    if (!member_flag_[parent.inv(a)])
      throw InputError("subgroup axiom violated: not closed under inverse at " +
                       parent.token(a));
    for (ElementIndex b : members_)
      if (!member_flag_[parent.mul(a, b)])
        throw InputError("subgroup axiom violated: not closed under product at (" +
                         parent.token(a) + ", " + parent.token(b) + ")");
  }
  std::sort(members_.begin(), members_.end());

  rep_of_.assign(n, 0);
  rem_of_.assign(n, 0);
  rep_flag_.assign(n, false);
  std::vector<bool> assigned(n, false);
  for (ElementIndex h = 0; h < n; ++h) {
    if (assigned[h]) continue;
    // Left coset hA; represent it by the lexicographically least token,
    // except that the coset of A itself is always represented by 1.
    std::vector<ElementIndex> coset;
    for (ElementIndex a : members_) coset.push_back(parent.mul(h, a));
    ElementIndex rep = coset[0];
    if (member_flag_[h]) {
      rep = parent.identity();
    } else {
      for (ElementIndex c : coset)
        if (parent.token(c) < parent.token(rep)) rep = c;
    }
    rep_flag_[rep] = true;
    transversal_.push_back(rep);
    for (ElementIndex c : coset) {
      assigned[c] = true;
      rep_of_[c] = rep;
      rem_of_[c] = parent.mul(parent.inv(rep), c);
    }
  }
  std::sort(transversal_.begin(), transversal_.end());
}

}  // namespace cuttrees
