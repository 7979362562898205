#include "cuttrees/vertex_set.hpp"

#include <bit>

namespace cuttrees {

void VertexSet::clear_tail() {
  const std::size_t rem = size_ & 63;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

std::size_t VertexSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  VertexSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  r.clear_tail();
  return r;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace cuttrees
