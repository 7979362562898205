#ifndef CUTTREES_VERTEX_SET_HPP
#define CUTTREES_VERTEX_SET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cuttrees {

// Dense bit-per-vertex set over the vertex indices of one graph.
// All binary operations require both operands to have the same universe size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe_size() const { return size_; }

  void insert(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const;
  bool empty() const;

  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet complement() const;

  bool operator==(const VertexSet& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Strict weak order so sets can key std::map / be sorted canonically.
  bool operator<(const VertexSet& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return words_ < o.words_;
  }

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  // Indices of the members, ascending.
  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cuttrees

#endif
