#ifndef WORDGROUPS_DISJOINT_SET_HPP_
#define WORDGROUPS_DISJOINT_SET_HPP_

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace wordgroups {

// Union by size with path compression.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns the surviving root.
  std::size_t join(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return x;
    }
    if (size_[x] < size_[y]) {
      std::swap(x, y);
    }
    parent_[y] = x;
    size_[x] += size_[y];
    return x;
  }

  bool joined(std::size_t x, std::size_t y) { return find(x) == find(y); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace wordgroups

#endif  // WORDGROUPS_DISJOINT_SET_HPP_
