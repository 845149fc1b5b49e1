#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace pretopos {

/// Disjoint sets over {0, ..., n-1}. The root of every class is its least
/// element, so class labels are canonical.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t size() const noexcept { return parent_.size(); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    // path compression
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns true when x and y were in different classes.
  bool unite(std::size_t x, std::size_t y) {
    std::size_t rx = find(x);
    std::size_t ry = find(y);
    if (rx == ry) return false;
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

  /// Class index of every element, classes numbered by ascending least member.
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> label(parent_.size());
    std::vector<std::size_t> by_root(parent_.size(), parent_.size());
    std::size_t next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      std::size_t r = find(x);
      if (by_root[r] == parent_.size()) by_root[r] = next++;
      label[x] = by_root[r];
    }
    return label;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace pretopos
