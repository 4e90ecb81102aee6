#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace hyperspec::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  template <typename Range>
  void unite_all(const Range& members) {
    auto it = std::begin(members);
    if (it == std::end(members)) return;
    std::size_t first = *it;
    for (++it; it != std::end(members); ++it) unite(first, *it);
  }

  std::size_t sets() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

}  // namespace hyperspec::detail
