#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Dense symmetric codegree matrix: entry (i, j) counts the edges holding both
/// i and j; the diagonal is zero.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }

  /// Adds `count` to both (i, j) and (j, i); i != j.
  void add_symmetric(std::size_t i, std::size_t j, std::int64_t count = 1);

  /// Principal submatrix with row and column `v` removed.
  AdjacencyMatrix without(std::size_t v) const;

  Eigen::MatrixXd to_dense() const;

  /// Sum over i != j of entry squared, i.e. trace(A^2).
  std::int64_t sum_of_squares() const;
  std::int64_t max_row_sum() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Multi-edges add their multiplicity to every covered pair; edges with fewer
/// than two members contribute nothing. Throws Error{empty_hypergraph}.
AdjacencyMatrix adjacency_matrix(const Hypergraph& h);

}  // namespace hyperspec
