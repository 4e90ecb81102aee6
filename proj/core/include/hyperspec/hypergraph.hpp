#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

/// Dense vertex ordinal. Labels are kept by the owning Hypergraph.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of member vertices.
using Edge = std::vector<Vertex>;

/// strict: every edge has at least two members and no edge repeats.
/// multi: repeated edges and edges with zero or one member are allowed.
enum class Mode { strict, multi };

/// Immutable vertex set plus edge list. Vertex i carries label(i); adjacency
/// rows follow the same ordering.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and normalises the edges (members are sorted). Throws
  /// Error{validation} on duplicate labels, out-of-range members, repeated
  /// members inside an edge, and the strict-mode rules.
  Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges,
             Mode mode = Mode::strict);

  /// Builds from label tokens; unknown labels are a validation error.
  static Hypergraph from_labels(
      std::vector<std::string> labels,
      const std::vector<std::vector<std::string>>& edges,
      Mode mode = Mode::strict);

  /// Vertices labelled "1".."n".
  static Hypergraph with_numbered_vertices(std::size_t n,
                                           std::vector<Edge> edges,
                                           Mode mode = Mode::strict);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  Mode mode() const noexcept { return mode_; }

  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  std::optional<Vertex> find(std::string_view label) const;
  /// Throws Error{unknown_vertex}.
  Vertex index_of(std::string_view label) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const;

  /// Same vertices and edges, re-typed as a multi-hypergraph.
  Hypergraph as_multi() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.mode_ == b.mode_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  Mode mode_ = Mode::strict;
  std::unordered_map<std::string, Vertex> index_;
};

/// One edge split into two disjoint non-empty halves whose union is the edge.
struct EdgeSplit {
  std::size_t edge = 0;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// Builds the split of `edge` that moves `part` to the left and keeps the rest
/// on the right.
EdgeSplit split_off(const Hypergraph& h, std::size_t edge,
                    std::span<const Vertex> part);

/// Throws `code` unless the split is well formed for `h`.
void validate_split(const Hypergraph& h, const EdgeSplit& split,
                    ErrorCode code);

}  // namespace hyperspec
