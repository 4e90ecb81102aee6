#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

using Rational = boost::rational<std::int64_t>;

/// Number of edges, counted with multiplicity, that contain v.
std::size_t degree(const Hypergraph& h, Vertex v);

/// Number of edges containing every vertex of `alpha`. For a pair this is the
/// codegree, i.e. the off-diagonal adjacency entry.
std::size_t set_degree(const Hypergraph& h, std::span<const Vertex> alpha);

std::vector<std::size_t> degrees(const Hypergraph& h);

struct DegreeStats {
  std::size_t max = 0;
  std::size_t min = 0;
  Rational average;  // exact: (sum of degrees) / n
};

/// Throws Error{empty_hypergraph} when n = 0.
DegreeStats degree_stats(const Hypergraph& h);

struct RankCorank {
  std::size_t rank = 0;
  std::size_t corank = 0;
};

/// Largest and smallest edge cardinality. Throws Error{no_edges}.
RankCorank rank_corank(const Hypergraph& h);

/// Every pair of edges meets in at most one vertex.
bool is_linear(const Hypergraph& h);

/// Component id per vertex, numbered by first vertex in index order.
std::vector<std::size_t> component_ids(const Hypergraph& h);
std::size_t count_components(const Hypergraph& h);

/// Isolated vertices disconnect the hypergraph unless n = 1.
bool is_connected(const Hypergraph& h);

/// Connected and free of Berge cycles: the vertex/edge incidence graph is a
/// tree.
bool is_hypertree(const Hypergraph& h);

// Weak cuts -----------------------------------------------------------------

using WeakCutSpec = std::vector<EdgeSplit>;

enum class WeakCutVerdict { yes, no, budget_exceeded };

struct WeakCutLimits {
  /// Cap on the number of candidate divisions examined over all proper
  /// subsets of the cut.
  std::uint64_t budget = 1'000'000;
};

/// Divides the edges of `cut` and checks that the result is disconnected
/// while no division of any proper non-empty subset of the cut edges is.
/// Throws Error{disconnected_input} and Error{malformed_cut}.
WeakCutVerdict is_weak_cut(const Hypergraph& h, const WeakCutSpec& cut,
                           WeakCutLimits limits = {});

/// Connectivity of `h` with the given edges divided, without materialising
/// the divided multi-hypergraph.
bool connected_after_division(const Hypergraph& h,
                              std::span<const EdgeSplit> splits);

}  // namespace hyperspec
