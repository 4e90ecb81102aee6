#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

/// Edge size k when every edge has exactly k members and there is at least
/// one edge.
std::optional<std::size_t> uniformity(const Hypergraph& h);

// Families -----------------------------------------------------------------

/// All k-subsets of {1..n}. Throws Error{bad_params} unless 2 <= k <= n.
Hypergraph complete_kgraph(std::size_t n, std::size_t k);

/// Star on n vertices; vertex "1" is the centre.
Hypergraph star_graph(std::size_t n);

/// Complete bipartite graph K_{a,b}, parts "a1.." and "b1..".
Hypergraph complete_bipartite(std::size_t a, std::size_t b);

/// `pairs` disjoint 2-edges covering 2 * pairs vertices.
Hypergraph perfect_matching(std::size_t pairs);

/// Edges {i, i+1, ..., i+k-1} (mod n) for every i; k-uniform and k-regular.
Hypergraph cyclic_uniform(std::size_t n, std::size_t k);

/// Vertices of `b` follow those of `a`; labels are renumbered "1".."n".
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Pads every edge of the 2-graph `g` with k - 2 fresh vertices labelled
/// "<edge-index>_p<i>". Throws Error{not_a_graph}, Error{bad_params}.
Hypergraph power_graph(const Hypergraph& g, std::size_t k);

// Hyperstars ---------------------------------------------------------------

struct HyperstarParams {
  std::size_t n = 2;  // vertices of the base star
  std::size_t k = 2;  // uniformity

  /// (n - 1)(k - 1) + 1
  std::size_t vertex_count() const noexcept { return (n - 1) * (k - 1) + 1; }
};

/// power_graph(star_graph(n), k). Throws Error{bad_params} unless n, k >= 2.
Hypergraph hyperstar(HyperstarParams params);

/// -1 with multiplicity (n-1)(k-2), k-2 with multiplicity n-2, and the two
/// roots of x^2 - (k-2)x - (n-1)(k-1). The exact part lists the integer
/// eigenvalues; the residual is the quadratic when its roots are irrational.
Spectrum hyperstar_spectrum_closed(HyperstarParams params);

/// (k-2)(2n-3) + sqrt((k-2)^2 + 4(n-1)(k-1))
double hyperstar_energy_closed(HyperstarParams params);

struct EnergyInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Every hyperstar on t vertices has energy in [2 sqrt(t-1), 2(t-1)].
EnergyInterval hyperstar_extremal_bounds(std::size_t t);

// Binary operations ----------------------------------------------------------

/// Vertices V(H) x V(G) labelled "(v,u)"; edges {v} x e and f x {u}. Inputs
/// must be k-uniform for a common k (edgeless inputs are accepted).
Hypergraph direct_sum(const Hypergraph& h, const Hypergraph& g);

inline constexpr std::uint64_t kProductEdgeCap = 1'000'000;

/// Vertices V(H) x V(G); for every e in E(H), f in E(G) and every bijection
/// e -> f, the edge of matched pairs. Duplicate edge sets collapse, giving
/// k! * m_H * m_G edges. Throws Error{size_cap_exceeded} past kProductEdgeCap.
Hypergraph tensor_product(const Hypergraph& h, const Hypergraph& g);

// Random generators ----------------------------------------------------------

struct SizeRange {
  std::size_t min = 2;
  std::size_t max = 2;
};

/// m distinct edges on n vertices with sizes uniform in `sizes`, by rejection
/// sampling from a single mt19937_64 stream. Throws Error{infeasible_params}.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, SizeRange sizes,
                             std::uint64_t seed);

/// Connected, Berge-acyclic hypergraph: each new edge shares exactly one
/// vertex with the tree built so far.
Hypergraph random_hypertree(std::size_t edges, SizeRange sizes, std::uint64_t seed);

}  // namespace hyperspec
