#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/structure.hpp"

namespace hyperspec {

inline constexpr double kEqualityTolerance = 1e-6;
inline constexpr double kStrictnessWitness = 1e-9;

/// Energy before and after an operation, compared against a theorem bound.
/// holds <=> gap <= bound + kEqualityTolerance, unless documented otherwise.
struct GapReport {
  double before = 0.0;
  double after = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  bool holds = false;
  /// Set by checks that also assert a strict decrease.
  std::optional<bool> strict;
};

/// Removes v and shrinks every edge through it; shrunken edges are kept even
/// at size <= 1 or when they duplicate another edge. Result is multi.
Hypergraph delete_vertex(const Hypergraph& h, Vertex v);

/// Drops one edge; vertices stay. Throws Error{bad_index}.
Hypergraph delete_edge(const Hypergraph& h, std::size_t edge);

/// Replaces each selected edge by its two halves. Result is multi.
/// Throws Error{malformed_spec}, Error{duplicate_index}.
Hypergraph divide_edges(const Hypergraph& h, std::span<const EdgeSplit> splits);

/// E(H - v) <= E(H), reported as gap = E(H - v) - E(H) against bound 0.
GapReport vertex_deletion_check(const Hypergraph& h, Vertex v);

/// |E(H) - E(H - e)| <= 2|e| - 2.
GapReport edge_deletion_check(const Hypergraph& h, std::size_t edge);

/// |E(H) - E(H <| e)| <= 2 sqrt(|e'||e''|).
GapReport division_check(const Hypergraph& h, const EdgeSplit& split);

/// For an edge meeting no other edge the division gap is exactly 2 (reported
/// as bound). holds also requires the generic bound 2 sqrt(|e'||e''|) to be
/// attained exactly when |e| = 2. Throws Error{not_isolated}.
GapReport isolated_edge_division_check(const Hypergraph& h, const EdgeSplit& split);

/// E(H <| F) <= E(H) for a weak cut, as gap = E(H <| F) - E(H) against bound 0.
/// Single-edge cuts of the form (e, e - {v}, {v}) must also decrease by more
/// than kStrictnessWitness. Throws Error{not_a_weak_cut}.
GapReport weak_cut_energy_check(const Hypergraph& h, const WeakCutSpec& cut,
                                WeakCutLimits limits = {});

/// Descending eigenvalues of A(H) - A(H - e): |e| - 1, then -1 (|e| - 1 times),
/// then zeros.
std::vector<double> edge_deletion_difference_spectrum(const Hypergraph& h, std::size_t edge);

/// Descending eigenvalues of A(H) - A(H <| e): +-sqrt(|e'||e''|) and zeros.
std::vector<double> division_difference_spectrum(const Hypergraph& h, const EdgeSplit& split);

}  // namespace hyperspec
