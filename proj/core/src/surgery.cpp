#include "hyperspec/surgery.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

#include "hyperspec/spectra.hpp"

namespace hyperspec {

Hypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.num_vertices())
    fail(ErrorCode::unknown_vertex, "vertex index " + std::to_string(v) + " out of range");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.num_vertices(); ++i)
    if (i != v) labels.push_back(h.label(static_cast<Vertex>(i)));
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    Edge out;
    for (Vertex u : e) {
      if (u == v) continue;
      out.push_back(u > v ? u - 1 : u);
    }
    edges.push_back(std::move(out));
  }
  return Hypergraph(std::move(labels), std::move(edges), Mode::multi);
}

Hypergraph delete_edge(const Hypergraph& h, std::size_t edge) {
  h.edge(edge);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (i != edge) edges.push_back(h.edges()[i]);
  return Hypergraph({h.labels().begin(), h.labels().end()}, std::move(edges), h.mode());
}

Hypergraph divide_edges(const Hypergraph& h, std::span<const EdgeSplit> splits) {
  std::vector<const EdgeSplit*> by_edge(h.num_edges(), nullptr);
  for (const auto& s : splits) {
    validate_split(h, s, ErrorCode::malformed_spec);
    if (by_edge[s.edge])
      fail(ErrorCode::duplicate_index, "edge " + std::to_string(s.edge) + " divided twice");
    by_edge[s.edge] = &s;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (by_edge[i]) {
      edges.push_back(by_edge[i]->left);
      edges.push_back(by_edge[i]->right);
    } else {
      edges.push_back(h.edges()[i]);
    }
  }
  return Hypergraph({h.labels().begin(), h.labels().end()}, std::move(edges), Mode::multi);
}

namespace {

GapReport compare(double before, double after, double bound) {
  GapReport r;
  r.before = before;
  r.after = after;
  r.gap = std::abs(before - after);
  r.bound = bound;
  r.holds = r.gap <= bound + kEqualityTolerance;
  return r;
}

std::vector<double> difference_spectrum(const Hypergraph& a, const Hypergraph& b) {
  return symmetric_eigenvalues(adjacency_matrix(a).to_dense() -
                               adjacency_matrix(b).to_dense());
}

}  // namespace

GapReport vertex_deletion_check(const Hypergraph& h, Vertex v) {
  const double before = energy_value(h);
  const Hypergraph reduced = delete_vertex(h, v);
  const double after = reduced.num_vertices() ? energy_value(reduced) : 0.0;
  GapReport r;
  r.before = before;
  r.after = after;
  r.gap = after - before;
  r.bound = 0.0;
  r.holds = r.gap <= kEqualityTolerance;
  return r;
}

GapReport edge_deletion_check(const Hypergraph& h, std::size_t edge) {
  const double bound = 2.0 * static_cast<double>(h.edge(edge).size()) - 2.0;
  return compare(energy_value(h), energy_value(delete_edge(h, edge)), bound);
}

GapReport division_check(const Hypergraph& h, const EdgeSplit& split) {
  validate_split(h, split, ErrorCode::malformed_spec);
  const double pq = static_cast<double>(split.left.size() * split.right.size());
  const Hypergraph divided = divide_edges(h, std::span(&split, 1));
#ifndef NDEBUG
  {
    const auto diff = difference_spectrum(h, divided);
    assert(std::abs(diff.front() - std::sqrt(pq)) < 1e-8);
    assert(std::abs(diff.back() + std::sqrt(pq)) < 1e-8);
  }
#endif
  return compare(energy_value(h), energy_value(divided), 2.0 * std::sqrt(pq));
}

GapReport isolated_edge_division_check(const Hypergraph& h, const EdgeSplit& split) {
  validate_split(h, split, ErrorCode::malformed_spec);
  const Edge& e = h.edges()[split.edge];
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (i == split.edge) continue;
    const Edge& f = h.edges()[i];
    Edge common;
    std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(common));
    if (!common.empty())
      fail(ErrorCode::not_isolated, "edge " + std::to_string(split.edge) +
                                        " meets edge " + std::to_string(i));
  }
  const double before = energy_value(h);
  const double after = energy_value(divide_edges(h, std::span(&split, 1)));
  GapReport r;
  r.before = before;
  r.after = after;
  r.gap = std::abs(before - after);
  r.bound = 2.0;
  const double generic = 2.0 * std::sqrt(static_cast<double>(split.left.size() * split.right.size()));
  const bool attains_generic = std::abs(r.gap - generic) <= kEqualityTolerance;
  r.holds = std::abs(r.gap - 2.0) <= kEqualityTolerance && attains_generic == (e.size() == 2);
  return r;
}

GapReport weak_cut_energy_check(const Hypergraph& h, const WeakCutSpec& cut,
                                WeakCutLimits limits) {
  switch (is_weak_cut(h, cut, limits)) {
    case WeakCutVerdict::yes:
      break;
    case WeakCutVerdict::no:
      fail(ErrorCode::not_a_weak_cut, "division is not a weak cut");
    case WeakCutVerdict::budget_exceeded:
      fail(ErrorCode::not_a_weak_cut, "weak-cut search exceeded its budget");
  }
  const double before = energy_value(h);
  const double after = energy_value(divide_edges(h, cut));
  GapReport r;
  r.before = before;
  r.after = after;
  r.gap = after - before;
  r.bound = 0.0;
  r.holds = r.gap <= kEqualityTolerance;
  if (cut.size() == 1 && (cut.front().left.size() == 1 || cut.front().right.size() == 1)) {
    r.strict = before - after > kStrictnessWitness;
    r.holds = r.holds && *r.strict;
  }
  return r;
}

std::vector<double> edge_deletion_difference_spectrum(const Hypergraph& h, std::size_t edge) {
  return difference_spectrum(h, delete_edge(h, edge));
}

std::vector<double> division_difference_spectrum(const Hypergraph& h, const EdgeSplit& split) {
  return difference_spectrum(h, divide_edges(h, std::span(&split, 1)));
}

}  // namespace hyperspec
