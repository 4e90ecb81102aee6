#include "hyperspec/structure.hpp"

#include <algorithm>

#include "detail/union_find.hpp"

namespace hyperspec {

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.num_vertices())
    fail(ErrorCode::unknown_vertex, "vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

std::size_t degree(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(),
      [v](const Edge& e) { return std::binary_search(e.begin(), e.end(), v); }));
}

std::size_t set_degree(const Hypergraph& h, std::span<const Vertex> alpha) {
  if (alpha.empty()) fail(ErrorCode::empty_query, "vertex set query is empty");
  for (Vertex v : alpha) check_vertex(h, v);
  Edge query(alpha.begin(), alpha.end());
  std::sort(query.begin(), query.end());
  query.erase(std::unique(query.begin(), query.end()), query.end());
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
        return std::includes(e.begin(), e.end(), query.begin(), query.end());
      }));
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.num_vertices(), 0);
  for (const auto& e : h.edges())
    for (Vertex v : e) ++d[v];
  return d;
}

DegreeStats degree_stats(const Hypergraph& h) {
  if (h.num_vertices() == 0)
    fail(ErrorCode::empty_hypergraph, "hypergraph has no vertices");
  const auto d = degrees(h);
  DegreeStats s;
  s.max = *std::max_element(d.begin(), d.end());
  s.min = *std::min_element(d.begin(), d.end());
  std::int64_t total = 0;
  for (auto x : d) total += static_cast<std::int64_t>(x);
  s.average = Rational(total, static_cast<std::int64_t>(d.size()));
  return s;
}

RankCorank rank_corank(const Hypergraph& h) {
  if (h.num_edges() == 0) fail(ErrorCode::no_edges, "hypergraph has no edges");
  RankCorank rc{0, h.edges().front().size()};
  for (const auto& e : h.edges()) {
    rc.rank = std::max(rc.rank, e.size());
    rc.corank = std::min(rc.corank, e.size());
  }
  return rc;
}

bool is_linear(const Hypergraph& h) {
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::size_t common = 0;
      auto a = edges[i].begin(), b = edges[j].begin();
      while (a != edges[i].end() && b != edges[j].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          if (++common > 1) return false;
          ++a;
          ++b;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> component_ids(const Hypergraph& h) {
  detail::UnionFind uf(h.num_vertices());
  for (const auto& e : h.edges()) uf.unite_all(e);
  std::vector<std::size_t> root_id(h.num_vertices(), h.num_vertices());
  std::vector<std::size_t> ids(h.num_vertices());
  std::size_t next = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    auto r = uf.find(v);
    if (root_id[r] == h.num_vertices()) root_id[r] = next++;
    ids[v] = root_id[r];
  }
  return ids;
}

std::size_t count_components(const Hypergraph& h) {
  detail::UnionFind uf(h.num_vertices());
  for (const auto& e : h.edges()) uf.unite_all(e);
  return uf.sets();
}

bool is_connected(const Hypergraph& h) {
  return h.num_vertices() >= 1 && count_components(h) == 1;
}

bool is_hypertree(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t nodes = n + h.num_edges();
  if (n == 0) return false;
  // Incidence graph on vertices + edges; a tree iff connected with
  // nodes - 1 incidences and no incidence closing a cycle.
  detail::UnionFind uf(nodes);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Vertex v : h.edges()[i]) {
      if (!uf.unite(v, n + i)) return false;
    }
  }
  return uf.sets() == 1;
}

bool connected_after_division(const Hypergraph& h,
                              std::span<const EdgeSplit> splits) {
  if (h.num_vertices() == 0) return false;
  std::vector<const EdgeSplit*> by_edge(h.num_edges(), nullptr);
  for (const auto& s : splits) by_edge.at(s.edge) = &s;
  detail::UnionFind uf(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (by_edge[i]) {
      uf.unite_all(by_edge[i]->left);
      uf.unite_all(by_edge[i]->right);
    } else {
      uf.unite_all(h.edges()[i]);
    }
  }
  return uf.sets() == 1;
}

}  // namespace hyperspec
