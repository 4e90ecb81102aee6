#include "hyperspec/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace hyperspec {

std::optional<std::size_t> uniformity(const Hypergraph& h) {
  if (h.num_edges() == 0) return std::nullopt;
  const std::size_t k = h.edges().front().size();
  for (const auto& e : h.edges())
    if (e.size() != k) return std::nullopt;
  return k;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i))
      return std::numeric_limits<std::uint64_t>::max();
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::vector<std::string> product_labels(const Hypergraph& h, const Hypergraph& g) {
  std::vector<std::string> labels;
  labels.reserve(h.num_vertices() * g.num_vertices());
  for (const auto& a : h.labels())
    for (const auto& b : g.labels()) labels.push_back(pair_label(a, b));
  return labels;
}

/// Common uniformity of two k-graphs; 0 when both are edgeless.
std::size_t common_uniformity(const Hypergraph& h, const Hypergraph& g) {
  auto kh = uniformity(h), kg = uniformity(g);
  if ((h.num_edges() && !kh) || (g.num_edges() && !kg))
    fail(ErrorCode::not_uniform, "operands must be uniform hypergraphs");
  if (kh && kg && *kh != *kg)
    fail(ErrorCode::mismatched_uniformity,
         "operands have uniformity " + std::to_string(*kh) + " and " + std::to_string(*kg));
  return kh ? *kh : (kg ? *kg : 0);
}

}  // namespace

Hypergraph complete_kgraph(std::size_t n, std::size_t k) {
  if (k < 2 || k > n)
    fail(ErrorCode::bad_params, "complete k-graph needs 2 <= k <= n");
  if (binomial(n, k) > kProductEdgeCap)
    fail(ErrorCode::size_cap_exceeded, "too many edges in complete k-graph");
  std::vector<Edge> edges;
  Edge current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<Vertex>(i);
  while (true) {
    edges.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return Hypergraph(numbered(n), std::move(edges));
}

Hypergraph star_graph(std::size_t n) {
  if (n < 2) fail(ErrorCode::bad_params, "star needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
  return Hypergraph(numbered(n), std::move(edges));
}

Hypergraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) fail(ErrorCode::bad_params, "both parts must be non-empty");
  auto labels = numbered(a, "a");
  auto right = numbered(b, "b");
  labels.insert(labels.end(), right.begin(), right.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  return Hypergraph(std::move(labels), std::move(edges));
}

Hypergraph perfect_matching(std::size_t pairs) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs; ++i)
    edges.push_back({static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)});
  return Hypergraph(numbered(2 * pairs), std::move(edges));
}

Hypergraph cyclic_uniform(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) fail(ErrorCode::bad_params, "cyclic k-graph needs 2 <= k <= n");
  std::set<Edge> unique;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Edge e;
    for (std::size_t j = 0; j < k; ++j) e.push_back(static_cast<Vertex>((i + j) % n));
    std::sort(e.begin(), e.end());
    if (unique.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(numbered(n), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  const auto offset = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) {
    Edge shifted;
    for (Vertex v : e) shifted.push_back(v + offset);
    edges.push_back(std::move(shifted));
  }
  const Mode mode = (a.mode() == Mode::multi || b.mode() == Mode::multi) ? Mode::multi
                                                                          : Mode::strict;
  return Hypergraph(numbered(a.num_vertices() + b.num_vertices()), std::move(edges), mode);
}

Hypergraph power_graph(const Hypergraph& g, std::size_t k) {
  if (k < 2) fail(ErrorCode::bad_params, "power graph needs k >= 2");
  for (const auto& e : g.edges())
    if (e.size() != 2) fail(ErrorCode::not_a_graph, "power graph base must be 2-uniform");
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    Edge e = g.edges()[i];
    for (std::size_t j = 1; j + 2 <= k; ++j) {
      e.push_back(static_cast<Vertex>(labels.size()));
      labels.push_back(std::to_string(i) + "_p" + std::to_string(j));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(labels), std::move(edges), g.mode());
}

namespace {

void check_hyperstar(HyperstarParams p) {
  if (p.n < 2 || p.k < 2) fail(ErrorCode::bad_params, "hyperstar needs n >= 2 and k >= 2");
}

}  // namespace

Hypergraph hyperstar(HyperstarParams params) {
  check_hyperstar(params);
  return power_graph(star_graph(params.n), params.k);
}

Spectrum hyperstar_spectrum_closed(HyperstarParams params) {
  check_hyperstar(params);
  const auto n = static_cast<std::int64_t>(params.n);
  const auto k = static_cast<std::int64_t>(params.k);
  const std::int64_t b = k - 2;
  const std::int64_t c = (n - 1) * (k - 1);
  const std::int64_t disc = b * b + 4 * c;
  const double root = std::sqrt(static_cast<double>(disc));

  Spectrum s;
  s.values.assign(static_cast<std::size_t>((n - 1) * (k - 2)), -1.0);
  s.values.insert(s.values.end(), static_cast<std::size_t>(n - 2), static_cast<double>(b));
  s.values.push_back((static_cast<double>(b) + root) / 2.0);
  s.values.push_back((static_cast<double>(b) - root) / 2.0);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());

  std::map<std::int64_t, std::size_t, std::greater<>> exact;
  if ((n - 1) * (k - 2) > 0) exact[-1] += static_cast<std::size_t>((n - 1) * (k - 2));
  if (n - 2 > 0) exact[b] += static_cast<std::size_t>(n - 2);
  auto s_int = static_cast<std::int64_t>(std::llround(root));
  while (s_int * s_int > disc) --s_int;
  while ((s_int + 1) * (s_int + 1) <= disc) ++s_int;
  if (s_int * s_int == disc) {
    ++exact[(b + s_int) / 2];
    ++exact[(b - s_int) / 2];
    s.residual = CharPoly();
  } else {
    s.residual = CharPoly({BigInt(-c), BigInt(-b), BigInt(1)});
  }
  std::vector<IntegerRoot> roots;
  for (auto [value, mult] : exact) roots.push_back({value, mult});
  s.exact_part = std::move(roots);
  return s;
}

double hyperstar_energy_closed(HyperstarParams params) {
  check_hyperstar(params);
  const double n = static_cast<double>(params.n);
  const double k = static_cast<double>(params.k);
  return (k - 2) * (2 * n - 3) + std::sqrt((k - 2) * (k - 2) + 4 * (n - 1) * (k - 1));
}

EnergyInterval hyperstar_extremal_bounds(std::size_t t) {
  if (t < 2) fail(ErrorCode::bad_params, "hyperstar needs t >= 2 vertices");
  const double tm1 = static_cast<double>(t - 1);
  return {2.0 * std::sqrt(tm1), 2.0 * tm1};
}

Hypergraph direct_sum(const Hypergraph& h, const Hypergraph& g) {
  common_uniformity(h, g);
  const std::size_t ng = g.num_vertices();
  auto id = [ng](std::size_t v, std::size_t u) { return static_cast<Vertex>(v * ng + u); };
  std::vector<Edge> edges;
  edges.reserve(h.num_vertices() * g.num_edges() + h.num_edges() * ng);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    for (const auto& e : g.edges()) {
      Edge out;
      for (Vertex u : e) out.push_back(id(v, u));
      edges.push_back(std::move(out));
    }
  }
  for (const auto& f : h.edges()) {
    for (std::size_t u = 0; u < ng; ++u) {
      Edge out;
      for (Vertex v : f) out.push_back(id(v, u));
      edges.push_back(std::move(out));
    }
  }
  return Hypergraph(product_labels(h, g), std::move(edges));
}

Hypergraph tensor_product(const Hypergraph& h, const Hypergraph& g) {
  const std::size_t k = common_uniformity(h, g);
  std::uint64_t perms = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    perms *= i;
    if (perms > kProductEdgeCap) break;
  }
  const auto total = static_cast<long double>(perms) * h.num_edges() * g.num_edges();
  if (total > static_cast<long double>(kProductEdgeCap))
    fail(ErrorCode::size_cap_exceeded, "product would exceed the edge cap");

  const std::size_t ng = g.num_vertices();
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& e : h.edges()) {
    for (const auto& f : g.edges()) {
      // Ordered edges pair up position by position, so only the relative
      // order matters: fix e sorted and run over permutations of f.
      Edge target = f;
      do {
        Edge out;
        for (std::size_t i = 0; i < k; ++i)
          out.push_back(static_cast<Vertex>(e[i] * ng + target[i]));
        std::sort(out.begin(), out.end());
        if (seen.insert(out).second) edges.push_back(std::move(out));
      } while (std::next_permutation(target.begin(), target.end()));
    }
  }
  return Hypergraph(product_labels(h, g), std::move(edges));
}

}  // namespace hyperspec
