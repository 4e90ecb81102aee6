#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "hyperspec/constructions.hpp"

namespace hyperspec {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

/// Number of subsets of an n-set with size in [lo, hi], saturating.
long double available_edges(std::size_t n, std::size_t lo, std::size_t hi) {
  long double total = 0;
  for (std::size_t s = lo; s <= hi; ++s) {
    long double c = 1;
    for (std::size_t i = 1; i <= s; ++i) c = c * static_cast<long double>(n - s + i) / i;
    total += c;
  }
  return total;
}

}  // namespace

Hypergraph random_hypergraph(std::size_t n, std::size_t m, SizeRange sizes,
                             std::uint64_t seed) {
  if (sizes.min < 2 || sizes.min > sizes.max || sizes.max > n)
    fail(ErrorCode::infeasible_params, "size range must satisfy 2 <= min <= max <= n");
  if (static_cast<long double>(m) > available_edges(n, sizes.min, sizes.max) + 0.5L)
    fail(ErrorCode::infeasible_params,
         "only " + std::to_string(static_cast<unsigned long long>(
                       available_edges(n, sizes.min, sizes.max))) +
             " distinct edges exist for the requested sizes");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(sizes.min, sizes.max);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});

  std::set<Edge> seen;
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const std::size_t s = size_dist(rng);
    // Partial Fisher-Yates: the first s entries form a uniform s-subset.
    for (std::size_t i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(numbered(n), std::move(edges));
}

Hypergraph random_hypertree(std::size_t edge_count, SizeRange sizes, std::uint64_t seed) {
  if (sizes.min < 2 || sizes.min > sizes.max)
    fail(ErrorCode::infeasible_params, "size range must satisfy 2 <= min <= max");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(sizes.min, sizes.max);
  std::vector<Edge> edges;
  Vertex next = 0;
  if (edge_count == 0) return Hypergraph(numbered(1), {});
  for (std::size_t i = 0; i < edge_count; ++i) {
    const std::size_t s = size_dist(rng);
    Edge e;
    std::size_t fresh = s;
    if (i > 0) {
      std::uniform_int_distribution<Vertex> anchor(0, next - 1);
      e.push_back(anchor(rng));
      --fresh;
    }
    for (std::size_t j = 0; j < fresh; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(numbered(next), std::move(edges));
}

}  // namespace hyperspec
