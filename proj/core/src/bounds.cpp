#include "hyperspec/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <future>
#include <map>

#include "hyperspec/constructions.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

namespace {

void require_edges(const Hypergraph& h) {
  if (h.num_edges() == 0) fail(ErrorCode::no_edges, "hypergraph has no edges");
}

/// s - 1, clamped at zero so that empty edges cannot flip a sign.
std::uint64_t corank_minus_one(const Hypergraph& h) {
  const auto s = rank_corank(h).corank;
  return s >= 1 ? s - 1 : 0;
}

std::uint64_t degree_sum(const Hypergraph& h) {
  std::uint64_t total = 0;
  for (auto d : degrees(h)) total += d;
  return total;
}

double largest_eigenvalue(const Hypergraph& h) {
  const auto values = spectrum_numeric(adjacency_matrix(h)).values;
  return values.empty() ? 0.0 : std::max(0.0, values.front());
}

double sqrt0(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace

std::uint64_t zagreb(const Hypergraph& h) {
  std::uint64_t z = 0;
  for (auto d : degrees(h)) z += static_cast<std::uint64_t>(d) * d;
  return z;
}

ZagrebUpper upper_zagreb(const Hypergraph& h) {
  require_edges(h);
  const double n = static_cast<double>(h.num_vertices());
  const double m = static_cast<double>(h.num_edges());
  const double r = static_cast<double>(rank_corank(h).rank);
  const double z = static_cast<double>(zagreb(h));
  const double delta = static_cast<double>(degree_stats(h).max);
  return {sqrt0(n * (r - 1) * z), sqrt0(n * m * (r * r - r) * delta)};
}

double upper_lambda1(const Hypergraph& h) {
  require_edges(h);
  const double n = static_cast<double>(h.num_vertices());
  const double r = static_cast<double>(rank_corank(h).rank);
  const double z = static_cast<double>(zagreb(h));
  const double l1 = largest_eigenvalue(h);
  const double inner = (r - 1) * z - l1 * l1;
  assert(inner >= -1e-6 * std::max(1.0, l1 * l1));
  return l1 + sqrt0((n - 1) * inner);
}

Lambda1Bounds lambda1_degree_bounds(const Hypergraph& h) {
  require_edges(h);
  const auto rs = rank_corank(h);
  const auto stats = degree_stats(h);
  Lambda1Bounds out;
  out.lower = static_cast<double>(corank_minus_one(h) * stats.min);
  out.upper = static_cast<double>((rs.rank >= 1 ? rs.rank - 1 : 0) * stats.max);

  // Per component: (s_c - 1) times the minimum degree inside the component.
  const auto ids = component_ids(h);
  const auto deg = degrees(h);
  std::map<std::size_t, std::size_t> min_deg;
  std::map<std::size_t, std::size_t> min_size;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    auto [it, fresh] = min_deg.emplace(ids[v], deg[v]);
    if (!fresh) it->second = std::min(it->second, deg[v]);
  }
  for (const auto& e : h.edges()) {
    if (e.empty()) continue;
    auto [it, fresh] = min_size.emplace(ids[e.front()], e.size());
    if (!fresh) it->second = std::min(it->second, e.size());
  }
  double best = 0.0;
  for (auto [id, s] : min_size)
    best = std::max(best, static_cast<double>((s - 1) * min_deg[id]));
  out.component_lower = best;
  return out;
}

double upper_regular(const Hypergraph& h) {
  const auto k = uniformity(h);
  const auto stats = h.num_vertices() ? degree_stats(h) : DegreeStats{};
  if (!k || stats.max != stats.min)
    fail(ErrorCode::not_regular_uniform, "hypergraph is not uniform and regular");
  const double n = static_cast<double>(h.num_vertices());
  const double r = static_cast<double>(*k);
  const double d = static_cast<double>(stats.max);
  return (r - 1) * d + sqrt0((n - 1) * ((r - 1) * n * d * d - (r - 1) * (r - 1) * d * d));
}

std::vector<NamedValue> lower_bounds(const Hypergraph& h) {
  require_edges(h);
  const double n = static_cast<double>(h.num_vertices());
  const double sm1 = static_cast<double>(corank_minus_one(h));
  const double nd = static_cast<double>(degree_sum(h));
  const double z = static_cast<double>(zagreb(h));
  const double sum_sq = static_cast<double>(adjacency_matrix(h).sum_of_squares());

  std::vector<NamedValue> out;
  out.push_back({"lema-cota1", std::sqrt(2.0 * sum_sq)});
  out.push_back({"cota-inf1", sqrt0(2.0 * sm1 * nd)});
  out.push_back({"cota-inf2", sqrt0(2.0 * sm1 * sm1 * z / n)});
  if (h.num_vertices() >= 2) {
    const double l1 = largest_eigenvalue(h);
    out.push_back({"cota-inf3", sqrt0(2.0 * n / (n - 1) * l1 * l1)});
    out.push_back({"obs-cota-inf-1", sm1 * nd});
    out.push_back({"obs-cota-inf-2", sm1 * sm1 * z / n});
    out.push_back({"obs-cota-inf-3", n / (n - 1) * l1 * l1});
  } else {
    out.push_back({"obs-cota-inf-1", sm1 * nd});
    out.push_back({"obs-cota-inf-2", sm1 * sm1 * z / n});
  }
  return out;
}

DeterminantInfo determinant_info(const Hypergraph& h, std::size_t cap) {
  const AdjacencyMatrix a = adjacency_matrix(h);
  const double n = static_cast<double>(a.size());
  DeterminantInfo info;
  if (a.size() <= cap) {
    BigInt det = determinant_exact(a, cap);
    if (det < 0) det = -det;
    info.exact = true;
    info.root_term = det == 0 ? 0.0 : std::exp(2.0 * log_abs(det) / n);
    info.exact_abs = std::move(det);
    return info;
  }
  double log_sum = 0.0;
  for (double v : spectrum_numeric(a).values) {
    if (v == 0.0) return info;
    log_sum += std::log(std::abs(v));
  }
  info.root_term = std::exp(2.0 * log_sum / n);
  return info;
}

namespace {

std::vector<NamedValue> det_bounds_from(const Hypergraph& h, const DeterminantInfo& det) {
  const double n = static_cast<double>(h.num_vertices());
  const double sm1 = static_cast<double>(corank_minus_one(h));
  const double nd = static_cast<double>(degree_sum(h));
  const double z = static_cast<double>(zagreb(h));
  const double sum_sq = static_cast<double>(adjacency_matrix(h).sum_of_squares());
  const double term = n * (n - 1) * det.root_term;

  std::vector<NamedValue> out;
  out.push_back({"lema-cota2", sqrt0(sum_sq + term)});
  out.push_back({"cota-inf4", sqrt0(sm1 * nd + term)});
  out.push_back({"cota-inf5", sqrt0(sm1 * sm1 * z / n + term)});
  if (h.num_vertices() >= 2) {
    const double l1 = largest_eigenvalue(h);
    out.push_back({"cota-inf6", sqrt0(n / (n - 1) * l1 * l1 + term)});
  }
  return out;
}

}  // namespace

std::vector<NamedValue> det_lower_bounds(const Hypergraph& h, std::size_t cap) {
  require_edges(h);
  return det_bounds_from(h, determinant_info(h, cap));
}

std::string to_string(ComparisonCase c) {
  switch (c) {
    case ComparisonCase::b_le_B_case1: return "b<=B (case 1)";
    case ComparisonCase::B_le_b_case2: return "B<=b (case 2)";
    case ComparisonCase::regular_equal: return "regular b=B";
    case ComparisonCase::regular_b_lt_B: return "regular b<B";
    case ComparisonCase::regular_b_gt_B: return "regular b>B";
    case ComparisonCase::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

ComparisonVerdict compare_b_B(const Hypergraph& h) {
  require_edges(h);
  const auto n = static_cast<std::uint64_t>(h.num_vertices());
  const std::uint64_t sm1 = corank_minus_one(h);
  const auto stats = degree_stats(h);
  const std::uint64_t z = zagreb(h);
  const std::uint64_t big = stats.max;
  const std::uint64_t small = stats.min;

  ComparisonVerdict v;
  v.b = sqrt0(2.0 * static_cast<double>(sm1 * degree_sum(h)));
  v.B = sqrt0(2.0 * static_cast<double>(sm1 * sm1 * z) / static_cast<double>(n));
  if (sm1 == 0) return v;
  if (big == small) {
    const std::uint64_t lhs = big * sm1;
    v.verdict = lhs == n  ? ComparisonCase::regular_equal
                : lhs > n ? ComparisonCase::regular_b_lt_B
                          : ComparisonCase::regular_b_gt_B;
  } else if (small * small * sm1 >= n * big) {
    v.verdict = ComparisonCase::b_le_B_case1;
  } else if (small > 0 && big * big * sm1 <= n * small) {
    v.verdict = ComparisonCase::B_le_b_case2;
  }
  return v;
}

std::string to_string(BoundSide s) { return s == BoundSide::upper ? "upper" : "lower"; }

std::string to_string(BoundTarget t) {
  switch (t) {
    case BoundTarget::energy: return "energy";
    case BoundTarget::lambda1: return "lambda1";
    case BoundTarget::sum_squares: return "sum_squares";
  }
  return "energy";
}

bool BoundsReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.holds; });
}

const BoundEntry* BoundsReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

BoundsReport full_report(const Hypergraph& h, std::size_t cap) {
  require_edges(h);
  auto det_future = std::async(std::launch::async, [&h, cap] { return determinant_info(h, cap); });
  auto spectrum_future =
      std::async(std::launch::async, [&h] { return spectrum_numeric(adjacency_matrix(h)); });

  BoundsReport rep;
  const auto rs = rank_corank(h);
  const auto stats = degree_stats(h);
  rep.n = h.num_vertices();
  rep.m = h.num_edges();
  rep.r = rs.rank;
  rep.s = rs.corank;
  rep.max_degree = stats.max;
  rep.min_degree = stats.min;
  rep.average_degree = stats.average;
  rep.zagreb = zagreb(h);
  rep.sum_squares = static_cast<double>(adjacency_matrix(h).sum_of_squares());

  const auto zu = upper_zagreb(h);
  const double sup2 = upper_lambda1(h);
  const auto l1b = lambda1_degree_bounds(h);
  std::optional<double> regular;
  if (uniformity(h) && stats.max == stats.min) regular = upper_regular(h);
  const auto lows = lower_bounds(h);
  rep.comparison = compare_b_B(h);

  const Spectrum spectrum = spectrum_future.get();
  rep.energy = energy_of(spectrum.values);
  rep.lambda1 = spectrum.values.empty() ? 0.0 : std::max(0.0, spectrum.values.front());
  rep.det = det_future.get();
  const auto det_lows = det_bounds_from(h, rep.det);

  auto target_value = [&rep](BoundTarget t) {
    switch (t) {
      case BoundTarget::energy: return rep.energy;
      case BoundTarget::lambda1: return rep.lambda1;
      case BoundTarget::sum_squares: return rep.sum_squares;
    }
    return rep.energy;
  };
  auto add = [&](std::string name, BoundSide side, BoundTarget target, double value) {
    const double t = target_value(target);
    BoundEntry e{std::move(name), side, target, value, false, std::abs(value - t)};
    e.holds = side == BoundSide::upper ? value >= t - kBoundTolerance
                                       : value <= t + kBoundTolerance;
    rep.entries.push_back(std::move(e));
  };

  add("cota-sup1", BoundSide::upper, BoundTarget::energy, zu.bound1);
  add("cota-sup1-chain", BoundSide::upper, BoundTarget::energy, zu.bound2);
  add("cota-sup2", BoundSide::upper, BoundTarget::energy, sup2);
  if (regular) add("upper-regular", BoundSide::upper, BoundTarget::energy, *regular);
  add("lambda1-lower", BoundSide::lower, BoundTarget::lambda1, l1b.lower);
  add("lambda1-lower-component", BoundSide::lower, BoundTarget::lambda1, l1b.component_lower);
  add("lambda1-upper", BoundSide::upper, BoundTarget::lambda1, l1b.upper);
  for (const auto& [name, value] : lows) {
    const bool sq = name.rfind("obs-", 0) == 0;
    add(name, BoundSide::lower, sq ? BoundTarget::sum_squares : BoundTarget::energy, value);
  }
  for (const auto& [name, value] : det_lows)
    add(name, BoundSide::lower, BoundTarget::energy, value);

  const double det_term =
      static_cast<double>(rep.n) * static_cast<double>(rep.n - 1) * rep.det.root_term;
  const double diff = det_term - rep.sum_squares;
  const double scale = std::max(1.0, rep.sum_squares);
  rep.sharper_lemma = std::abs(diff) <= 1e-9 * scale ? "equal"
                      : diff > 0                    ? "lema-cota2"
                                                    : "lema-cota1";
  return rep;
}

}  // namespace hyperspec
