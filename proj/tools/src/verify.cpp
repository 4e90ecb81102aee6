#include "hyperspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "hyperspec/bounds.hpp"
#include "hyperspec/hg_format.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/structure.hpp"
#include "hyperspec/surgery.hpp"

namespace hyperspec::verify {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;
constexpr double kSpectrumTolerance = 1e-6;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

/// Per-trial stream: independent of suite order and of other trials.
std::mt19937_64 trial_rng(const Config& cfg, const std::string& id, std::size_t trial) {
  return std::mt19937_64(splitmix(cfg.seed ^ splitmix(fnv(id) + trial)));
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long double subsets_in_range(std::size_t n, std::size_t lo, std::size_t hi) {
  long double total = 0;
  for (std::size_t s = lo; s <= hi && s <= n; ++s) {
    long double c = 1;
    for (std::size_t i = 1; i <= s; ++i) c = c * static_cast<long double>(n - s + i) / i;
    total += c;
  }
  return total;
}

/// Random strict hypergraph within the configured caps.
Hypergraph random_instance(std::mt19937_64& rng, const Config& cfg, std::size_t n_min = 2) {
  const std::size_t lo_n = std::max({n_min, cfg.sizes.min, std::size_t{2}});
  const std::size_t n = uniform(rng, lo_n, std::max(lo_n, cfg.n_max));
  SizeRange sizes{std::max<std::size_t>(2, cfg.sizes.min), std::min(cfg.sizes.max, n)};
  if (sizes.min > sizes.max) sizes.min = sizes.max;
  const auto available = static_cast<std::size_t>(
      std::min<long double>(subsets_in_range(n, sizes.min, sizes.max), 1e9L));
  const std::size_t m = uniform(rng, 1, std::max<std::size_t>(1, std::min(cfg.m_max, available)));
  return random_hypergraph(n, m, sizes, rng());
}

Hypergraph random_tree(std::mt19937_64& rng, const Config& cfg, std::size_t max_edges) {
  SizeRange sizes{std::max<std::size_t>(2, cfg.sizes.min), std::max<std::size_t>(2, cfg.sizes.max)};
  return random_hypertree(uniform(rng, 1, max_edges), sizes, rng());
}

Hypergraph random_kgraph(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  const auto available = static_cast<std::size_t>(std::min<long double>(subsets_in_range(n, k, k), 1e9L));
  const std::size_t m = uniform(rng, 1, std::min<std::size_t>(available, 6));
  return random_hypergraph(n, m, {k, k}, rng());
}

EdgeSplit random_split(std::mt19937_64& rng, const Hypergraph& h, std::size_t edge) {
  Edge members = h.edge(edge);
  std::shuffle(members.begin(), members.end(), rng);
  const std::size_t left = uniform(rng, 1, members.size() - 1);
  return split_off(h, edge, std::span(members.data(), left));
}

double max_deviation(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> eigen(const Hypergraph& h) { return spectrum_numeric(adjacency_matrix(h)).values; }

class Recorder {
 public:
  explicit Recorder(Result& r) : r_(r) {}

  void check(bool ok, std::size_t trial, const std::string& detail, const Hypergraph* h = nullptr) {
    ++r_.checks;
    if (ok) {
      ++r_.passed;
      return;
    }
    ++r_.failed;
    if (r_.counterexamples.size() < kMaxCounterexamples)
      r_.counterexamples.push_back({trial, detail, h ? serialize(*h) : std::string()});
  }

  void skip() { ++r_.skipped; }

 private:
  Result& r_;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string gap_detail(const GapReport& g) {
  return "before=" + fmt(g.before) + " after=" + fmt(g.after) + " gap=" + fmt(g.gap) +
         " bound=" + fmt(g.bound);
}

// Suites -------------------------------------------------------------------

void hyperstar_spectrum(const Config&, Result& res) {
  Recorder rec(res);
  std::size_t instance = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t k = 2; k <= 8; ++k, ++instance) {
      const HyperstarParams p{n, k};
      const Hypergraph h = hyperstar(p);
      const auto numeric = eigen(h);
      const auto closed = hyperstar_spectrum_closed(p);
      const double dev = max_deviation(numeric, closed.values);
      rec.check(dev <= 1e-9, instance,
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + " spectrum deviation " + fmt(dev), &h);
      const double e = energy_of(numeric);
      const double closed_e = hyperstar_energy_closed(p);
      rec.check(std::abs(e - closed_e) <= 1e-9, instance,
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + " energy " + fmt(e) + " vs " + fmt(closed_e), &h);
      const auto interval = hyperstar_extremal_bounds(p.vertex_count());
      const bool inside = e >= interval.lower - 1e-9 && e <= interval.upper + 1e-9;
      const bool at_lower = std::abs(e - interval.lower) <= 1e-9;
      const bool at_upper = std::abs(e - interval.upper) <= 1e-9;
      rec.check(inside && at_lower == (k == 2) && at_upper == (n == 2), instance,
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + " extremal interval", &h);
    }
  }
}

std::vector<std::size_t> product_uniformities(const Config& cfg) {
  if (cfg.k) return {*cfg.k};
  return {2, 3};
}

std::pair<Hypergraph, Hypergraph> random_pair(std::mt19937_64& rng, std::size_t k, std::size_t cap) {
  const std::size_t nh = uniform(rng, k, std::max(k, cap / k));
  const std::size_t ng = uniform(rng, k, std::max(k, cap / nh));
  return {random_kgraph(rng, k, nh), random_kgraph(rng, k, ng)};
}

void sum_spectrum(const Config& cfg, Result& res) {
  Recorder rec(res);
  const auto ks = product_uniformities(cfg);
  double worst = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const std::size_t k = ks[t % ks.size()];
    auto [h, g] = random_pair(rng, k, 40);
    const auto mu = eigen(h), lambda = eigen(g);
    std::vector<double> expected;
    for (double a : mu)
      for (double b : lambda) expected.push_back(a + b);
    const Hypergraph s = direct_sum(h, g);
    const double dev = max_deviation(eigen(s), expected);
    worst = std::max(worst, dev);
    rec.check(dev <= kSpectrumTolerance, t, "k=" + std::to_string(k) + " deviation " + fmt(dev), &s);
  }
  res.details["max_deviation"] = report_number(worst);
}

void product_spectrum(const Config& cfg, Result& res) {
  Recorder rec(res);
  const auto ks = product_uniformities(cfg);
  double worst = 0.0;
  std::map<std::size_t, std::pair<double, double>> factors;  // k -> (min, max)
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const std::size_t k = ks[t % ks.size()];
    auto [h, g] = random_pair(rng, k, 40);
    const auto mu = eigen(h), lambda = eigen(g);
    std::vector<double> base;
    for (double a : mu)
      for (double b : lambda) base.push_back(a * b);
    const Hypergraph p = tensor_product(h, g);
    const auto measured = eigen(p);
    if (k <= 3) {
      const double dev = max_deviation(measured, base);
      worst = std::max(worst, dev);
      rec.check(dev <= kSpectrumTolerance, t, "k=" + std::to_string(k) + " deviation " + fmt(dev), &p);
    } else {
      // Least-squares factor between the sorted spectra.
      auto x = measured, y = base;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      double xy = 0.0, yy = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        xy += x[i] * y[i];
        yy += y[i] * y[i];
      }
      if (yy == 0.0) {
        rec.skip();
        continue;
      }
      const double f = xy / yy;
      auto [it, fresh] = factors.emplace(k, std::make_pair(f, f));
      if (!fresh) {
        it->second.first = std::min(it->second.first, f);
        it->second.second = std::max(it->second.second, f);
      }
    }
  }
  res.details["max_deviation"] = report_number(worst);
  if (!factors.empty()) {
    res.report_only = ks.size() == 1;
    Json measured = Json::array();
    for (auto [k, range] : factors) {
      double expected = 1.0;
      for (std::size_t i = 2; i + 2 <= k; ++i) expected *= static_cast<double>(i);
      measured.push_back({{"k", k},
                          {"min_factor", report_number(range.first)},
                          {"max_factor", report_number(range.second)},
                          {"expected_factor", report_number(expected)}});
    }
    res.details["scaling"] = std::move(measured);
  }
}

Hypergraph integral_instance(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 6)) {
    case 0: {
      const std::size_t n = uniform(rng, 3, 8);
      return complete_kgraph(n, uniform(rng, 2, n));
    }
    case 1: {
      const std::size_t k = uniform(rng, 2, 3);
      const std::size_t a = uniform(rng, k, 6), b = uniform(rng, k, 6);
      return direct_sum(complete_kgraph(a, k), complete_kgraph(b, k));
    }
    case 2: {
      const std::size_t k = uniform(rng, 2, 3);
      const std::size_t a = uniform(rng, k, 5), b = uniform(rng, k, 5);
      return tensor_product(complete_kgraph(a, k), complete_kgraph(b, k));
    }
    case 3: {
      const std::size_t n = uniform(rng, 3, 7);
      return disjoint_union(perfect_matching(uniform(rng, 1, 4)), complete_kgraph(n, uniform(rng, 2, n)));
    }
    case 4: {
      const std::size_t p = uniform(rng, 1, 3), x = uniform(rng, 1, 2), y = uniform(rng, 1, 2);
      return complete_bipartite(p * x * x, p * y * y);
    }
    case 5: {
      // Hyperstars whose quadratic factor splits over the integers.
      static const std::vector<HyperstarParams> square = [] {
        std::vector<HyperstarParams> out;
        for (std::size_t n = 2; n <= 8; ++n)
          for (std::size_t k = 2; k <= 8; ++k) {
            const auto disc = static_cast<std::int64_t>((k - 2) * (k - 2) + 4 * (n - 1) * (k - 1));
            const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
            if (root * root == disc) out.push_back({n, k});
          }
        return out;
      }();
      return hyperstar(square[uniform(rng, 0, square.size() - 1)]);
    }
    default: {
      Config small;
      small.n_max = 8;
      small.m_max = 6;
      return random_instance(rng, small);
    }
  }
}

void parity(const Config& cfg, Result& res) {
  Recorder rec(res);
  const std::size_t max_draws = cfg.trials * 20;
  std::size_t integral = 0;
  for (std::size_t t = 0; t < max_draws && integral < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = integral_instance(rng);
    const auto report = energy(h);
    if (report.parity.status != ParityStatus::even_integer) {
      rec.skip();
      continue;
    }
    ++integral;
    const double exact = report.parity.exact_energy->convert_to<double>();
    const bool ok = report.parity.even && std::abs(exact - report.energy) <= 1e-6 &&
                    root_power_alarms(report.energy).empty();
    rec.check(ok, t, "exact energy " + report.parity.exact_energy->str(), &h);
  }
  res.details["integral_instances"] = integral;
}

void vertex_deletion(const Config& cfg, Result& res) {
  Recorder rec(res);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = random_instance(rng, cfg);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      const auto g = vertex_deletion_check(h, v);
      rec.check(g.holds, t, "vertex " + h.label(v) + ": " + gap_detail(g), &h);
    }
  }
}

void edge_deletion(const Config& cfg, Result& res) {
  Recorder rec(res);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = random_instance(rng, cfg);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto g = edge_deletion_check(h, e);
      rec.check(g.holds, t, "edge " + std::to_string(e) + ": " + gap_detail(g), &h);
    }
  }
}

void edge_division(const Config& cfg, Result& res) {
  Recorder rec(res);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = random_instance(rng, cfg);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const EdgeSplit split = random_split(rng, h, e);
      const auto g = division_check(h, split);
      const auto diff = division_difference_spectrum(h, split);
      const double root = std::sqrt(static_cast<double>(split.left.size() * split.right.size()));
      const bool spectrum_ok = std::abs(diff.front() - root) <= 1e-8 && std::abs(diff.back() + root) <= 1e-8;
      rec.check(g.holds && spectrum_ok, t, "edge " + std::to_string(e) + ": " + gap_detail(g), &h);
    }
  }
}

void isolated_division(const Config& cfg, Result& res) {
  Recorder rec(res);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph base = random_instance(rng, cfg);
    const std::size_t size = uniform(rng, 2, 6);
    const Hypergraph lone = Hypergraph::with_numbered_vertices(size, {[size] {
      Edge e(size);
      for (std::size_t i = 0; i < size; ++i) e[i] = static_cast<Vertex>(i);
      return e;
    }()});
    const Hypergraph h = disjoint_union(base, lone);
    const EdgeSplit split = random_split(rng, h, h.num_edges() - 1);
    const auto g = isolated_edge_division_check(h, split);
    rec.check(g.holds, t, "|e|=" + std::to_string(size) + ": " + gap_detail(g), &h);
  }
}

void weak_cut(const Config& cfg, Result& res) {
  Recorder rec(res);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = random_tree(rng, cfg, 8);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      for (Vertex v : h.edge(e)) {
        const WeakCutSpec cut{split_off(h, e, std::span(&v, 1))};
        std::string detail = "edge " + std::to_string(e) + " vertex " + h.label(v);
        bool ok = false;
        try {
          const auto g = weak_cut_energy_check(h, cut);
          ok = g.holds;
          detail += ": " + gap_detail(g);
        } catch (const Error& err) {
          detail += ": " + std::string(err.what());
        }
        rec.check(ok, t, detail, &h);
      }
    }
  }
}

void bounds_all(const Config& cfg, Result& res) {
  Recorder rec(res);
  Config wide = cfg;
  wide.n_max = std::max<std::size_t>(cfg.n_max, 2);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = t % 10 == 9 ? random_tree(rng, cfg, 6) : random_instance(rng, wide);
    const auto report = full_report(h);
    std::string failing;
    for (const auto& e : report.entries)
      if (!e.holds) failing += (failing.empty() ? "" : ",") + e.name;
    const auto* b1 = report.find("cota-sup1");
    const auto* b2 = report.find("cota-sup1-chain");
    const bool chain = b1->value <= b2->value + 1e-9;
    rec.check(report.all_hold() && chain, t, failing.empty() ? "chain" : failing, &h);
  }
}

Hypergraph comparison_instance(std::mt19937_64& rng, const Config& cfg) {
  switch (uniform(rng, 0, 4)) {
    case 0: {
      const std::size_t n = uniform(rng, 3, 12);
      return cyclic_uniform(n, uniform(rng, 2, n));
    }
    case 1: {
      const std::size_t n = uniform(rng, 3, 8);
      return complete_kgraph(n, uniform(rng, 2, n));
    }
    case 2:
      return perfect_matching(uniform(rng, 1, 6));
    default:
      return random_instance(rng, cfg);
  }
}

void b_vs_B(const Config& cfg, Result& res) {
  Recorder rec(res);
  std::map<std::string, std::size_t> seen;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = comparison_instance(rng, cfg);
    const auto v = compare_b_B(h);
    const double scale = 1e-9 * std::max(1.0, std::max(v.b, v.B));
    bool ok = true;
    switch (v.verdict) {
      case ComparisonCase::b_le_B_case1:
      case ComparisonCase::regular_b_lt_B: ok = v.b <= v.B + scale; break;
      case ComparisonCase::B_le_b_case2:
      case ComparisonCase::regular_b_gt_B: ok = v.B <= v.b + scale; break;
      case ComparisonCase::regular_equal: ok = std::abs(v.b - v.B) <= scale; break;
      case ComparisonCase::indeterminate: break;
    }
    if (v.verdict == ComparisonCase::regular_b_lt_B) ok = ok && v.b < v.B - scale;
    if (v.verdict == ComparisonCase::regular_b_gt_B) ok = ok && v.B < v.b - scale;
    ++seen[to_string(v.verdict)];
    rec.check(ok, t, to_string(v.verdict) + ": b=" + fmt(v.b) + " B=" + fmt(v.B), &h);
  }
  Json cases = Json::object();
  for (const auto& [name, count] : seen) cases[name] = count;
  res.details["cases"] = std::move(cases);
}

void det_bounds(const Config& cfg, Result& res) {
  Recorder rec(res);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, res.id, t);
    const Hypergraph h = t % 4 == 3 ? integral_instance(rng) : random_instance(rng, cfg);
    const auto report = full_report(h);
    bool ok = true;
    std::string detail;
    for (const char* name : {"lema-cota2", "cota-inf4", "cota-inf5", "cota-inf6"}) {
      const auto* e = report.find(name);
      if (e && !e->holds) {
        ok = false;
        detail += std::string(name) + " ";
      }
    }
    if (report.det.exact_abs && *report.det.exact_abs == 0 && report.sum_squares > 0 &&
        report.sharper_lemma != "lema-cota1") {
      ok = false;
      detail += "singular-but-det-lemma-sharper ";
    }
    const double threshold = static_cast<double>(report.r - 1) *
                                 static_cast<double>(report.max_degree * report.max_degree) + 1.0;
    if (report.det.exact_abs && *report.det.exact_abs >= 1 &&
        static_cast<double>(report.n) >= threshold && report.sharper_lemma == "lema-cota1") {
      ok = false;
      detail += "large-n-det-lemma-not-sharper ";
    }
    rec.check(ok, t, detail.empty() ? "ok" : detail, &h);
  }
}

using Suite = std::function<void(const Config&, Result&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"hyperstar-spectrum", hyperstar_spectrum},
      {"sum-spectrum", sum_spectrum},
      {"product-spectrum", product_spectrum},
      {"parity", parity},
      {"vertex-deletion", vertex_deletion},
      {"edge-deletion", edge_deletion},
      {"edge-division", edge_division},
      {"isolated-division", isolated_division},
      {"weak-cut", weak_cut},
      {"bounds-all", bounds_all},
      {"b-vs-B", b_vs_B},
      {"det-bounds", det_bounds},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, suite] : suites()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Result run(const std::string& id, const Config& config) {
  for (const auto& [name, suite] : suites()) {
    if (name != id) continue;
    Result r;
    r.id = id;
    suite(config, r);
    return r;
  }
  fail(ErrorCode::bad_params, "unknown theorem id '" + id + "'");
}

Json to_json(const Result& result) {
  Json j;
  j["id"] = result.id;
  j["checks"] = result.checks;
  j["passed"] = result.passed;
  j["failed"] = result.failed;
  j["skipped"] = result.skipped;
  j["status"] = result.report_only ? "reported" : (result.ok() ? "pass" : "fail");
  Json ce = Json::array();
  for (const auto& c : result.counterexamples)
    ce.push_back({{"trial", c.trial}, {"detail", c.detail}, {"hg", c.hg}});
  j["counterexamples"] = std::move(ce);
  for (const auto& [key, value] : result.details.items()) j[key] = value;
  return j;
}

}  // namespace hyperspec::verify
