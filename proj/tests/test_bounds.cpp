#include <doctest.h>

#include <cmath>

#include "hyperspec/bounds.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/report_json.hpp"
#include "hyperspec/spectra.hpp"
#include "test_support.hpp"

using namespace hyperspec;
using doctest::Approx;

namespace {

double value_of(const std::vector<NamedValue>& values, const std::string& name) {
  for (const auto& v : values)
    if (v.name == name) return v.value;
  FAIL("missing bound " << name);
  return 0.0;
}

std::vector<Hypergraph> sample() {
  std::vector<Hypergraph> out;
  for (const char* f : {"k5_3.hg", "k5_4.hg", "h6.hg", "h16.hg", "bridged.hg", "det_printed.hg",
                        "det_variant.hg", "hyperstar_s4_3.hg", "division_example.hg"})
    out.push_back(testing::fixture(f));
  for (std::uint64_t seed = 0; seed < 60; ++seed) out.push_back(random_hypergraph(5 + seed % 8, 1 + seed % 12, {2, 5}, seed));
  for (std::uint64_t seed = 0; seed < 20; ++seed) out.push_back(random_hypertree(1 + seed % 7, {2, 4}, seed));
  return out;
}

}  // namespace

TEST_CASE("zagreb index") {
  CHECK(zagreb(parse_hypergraph("1 2 3\n")) == 3);
  CHECK(zagreb(complete_kgraph(5, 3)) == 180);
  CHECK(zagreb(testing::fixture("hyperstar_s4_3.hg")) == 15);
  CHECK(zagreb(parse_hypergraph("vertices: a b\n")) == 0);
}

TEST_CASE("zagreb upper bounds") {
  const auto z = upper_zagreb(complete_kgraph(5, 3));
  CHECK(z.bound1 == Approx(std::sqrt(5.0 * 2 * 180)));
  CHECK(z.bound2 == Approx(std::sqrt(5.0 * 10 * 6 * 6)));
  CHECK(z.bound1 <= z.bound2 + 1e-9);
  const auto pm = perfect_matching(5);
  CHECK(std::abs(upper_zagreb(pm).bound1 - energy_value(pm)) <= 1e-9);
  CHECK(testing::error_code([] { upper_zagreb(parse_hypergraph("vertices: a\n")); }) == ErrorCode::no_edges);
}

TEST_CASE("lambda1 based upper bound") {
  const auto k = complete_kgraph(5, 3);
  CHECK(upper_lambda1(k) == Approx(12.0 + std::sqrt(4.0 * (360.0 - 144.0))));
  const auto single = parse_hypergraph("1 2 3\n");
  CHECK(std::abs(upper_lambda1(single) - energy_value(single)) <= 1e-9);
}

TEST_CASE("lambda1 degree bounds") {
  const auto b = lambda1_degree_bounds(complete_kgraph(5, 3));
  CHECK(b.lower == Approx(12.0));
  CHECK(b.upper == Approx(12.0));
  const auto star = lambda1_degree_bounds(hyperstar({4, 3}));
  CHECK(star.lower == Approx(2.0));
  CHECK(star.upper == Approx(6.0));
  const auto mixed = lambda1_degree_bounds(parse_hypergraph("vertices: a b c d e f g\na b\nc d e f\n"));
  CHECK(mixed.lower == 0.0);
  CHECK(mixed.component_lower == Approx(3.0));
}

TEST_CASE("regular uniform upper bound") {
  const auto k = complete_kgraph(5, 3);
  CHECK(upper_regular(k) == Approx(12.0 + std::sqrt(4.0 * (2.0 * 5 * 36 - 4.0 * 36))));
  CHECK(upper_regular(k) >= energy_value(k));
  const auto pm = perfect_matching(3);
  CHECK(upper_regular(pm) >= energy_value(pm));
  CHECK(testing::error_code([] { upper_regular(hyperstar({4, 3})); }) == ErrorCode::not_regular_uniform);
  CHECK(testing::error_code([] { upper_regular(parse_hypergraph("1 2\n2 3 4\n")); }) ==
        ErrorCode::not_regular_uniform);
}

TEST_CASE("lower bound equality witnesses") {
  const auto k23 = complete_bipartite(2, 3);
  CHECK(std::abs(value_of(lower_bounds(k23), "cota-inf1") - energy_value(k23)) <= 1e-9);
  const auto k2 = complete_kgraph(2, 2);
  CHECK(std::abs(value_of(lower_bounds(k2), "cota-inf3") - 2.0) <= 1e-9);
  CHECK(std::abs(value_of(det_lower_bounds(k2), "lema-cota2") - 2.0) <= 1e-9);
  CHECK(std::abs(value_of(lower_bounds(k2), "lema-cota1") - 2.0) <= 1e-9);
  CHECK(value_of(lower_bounds(k2), "obs-cota-inf-1") == Approx(2.0));
}

TEST_CASE("lower bounds on the sum of squares") {
  for (const auto& h : sample()) {
    if (h.num_edges() == 0) continue;
    const double sq = static_cast<double>(adjacency_matrix(h).sum_of_squares());
    const auto lows = lower_bounds(h);
    for (const char* name : {"obs-cota-inf-1", "obs-cota-inf-2"}) CHECK(value_of(lows, name) <= sq + 1e-6);
    if (h.num_vertices() >= 2) CHECK(value_of(lows, "obs-cota-inf-3") <= sq + 1e-6);
  }
}

TEST_CASE("determinant example") {
  const auto printed = testing::fixture("det_printed.hg");
  const auto info = determinant_info(printed);
  REQUIRE(info.exact);
  CHECK(*info.exact_abs == 252);
  const auto rep = full_report(printed);
  CHECK(rep.sum_squares == Approx(254.0));
  const double term = static_cast<double>(rep.n * (rep.n - 1)) * info.root_term;
  CHECK(term < 224.0);
  CHECK(rep.sum_squares > 253.0);
  CHECK(rep.sharper_lemma == "lema-cota1");

  const auto variant = full_report(testing::fixture("det_variant.hg"));
  CHECK(*variant.det.exact_abs == 1836);
  CHECK(variant.sharper_lemma == "lema-cota2");

  const auto numeric = determinant_info(printed, 2);
  CHECK_FALSE(numeric.exact);
  CHECK(numeric.root_term == Approx(info.root_term).epsilon(1e-8));
}

TEST_CASE("singular adjacency makes the determinant terms vanish") {
  const auto star = hyperstar({4, 2});
  const auto info = determinant_info(star);
  CHECK(*info.exact_abs == 0);
  CHECK(info.root_term == 0.0);
  CHECK(full_report(star).sharper_lemma == "lema-cota1");
  CHECK(full_report(complete_kgraph(2, 2)).sharper_lemma == "equal");
}

TEST_CASE("b versus B") {
  auto v = compare_b_B(cyclic_uniform(6, 3));
  CHECK(v.verdict == ComparisonCase::regular_equal);
  CHECK(v.b == Approx(std::sqrt(72.0)));
  CHECK(v.B == Approx(std::sqrt(72.0)));

  v = compare_b_B(complete_kgraph(5, 3));
  CHECK(v.verdict == ComparisonCase::regular_b_lt_B);
  CHECK(v.b < v.B);

  v = compare_b_B(perfect_matching(8));
  CHECK(v.verdict == ComparisonCase::regular_b_gt_B);
  CHECK(v.b > v.B);

  CHECK(to_string(ComparisonCase::b_le_B_case1) == "b<=B (case 1)");

  for (const auto& h : sample()) {
    if (h.num_edges() == 0) continue;
    v = compare_b_B(h);
    switch (v.verdict) {
      case ComparisonCase::b_le_B_case1:
      case ComparisonCase::regular_b_lt_B: CHECK(v.b <= v.B + 1e-9); break;
      case ComparisonCase::B_le_b_case2:
      case ComparisonCase::regular_b_gt_B: CHECK(v.B <= v.b + 1e-9); break;
      case ComparisonCase::regular_equal: CHECK(v.b == Approx(v.B)); break;
      case ComparisonCase::indeterminate: break;
    }
  }
}

TEST_CASE("every bound holds on the sample") {
  for (const auto& h : sample()) {
    if (h.num_edges() == 0) continue;
    const auto rep = full_report(h);
    for (const auto& e : rep.entries) {
      INFO(e.name);
      CHECK(e.holds);
    }
    CHECK(rep.all_hold());
    CHECK(rep.find("cota-sup1") != nullptr);
    CHECK(rep.find("nope") == nullptr);
  }
}

TEST_CASE("report entry order and JSON shape") {
  const auto rep = full_report(complete_kgraph(5, 3));
  std::vector<std::string> names;
  for (const auto& e : rep.entries) names.push_back(e.name);
  const std::vector<std::string> expected{
      "cota-sup1",  "cota-sup1-chain", "cota-sup2",      "upper-regular",  "lambda1-lower",
      "lambda1-lower-component",       "lambda1-upper",  "lema-cota1",     "cota-inf1",
      "cota-inf2",  "cota-inf3",       "obs-cota-inf-1", "obs-cota-inf-2", "obs-cota-inf-3",
      "lema-cota2", "cota-inf4",       "cota-inf5",      "cota-inf6"};
  CHECK(names == expected);
  const auto j = to_json(rep);
  CHECK(j["parameters"]["zagreb"] == 180);
  CHECK(j["parameters"]["average_degree"] == 6);
  CHECK(j["bounds"].size() == expected.size());
  CHECK(j["comparisons"]["case"] == "regular b<B");
}
