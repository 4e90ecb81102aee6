#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "hyperspec/constructions.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/structure.hpp"
#include "test_support.hpp"

using namespace hyperspec;
using doctest::Approx;

namespace {

std::set<std::set<std::string>> labelled_edges(const Hypergraph& h) {
  std::set<std::set<std::string>> out;
  for (const auto& e : h.edges()) {
    std::set<std::string> s;
    for (Vertex v : e) s.insert(h.label(v));
    out.insert(s);
  }
  return out;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> eigen(const Hypergraph& h) { return spectrum_numeric(adjacency_matrix(h)).values; }

double factorial(std::size_t k) {
  double f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

TEST_CASE("complete k-graphs") {
  const auto k53 = complete_kgraph(5, 3);
  CHECK(k53.num_edges() == 10);
  CHECK(energy_value(k53) == Approx(24.0));
  CHECK(complete_kgraph(5, 4).num_edges() == 5);
  CHECK(energy_value(complete_kgraph(5, 4)) == Approx(24.0));
  CHECK(energy_value(complete_kgraph(4, 4)) == Approx(6.0));
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t k = 2; k <= n; ++k) {
      // A = C(n-2, k-2)(J - I)
      double c = 1;
      for (std::size_t i = 1; i <= k - 2; ++i) c = c * static_cast<double>(n - 2 - (k - 2) + i) / static_cast<double>(i);
      CHECK(energy_value(complete_kgraph(n, k)) == Approx(2.0 * static_cast<double>(n - 1) * c));
    }
  CHECK(testing::error_code([] { complete_kgraph(3, 4); }) == ErrorCode::bad_params);
  CHECK(testing::error_code([] { complete_kgraph(3, 1); }) == ErrorCode::bad_params);
}

TEST_CASE("power graphs") {
  const auto s = power_graph(star_graph(4), 3);
  CHECK(s.num_vertices() == 7);
  CHECK(s.num_edges() == 3);
  CHECK(uniformity(s) == 3u);
  CHECK(s.label(4) == "0_p1");
  CHECK(power_graph(star_graph(4), 2) == star_graph(4));
  const auto path = parse_hypergraph("1 2\n2 3\n");
  const auto p3 = power_graph(path, 3);
  CHECK(p3.num_vertices() == 5);
  CHECK(p3.num_edges() == 2);
  CHECK(testing::error_code([] { power_graph(parse_hypergraph("1 2 3\n"), 4); }) == ErrorCode::not_a_graph);
}

TEST_CASE("hyperstar shapes") {
  const auto h = hyperstar({4, 3});
  CHECK(h == testing::fixture("hyperstar_s4_3.hg"));
  CHECK(degree(h, 0) == 3);
  CHECK(hyperstar({2, 5}).num_edges() == 1);
  CHECK(hyperstar({2, 5}).num_vertices() == 5);
  CHECK(hyperstar({6, 2}) == star_graph(6));
  CHECK((HyperstarParams{4, 3}.vertex_count()) == 7);
  CHECK(testing::error_code([] { hyperstar({1, 3}); }) == ErrorCode::bad_params);
}

TEST_CASE("hyperstar closed forms") {
  auto s = hyperstar_spectrum_closed({4, 3});
  const std::vector<double> expected{3, 1, 1, -1, -1, -1, -2};
  REQUIRE(s.values.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(s.values[i] == Approx(expected[i]));
  CHECK(s.residual->degree() == 0);
  CHECK(hyperstar_energy_closed({4, 3}) == Approx(10.0));

  s = hyperstar_spectrum_closed({5, 2});
  CHECK(s.values.front() == Approx(2.0));
  CHECK(std::count(s.values.begin(), s.values.end(), 0.0) == 3);

  s = hyperstar_spectrum_closed({2, 6});
  CHECK(s.values.front() == Approx(5.0));
  CHECK(std::count_if(s.values.begin(), s.values.end(), [](double v) { return std::abs(v + 1) < 1e-12; }) == 5);

  s = hyperstar_spectrum_closed({3, 3});
  CHECK(s.residual->to_string() == "x^2 - x - 4");

  for (std::size_t t = 2; t <= 12; ++t) {
    CHECK(hyperstar_energy_closed({t, 2}) == Approx(2.0 * std::sqrt(static_cast<double>(t - 1))));
    CHECK(hyperstar_energy_closed({2, t}) == Approx(2.0 * static_cast<double>(t - 1)));
  }
}

TEST_CASE("hyperstar closed spectrum matches the eigensolver") {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 2; k <= 8; ++k) {
      const auto numeric = sorted(eigen(hyperstar({n, k})));
      const auto closed = sorted(hyperstar_spectrum_closed({n, k}).values);
      REQUIRE(numeric.size() == closed.size());
      for (std::size_t i = 0; i < numeric.size(); ++i) CHECK(std::abs(numeric[i] - closed[i]) <= 1e-9);
      CHECK(std::abs(energy_of(numeric) - hyperstar_energy_closed({n, k})) <= 1e-9);
    }
}

TEST_CASE("hyperstar extremal interval") {
  auto iv = hyperstar_extremal_bounds(7);
  CHECK(iv.lower == Approx(2.0 * std::sqrt(6.0)));
  CHECK(iv.upper == Approx(12.0));
  iv = hyperstar_extremal_bounds(2);
  CHECK(iv.lower == Approx(2.0));
  CHECK(iv.upper == Approx(2.0));
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t k = 2; k <= 12; ++k) {
      const HyperstarParams p{n, k};
      const double e = hyperstar_energy_closed(p);
      const auto b = hyperstar_extremal_bounds(p.vertex_count());
      CHECK(e >= b.lower - 1e-9);
      CHECK(e <= b.upper + 1e-9);
      CHECK((std::abs(e - b.lower) <= 1e-9) == (k == 2));
      CHECK((std::abs(e - b.upper) <= 1e-9) == (n == 2));
    }
}

TEST_CASE("direct sum reproduces the worked example") {
  const auto h = parse_hypergraph("vertices: 1 2 3 4\n1 2 3\n2 3 4\n");
  const auto g = parse_hypergraph("vertices: a b c\na b c\n");
  const auto s = direct_sum(h, g);
  CHECK(s.num_vertices() == 12);
  CHECK(s.num_edges() == 10);
  const std::set<std::set<std::string>> expected{
      {"(1,a)", "(1,b)", "(1,c)"}, {"(1,a)", "(2,a)", "(3,a)"}, {"(2,a)", "(2,b)", "(2,c)"},
      {"(1,b)", "(2,b)", "(3,b)"}, {"(3,a)", "(3,b)", "(3,c)"}, {"(1,c)", "(2,c)", "(3,c)"},
      {"(4,a)", "(4,b)", "(4,c)"}, {"(2,a)", "(3,a)", "(4,a)"}, {"(2,b)", "(3,b)", "(4,b)"},
      {"(2,c)", "(3,c)", "(4,c)"}};
  CHECK(labelled_edges(s) == expected);
}

TEST_CASE("product reproduces the worked example") {
  const auto h = parse_hypergraph("vertices: 1 2 3 4\n1 2 3\n2 3 4\n");
  const auto g = parse_hypergraph("vertices: a b c\na b c\n");
  const auto p = tensor_product(h, g);
  CHECK(p.num_edges() == 12);
  const std::set<std::set<std::string>> expected{
      {"(1,a)", "(2,b)", "(3,c)"}, {"(2,a)", "(3,b)", "(4,c)"}, {"(1,a)", "(2,c)", "(3,b)"},
      {"(2,a)", "(3,c)", "(4,b)"}, {"(1,b)", "(2,a)", "(3,c)"}, {"(2,b)", "(3,a)", "(4,c)"},
      {"(1,b)", "(2,c)", "(3,a)"}, {"(2,b)", "(3,c)", "(4,a)"}, {"(1,c)", "(2,a)", "(3,b)"},
      {"(2,c)", "(3,a)", "(4,b)"}, {"(1,c)", "(2,b)", "(3,a)"}, {"(2,c)", "(3,b)", "(4,a)"}};
  CHECK(labelled_edges(p) == expected);
}

TEST_CASE("small sums and products of K2") {
  const auto k2 = complete_kgraph(2, 2);
  const auto sum = sorted(eigen(direct_sum(k2, k2)));
  CHECK(sum[0] == Approx(-2.0));
  CHECK(sum[3] == Approx(2.0));
  const auto prod = tensor_product(k2, k2);
  CHECK(prod.num_edges() == 2);
  CHECK(count_components(prod) == 2);
  const auto single = tensor_product(parse_hypergraph("1 2 3\n"), parse_hypergraph("a b c\n"));
  CHECK(single.num_edges() == 6);
  CHECK(single.num_vertices() == 9);
}

TEST_CASE("sum and product adjacency are Kronecker combinations") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const std::size_t k = 2 + seed % 3;
    const auto h = random_hypergraph(k + 1 + seed % 3, 2, {k, k}, seed);
    const auto g = random_hypergraph(k + seed % 2, 1 + seed % 2, {k, k}, seed + 100);
    const Eigen::MatrixXd ah = adjacency_matrix(h).to_dense();
    const Eigen::MatrixXd ag = adjacency_matrix(g).to_dense();
    const auto ih = Eigen::MatrixXd::Identity(ah.rows(), ah.cols());
    const auto ig = Eigen::MatrixXd::Identity(ag.rows(), ag.cols());

    const Eigen::MatrixXd sum = Eigen::kroneckerProduct(ih, ag) + Eigen::kroneckerProduct(ah, ig);
    CHECK((adjacency_matrix(direct_sum(h, g)).to_dense() - sum).norm() == 0.0);

    const Eigen::MatrixXd prod = factorial(k - 2) * Eigen::kroneckerProduct(ah, ag);
    CHECK((adjacency_matrix(tensor_product(h, g)).to_dense() - prod).norm() == 0.0);
    CHECK(tensor_product(h, g).num_edges() == static_cast<std::size_t>(factorial(k)) * h.num_edges() * g.num_edges());
  }
}

TEST_CASE("binary operation preconditions") {
  const auto k3 = parse_hypergraph("1 2 3\n");
  const auto k2 = parse_hypergraph("1 2\n");
  const auto mixed = parse_hypergraph("1 2\n2 3 4\n");
  CHECK(testing::error_code([&] { direct_sum(k3, k2); }) == ErrorCode::mismatched_uniformity);
  CHECK(testing::error_code([&] { tensor_product(mixed, k2); }) == ErrorCode::not_uniform);
  const auto lone = parse_hypergraph("vertices: x\n");
  const auto s = direct_sum(k3, lone);
  CHECK(s.num_edges() == 1);
  CHECK(tensor_product(k3, lone).num_edges() == 0);
  CHECK(testing::error_code([] { tensor_product(complete_kgraph(10, 5), complete_kgraph(10, 5)); }) ==
        ErrorCode::size_cap_exceeded);
}

TEST_CASE("random generator contract") {
  const auto a = random_hypergraph(6, 4, {2, 3}, 1);
  CHECK(a.num_edges() == 4);
  CHECK(a == random_hypergraph(6, 4, {2, 3}, 1));
  CHECK(random_hypergraph(8, 10, {3, 4}, 7) == random_hypergraph(8, 10, {3, 4}, 7));
  CHECK_FALSE(random_hypergraph(8, 10, {3, 4}, 7) == random_hypergraph(8, 10, {3, 4}, 8));
  const auto sized = random_hypergraph(8, 10, {3, 4}, 7);
  for (const auto& e : sized.edges()) {
    CHECK(e.size() >= 3);
    CHECK(e.size() <= 4);
  }
  CHECK(testing::error_code([] { random_hypergraph(4, 100, {2, 2}, 1); }) == ErrorCode::infeasible_params);
  CHECK(testing::error_code([] { random_hypergraph(4, 1, {1, 2}, 1); }) == ErrorCode::infeasible_params);
  CHECK(testing::error_code([] { random_hypergraph(4, 1, {3, 5}, 1); }) == ErrorCode::infeasible_params);
  CHECK(random_hypergraph(4, 6, {2, 2}, 3).num_edges() == 6);
}

TEST_CASE("random hypertrees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = random_hypertree(1 + seed % 8, {2, 4}, seed);
    CHECK(is_hypertree(t));
    CHECK(t == random_hypertree(1 + seed % 8, {2, 4}, seed));
  }
  CHECK(random_hypertree(0, {2, 3}, 1).num_vertices() == 1);
}

TEST_CASE("families used by the suites") {
  CHECK(energy_value(complete_bipartite(2, 3)) == Approx(2.0 * std::sqrt(6.0)));
  CHECK(energy_value(perfect_matching(4)) == Approx(8.0));
  const auto c = cyclic_uniform(6, 3);
  CHECK(c.num_edges() == 6);
  const auto s = degree_stats(c);
  CHECK(s.max == 3);
  CHECK(s.min == 3);
  const auto u = disjoint_union(complete_kgraph(3, 2), complete_kgraph(4, 3));
  CHECK(u.num_vertices() == 7);
  CHECK(energy_value(u) == Approx(energy_value(complete_kgraph(3, 2)) + energy_value(complete_kgraph(4, 3))));
}
