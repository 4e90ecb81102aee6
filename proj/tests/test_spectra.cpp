#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperspec/constructions.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/structure.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hyperspec;
using doctest::Approx;

namespace {

oracle::Matrix as_oracle(const AdjacencyMatrix& a) {
  oracle::Matrix m(a.size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a(i, j);
  return m;
}

std::vector<Hypergraph> corpus() {
  std::vector<Hypergraph> out;
  for (const char* f : {"k5_3.hg", "k5_4.hg", "h6.hg", "h16.hg", "bridged.hg", "det_printed.hg",
                        "hyperstar_s4_3.hg", "division_example.hg"})
    out.push_back(testing::fixture(f));
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    out.push_back(random_hypergraph(4 + seed % 9, 1 + seed % 11, {2, 4}, seed));
  out.push_back(parse_hypergraph("vertices: a b c d e\na b\na b\nc\n{}\na b c d\n", Mode::multi));
  return out;
}

AdjacencyMatrix jminus_i(std::size_t n, std::int64_t scale = 1) {
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.add_symmetric(i, j, scale);
  return a;
}

}  // namespace

TEST_CASE("adjacency matches brute-force codegrees") {
  for (const auto& h : corpus()) {
    const auto a = adjacency_matrix(h);
    const auto brute = oracle::codegree_matrix(h);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a(i, i) == 0);
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a(i, j) == a(j, i));
        CHECK(a(i, j) == brute[i][j]);
      }
    }
  }
}

TEST_CASE("adjacency examples") {
  CHECK(adjacency_matrix(parse_hypergraph("1 2 3 4\n")) == jminus_i(4));
  CHECK(adjacency_matrix(complete_kgraph(5, 3)) == jminus_i(5, 3));
  const auto h6 = testing::fixture("h6.hg");
  const auto a = adjacency_matrix(h6);
  // Parts {1,2}, {3,4}, {5,6}: cross entries 2, inside 0.
  auto part = [&](std::size_t v) { return (std::stoi(h6.label(static_cast<Vertex>(v))) - 1) / 2; };
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(a(i, j) == (part(i) == part(j) ? 0 : 2));
  CHECK(testing::error_code([] { adjacency_matrix(Hypergraph()); }) == ErrorCode::empty_hypergraph);
}

TEST_CASE("numeric spectrum agrees with Jacobi oracle") {
  for (const auto& h : corpus()) {
    const auto a = adjacency_matrix(h);
    const auto values = spectrum_numeric(a).values;
    const auto expected = oracle::jacobi_eigenvalues(as_oracle(a));
    REQUIRE(values.size() == expected.size());
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(values[i] == Approx(expected[i]).epsilon(1e-9));
    CHECK(std::is_sorted(values.begin(), values.end(), std::greater<>()));
  }
}

TEST_CASE("spectrum examples") {
  auto v = spectrum_numeric(jminus_i(3)).values;
  CHECK(v[0] == Approx(2.0));
  CHECK(v[1] == Approx(-1.0));
  CHECK(v[2] == Approx(-1.0));
  v = spectrum_numeric(adjacency_matrix(hyperstar({4, 3}))).values;
  const std::vector<double> expected{3, 1, 1, -1, -1, -1, -2};
  for (std::size_t i = 0; i < 7; ++i) CHECK(v[i] == Approx(expected[i]));
  v = spectrum_numeric(AdjacencyMatrix(4)).values;
  CHECK(v == std::vector<double>(4, 0.0));
}

TEST_CASE("trace identities and energy as twice the positive sum") {
  for (const auto& h : corpus()) {
    const auto a = adjacency_matrix(h);
    const auto values = spectrum_numeric(a).values;
    double trace = 0.0;
    for (double x : values) trace += x;
    CHECK(std::abs(trace) < 1e-8);
    const double sq = static_cast<double>(a.sum_of_squares());
    CHECK(sum_of_squares_of(values) == Approx(sq).epsilon(1e-6));
    CHECK(std::abs(energy_of(values) - 2.0 * positive_sum_of(values)) < 1e-8);
  }
}

TEST_CASE("eigenvector identity over edges") {
  for (const auto& h : corpus()) {
    const auto pairs = eigenpairs(adjacency_matrix(h));
    for (std::size_t c = 0; c < pairs.values.size(); ++c) {
      const auto x = pairs.vectors.col(static_cast<Eigen::Index>(c));
      for (Vertex u = 0; u < h.num_vertices(); ++u) {
        double rhs = 0.0;
        for (const auto& e : h.edges()) {
          if (std::find(e.begin(), e.end(), u) == e.end()) continue;
          for (Vertex w : e)
            if (w != u) rhs += x(w);
        }
        CHECK(std::abs(pairs.values[c] * x(u) - rhs) <= 1e-8 * x.norm());
      }
    }
  }
}

TEST_CASE("vertices in the same edges share eigenvector entries") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 4; k <= 6; ++k) {
      const auto h = hyperstar({n, k});
      const auto pairs = eigenpairs(adjacency_matrix(h));
      // The padding vertices of edge 0 lie in exactly that edge.
      const Vertex u = h.index_of("0_p1"), v = h.index_of("0_p2");
      for (std::size_t c = 0; c < pairs.values.size(); ++c) {
        if (std::abs(pairs.values[c] + 1.0) <= 1e-6) continue;
        const auto x = pairs.vectors.col(static_cast<Eigen::Index>(c));
        CHECK(std::abs(x(u) - x(v)) <= 1e-6 * x.norm());
      }
    }
  }
}

TEST_CASE("exact characteristic polynomials") {
  CHECK(char_poly_exact(jminus_i(2)).to_string() == "x^2 - 1");
  CHECK(char_poly_exact(jminus_i(3)).to_string() == "x^3 - 3x - 2");
  const auto p = char_poly_exact(jminus_i(5, 3));
  // (x - 12)(x + 3)^4
  const std::vector<BigInt> expected{-972, -1215, -540, -90, 0, 1};
  CHECK(p.coefficients() == expected);
  CHECK(p.evaluate(12) == 0);
  CHECK(p.evaluate(-3) == 0);
  CHECK(testing::error_code([] { char_poly_exact(AdjacencyMatrix(5), 4); }) ==
        ErrorCode::dimension_cap_exceeded);
}

TEST_CASE("Bareiss characteristic polynomial matches Faddeev-LeVerrier") {
  for (const auto& h : corpus()) {
    const auto a = adjacency_matrix(h);
    const auto p = char_poly_exact(a);
    CHECK(p.is_monic());
    CHECK(p.degree() == a.size());
    if (a.size() >= 1) CHECK(p[a.size() - 1] == 0);
    const auto reference = oracle::faddeev_leverrier(as_oracle(a));
    CHECK(p.coefficients() == std::vector<BigInt>(reference.begin(), reference.end()));
    BigInt det = determinant_exact(a);
    CHECK(det == (a.size() % 2 ? -p[0] : p[0]));
  }
}

TEST_CASE("integer roots") {
  auto split = integer_eigenvalues_exact(char_poly_exact(jminus_i(3)));
  CHECK(split.roots == std::vector<IntegerRoot>{{2, 1}, {-1, 2}});
  CHECK(split.residual.degree() == 0);

  split = integer_eigenvalues_exact(char_poly_exact(adjacency_matrix(hyperstar({4, 3}))));
  CHECK(split.roots == std::vector<IntegerRoot>{{3, 1}, {1, 2}, {-1, 3}, {-2, 1}});
  CHECK(split.residual.degree() == 0);

  split = integer_eigenvalues_exact(CharPoly({-2, 0, 1}));
  CHECK(split.roots.empty());
  CHECK(split.residual.to_string() == "x^2 - 2");

  // Zero roots and a big constant term.
  split = integer_eigenvalues_exact(CharPoly({0, 0, BigInt(BigInt(-1000003) * 1000003), 0, 1}));
  CHECK(split.roots == std::vector<IntegerRoot>{{1000003, 1}, {0, 2}, {-1000003, 1}});
}

TEST_CASE("energy and parity on worked examples") {
  const auto k53 = energy(testing::fixture("k5_3.hg"));
  CHECK(k53.energy == Approx(24.0).epsilon(1e-12));
  CHECK(k53.parity.status == ParityStatus::even_integer);
  CHECK(*k53.parity.exact_energy == 24);
  CHECK(k53.parity.even);
  CHECK(k53.spectral_radius == Approx(12.0));

  const auto h6 = energy(testing::fixture("h6.hg"));
  CHECK(*h6.parity.exact_energy == 16);
  CHECK(energy_value(testing::fixture("h16.hg")) == Approx(48.0).epsilon(1e-12));

  const auto single = energy(parse_hypergraph("1 2 3\n"));
  CHECK(*single.parity.exact_energy == 4);

  const auto star = energy(complete_bipartite(1, 2));
  CHECK(star.parity.status == ParityStatus::irrational_component);
  CHECK(star.energy == Approx(2.0 * std::sqrt(2.0)));

  EnergyOptions tight;
  tight.exact_cap = 3;
  CHECK(energy(testing::fixture("k5_3.hg"), tight).parity.status == ParityStatus::undetermined);
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(complete_kgraph(5, 3)) == Approx(12.0));
  CHECK(spectral_radius(parse_hypergraph("a b c d e f\n")) == Approx(5.0));
  CHECK(spectral_radius(parse_hypergraph("vertices: a b c\n")) == 0.0);
}

TEST_CASE("principal submatrix under vertex removal") {
  for (const auto& h : corpus()) {
    const auto a = adjacency_matrix(h);
    for (std::size_t v = 0; v < a.size(); v += 3) {
      const auto sub = a.without(v);
      for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = 0; j + 1 < a.size(); ++j)
          CHECK(sub(i, j) == a(i < v ? i : i + 1, j < v ? j : j + 1));
    }
  }
}

TEST_CASE("root power alarms") {
  CHECK(root_power_alarms(24.0).empty());
  CHECK(root_power_alarms(16.0).empty());
  // sqrt(3): its square is odd, which the parity theory forbids.
  const auto alarms = root_power_alarms(std::sqrt(3.0));
  REQUIRE(!alarms.empty());
  CHECK(alarms.front().p == 2);
  CHECK(alarms.front().q == 0);
  CHECK(alarms.front().odd_part == 3);
  CHECK(!root_power_alarms(3.0).empty());
  CHECK(root_power_alarms(2.0 * std::sqrt(2.0)).empty());
}

TEST_CASE("exact cap honours the environment") {
  CHECK(exact_cap() >= 1);
}
