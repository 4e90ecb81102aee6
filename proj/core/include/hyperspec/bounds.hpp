#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/exact.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/structure.hpp"

namespace hyperspec {

inline constexpr double kBoundTolerance = 1e-6;

/// Sum of squared vertex degrees.
std::uint64_t zagreb(const Hypergraph& h);

struct ZagrebUpper {
  double bound1 = 0.0;  // sqrt(n (r-1) Z)
  double bound2 = 0.0;  // sqrt(n m (r^2 - r) Delta)
};

/// Throws Error{no_edges}.
ZagrebUpper upper_zagreb(const Hypergraph& h);

/// lambda1 + sqrt((n-1)((r-1) Z - lambda1^2)). Throws Error{no_edges}.
double upper_lambda1(const Hypergraph& h);

struct Lambda1Bounds {
  double lower = 0.0;            // (s-1) delta over the whole hypergraph
  double component_lower = 0.0;  // max over components of (s_c - 1) delta_c
  double upper = 0.0;            // (r-1) Delta
};

/// Throws Error{no_edges}.
Lambda1Bounds lambda1_degree_bounds(const Hypergraph& h);

/// (r-1)d + sqrt((n-1)((r-1) n d^2 - (r-1)^2 d^2)) for r-uniform d-regular H.
/// Throws Error{not_regular_uniform}.
double upper_regular(const Hypergraph& h);

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// cota-inf1..3, lema-cota1 (as sqrt(2 sum lambda^2)) and the three lower
/// bounds on sum lambda^2 (obs-cota-inf-1..3). Throws Error{no_edges}.
std::vector<NamedValue> lower_bounds(const Hypergraph& h);

struct DeterminantInfo {
  /// Set when |det A| was computed exactly.
  std::optional<BigInt> exact_abs;
  /// |det A|^(2/n); 0 for singular A.
  double root_term = 0.0;
  bool exact = false;
};

/// Exact Bareiss determinant up to `cap`, numeric eigenvalue product above.
DeterminantInfo determinant_info(const Hypergraph& h, std::size_t cap = exact_cap());

/// lema-cota2 (as a bound on E), cota-inf4..6. Throws Error{no_edges}.
std::vector<NamedValue> det_lower_bounds(const Hypergraph& h, std::size_t cap = exact_cap());

enum class ComparisonCase {
  b_le_B_case1,
  B_le_b_case2,
  regular_equal,
  regular_b_lt_B,
  regular_b_gt_B,
  indeterminate,
};

std::string to_string(ComparisonCase c);

struct ComparisonVerdict {
  double b = 0.0;  // sqrt(2 n (s-1) d)
  double B = 0.0;  // sqrt(2 (s-1)^2 Z / n)
  ComparisonCase verdict = ComparisonCase::indeterminate;
};

/// Throws Error{no_edges}.
ComparisonVerdict compare_b_B(const Hypergraph& h);

enum class BoundSide { upper, lower };

/// What a bound value is compared with.
enum class BoundTarget { energy, lambda1, sum_squares };

std::string to_string(BoundSide s);
std::string to_string(BoundTarget t);

struct BoundEntry {
  std::string name;
  BoundSide side = BoundSide::upper;
  BoundTarget target = BoundTarget::energy;
  double value = 0.0;
  bool holds = false;
  double slack = 0.0;  // |value - target|
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  Rational average_degree;
  std::uint64_t zagreb = 0;
  double lambda1 = 0.0;
  double energy = 0.0;
  double sum_squares = 0.0;
  DeterminantInfo det;
  std::vector<BoundEntry> entries;
  ComparisonVerdict comparison;
  /// "lema-cota1", "lema-cota2" or "equal".
  std::string sharper_lemma;

  bool all_hold() const;
  const BoundEntry* find(const std::string& name) const;
};

/// Every bound above in a fixed order. Throws Error{no_edges}.
BoundsReport full_report(const Hypergraph& h, std::size_t cap = exact_cap());

}  // namespace hyperspec
