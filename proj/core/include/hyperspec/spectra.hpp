#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hyperspec/adjacency.hpp"
#include "hyperspec/exact.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

inline constexpr std::size_t kNumericCap = 2048;
inline constexpr double kEigenTolerance = 1e-10;

struct Spectrum {
  std::vector<double> values;  // descending
  std::optional<std::vector<IntegerRoot>> exact_part;
  std::optional<CharPoly> residual;

  std::size_t size() const noexcept { return values.size(); }
};

struct EigenPairs {
  std::vector<double> values;  // descending
  Eigen::MatrixXd vectors;     // column i belongs to values[i], unit norm
};

/// Self-adjoint tridiagonal QL/QR solve. Eigenvalues within
/// tol * max(1, ||A||_F) of zero are reported as exactly 0.
/// Throws Error{dimension_cap_exceeded} above kNumericCap and
/// Error{convergence_failure} if the solver does not converge.
Spectrum spectrum_numeric(const AdjacencyMatrix& a, double tol = kEigenTolerance);
EigenPairs eigenpairs(const AdjacencyMatrix& a);

/// Descending eigenvalues of an arbitrary real symmetric matrix.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m);

/// Numeric spectrum plus the exact integer part and residual polynomial.
Spectrum spectrum_with_exact(const AdjacencyMatrix& a, std::size_t cap = exact_cap());

double energy_of(std::span<const double> eigenvalues);
double positive_sum_of(std::span<const double> eigenvalues);
double sum_of_squares_of(std::span<const double> eigenvalues);

// Energy and parity --------------------------------------------------------

enum class ParityStatus { even_integer, irrational_component, undetermined };

struct ParityCertificate {
  ParityStatus status = ParityStatus::undetermined;
  /// Set when every eigenvalue is an integer: sum of |root| * multiplicity.
  std::optional<BigInt> exact_energy;
  /// exact_energy is divisible by two; only meaningful for even_integer.
  bool even = false;
  std::vector<IntegerRoot> integer_roots;
  std::optional<CharPoly> residual;
};

/// Exact-path parity check. Returns undetermined above `cap`.
ParityCertificate parity_certificate(const Hypergraph& h, std::size_t cap = exact_cap());
ParityCertificate parity_certificate(const AdjacencyMatrix& a, std::size_t cap = exact_cap());

struct EnergyOptions {
  bool exact = true;
  std::size_t exact_cap = hyperspec::exact_cap();
  double tol = kEigenTolerance;
};

struct EnergyReport {
  double energy = 0.0;
  double positive_sum = 0.0;
  double spectral_radius = 0.0;
  ParityCertificate parity;
  Spectrum spectrum;
};

/// Throws Error{empty_hypergraph} for n = 0.
EnergyReport energy(const Hypergraph& h, const EnergyOptions& options = {});

/// Numeric energy only.
double energy_value(const Hypergraph& h);
double energy_value(const AdjacencyMatrix& a);

double spectral_radius(const Hypergraph& h);

/// E^p within `tol` of an integer 2^q * t with t odd and q <= p - 1, which the
/// parity theory rules out for k-graphs. A numerical alarm, not a proof.
struct RootPowerAlarm {
  int p = 0;
  int q = 0;
  std::int64_t odd_part = 0;
  double deviation = 0.0;
};

std::vector<RootPowerAlarm> root_power_alarms(double energy, int max_p = 4,
                                              double tol = 5e-4);

}  // namespace hyperspec
