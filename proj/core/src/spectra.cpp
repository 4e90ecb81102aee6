#include "hyperspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace hyperspec {

void AdjacencyMatrix::add_symmetric(std::size_t i, std::size_t j, std::int64_t count) {
  entries_[i * n_ + j] += count;
  entries_[j * n_ + i] += count;
}

AdjacencyMatrix AdjacencyMatrix::without(std::size_t v) const {
  AdjacencyMatrix out(n_ - 1);
  for (std::size_t i = 0, oi = 0; i < n_; ++i) {
    if (i == v) continue;
    for (std::size_t j = 0, oj = 0; j < n_; ++j) {
      if (j == v) continue;
      out.entries_[oi * out.n_ + oj] = (*this)(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

Eigen::MatrixXd AdjacencyMatrix::to_dense() const {
  Eigen::MatrixXd m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>((*this)(i, j));
  return m;
}

std::int64_t AdjacencyMatrix::sum_of_squares() const {
  std::int64_t s = 0;
  for (auto x : entries_) s += x * x;
  return s;
}

std::int64_t AdjacencyMatrix::max_row_sum() const {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    best = std::max(best, std::accumulate(r.begin(), r.end(), std::int64_t{0}));
  }
  return best;
}

AdjacencyMatrix adjacency_matrix(const Hypergraph& h) {
  if (h.num_vertices() == 0)
    fail(ErrorCode::empty_hypergraph, "hypergraph has no vertices");
  AdjacencyMatrix a(h.num_vertices());
  for (const auto& e : h.edges())
    for (std::size_t x = 0; x < e.size(); ++x)
      for (std::size_t y = x + 1; y < e.size(); ++y) a.add_symmetric(e[x], e[y]);
  return a;
}

namespace {

void check_numeric_cap(std::size_t n) {
  if (n > kNumericCap)
    fail(ErrorCode::dimension_cap_exceeded,
         "dimension " + std::to_string(n) + " exceeds numeric cap " +
             std::to_string(kNumericCap));
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& m,
                                                     bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::convergence_failure, "symmetric eigensolver did not converge");
  return solver;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  auto solver = solve(m, false);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Spectrum spectrum_numeric(const AdjacencyMatrix& a, double tol) {
  check_numeric_cap(a.size());
  Spectrum s;
  const Eigen::MatrixXd dense = a.to_dense();
  s.values = symmetric_eigenvalues(dense);
  const double scale = std::max(1.0, dense.norm());
  for (auto& v : s.values)
    if (std::abs(v) <= tol * scale) v = 0.0;
  return s;
}

EigenPairs eigenpairs(const AdjacencyMatrix& a) {
  check_numeric_cap(a.size());
  EigenPairs out;
  if (a.size() == 0) return out;
  auto solver = solve(a.to_dense(), true);
  const auto n = static_cast<Eigen::Index>(a.size());
  out.values.resize(a.size());
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

Spectrum spectrum_with_exact(const AdjacencyMatrix& a, std::size_t cap) {
  Spectrum s = spectrum_numeric(a);
  auto split = integer_eigenvalues_exact(char_poly_exact(a, cap));
  s.exact_part = std::move(split.roots);
  s.residual = std::move(split.residual);
  return s;
}

double energy_of(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) s += std::abs(v);
  return s;
}

double positive_sum_of(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues)
    if (v > 0.0) s += v;
  return s;
}

double sum_of_squares_of(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) s += v * v;
  return s;
}

ParityCertificate parity_certificate(const AdjacencyMatrix& a, std::size_t cap) {
  ParityCertificate cert;
  if (a.size() > cap) return cert;
  auto split = integer_eigenvalues_exact(char_poly_exact(a, cap));
  cert.integer_roots = split.roots;
  if (split.residual.degree() == 0) {
    BigInt total = 0;
    for (const auto& r : split.roots)
      total += BigInt(r.value < 0 ? -r.value : r.value) * r.multiplicity;
    cert.status = ParityStatus::even_integer;
    cert.even = (total % 2) == 0;
    cert.exact_energy = std::move(total);
  } else {
    cert.status = ParityStatus::irrational_component;
  }
  cert.residual = std::move(split.residual);
  return cert;
}

ParityCertificate parity_certificate(const Hypergraph& h, std::size_t cap) {
  return parity_certificate(adjacency_matrix(h), cap);
}

EnergyReport energy(const Hypergraph& h, const EnergyOptions& options) {
  const AdjacencyMatrix a = adjacency_matrix(h);
  EnergyReport r;
  r.spectrum = spectrum_numeric(a, options.tol);
  r.energy = energy_of(r.spectrum.values);
  r.positive_sum = positive_sum_of(r.spectrum.values);
  for (double v : r.spectrum.values) r.spectral_radius = std::max(r.spectral_radius, std::abs(v));
  if (options.exact) {
    r.parity = parity_certificate(a, options.exact_cap);
    if (r.parity.status != ParityStatus::undetermined) {
      r.spectrum.exact_part = r.parity.integer_roots;
      r.spectrum.residual = r.parity.residual;
    }
  }
  return r;
}

double energy_value(const AdjacencyMatrix& a) {
  return energy_of(spectrum_numeric(a).values);
}

double energy_value(const Hypergraph& h) { return energy_value(adjacency_matrix(h)); }

double spectral_radius(const Hypergraph& h) {
  double best = 0.0;
  for (double v : spectrum_numeric(adjacency_matrix(h)).values)
    best = std::max(best, std::abs(v));
  return best;
}

std::vector<RootPowerAlarm> root_power_alarms(double energy, int max_p, double tol) {
  std::vector<RootPowerAlarm> out;
  for (int p = 1; p <= max_p; ++p) {
    const double power = std::pow(energy, p);
    if (!(power < 9.0e15)) break;
    const double nearest = std::round(power);
    const double dev = std::abs(power - nearest);
    if (dev > tol || nearest < 1.0) continue;
    auto value = static_cast<std::int64_t>(nearest);
    int q = 0;
    while (value % 2 == 0) {
      value /= 2;
      ++q;
    }
    if (q <= p - 1) out.push_back({p, q, value, dev});
  }
  return out;
}

}  // namespace hyperspec
