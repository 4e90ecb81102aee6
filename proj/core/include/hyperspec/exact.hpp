#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperspec/adjacency.hpp"

namespace hyperspec {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultExactCap = 64;

/// Exact-arithmetic dimension cap; HYPERSPEC_EXACT_CAP overrides the default.
std::size_t exact_cap();

/// Integer polynomial, coefficients in ascending powers.
class CharPoly {
 public:
  CharPoly() : coefficients_{1} {}
  explicit CharPoly(std::vector<BigInt> ascending);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  const BigInt& operator[](std::size_t power) const { return coefficients_.at(power); }
  bool is_monic() const { return coefficients_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;

  /// e.g. "x^3 - 3x - 2"
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Fraction-free (Bareiss) determinant; every division is exact.
BigInt bareiss_determinant(std::vector<BigInt> matrix, std::size_t n);

/// det(A). Throws Error{dimension_cap_exceeded} above `cap`.
BigInt determinant_exact(const AdjacencyMatrix& a, std::size_t cap = exact_cap());

/// det(xI - A): Bareiss determinants at x = 0..n, then exact Newton
/// interpolation on the integer nodes. Throws Error{dimension_cap_exceeded}.
CharPoly char_poly_exact(const AdjacencyMatrix& a, std::size_t cap = exact_cap());

struct IntegerRoot {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

struct IntegerRootSplit {
  std::vector<IntegerRoot> roots;  // descending by value
  CharPoly residual;               // no integer roots left
};

/// Divisor search on the constant term, bounded by the Fujiwara root bound,
/// with repeated exact synthetic division. `p` must be monic.
IntegerRootSplit integer_eigenvalues_exact(const CharPoly& p);

/// Natural log of |x|, safe for values far beyond double range. x != 0.
double log_abs(const BigInt& x);

}  // namespace hyperspec
