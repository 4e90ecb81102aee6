#include "hyperspec/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "hyperspec/error.hpp"

namespace hyperspec {

std::size_t exact_cap() {
  if (const char* env = std::getenv("HYPERSPEC_EXACT_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultExactCap;
}

CharPoly::CharPoly(std::vector<BigInt> ascending) : coefficients_(std::move(ascending)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.push_back(0);
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string CharPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const BigInt& c = coefficients_[k];
    if (c == 0 && !(k == 0 && first)) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

BigInt bareiss_determinant(std::vector<BigInt> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("matrix is not n x n");
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    fail(ErrorCode::dimension_cap_exceeded,
         "dimension " + std::to_string(n) + " exceeds exact cap " + std::to_string(cap));
}

std::vector<BigInt> shifted(const AdjacencyMatrix& a, std::int64_t x) {
  const std::size_t n = a.size();
  std::vector<BigInt> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = (i == j ? x : 0) - a(i, j);
  return m;
}

}  // namespace

BigInt determinant_exact(const AdjacencyMatrix& a, std::size_t cap) {
  check_cap(a.size(), cap);
  return bareiss_determinant(shifted(a, 0), a.size()) * ((a.size() % 2) ? -1 : 1);
}

CharPoly char_poly_exact(const AdjacencyMatrix& a, std::size_t cap) {
  const std::size_t n = a.size();
  check_cap(n, cap);

  // p(0..n) by fraction-free elimination.
  std::vector<BigInt> diff(n + 1);
  for (std::size_t x = 0; x <= n; ++x)
    diff[x] = bareiss_determinant(shifted(a, static_cast<std::int64_t>(x)), n);

  // Forward differences: diff[k] <- Delta^k p(0).
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = n; i >= k; --i) diff[i] -= diff[i - 1];

  // p(x) = sum_k (Delta^k p(0) / k!) * x(x-1)...(x-k+1); each quotient is an
  // integer because p has integer coefficients.
  std::vector<BigInt> result(n + 1, 0);
  std::vector<BigInt> falling{1};  // x(x-1)...(x-k+1), ascending
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      factorial *= k;
      std::vector<BigInt> next(falling.size() + 1, 0);
      const BigInt shift = static_cast<std::int64_t>(k - 1);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= shift * falling[i];
      }
      falling = std::move(next);
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(diff[k], factorial, q, r);
    if (r != 0) throw std::logic_error("non-integral Newton coefficient");
    for (std::size_t i = 0; i < falling.size(); ++i) result[i] += q * falling[i];
  }

  CharPoly p(std::move(result));
  if (p.degree() != n || !p.is_monic() || (n >= 1 && p[n - 1] != 0))
    throw std::logic_error("characteristic polynomial failed monic/trace check");
  return p;
}

double log_abs(const BigInt& x) {
  BigInt m = abs(x);
  if (m == 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(m) + 1;
  if (bits <= 1000) return std::log(m.convert_to<double>());
  const auto drop = bits - 64;
  BigInt top = m >> drop;
  return std::log(top.convert_to<double>()) + static_cast<double>(drop) * std::log(2.0);
}

namespace {

/// Divides p (ascending) by (x - r). Returns true and replaces p with the
/// quotient when the remainder is zero.
bool divide_out(std::vector<BigInt>& p, const BigInt& r) {
  const std::size_t d = p.size() - 1;
  std::vector<BigInt> q(d);
  BigInt carry = p[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + r * carry;
  }
  if (carry != 0) return false;
  p = std::move(q);
  return true;
}

/// Fujiwara bound 2 * max_k |a_{d-k}|^{1/k} for a monic polynomial, rounded up
/// through the bit length so huge coefficients never touch floating point.
BigInt root_bound(const std::vector<BigInt>& p) {
  const std::size_t d = p.size() - 1;
  double best = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    const BigInt& c = p[d - k];
    if (c == 0) continue;
    const double bits = static_cast<double>(boost::multiprecision::msb(abs(c)) + 1);
    best = std::max(best, bits / static_cast<double>(k));
  }
  if (best > 62.0) return BigInt(1) << 63;
  return BigInt(static_cast<std::int64_t>(std::ceil(2.0 * std::exp2(best)))) + 1;
}

}  // namespace

IntegerRootSplit integer_eigenvalues_exact(const CharPoly& poly) {
  if (!poly.is_monic()) throw std::invalid_argument("polynomial must be monic");
  std::vector<BigInt> p = poly.coefficients();
  IntegerRootSplit out;

  std::size_t zeros = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros) out.roots.push_back({0, zeros});

  if (p.size() > 1) {
    BigInt bound = std::min(root_bound(p), BigInt(abs(p.front())));
    if (bound > BigInt(std::numeric_limits<std::int64_t>::max() / 2))
      throw std::domain_error("integer root search range too large");
    const auto limit = bound.convert_to<std::int64_t>();
    for (std::int64_t r = 1; r <= limit && p.size() > 1; ++r) {
      for (std::int64_t cand : {r, -r}) {
        if (p.size() == 1) break;
        if (p.front() % cand != 0) continue;
        std::size_t mult = 0;
        while (p.size() > 1 && divide_out(p, BigInt(cand))) ++mult;
        if (mult) out.roots.push_back({cand, mult});
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const IntegerRoot& a, const IntegerRoot& b) { return a.value > b.value; });
  out.residual = CharPoly(std::move(p));
  return out;
}

}  // namespace hyperspec
