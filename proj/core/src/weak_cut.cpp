#include <algorithm>
#include <limits>
#include <set>

#include "hyperspec/structure.hpp"

namespace hyperspec {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

/// Unordered divisions of an s-element edge into two non-empty parts.
std::uint64_t split_count(std::size_t s) {
  if (s < 2) return 0;
  if (s - 1 >= 64) return kSaturated;
  return (std::uint64_t{1} << (s - 1)) - 1;
}

/// mask in [1, 2^(s-1) - 1]; member 0 always lands on the left.
EdgeSplit nth_split(const Edge& e, std::size_t edge, std::uint64_t mask) {
  EdgeSplit s;
  s.edge = edge;
  s.left.push_back(e[0]);
  for (std::size_t i = 1; i < e.size(); ++i) {
    if ((mask >> (i - 1)) & 1U)
      s.right.push_back(e[i]);
    else
      s.left.push_back(e[i]);
  }
  return s;
}

/// True when some division of the edges in `subset` disconnects `h`.
bool some_division_disconnects(const Hypergraph& h,
                               const std::vector<std::size_t>& subset) {
  std::vector<std::uint64_t> mask(subset.size(), 1);
  std::vector<EdgeSplit> splits(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    splits[i] = nth_split(h.edges()[subset[i]], subset[i], 1);
  while (true) {
    if (!connected_after_division(h, splits)) return true;
    std::size_t pos = 0;
    while (pos < subset.size()) {
      const auto limit = split_count(h.edges()[subset[pos]].size());
      if (mask[pos] < limit) {
        ++mask[pos];
        splits[pos] = nth_split(h.edges()[subset[pos]], subset[pos], mask[pos]);
        break;
      }
      mask[pos] = 1;
      splits[pos] = nth_split(h.edges()[subset[pos]], subset[pos], 1);
      ++pos;
    }
    if (pos == subset.size()) return false;
  }
}

}  // namespace

WeakCutVerdict is_weak_cut(const Hypergraph& h, const WeakCutSpec& cut,
                           WeakCutLimits limits) {
  if (!is_connected(h))
    fail(ErrorCode::disconnected_input, "weak cuts are defined on connected hypergraphs");
  if (cut.empty()) fail(ErrorCode::malformed_cut, "cut selects no edges");
  std::set<std::size_t> seen;
  for (const auto& s : cut) {
    validate_split(h, s, ErrorCode::malformed_cut);
    if (!seen.insert(s.edge).second)
      fail(ErrorCode::malformed_cut, "edge " + std::to_string(s.edge) + " divided twice");
  }

  if (connected_after_division(h, cut)) return WeakCutVerdict::no;

  const std::size_t t = cut.size();
  if (t == 1) return WeakCutVerdict::yes;
  if (t >= 63) return WeakCutVerdict::budget_exceeded;

  // Candidates over proper non-empty subsets P:
  //   prod(1 + c_i) - 1 - prod(c_i)
  std::uint64_t with_empty = 1, full = 1;
  for (const auto& s : cut) {
    const auto c = split_count(h.edges()[s.edge].size());
    with_empty = sat_mul(with_empty, sat_add(c, 1));
    full = sat_mul(full, c);
  }
  if (with_empty == kSaturated) return WeakCutVerdict::budget_exceeded;
  const std::uint64_t candidates = with_empty - 1 - full;
  if (candidates > limits.budget) return WeakCutVerdict::budget_exceeded;

  const std::uint64_t all = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t subset_mask = 1; subset_mask < all; ++subset_mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < t; ++i)
      if ((subset_mask >> i) & 1U) subset.push_back(cut[i].edge);
    if (some_division_disconnects(h, subset)) return WeakCutVerdict::no;
  }
  return WeakCutVerdict::yes;
}

}  // namespace hyperspec
