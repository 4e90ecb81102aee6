#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// .hg text format
//
//   # comment to end of line
//   vertices: a b c d        optional, first directive; fixes order and
//                            admits isolated vertices
//   a b c                    one edge per line, whitespace separated
//   {}                       the empty edge (multi mode only)
//
// Without a `vertices:` line, indices follow first appearance.

Hypergraph parse_hypergraph(std::istream& in, Mode mode = Mode::strict);
Hypergraph parse_hypergraph(std::string_view text, Mode mode = Mode::strict);
Hypergraph load_hypergraph(const std::string& path, Mode mode = Mode::strict);

/// Always emits a `vertices:` line so isolated vertices and the index order
/// survive a round trip. Each entry of `header` becomes a leading comment.
std::string serialize(const Hypergraph& h,
                      const std::vector<std::string>& header = {});

}  // namespace hyperspec
