#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hyperspec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::validation: return "ValidationError";
    case ErrorCode::unknown_vertex: return "UnknownVertex";
    case ErrorCode::empty_query: return "EmptyQuery";
    case ErrorCode::empty_hypergraph: return "EmptyHypergraph";
    case ErrorCode::no_edges: return "NoEdges";
    case ErrorCode::disconnected_input: return "DisconnectedInput";
    case ErrorCode::malformed_cut: return "MalformedCut";
    case ErrorCode::malformed_spec: return "MalformedSpec";
    case ErrorCode::duplicate_index: return "DuplicateIndex";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::infeasible_params: return "InfeasibleParams";
    case ErrorCode::not_a_graph: return "NotAGraph";
    case ErrorCode::not_uniform: return "NotUniform";
    case ErrorCode::mismatched_uniformity: return "MismatchedUniformity";
    case ErrorCode::size_cap_exceeded: return "SizeCapExceeded";
    case ErrorCode::dimension_cap_exceeded: return "DimensionCapExceeded";
    case ErrorCode::not_isolated: return "NotIsolated";
    case ErrorCode::not_a_weak_cut: return "NotAWeakCut";
    case ErrorCode::not_regular_uniform: return "NotRegularUniform";
    case ErrorCode::convergence_failure: return "ConvergenceFailure";
  }
  return "Error";
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == '#';
  });
}

std::string describe(const Edge& e, std::span<const std::string> labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ' ';
    out += labels[e[i]];
  }
  return out + "}";
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> labels,
                       std::vector<Edge> edges, Mode mode)
    : labels_(std::move(labels)), edges_(std::move(edges)), mode_(mode) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i]))
      fail(ErrorCode::validation, "invalid vertex label '" + labels_[i] + "'");
    if (!index_.emplace(labels_[i], static_cast<Vertex>(i)).second)
      fail(ErrorCode::validation, "duplicate vertex label '" + labels_[i] + "'");
  }
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    for (Vertex v : e) {
      if (v >= labels_.size())
        fail(ErrorCode::validation, "edge member out of range");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      fail(ErrorCode::validation,
           "duplicate member within edge " + describe(e, labels_));
  }
  if (mode_ == Mode::strict) {
    std::set<Edge> seen;
    for (const auto& e : edges_) {
      if (e.size() < 2)
        fail(ErrorCode::validation,
             "edge " + describe(e, labels_) + " has fewer than 2 vertices");
      if (!seen.insert(e).second)
        fail(ErrorCode::validation, "duplicate edge " + describe(e, labels_));
    }
  }
}

Hypergraph Hypergraph::from_labels(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::string>>& edges, Mode mode) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    index.emplace(labels[i], static_cast<Vertex>(i));
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& tokens : edges) {
    Edge e;
    for (const auto& t : tokens) {
      auto it = index.find(t);
      if (it == index.end())
        fail(ErrorCode::validation, "edge uses undeclared vertex '" + t + "'");
      e.push_back(it->second);
    }
    out.push_back(std::move(e));
  }
  return Hypergraph(std::move(labels), std::move(out), mode);
}

Hypergraph Hypergraph::with_numbered_vertices(std::size_t n,
                                              std::vector<Edge> edges,
                                              Mode mode) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Hypergraph(std::move(labels), std::move(edges), mode);
}

std::optional<Vertex> Hypergraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Hypergraph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) fail(ErrorCode::unknown_vertex, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

const Edge& Hypergraph::edge(std::size_t i) const {
  if (i >= edges_.size())
    fail(ErrorCode::bad_index, "edge index " + std::to_string(i) + " out of range");
  return edges_[i];
}

Hypergraph Hypergraph::as_multi() const {
  Hypergraph out = *this;
  out.mode_ = Mode::multi;
  return out;
}

EdgeSplit split_off(const Hypergraph& h, std::size_t edge,
                    std::span<const Vertex> part) {
  const Edge& e = h.edge(edge);
  EdgeSplit s;
  s.edge = edge;
  s.left.assign(part.begin(), part.end());
  std::sort(s.left.begin(), s.left.end());
  for (Vertex v : e) {
    if (!std::binary_search(s.left.begin(), s.left.end(), v))
      s.right.push_back(v);
  }
  return s;
}

void validate_split(const Hypergraph& h, const EdgeSplit& split,
                    ErrorCode code) {
  if (split.edge >= h.num_edges())
    fail(code, "edge index " + std::to_string(split.edge) + " out of range");
  if (split.left.empty() || split.right.empty())
    fail(code, "both halves of a division must be non-empty");
  Edge joined(split.left);
  joined.insert(joined.end(), split.right.begin(), split.right.end());
  std::sort(joined.begin(), joined.end());
  if (std::adjacent_find(joined.begin(), joined.end()) != joined.end())
    fail(code, "division halves overlap");
  if (joined != h.edges()[split.edge])
    fail(code, "division halves do not reassemble edge " +
                   std::to_string(split.edge));
}

}  // namespace hyperspec
