#include "hyperspec/hg_format.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace hyperspec {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

constexpr std::string_view kVerticesDirective = "vertices:";

}  // namespace

Hypergraph parse_hypergraph(std::istream& in, Mode mode) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  bool declared = false;
  bool seen_content = false;
  std::vector<Edge> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (tokens.front().starts_with(kVerticesDirective)) {
      if (seen_content)
        fail(ErrorCode::parse, where + ": 'vertices:' must be the first directive");
      std::string first = tokens.front().substr(kVerticesDirective.size());
      tokens.erase(tokens.begin());
      if (!first.empty()) tokens.insert(tokens.begin(), first);
      for (auto& t : tokens) {
        if (t == "{}") fail(ErrorCode::parse, where + ": '{}' is not a vertex label");
        if (!index.emplace(t, static_cast<Vertex>(labels.size())).second)
          fail(ErrorCode::parse, where + ": vertex '" + t + "' declared twice");
        labels.push_back(t);
      }
      declared = true;
      seen_content = true;
      continue;
    }
    seen_content = true;

    Edge e;
    if (tokens.size() == 1 && tokens.front() == "{}") {
      if (mode == Mode::strict)
        fail(ErrorCode::validation, where + ": empty edge in strict mode");
      edges.push_back(std::move(e));
      continue;
    }
    for (const auto& t : tokens) {
      if (t == "{}")
        fail(ErrorCode::parse, where + ": malformed token '" + t + "'");
      auto it = index.find(t);
      if (it == index.end()) {
        if (declared)
          fail(ErrorCode::validation, where + ": undeclared vertex '" + t + "'");
        it = index.emplace(t, static_cast<Vertex>(labels.size())).first;
        labels.push_back(t);
      }
      e.push_back(it->second);
    }
    edges.push_back(std::move(e));
  }
  if (in.bad()) fail(ErrorCode::parse, "read error");

  try {
    return Hypergraph(std::move(labels), std::move(edges), mode);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::validation) throw;
    fail(ErrorCode::validation, err.what());
  }
}

Hypergraph parse_hypergraph(std::string_view text, Mode mode) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in, mode);
}

Hypergraph load_hypergraph(const std::string& path, Mode mode) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse, "cannot open '" + path + "'");
  return parse_hypergraph(in, mode);
}

std::string serialize(const Hypergraph& h,
                      const std::vector<std::string>& header) {
  std::ostringstream out;
  for (const auto& line : header) out << "# " << line << '\n';
  out << "vertices:";
  for (const auto& l : h.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& e : h.edges()) {
    if (e.empty()) {
      out << "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << h.label(e[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperspec
