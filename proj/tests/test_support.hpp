#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hyperspec/error.hpp"
#include "hyperspec/hg_format.hpp"

namespace testing {

inline std::optional<hyperspec::ErrorCode> error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const hyperspec::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(HYPERSPEC_FIXTURES_DIR) + "/" + name;
}

inline hyperspec::Hypergraph fixture(const std::string& name,
                                     hyperspec::Mode mode = hyperspec::Mode::strict) {
  return hyperspec::load_hypergraph(fixture_path(name), mode);
}

}  // namespace testing
