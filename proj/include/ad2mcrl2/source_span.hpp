#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace ad2mcrl2 {

// Byte range into the input document; anchors diagnostics.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::optional<std::string> xmi_id;

  bool operator==(const SourceSpan&) const = default;
};

}  // namespace ad2mcrl2
