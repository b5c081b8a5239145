#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitbound::cli {

/// Ordered key/value pairs. Numbers are always full decimal strings.
using Fields = std::vector<std::pair<std::string, std::string>>;

/// One CLI result. Field order is significant and preserved by both renderers.
struct OutputRecord {
  std::string command;
  Fields inputs;
  Fields outputs;
  std::vector<std::string> provenance;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Aligned human-readable text.
std::string render_text(const OutputRecord& record);

/// Single JSON object with keys "command", "inputs", "outputs", "provenance"
/// in that order; "inputs" and "outputs" keep insertion order.
std::string render_structured(const OutputRecord& record);

/// Inverse of render_structured. Throws DomainError on malformed input.
OutputRecord parse_structured(std::string_view text);

}  // namespace splitbound::cli
