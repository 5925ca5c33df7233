#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "etabench/raw.hpp"

namespace etabench {

// Either a program or at least one diagnostic, never both.
struct ParseResult {
  std::optional<RawProgram> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value(); }
};

// Parse a whole ".ett" source text. Deterministic; "--" comments to end of
// line; whitespace-insensitive otherwise.
ParseResult parseProgram(std::string_view src);

// "error: <msg> at <line>:<col>" with the line/col computed from src.
std::string formatDiagnostic(const Diagnostic& d, std::string_view src);

}  // namespace etabench
