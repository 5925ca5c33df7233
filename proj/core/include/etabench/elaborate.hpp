#pragma once

#include <optional>

#include "etabench/conv_typed.hpp"
#include "etabench/parser.hpp"

namespace etabench {

// The conversion-checking strategy, the experiment's independent variable.
// Fixed for a whole program check.
enum class Backend { Syntactic, Typed };

std::string_view backendName(Backend b);
std::optional<Backend> backendFromName(std::string_view name);

struct TypeError {
  std::string message;
  Span span;
  TermPtr expected;  // quoted with Unfold::None; may be null (scope errors)
  TermPtr actual;
  std::vector<std::string> scopeNames;  // enclosing binders, for printing
  Backend backend = Backend::Syntactic;
};

struct TypeErrorException : std::runtime_error {
  explicit TypeErrorException(TypeError err)
      : std::runtime_error(err.message), error(std::move(err)) {}
  TypeError error;
};

struct CheckOptions {
  Backend backend = Backend::Syntactic;
  bool speculate = true;
};

struct CheckStats {
  std::uint64_t unfolds = 0;
};

struct CheckResult {
  std::optional<TypeError> error;
  TopTable tops;  // complete on success; checked prefix on failure
  CheckStats stats;

  bool ok() const { return !error.has_value(); }
};

// Declarations are processed in order, fail-fast on the first error: each
// type is checked against U, each body against the evaluated type; evaluated
// bodies become the glued payloads behind Top heads.
CheckResult checkProgram(const RawProgram& prog, const CheckOptions& opts = {});

// Elaboration entry points for closed terms (empty local context), against
// an existing top-level table. Throw TypeErrorException.
struct InferResult {
  TermPtr term;
  ValuePtr type;
};
InferResult inferClosed(const RawPtr& r, const TopTable& tops,
                        const CheckOptions& opts, UnfoldCounter& counter);
TermPtr checkClosed(const RawPtr& r, const ValuePtr& expected,
                    const TopTable& tops, const CheckOptions& opts,
                    UnfoldCounter& counter);

std::string formatTypeError(const TypeError& err, std::string_view src);

}  // namespace etabench
