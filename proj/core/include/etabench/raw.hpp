#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace etabench {

// Half-open byte range into the source text. Non-empty for parsed nodes.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
};

struct RawTerm;
using RawPtr = std::shared_ptr<const RawTerm>;

namespace raw {

struct Var {
  std::string name;
};
struct App {
  RawPtr fn, arg;
};
struct Lam {
  std::string name;
  RawPtr body;
};
struct Pi {
  std::string name;  // empty for the non-dependent "A -> B" form
  RawPtr dom, cod;
};
struct Sigma {
  std::string name;  // empty for the non-dependent "A * B" form
  RawPtr first, second;
};
struct Pair {
  RawPtr first, second;
};
struct Fst {
  RawPtr t;
};
struct Snd {
  RawPtr t;
};
struct UnitType {};
struct UnitVal {};
struct Univ {};
struct Let {
  std::string name;
  RawPtr type, bound, body;
};

}  // namespace raw

// Surface syntax before elaboration: names instead of indices, plus spans
// for diagnostics.
struct RawTerm {
  Span span;
  std::variant<raw::Var, raw::App, raw::Lam, raw::Pi, raw::Sigma, raw::Pair,
               raw::Fst, raw::Snd, raw::UnitType, raw::UnitVal, raw::Univ,
               raw::Let>
      node;
};

struct RawDecl {
  std::string name;
  Span nameSpan;
  RawPtr type;
  RawPtr body;
};

// Ordered declarations; names are unique and later declarations may
// reference earlier ones only.
struct RawProgram {
  std::vector<RawDecl> decls;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  Span span;
};

}  // namespace etabench
