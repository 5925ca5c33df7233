#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace etabench {

// std::visit helper
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Ix = std::uint32_t;   // de Bruijn index (distance to the binder)
using Lvl = std::uint32_t;  // de Bruijn level (absolute binder depth)

// Ordinal + declared name of a top-level definition. Ordinals are dense and
// unique per program; the name is carried for printing only.
struct TopLevelId {
  std::uint32_t ordinal = 0;
  std::string name;
};

inline bool operator==(const TopLevelId& a, const TopLevelId& b) {
  return a.ordinal == b.ordinal;
}

struct Term;
using TermPtr = std::shared_ptr<const Term>;

namespace tm {

struct Var {
  Ix ix;
};
struct Top {
  TopLevelId id;
};
struct App {
  TermPtr fn, arg;
};
struct Lam {
  std::string name;
  TermPtr body;  // binds one variable
};
struct Pi {
  std::string name;  // empty for non-dependent arrows
  TermPtr dom, cod;  // cod binds one variable
};
struct Sigma {
  std::string name;
  TermPtr first, second;  // second binds one variable
};
struct Pair {
  TermPtr first, second;
};
struct Fst {
  TermPtr t;
};
struct Snd {
  TermPtr t;
};
struct UnitType {};
struct UnitVal {};
struct Univ {};
struct Let {
  std::string name;
  TermPtr type, bound, body;  // body binds one variable
};

}  // namespace tm

// Core terms with de Bruijn indices. Immutable after construction; display
// names are documentation only and ignored by termEq.
struct Term {
  std::variant<tm::Var, tm::Top, tm::App, tm::Lam, tm::Pi, tm::Sigma, tm::Pair,
               tm::Fst, tm::Snd, tm::UnitType, tm::UnitVal, tm::Univ, tm::Let>
      node;
};

TermPtr mkVar(Ix ix);
TermPtr mkTop(TopLevelId id);
TermPtr mkApp(TermPtr fn, TermPtr arg);
TermPtr mkLam(std::string name, TermPtr body);
TermPtr mkPi(std::string name, TermPtr dom, TermPtr cod);
TermPtr mkSigma(std::string name, TermPtr first, TermPtr second);
TermPtr mkPair(TermPtr first, TermPtr second);
TermPtr mkFst(TermPtr t);
TermPtr mkSnd(TermPtr t);
TermPtr mkUnitType();
TermPtr mkUnitVal();
TermPtr mkUniv();
TermPtr mkLet(std::string name, TermPtr type, TermPtr bound, TermPtr body);

// Structural equality up to display names.
bool termEq(const TermPtr& a, const TermPtr& b);

// True iff every Var index is < its enclosing binder count + depth.
bool shiftCheck(const TermPtr& t, std::uint32_t depth);

// Render t in the surface grammar. `names` are the display names of the
// enclosing binders, outermost first; t's indices must be < names.size().
// Binder names are freshened so the output re-elaborates to a term
// structurally equal to t.
std::string pretty(const TermPtr& t, std::vector<std::string> names = {});

}  // namespace etabench
