#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "etabench/syntax.hpp"

namespace etabench {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Raised when an ill-typed elimination reaches the evaluator (e.g. fst of a
// lambda). The elaborator guarantees these never occur on accepted programs.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Memoized thunk holding the unfolded form behind a Top-headed neutral.
// The computation runs at most once, also under concurrent forcing.
class LazyValue {
 public:
  explicit LazyValue(std::function<ValuePtr()> compute)
      : compute_(std::move(compute)) {}
  explicit LazyValue(ValuePtr ready)
      : ready_(true), value_(std::move(ready)) {}

  // An already-computed payload (no work on force).
  static std::shared_ptr<LazyValue> of(ValuePtr v);

  const ValuePtr& get() const;

 private:
  mutable std::once_flag once_;
  mutable std::atomic<bool> ready_{false};
  mutable ValuePtr value_;
  mutable std::function<ValuePtr()> compute_;
};
using LazyValuePtr = std::shared_ptr<LazyValue>;

// Neutral head: a local variable (de Bruijn level) or a top-level definition.
struct Head {
  enum class Kind { Local, Top };
  Kind kind = Kind::Local;
  Lvl lvl = 0;     // Local
  TopLevelId top;  // Top

  static Head local(Lvl l) { return Head{Kind::Local, l, {}}; }
  static Head topLevel(TopLevelId id) {
    return Head{Kind::Top, 0, std::move(id)};
  }
  bool isTop() const { return kind == Kind::Top; }
};

bool sameHead(const Head& a, const Head& b);

// Eliminator chain of a neutral, innermost-first (nullptr at the base).
struct SpineNode;
using SpinePtr = std::shared_ptr<const SpineNode>;

struct SpineNode {
  enum class Elim { App, Fst, Snd };
  Elim elim;
  SpinePtr prev;
  ValuePtr arg;  // App only
};

SpinePtr spineApp(SpinePtr prev, ValuePtr arg);
SpinePtr spineFst(SpinePtr prev);
SpinePtr spineSnd(SpinePtr prev);
std::size_t spineLength(const SpinePtr& sp);

// Evaluation environment: one value per enclosing binder, looked up by
// de Bruijn index (0 = innermost = head of the list).
struct EnvNode;
using EnvPtr = std::shared_ptr<const EnvNode>;

struct EnvNode {
  EnvPtr prev;
  ValuePtr v;
};

EnvPtr envExtend(EnvPtr env, ValuePtr v);
const ValuePtr& envLookup(const EnvPtr& env, Ix ix);
std::size_t envSize(const EnvPtr& env);

// A term closed over its environment; body is well-scoped in env extended
// by one value.
struct Closure {
  EnvPtr env;
  TermPtr body;
};

namespace val {

// `unfolded` is present iff head is Top; forcing it yields a value whose
// head is not that same Top id.
struct Neutral {
  Head head;
  SpinePtr spine;
  LazyValuePtr unfolded;
};
struct Lam {
  std::string name;
  Closure closure;
};
struct Pi {
  std::string name;
  ValuePtr dom;
  Closure cod;
};
struct Sigma {
  std::string name;
  ValuePtr first;
  Closure second;
};
struct Pair {
  ValuePtr first, second;
};
struct UnitType {};
struct UnitVal {};
struct Univ {};

}  // namespace val

// Semantic domain: weak-head values with closures under binders and glued
// (lazily unfolded) top-level heads.
struct Value {
  std::variant<val::Neutral, val::Lam, val::Pi, val::Sigma, val::Pair,
               val::UnitType, val::UnitVal, val::Univ>
      node;
};

ValuePtr vUnitType();
ValuePtr vUnitVal();
ValuePtr vUniv();
ValuePtr vLocal(Lvl l);  // fresh rigid variable
ValuePtr vNeutral(Head head, SpinePtr spine, LazyValuePtr unfolded);
ValuePtr vLam(std::string name, Closure closure);
ValuePtr vPi(std::string name, ValuePtr dom, Closure cod);
ValuePtr vSigma(std::string name, ValuePtr first, Closure second);
ValuePtr vPair(ValuePtr first, ValuePtr second);

const val::Neutral* asNeutral(const ValuePtr& v);

// Monotone count of top-level unfoldings forced during one checking run.
struct UnfoldCounter {
  std::uint64_t count = 0;
};

// One elaborated top-level definition. `value` is the evaluated body, served
// as the lazy unfolded payload behind the definition's Top head; `type` is
// the evaluated signature.
struct TopEntry {
  TopLevelId id;
  TermPtr typeTerm;
  TermPtr bodyTerm;
  ValuePtr type;
  ValuePtr value;
  LazyValuePtr payload;  // LazyValue::of(value), shared by every reference
};

// Handle semantics: copies share the same underlying storage, so lazy
// payloads that captured the table stay valid when results move around.
class TopTable {
 public:
  TopTable();

  void add(TopEntry entry);
  const TopEntry& byOrdinal(std::uint32_t ordinal) const;
  const TopEntry* find(std::string_view name) const;
  std::size_t size() const;
  const std::vector<TopEntry>& entries() const;

 private:
  struct State {
    std::vector<TopEntry> entries;
    std::unordered_map<std::string, std::uint32_t> byName;
  };
  std::shared_ptr<State> state_;
};

}  // namespace etabench
