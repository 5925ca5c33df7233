#include "etabench/eval.hpp"

namespace etabench {

// --- values -----------------------------------------------------------

std::shared_ptr<LazyValue> LazyValue::of(ValuePtr v) {
  return std::make_shared<LazyValue>(std::move(v));
}

const ValuePtr& LazyValue::get() const {
  if (!ready_.load(std::memory_order_acquire)) {
    std::call_once(once_, [this] {
      value_ = compute_();
      compute_ = nullptr;
      ready_.store(true, std::memory_order_release);
    });
  }
  return value_;
}

bool sameHead(const Head& a, const Head& b) {
  if (a.kind != b.kind) return false;
  return a.kind == Head::Kind::Local ? a.lvl == b.lvl : a.top == b.top;
}

SpinePtr spineApp(SpinePtr prev, ValuePtr arg) {
  return std::make_shared<SpineNode>(
      SpineNode{SpineNode::Elim::App, std::move(prev), std::move(arg)});
}
SpinePtr spineFst(SpinePtr prev) {
  return std::make_shared<SpineNode>(
      SpineNode{SpineNode::Elim::Fst, std::move(prev), nullptr});
}
SpinePtr spineSnd(SpinePtr prev) {
  return std::make_shared<SpineNode>(
      SpineNode{SpineNode::Elim::Snd, std::move(prev), nullptr});
}
std::size_t spineLength(const SpinePtr& sp) {
  std::size_t n = 0;
  for (const SpineNode* p = sp.get(); p; p = p->prev.get()) ++n;
  return n;
}

EnvPtr envExtend(EnvPtr env, ValuePtr v) {
  return std::make_shared<EnvNode>(EnvNode{std::move(env), std::move(v)});
}

const ValuePtr& envLookup(const EnvPtr& env, Ix ix) {
  const EnvNode* p = env.get();
  for (Ix i = 0; i < ix; ++i) {
    if (!p) throw InternalError("environment lookup out of range");
    p = p->prev.get();
  }
  if (!p) throw InternalError("environment lookup out of range");
  return p->v;
}

std::size_t envSize(const EnvPtr& env) {
  std::size_t n = 0;
  for (const EnvNode* p = env.get(); p; p = p->prev.get()) ++n;
  return n;
}

ValuePtr vUnitType() {
  static const ValuePtr v = std::make_shared<Value>(Value{val::UnitType{}});
  return v;
}
ValuePtr vUnitVal() {
  static const ValuePtr v = std::make_shared<Value>(Value{val::UnitVal{}});
  return v;
}
ValuePtr vUniv() {
  static const ValuePtr v = std::make_shared<Value>(Value{val::Univ{}});
  return v;
}
ValuePtr vLocal(Lvl l) {
  return std::make_shared<Value>(
      Value{val::Neutral{Head::local(l), nullptr, nullptr}});
}
ValuePtr vNeutral(Head head, SpinePtr spine, LazyValuePtr unfolded) {
  return std::make_shared<Value>(Value{
      val::Neutral{std::move(head), std::move(spine), std::move(unfolded)}});
}
ValuePtr vLam(std::string name, Closure closure) {
  return std::make_shared<Value>(
      Value{val::Lam{std::move(name), std::move(closure)}});
}
ValuePtr vPi(std::string name, ValuePtr dom, Closure cod) {
  return std::make_shared<Value>(
      Value{val::Pi{std::move(name), std::move(dom), std::move(cod)}});
}
ValuePtr vSigma(std::string name, ValuePtr first, Closure second) {
  return std::make_shared<Value>(
      Value{val::Sigma{std::move(name), std::move(first), std::move(second)}});
}
ValuePtr vPair(ValuePtr first, ValuePtr second) {
  return std::make_shared<Value>(
      Value{val::Pair{std::move(first), std::move(second)}});
}

const val::Neutral* asNeutral(const ValuePtr& v) {
  return std::get_if<val::Neutral>(&v->node);
}

TopTable::TopTable() : state_(std::make_shared<State>()) {}

void TopTable::add(TopEntry entry) {
  if (!entry.payload) entry.payload = LazyValue::of(entry.value);
  state_->byName.emplace(entry.id.name,
                         static_cast<std::uint32_t>(state_->entries.size()));
  state_->entries.push_back(std::move(entry));
}

const TopEntry& TopTable::byOrdinal(std::uint32_t ordinal) const {
  return state_->entries.at(ordinal);
}

const TopEntry* TopTable::find(std::string_view name) const {
  auto it = state_->byName.find(std::string(name));
  return it == state_->byName.end() ? nullptr
                                    : &state_->entries[it->second];
}

std::size_t TopTable::size() const { return state_->entries.size(); }

const std::vector<TopEntry>& TopTable::entries() const {
  return state_->entries;
}

// --- evaluation -------------------------------------------------------

ValuePtr applyClosure(const Closure& c, const ValuePtr& v,
                      const TopTable& tops) {
  return eval(envExtend(c.env, v), c.body, tops);
}

ValuePtr vApp(const ValuePtr& f, const ValuePtr& a, const TopTable& tops) {
  if (const auto* lam = std::get_if<val::Lam>(&f->node)) {
    return applyClosure(lam->closure, a, tops);
  }
  if (const auto* n = std::get_if<val::Neutral>(&f->node)) {
    LazyValuePtr unf;
    if (n->unfolded) {
      unf = std::make_shared<LazyValue>(
          [u = n->unfolded, a, tops] { return vApp(u->get(), a, tops); });
    }
    return vNeutral(n->head, spineApp(n->spine, a), std::move(unf));
  }
  throw InternalError("application of a non-function value");
}

ValuePtr vFst(const ValuePtr& v, const TopTable& tops) {
  if (const auto* p = std::get_if<val::Pair>(&v->node)) return p->first;
  if (const auto* n = std::get_if<val::Neutral>(&v->node)) {
    LazyValuePtr unf;
    if (n->unfolded) {
      unf = std::make_shared<LazyValue>(
          [u = n->unfolded, tops] { return vFst(u->get(), tops); });
    }
    return vNeutral(n->head, spineFst(n->spine), std::move(unf));
  }
  throw InternalError("first projection of a non-pair value");
}

ValuePtr vSnd(const ValuePtr& v, const TopTable& tops) {
  if (const auto* p = std::get_if<val::Pair>(&v->node)) return p->second;
  if (const auto* n = std::get_if<val::Neutral>(&v->node)) {
    LazyValuePtr unf;
    if (n->unfolded) {
      unf = std::make_shared<LazyValue>(
          [u = n->unfolded, tops] { return vSnd(u->get(), tops); });
    }
    return vNeutral(n->head, spineSnd(n->spine), std::move(unf));
  }
  throw InternalError("second projection of a non-pair value");
}

ValuePtr eval(const EnvPtr& env, const TermPtr& t, const TopTable& tops) {
  return std::visit(
      overloaded{
          [&](const tm::Var& x) { return envLookup(env, x.ix); },
          [&](const tm::Top& x) {
            const TopEntry& e = tops.byOrdinal(x.id.ordinal);
            return vNeutral(Head::topLevel(x.id), nullptr, e.payload);
          },
          [&](const tm::App& x) {
            return vApp(eval(env, x.fn, tops), eval(env, x.arg, tops), tops);
          },
          [&](const tm::Lam& x) {
            return vLam(x.name, Closure{env, x.body});
          },
          [&](const tm::Pi& x) {
            return vPi(x.name, eval(env, x.dom, tops), Closure{env, x.cod});
          },
          [&](const tm::Sigma& x) {
            return vSigma(x.name, eval(env, x.first, tops),
                          Closure{env, x.second});
          },
          [&](const tm::Pair& x) {
            return vPair(eval(env, x.first, tops), eval(env, x.second, tops));
          },
          [&](const tm::Fst& x) { return vFst(eval(env, x.t, tops), tops); },
          [&](const tm::Snd& x) { return vSnd(eval(env, x.t, tops), tops); },
          [&](const tm::UnitType&) { return vUnitType(); },
          [&](const tm::UnitVal&) { return vUnitVal(); },
          [&](const tm::Univ&) { return vUniv(); },
          [&](const tm::Let& x) {
            return eval(envExtend(env, eval(env, x.bound, tops)), x.body,
                        tops);
          },
      },
      t->node);
}

ValuePtr force(ValuePtr v, UnfoldCounter& counter) {
  while (const auto* n = asNeutral(v)) {
    if (!n->head.isTop()) break;
    if (!n->unfolded) throw InternalError("Top neutral without payload");
    counter.count += 1;
    v = n->unfolded->get();
  }
  return v;
}

namespace {

TermPtr quoteSpine(Lvl lvl, TermPtr base, const SpinePtr& sp, Unfold policy,
                   const TopTable& tops) {
  if (!sp) return base;
  TermPtr inner = quoteSpine(lvl, std::move(base), sp->prev, policy, tops);
  switch (sp->elim) {
    case SpineNode::Elim::App:
      return mkApp(std::move(inner), quote(lvl, sp->arg, policy, tops));
    case SpineNode::Elim::Fst:
      return mkFst(std::move(inner));
    case SpineNode::Elim::Snd:
      return mkSnd(std::move(inner));
  }
  throw InternalError("unreachable spine eliminator");
}

}  // namespace

TermPtr quote(Lvl lvl, const ValuePtr& v, Unfold policy,
              const TopTable& tops) {
  return std::visit(
      overloaded{
          [&](const val::Neutral& n) -> TermPtr {
            if (n.head.isTop() && policy == Unfold::All) {
              // read back through the definition; no Top remains
              return quote(lvl, n.unfolded->get(), policy, tops);
            }
            TermPtr base = n.head.isTop()
                               ? mkTop(n.head.top)
                               : mkVar(lvl - n.head.lvl - 1);
            return quoteSpine(lvl, std::move(base), n.spine, policy, tops);
          },
          [&](const val::Lam& x) -> TermPtr {
            return mkLam(x.name,
                         quote(lvl + 1,
                               applyClosure(x.closure, vLocal(lvl), tops),
                               policy, tops));
          },
          [&](const val::Pi& x) -> TermPtr {
            return mkPi(x.name, quote(lvl, x.dom, policy, tops),
                        quote(lvl + 1, applyClosure(x.cod, vLocal(lvl), tops),
                              policy, tops));
          },
          [&](const val::Sigma& x) -> TermPtr {
            return mkSigma(
                x.name, quote(lvl, x.first, policy, tops),
                quote(lvl + 1, applyClosure(x.second, vLocal(lvl), tops),
                      policy, tops));
          },
          [&](const val::Pair& x) -> TermPtr {
            return mkPair(quote(lvl, x.first, policy, tops),
                          quote(lvl, x.second, policy, tops));
          },
          [&](const val::UnitType&) -> TermPtr { return mkUnitType(); },
          [&](const val::UnitVal&) -> TermPtr { return mkUnitVal(); },
          [&](const val::Univ&) -> TermPtr { return mkUniv(); },
      },
      v->node);
}

}  // namespace etabench
