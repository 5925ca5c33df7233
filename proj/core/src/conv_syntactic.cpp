#include "etabench/conv_syntactic.hpp"

namespace etabench {
namespace conv_syntactic {

namespace {

struct Unifier {
  const TopTable& tops;
  UnfoldCounter& counter;
  ConvOptions opts;

  [[noreturn]] void fail(const char* position, Lvl lvl, const ValuePtr& v,
                         const ValuePtr& w) {
    throw ConvError(position, v ? quote(lvl, v, Unfold::None, tops) : nullptr,
                    w ? quote(lvl, w, Unfold::None, tops) : nullptr);
  }

  void unify(Lvl lvl, const ValuePtr& v, const ValuePtr& w) {
    // Fun-η first: a lambda against anything applies both sides to a fresh
    // variable. The type is never consulted.
    if (const auto* lv = std::get_if<val::Lam>(&v->node)) {
      ValuePtr x = vLocal(lvl);
      return unify(lvl + 1, applyClosure(lv->closure, x, tops),
                   vApp(w, x, tops));
    }
    if (const auto* lw = std::get_if<val::Lam>(&w->node)) {
      ValuePtr x = vLocal(lvl);
      return unify(lvl + 1, vApp(v, x, tops),
                   applyClosure(lw->closure, x, tops));
    }

    const val::Neutral* nv = asNeutral(v);
    const val::Neutral* nw = asNeutral(w);
    if (nv && nw) {
      if (sameHead(nv->head, nw->head)) {
        if (nv->head.isTop()) {
          if (opts.speculate) {
            // Glued fast path: equal definition heads, compare spines
            // without unfolding; retry unfolded on any mismatch so the
            // verdict stays policy-independent.
            try {
              return unifySpine(lvl, nv->spine, nw->spine, v, w);
            } catch (const ConvError&) {
            }
          }
          return unify(lvl, force(v, counter), force(w, counter));
        }
        return unifySpine(lvl, nv->spine, nw->spine, v, w);
      }
      if (nv->head.isTop() || nw->head.isTop()) {
        return unify(lvl, nv->head.isTop() ? force(v, counter) : v,
                     nw->head.isTop() ? force(w, counter) : w);
      }
      fail("head mismatch", lvl, v, w);
    }
    if (nv && nv->head.isTop()) return unify(lvl, force(v, counter), w);
    if (nw && nw->head.isTop()) return unify(lvl, v, force(w, counter));

    if (v->node.index() != w->node.index()) {
      // covers pair vs rigid neutral too: Σ-η is deliberately absent here
      fail("constructor mismatch", lvl, v, w);
    }
    std::visit(
        overloaded{
            [&](const val::Pi& x) {
              const auto& y = std::get<val::Pi>(w->node);
              unify(lvl, x.dom, y.dom);
              ValuePtr fresh = vLocal(lvl);
              unify(lvl + 1, applyClosure(x.cod, fresh, tops),
                    applyClosure(y.cod, fresh, tops));
            },
            [&](const val::Sigma& x) {
              const auto& y = std::get<val::Sigma>(w->node);
              unify(lvl, x.first, y.first);
              ValuePtr fresh = vLocal(lvl);
              unify(lvl + 1, applyClosure(x.second, fresh, tops),
                    applyClosure(y.second, fresh, tops));
            },
            [&](const val::Pair& x) {
              const auto& y = std::get<val::Pair>(w->node);
              unify(lvl, x.first, y.first);
              unify(lvl, x.second, y.second);
            },
            [&](const val::UnitType&) {},
            [&](const val::UnitVal&) {},
            [&](const val::Univ&) {},
            [&](const val::Neutral&) {
              throw InternalError("neutral fell through rigid comparison");
            },
            [&](const val::Lam&) {
              throw InternalError("lambda fell through eta comparison");
            },
        },
        v->node);
  }

  // v/w are the enclosing neutrals, for error reporting; may be null when
  // called through the public spine entry point.
  void unifySpine(Lvl lvl, const SpinePtr& a, const SpinePtr& b,
                  const ValuePtr& v, const ValuePtr& w) {
    if (!a && !b) return;
    if (!a || !b) fail("spine length mismatch", lvl, v, w);
    if (a->elim != b->elim) fail("spine eliminator mismatch", lvl, v, w);
    unifySpine(lvl, a->prev, b->prev, v, w);
    if (a->elim == SpineNode::Elim::App) unify(lvl, a->arg, b->arg);
  }
};

}  // namespace

void unify(Lvl lvl, const ValuePtr& v, const ValuePtr& w, const TopTable& tops,
           UnfoldCounter& counter, const ConvOptions& opts) {
  Unifier{tops, counter, opts}.unify(lvl, v, w);
}

void unifySp(Lvl lvl, const SpinePtr& sp, const SpinePtr& sp2,
             const TopTable& tops, UnfoldCounter& counter,
             const ConvOptions& opts) {
  Unifier{tops, counter, opts}.unifySpine(lvl, sp, sp2, nullptr, nullptr);
}

}  // namespace conv_syntactic
}  // namespace etabench
