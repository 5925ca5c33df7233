#include "etabench/conv_typed.hpp"

namespace etabench {
namespace conv_typed {

namespace {

struct BindGuard {
  std::vector<ValuePtr>& types;
  BindGuard(std::vector<ValuePtr>& types_, ValuePtr ty) : types(types_) {
    types.push_back(std::move(ty));
  }
  ~BindGuard() { types.pop_back(); }
};

struct Unifier {
  std::vector<ValuePtr>& localTypes;  // indexed by level; size() == fresh lvl
  const TopTable& tops;
  UnfoldCounter& counter;
  ConvOptions opts;

  Lvl lvl() const { return static_cast<Lvl>(localTypes.size()); }

  [[noreturn]] void fail(const char* position, const ValuePtr& v,
                         const ValuePtr& w) {
    throw ConvError(position, v ? quote(lvl(), v, Unfold::None, tops) : nullptr,
                    w ? quote(lvl(), w, Unfold::None, tops) : nullptr);
  }

  // The check judgment: v and w share the type ty; η dispatch happens on
  // the weak-head form of ty, which forces Top-headed types the syntactic
  // backend never touches.
  void chk(const ValuePtr& v, const ValuePtr& w, const ValuePtr& ty) {
    ValuePtr tyF = force(ty, counter);
    if (std::get_if<val::UnitType>(&tyF->node)) {
      return;  // Unit-η: all Unit-typed values are equal, unconditionally
    }
    if (const auto* pi = std::get_if<val::Pi>(&tyF->node)) {
      // Fun-η
      ValuePtr x = vLocal(lvl());
      BindGuard g(localTypes, pi->dom);
      return chk(vApp(v, x, tops), vApp(w, x, tops),
                 applyClosure(pi->cod, x, tops));
    }
    if (const auto* sg = std::get_if<val::Sigma>(&tyF->node)) {
      // Σ-η: surjective pairing
      ValuePtr vf = vFst(v, tops);
      chk(vf, vFst(w, tops), sg->first);
      return chk(vSnd(v, tops), vSnd(w, tops),
                 applyClosure(sg->second, vf, tops));
    }
    if (std::get_if<val::Univ>(&tyF->node)) return types(v, w);
    if (asNeutral(tyF)) return stuck(v, w);
    throw InternalError("non-type used as a conversion type");
  }

  // Unfold Top-headed sides until the heads agree or nothing can unfold.
  // Equal Top heads go through the synth judgment; if that fails the
  // unfoldings may still agree, so keep unfolding.
  template <typename Rigid>
  void neutralLoop(ValuePtr v, ValuePtr w, Rigid&& rigid) {
    for (;;) {
      const val::Neutral* nv = asNeutral(v);
      const val::Neutral* nw = asNeutral(w);
      if (nv && nw && sameHead(nv->head, nw->head)) {
        if (nv->head.isTop()) {
          try {
            syn(v, w);
            return;
          } catch (const ConvError&) {
            v = force(v, counter);
            w = force(w, counter);
            continue;
          }
        }
        syn(v, w);  // rigid heads: the verdict is final
        return;
      }
      if (nv && nv->head.isTop()) {
        v = force(v, counter);
        continue;
      }
      if (nw && nw->head.isTop()) {
        w = force(w, counter);
        continue;
      }
      rigid(v, w);
      return;
    }
  }

  // Structural comparison of two type values (both of type U).
  void types(const ValuePtr& v0, const ValuePtr& w0) {
    neutralLoop(v0, w0, [&](const ValuePtr& v, const ValuePtr& w) {
      if (const auto* pv = std::get_if<val::Pi>(&v->node)) {
        const auto* pw = std::get_if<val::Pi>(&w->node);
        if (!pw) fail("type constructor mismatch", v, w);
        types(pv->dom, pw->dom);
        ValuePtr x = vLocal(lvl());
        BindGuard g(localTypes, pv->dom);
        return types(applyClosure(pv->cod, x, tops),
                     applyClosure(pw->cod, x, tops));
      }
      if (const auto* sv = std::get_if<val::Sigma>(&v->node)) {
        const auto* sw = std::get_if<val::Sigma>(&w->node);
        if (!sw) fail("type constructor mismatch", v, w);
        types(sv->first, sw->first);
        ValuePtr x = vLocal(lvl());
        BindGuard g(localTypes, sv->first);
        return types(applyClosure(sv->second, x, tops),
                     applyClosure(sw->second, x, tops));
      }
      if (std::get_if<val::UnitType>(&v->node) &&
          std::get_if<val::UnitType>(&w->node)) {
        return;
      }
      if (std::get_if<val::Univ>(&v->node) &&
          std::get_if<val::Univ>(&w->node)) {
        return;
      }
      if (asNeutral(v) && asNeutral(w)) {
        syn(v, w);  // distinct rigid heads; syn reports the mismatch
        return;
      }
      fail("type constructor mismatch", v, w);
    });
  }

  // Both sides have a stuck (rigid neutral) type: no η applies, the values
  // themselves must be neutral.
  void stuck(const ValuePtr& v0, const ValuePtr& w0) {
    neutralLoop(v0, w0, [&](const ValuePtr& v, const ValuePtr& w) {
      if (asNeutral(v) && asNeutral(w)) {
        syn(v, w);
        return;
      }
      fail("non-neutral value at a stuck type", v, w);
    });
  }

  ValuePtr headType(const Head& head) {
    if (head.isTop()) return tops.byOrdinal(head.top.ordinal).type;
    if (head.lvl >= localTypes.size()) {
      throw InternalError("local head without a type entry");
    }
    return localTypes[head.lvl];
  }

  ValuePtr headValue(const Head& head) {
    if (head.isTop()) {
      return vNeutral(head, nullptr,
                      LazyValue::of(tops.byOrdinal(head.top.ordinal).value));
    }
    return vNeutral(head, nullptr, nullptr);
  }

  // The synth judgment: equal heads, then the head's type is threaded
  // through both spines in lockstep; returns the type of the whole neutral.
  ValuePtr syn(const ValuePtr& n, const ValuePtr& m) {
    const val::Neutral* nn = asNeutral(n);
    const val::Neutral* nm = asNeutral(m);
    if (!nn || !nm) fail("expected neutral values", n, m);
    if (!sameHead(nn->head, nm->head)) fail("head mismatch", n, m);
    ValuePtr headTy = headType(nn->head);
    if (nn->head.isTop() && opts.speculate) {
      // Fast path: untyped spine comparison. The synthesized type still has
      // to be computed from the head signature; only the argument checks
      // are skipped.
      bool spinesMatch = true;
      try {
        conv_syntactic::unifySp(lvl(), nn->spine, nm->spine, tops, counter,
                                opts);
      } catch (const ConvError&) {
        spinesMatch = false;
      }
      if (spinesMatch) return walkType(nn->head, headTy, nn->spine).first;
    }
    return walkSpines(nn->head, headTy, nn->spine, nm->spine).first;
  }

  // Thread the head type along one spine without comparing arguments.
  // Returns (type, reconstructed prefix neutral).
  std::pair<ValuePtr, ValuePtr> walkType(const Head& head,
                                         const ValuePtr& headTy,
                                         const SpinePtr& sp) {
    if (!sp) return {headTy, headValue(head)};
    auto [ty, prefix] = walkType(head, headTy, sp->prev);
    ValuePtr tyF = force(ty, counter);
    switch (sp->elim) {
      case SpineNode::Elim::App: {
        const auto* pi = std::get_if<val::Pi>(&tyF->node);
        if (!pi) throw InternalError("spine application at a non-Pi type");
        return {applyClosure(pi->cod, sp->arg, tops),
                vApp(prefix, sp->arg, tops)};
      }
      case SpineNode::Elim::Fst: {
        const auto* sg = std::get_if<val::Sigma>(&tyF->node);
        if (!sg) throw InternalError("spine projection at a non-Sigma type");
        return {sg->first, vFst(prefix, tops)};
      }
      case SpineNode::Elim::Snd: {
        const auto* sg = std::get_if<val::Sigma>(&tyF->node);
        if (!sg) throw InternalError("spine projection at a non-Sigma type");
        return {applyClosure(sg->second, vFst(prefix, tops), tops),
                vSnd(prefix, tops)};
      }
    }
    throw InternalError("unreachable spine eliminator");
  }

  // Walk both spines base-first, checking App arguments at the Pi domain
  // and instantiating the type along the way. The prefix neutral is rebuilt
  // incrementally for the Σ second-projection step.
  std::pair<ValuePtr, ValuePtr> walkSpines(const Head& head,
                                           const ValuePtr& headTy,
                                           const SpinePtr& a,
                                           const SpinePtr& b) {
    if (!a && !b) return {headTy, headValue(head)};
    if (!a || !b) fail("spine length mismatch", nullptr, nullptr);
    if (a->elim != b->elim) {
      fail("spine eliminator mismatch", nullptr, nullptr);
    }
    auto [ty, prefix] = walkSpines(head, headTy, a->prev, b->prev);
    ValuePtr tyF = force(ty, counter);
    switch (a->elim) {
      case SpineNode::Elim::App: {
        const auto* pi = std::get_if<val::Pi>(&tyF->node);
        if (!pi) throw InternalError("spine application at a non-Pi type");
        chk(a->arg, b->arg, pi->dom);
        return {applyClosure(pi->cod, a->arg, tops),
                vApp(prefix, a->arg, tops)};
      }
      case SpineNode::Elim::Fst: {
        const auto* sg = std::get_if<val::Sigma>(&tyF->node);
        if (!sg) throw InternalError("spine projection at a non-Sigma type");
        return {sg->first, vFst(prefix, tops)};
      }
      case SpineNode::Elim::Snd: {
        const auto* sg = std::get_if<val::Sigma>(&tyF->node);
        if (!sg) throw InternalError("spine projection at a non-Sigma type");
        return {applyClosure(sg->second, vFst(prefix, tops), tops),
                vSnd(prefix, tops)};
      }
    }
    throw InternalError("unreachable spine eliminator");
  }
};

Unifier makeUnifier(ConvCxt& cxt) {
  if (cxt.lvl != cxt.localTypes.size()) {
    throw InternalError("conversion context level out of sync");
  }
  return Unifier{cxt.localTypes, cxt.tops, cxt.counter, cxt.opts};
}

}  // namespace

void unifyChk(ConvCxt cxt, const ValuePtr& v, const ValuePtr& w,
              const ValuePtr& ty) {
  Unifier u = makeUnifier(cxt);
  u.chk(v, w, ty);
}

ValuePtr unifySyn(ConvCxt cxt, const ValuePtr& n, const ValuePtr& m) {
  Unifier u = makeUnifier(cxt);
  return u.syn(n, m);
}

ValuePtr unifySp(ConvCxt cxt, const Head& head, const ValuePtr& headTy,
                 const SpinePtr& sp, const SpinePtr& sp2) {
  Unifier u = makeUnifier(cxt);
  return u.walkSpines(head, headTy, sp, sp2).first;
}

}  // namespace conv_typed
}  // namespace etabench
