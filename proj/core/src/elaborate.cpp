#include "etabench/elaborate.hpp"

namespace etabench {

std::string_view backendName(Backend b) {
  return b == Backend::Syntactic ? "syntactic" : "typed";
}

std::optional<Backend> backendFromName(std::string_view name) {
  if (name == "syntactic") return Backend::Syntactic;
  if (name == "typed") return Backend::Typed;
  return std::nullopt;
}

namespace {

class Elab {
 public:
  Elab(const TopTable& tops, const CheckOptions& opts, UnfoldCounter& counter)
      : tops_(tops), opts_(opts), counter_(counter) {}

  std::pair<TermPtr, ValuePtr> infer(const RawPtr& r);
  TermPtr check(const RawPtr& r, const ValuePtr& expected);

 private:
  const TopTable& tops_;
  const CheckOptions& opts_;
  UnfoldCounter& counter_;
  EnvPtr env_;
  std::vector<std::string> names_;      // display name per level
  std::vector<ValuePtr> localTypes_;    // type per level

  Lvl lvl() const { return static_cast<Lvl>(localTypes_.size()); }

  // one entry per level: binders get a fresh rigid variable, lets the
  // bound value
  struct Scope {
    Elab& e;
    EnvPtr saved;
    Scope(Elab& e_, const std::string& name, ValuePtr type, ValuePtr value)
        : e(e_), saved(e_.env_) {
      e.env_ = envExtend(e.env_, std::move(value));
      e.names_.push_back(name);
      e.localTypes_.push_back(std::move(type));
    }
    ~Scope() {
      e.env_ = saved;
      e.names_.pop_back();
      e.localTypes_.pop_back();
    }
  };

  [[noreturn]] void err(const RawTerm& at, std::string msg,
                        const ValuePtr& expected = nullptr,
                        const ValuePtr& actual = nullptr) {
    TypeError e;
    e.message = std::move(msg);
    e.span = at.span;
    if (expected) e.expected = quote(lvl(), expected, Unfold::None, tops_);
    if (actual) e.actual = quote(lvl(), actual, Unfold::None, tops_);
    e.scopeNames = names_;
    e.backend = opts_.backend;
    throw TypeErrorException(std::move(e));
  }

  ValuePtr evalHere(const TermPtr& t) { return eval(env_, t, tops_); }

  // The single call site where the two equality backends diverge.
  void convert(const RawTerm& at, const ValuePtr& expected,
               const ValuePtr& inferred) {
    try {
      if (opts_.backend == Backend::Syntactic) {
        conv_syntactic::unify(lvl(), expected, inferred, tops_, counter_,
                              ConvOptions{opts_.speculate});
      } else {
        conv_typed::ConvCxt cxt{lvl(), localTypes_, tops_, counter_,
                                ConvOptions{opts_.speculate}};
        conv_typed::unifyChk(cxt, expected, inferred, vUniv());
      }
    } catch (const ConvError& ce) {
      err(at, "type mismatch (" + ce.position + ")", expected, inferred);
    }
  }
};

std::pair<TermPtr, ValuePtr> Elab::infer(const RawPtr& r) {
  using Ret = std::pair<TermPtr, ValuePtr>;
  return std::visit(
      overloaded{
          [&](const raw::Var& x) -> Ret {
            for (std::size_t i = names_.size(); i > 0; --i) {
              if (names_[i - 1] == x.name) {
                Lvl level = static_cast<Lvl>(i - 1);
                return {mkVar(lvl() - 1 - level), localTypes_[level]};
              }
            }
            if (const TopEntry* e = tops_.find(x.name)) {
              return {mkTop(e->id), e->type};
            }
            err(*r, "unbound name '" + x.name + "'");
          },
          [&](const raw::App& x) -> Ret {
            auto [tf, tyF] = infer(x.fn);
            ValuePtr fTy = force(tyF, counter_);
            const auto* pi = std::get_if<val::Pi>(&fTy->node);
            if (!pi) {
              err(*r, "applying a non-function", nullptr, tyF);
            }
            TermPtr ta = check(x.arg, pi->dom);
            return {mkApp(std::move(tf), ta),
                    applyClosure(pi->cod, evalHere(ta), tops_)};
          },
          [&](const raw::Lam&) -> Ret {
            err(*r, "cannot infer the type of an un-annotated lambda");
          },
          [&](const raw::Pi& x) -> Ret {
            TermPtr dom = check(x.dom, vUniv());
            ValuePtr vdom = evalHere(dom);
            Scope s(*this, x.name, vdom, vLocal(lvl()));
            TermPtr cod = check(x.cod, vUniv());
            return {mkPi(x.name, std::move(dom), std::move(cod)), vUniv()};
          },
          [&](const raw::Sigma& x) -> Ret {
            TermPtr first = check(x.first, vUniv());
            ValuePtr vfirst = evalHere(first);
            Scope s(*this, x.name, vfirst, vLocal(lvl()));
            TermPtr second = check(x.second, vUniv());
            return {mkSigma(x.name, std::move(first), std::move(second)),
                    vUniv()};
          },
          [&](const raw::Pair&) -> Ret {
            err(*r, "cannot infer the type of an un-annotated pair");
          },
          [&](const raw::Fst& x) -> Ret {
            auto [tp, tyP] = infer(x.t);
            ValuePtr pTy = force(tyP, counter_);
            const auto* sg = std::get_if<val::Sigma>(&pTy->node);
            if (!sg) err(*r, "projecting from a non-pair", nullptr, tyP);
            return {mkFst(std::move(tp)), sg->first};
          },
          [&](const raw::Snd& x) -> Ret {
            auto [tp, tyP] = infer(x.t);
            ValuePtr pTy = force(tyP, counter_);
            const auto* sg = std::get_if<val::Sigma>(&pTy->node);
            if (!sg) err(*r, "projecting from a non-pair", nullptr, tyP);
            ValuePtr vp = evalHere(tp);
            return {mkSnd(std::move(tp)),
                    applyClosure(sg->second, vFst(vp, tops_), tops_)};
          },
          [&](const raw::UnitType&) -> Ret {
            return {mkUnitType(), vUniv()};
          },
          [&](const raw::UnitVal&) -> Ret {
            return {mkUnitVal(), vUnitType()};
          },
          [&](const raw::Univ&) -> Ret {
            return {mkUniv(), vUniv()};  // type-in-type
          },
          [&](const raw::Let& x) -> Ret {
            TermPtr ty = check(x.type, vUniv());
            ValuePtr vty = evalHere(ty);
            TermPtr bound = check(x.bound, vty);
            ValuePtr vbound = evalHere(bound);
            Scope s(*this, x.name, vty, vbound);
            auto [body, bodyTy] = infer(x.body);
            return {mkLet(x.name, std::move(ty), std::move(bound),
                          std::move(body)),
                    bodyTy};
          },
      },
      r->node);
}

TermPtr Elab::check(const RawPtr& r, const ValuePtr& expected) {
  if (const auto* lam = std::get_if<raw::Lam>(&r->node)) {
    ValuePtr ty = force(expected, counter_);
    const auto* pi = std::get_if<val::Pi>(&ty->node);
    if (!pi) err(*r, "lambda checked against a non-function type", expected);
    ValuePtr x = vLocal(lvl());
    Scope s(*this, lam->name, pi->dom, x);
    TermPtr body = check(lam->body, applyClosure(pi->cod, x, tops_));
    return mkLam(lam->name, std::move(body));
  }
  if (const auto* pr = std::get_if<raw::Pair>(&r->node)) {
    ValuePtr ty = force(expected, counter_);
    const auto* sg = std::get_if<val::Sigma>(&ty->node);
    if (!sg) err(*r, "pair checked against a non-pair type", expected);
    TermPtr first = check(pr->first, sg->first);
    ValuePtr vfirst = evalHere(first);
    TermPtr second =
        check(pr->second, applyClosure(sg->second, vfirst, tops_));
    return mkPair(std::move(first), std::move(second));
  }
  if (const auto* let = std::get_if<raw::Let>(&r->node)) {
    TermPtr ty = check(let->type, vUniv());
    ValuePtr vty = evalHere(ty);
    TermPtr bound = check(let->bound, vty);
    ValuePtr vbound = evalHere(bound);
    Scope s(*this, let->name, vty, vbound);
    TermPtr body = check(let->body, expected);
    return mkLet(let->name, std::move(ty), std::move(bound), std::move(body));
  }
  auto [t, inferred] = infer(r);
  convert(*r, expected, inferred);
  return t;
}

}  // namespace

CheckResult checkProgram(const RawProgram& prog, const CheckOptions& opts) {
  CheckResult res;
  UnfoldCounter counter;
  Elab elab(res.tops, opts, counter);
  try {
    for (const RawDecl& decl : prog.decls) {
      if (res.tops.find(decl.name)) {
        TypeError e;
        e.message = "duplicate definition of '" + decl.name + "'";
        e.span = decl.nameSpan;
        e.backend = opts.backend;
        throw TypeErrorException(std::move(e));
      }
      TermPtr ty = elab.check(decl.type, vUniv());
      ValuePtr vty = eval(nullptr, ty, res.tops);
      TermPtr body = elab.check(decl.body, vty);
      ValuePtr vbody = eval(nullptr, body, res.tops);
      TopLevelId id{static_cast<std::uint32_t>(res.tops.size()), decl.name};
      res.tops.add(TopEntry{std::move(id), std::move(ty), std::move(body),
                            std::move(vty), std::move(vbody)});
    }
  } catch (TypeErrorException& e) {
    res.error = std::move(e.error);
  }
  res.stats.unfolds = counter.count;
  return res;
}

InferResult inferClosed(const RawPtr& r, const TopTable& tops,
                        const CheckOptions& opts, UnfoldCounter& counter) {
  Elab elab(tops, opts, counter);
  auto [t, ty] = elab.infer(r);
  return InferResult{std::move(t), std::move(ty)};
}

TermPtr checkClosed(const RawPtr& r, const ValuePtr& expected,
                    const TopTable& tops, const CheckOptions& opts,
                    UnfoldCounter& counter) {
  Elab elab(tops, opts, counter);
  return elab.check(r, expected);
}

std::string formatTypeError(const TypeError& err, std::string_view src) {
  Diagnostic d{Severity::Error, err.message, err.span};
  std::string out = formatDiagnostic(d, src);
  if (err.expected) out += "\n  expected: " + pretty(err.expected, err.scopeNames);
  if (err.actual) out += "\n  actual:   " + pretty(err.actual, err.scopeNames);
  out += "\n  backend:  " + std::string(backendName(err.backend));
  return out;
}

}  // namespace etabench
