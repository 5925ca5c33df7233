#include "etabench/syntax.hpp"

#include <unordered_map>
#include <unordered_set>

namespace etabench {

TermPtr mkVar(Ix ix) { return std::make_shared<Term>(Term{tm::Var{ix}}); }
TermPtr mkTop(TopLevelId id) {
  return std::make_shared<Term>(Term{tm::Top{std::move(id)}});
}
TermPtr mkApp(TermPtr fn, TermPtr arg) {
  return std::make_shared<Term>(Term{tm::App{std::move(fn), std::move(arg)}});
}
TermPtr mkLam(std::string name, TermPtr body) {
  return std::make_shared<Term>(Term{tm::Lam{std::move(name), std::move(body)}});
}
TermPtr mkPi(std::string name, TermPtr dom, TermPtr cod) {
  return std::make_shared<Term>(
      Term{tm::Pi{std::move(name), std::move(dom), std::move(cod)}});
}
TermPtr mkSigma(std::string name, TermPtr first, TermPtr second) {
  return std::make_shared<Term>(
      Term{tm::Sigma{std::move(name), std::move(first), std::move(second)}});
}
TermPtr mkPair(TermPtr first, TermPtr second) {
  return std::make_shared<Term>(
      Term{tm::Pair{std::move(first), std::move(second)}});
}
TermPtr mkFst(TermPtr t) {
  return std::make_shared<Term>(Term{tm::Fst{std::move(t)}});
}
TermPtr mkSnd(TermPtr t) {
  return std::make_shared<Term>(Term{tm::Snd{std::move(t)}});
}
TermPtr mkUnitType() {
  static const TermPtr v = std::make_shared<Term>(Term{tm::UnitType{}});
  return v;
}
TermPtr mkUnitVal() {
  static const TermPtr v = std::make_shared<Term>(Term{tm::UnitVal{}});
  return v;
}
TermPtr mkUniv() {
  static const TermPtr v = std::make_shared<Term>(Term{tm::Univ{}});
  return v;
}
TermPtr mkLet(std::string name, TermPtr type, TermPtr bound, TermPtr body) {
  return std::make_shared<Term>(Term{tm::Let{std::move(name), std::move(type),
                                             std::move(bound),
                                             std::move(body)}});
}

bool termEq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const tm::Var& x) {
            return x.ix == std::get<tm::Var>(b->node).ix;
          },
          [&](const tm::Top& x) {
            return x.id == std::get<tm::Top>(b->node).id;
          },
          [&](const tm::App& x) {
            const auto& y = std::get<tm::App>(b->node);
            return termEq(x.fn, y.fn) && termEq(x.arg, y.arg);
          },
          [&](const tm::Lam& x) {
            return termEq(x.body, std::get<tm::Lam>(b->node).body);
          },
          [&](const tm::Pi& x) {
            const auto& y = std::get<tm::Pi>(b->node);
            return termEq(x.dom, y.dom) && termEq(x.cod, y.cod);
          },
          [&](const tm::Sigma& x) {
            const auto& y = std::get<tm::Sigma>(b->node);
            return termEq(x.first, y.first) && termEq(x.second, y.second);
          },
          [&](const tm::Pair& x) {
            const auto& y = std::get<tm::Pair>(b->node);
            return termEq(x.first, y.first) && termEq(x.second, y.second);
          },
          [&](const tm::Fst& x) {
            return termEq(x.t, std::get<tm::Fst>(b->node).t);
          },
          [&](const tm::Snd& x) {
            return termEq(x.t, std::get<tm::Snd>(b->node).t);
          },
          [&](const tm::UnitType&) { return true; },
          [&](const tm::UnitVal&) { return true; },
          [&](const tm::Univ&) { return true; },
          [&](const tm::Let& x) {
            const auto& y = std::get<tm::Let>(b->node);
            return termEq(x.type, y.type) && termEq(x.bound, y.bound) &&
                   termEq(x.body, y.body);
          },
      },
      a->node);
}

namespace {

bool scopedUnder(const TermPtr& t, std::uint64_t depth) {
  return std::visit(
      overloaded{
          [&](const tm::Var& x) { return x.ix < depth; },
          [&](const tm::Top&) { return true; },
          [&](const tm::App& x) {
            return scopedUnder(x.fn, depth) && scopedUnder(x.arg, depth);
          },
          [&](const tm::Lam& x) { return scopedUnder(x.body, depth + 1); },
          [&](const tm::Pi& x) {
            return scopedUnder(x.dom, depth) && scopedUnder(x.cod, depth + 1);
          },
          [&](const tm::Sigma& x) {
            return scopedUnder(x.first, depth) &&
                   scopedUnder(x.second, depth + 1);
          },
          [&](const tm::Pair& x) {
            return scopedUnder(x.first, depth) && scopedUnder(x.second, depth);
          },
          [&](const tm::Fst& x) { return scopedUnder(x.t, depth); },
          [&](const tm::Snd& x) { return scopedUnder(x.t, depth); },
          [&](const tm::UnitType&) { return true; },
          [&](const tm::UnitVal&) { return true; },
          [&](const tm::Univ&) { return true; },
          [&](const tm::Let& x) {
            return scopedUnder(x.type, depth) && scopedUnder(x.bound, depth) &&
                   scopedUnder(x.body, depth + 1);
          },
      },
      t->node);
}

// Does the variable bound `depth` binders out occur in t?
bool occursVar(const TermPtr& t, Ix depth) {
  return std::visit(
      overloaded{
          [&](const tm::Var& x) { return x.ix == depth; },
          [&](const tm::Top&) { return false; },
          [&](const tm::App& x) {
            return occursVar(x.fn, depth) || occursVar(x.arg, depth);
          },
          [&](const tm::Lam& x) { return occursVar(x.body, depth + 1); },
          [&](const tm::Pi& x) {
            return occursVar(x.dom, depth) || occursVar(x.cod, depth + 1);
          },
          [&](const tm::Sigma& x) {
            return occursVar(x.first, depth) || occursVar(x.second, depth + 1);
          },
          [&](const tm::Pair& x) {
            return occursVar(x.first, depth) || occursVar(x.second, depth);
          },
          [&](const tm::Fst& x) { return occursVar(x.t, depth); },
          [&](const tm::Snd& x) { return occursVar(x.t, depth); },
          [&](const tm::UnitType&) { return false; },
          [&](const tm::UnitVal&) { return false; },
          [&](const tm::Univ&) { return false; },
          [&](const tm::Let& x) {
            return occursVar(x.type, depth) || occursVar(x.bound, depth) ||
                   occursVar(x.body, depth + 1);
          },
      },
      t->node);
}

void collectTopNames(const TermPtr& t, std::unordered_set<std::string>& out) {
  std::visit(overloaded{
                 [&](const tm::Var&) {},
                 [&](const tm::Top& x) { out.insert(x.id.name); },
                 [&](const tm::App& x) {
                   collectTopNames(x.fn, out);
                   collectTopNames(x.arg, out);
                 },
                 [&](const tm::Lam& x) { collectTopNames(x.body, out); },
                 [&](const tm::Pi& x) {
                   collectTopNames(x.dom, out);
                   collectTopNames(x.cod, out);
                 },
                 [&](const tm::Sigma& x) {
                   collectTopNames(x.first, out);
                   collectTopNames(x.second, out);
                 },
                 [&](const tm::Pair& x) {
                   collectTopNames(x.first, out);
                   collectTopNames(x.second, out);
                 },
                 [&](const tm::Fst& x) { collectTopNames(x.t, out); },
                 [&](const tm::Snd& x) { collectTopNames(x.t, out); },
                 [&](const tm::UnitType&) {},
                 [&](const tm::UnitVal&) {},
                 [&](const tm::Univ&) {},
                 [&](const tm::Let& x) {
                   collectTopNames(x.type, out);
                   collectTopNames(x.bound, out);
                   collectTopNames(x.body, out);
                 },
             },
             t->node);
}

bool isKeyword(const std::string& s) {
  return s == "def" || s == "let" || s == "U" || s == "Unit" || s == "tt";
}

// Precedence: 0 expr (λ, let, ->, *), 1 application, 2 projection, 3 atom.
int precOf(const Term& t) {
  return std::visit(
      overloaded{
          [](const tm::Var&) { return 3; },
          [](const tm::Top&) { return 3; },
          [](const tm::App&) { return 1; },
          [](const tm::Lam&) { return 0; },
          [](const tm::Pi&) { return 0; },
          [](const tm::Sigma&) { return 0; },
          [](const tm::Pair&) { return 3; },  // always parenthesized
          [](const tm::Fst&) { return 2; },
          [](const tm::Snd&) { return 2; },
          [](const tm::UnitType&) { return 3; },
          [](const tm::UnitVal&) { return 3; },
          [](const tm::Univ&) { return 3; },
          [](const tm::Let&) { return 0; },
      },
      t.node);
}

class Printer {
 public:
  Printer(const TermPtr& root, std::vector<std::string> names)
      : names_(std::move(names)) {
    collectTopNames(root, reserved_);
    for (const auto& n : names_) ++inScope_[n];
  }

  std::string print(const TermPtr& t) {
    std::string out;
    go(t, 0, out);
    return out;
  }

 private:
  std::vector<std::string> names_;  // outermost first
  std::unordered_set<std::string> reserved_;
  std::unordered_map<std::string, int> inScope_;

  std::string freshen(const std::string& name) {
    std::string candidate = name.empty() ? "x" : name;
    while (isKeyword(candidate) || reserved_.count(candidate) ||
           inScope_[candidate] > 0) {
      candidate += "'";
    }
    return candidate;
  }

  struct Bound {
    Printer& p;
    std::string name;
    Bound(Printer& p_, const std::string& raw) : p(p_), name(p_.freshen(raw)) {
      p.names_.push_back(name);
      ++p.inScope_[name];
    }
    ~Bound() {
      --p.inScope_[name];
      p.names_.pop_back();
    }
  };

  void go(const TermPtr& t, int min, std::string& out) {
    bool parens = precOf(*t) < min;
    if (parens) out += "(";
    std::visit(
        overloaded{
            [&](const tm::Var& x) {
              out += names_[names_.size() - 1 - x.ix];
            },
            [&](const tm::Top& x) { out += x.id.name; },
            [&](const tm::App& x) {
              go(x.fn, 1, out);
              out += " ";
              go(x.arg, 2, out);
            },
            [&](const tm::Lam&) { printLam(t, out); },
            [&](const tm::Pi& x) {
              if (occursVar(x.cod, 0)) {
                Bound b(*this, x.name);
                // name registered before printing dom is harmless: dom cannot
                // reference it, and the freshened pick stays stable.
                out += "(" + b.name + " : ";
                goShifted(x.dom, 0, out, b.name);
                out += ") -> ";
                go(x.cod, 0, out);
              } else {
                go(x.dom, 1, out);
                out += " -> ";
                Bound b(*this, "_unused");
                go(x.cod, 0, out);
              }
            },
            [&](const tm::Sigma& x) {
              if (occursVar(x.second, 0)) {
                Bound b(*this, x.name);
                out += "(" + b.name + " : ";
                goShifted(x.first, 0, out, b.name);
                out += ") * ";
                go(x.second, 0, out);
              } else {
                go(x.first, 1, out);
                out += " * ";
                Bound b(*this, "_unused");
                go(x.second, 0, out);
              }
            },
            [&](const tm::Pair& x) {
              out += "(";
              go(x.first, 0, out);
              out += ", ";
              go(x.second, 0, out);
              out += ")";
            },
            [&](const tm::Fst& x) {
              go(x.t, 2, out);
              out += ".1";
            },
            [&](const tm::Snd& x) {
              go(x.t, 2, out);
              out += ".2";
            },
            [&](const tm::UnitType&) { out += "Unit"; },
            [&](const tm::UnitVal&) { out += "tt"; },
            [&](const tm::Univ&) { out += "U"; },
            [&](const tm::Let& x) {
              out += "let ";
              std::string tyStr, boundStr;
              go(x.type, 0, tyStr);
              go(x.bound, 0, boundStr);
              Bound b(*this, x.name);
              out += b.name + " : " + tyStr + " := " + boundStr + "; ";
              go(x.body, 0, out);
            },
        },
        t->node);
    if (parens) out += ")";
  }

  // Print a subterm that does NOT see the binder just pushed (Pi/Sigma
  // domains): temporarily hide the innermost name so indices line up.
  void goShifted(const TermPtr& t, int min, std::string& out,
                 const std::string& hidden) {
    names_.pop_back();
    go(t, min, out);
    names_.push_back(hidden);
  }

  void printLam(const TermPtr& t, std::string& out) {
    out += "\\";
    std::vector<std::unique_ptr<Bound>> binders;
    TermPtr cur = t;
    bool first = true;
    while (const auto* lam = std::get_if<tm::Lam>(&cur->node)) {
      binders.push_back(std::make_unique<Bound>(*this, lam->name));
      if (!first) out += " ";
      out += binders.back()->name;
      first = false;
      cur = lam->body;
    }
    out += ". ";
    go(cur, 0, out);
  }
};

}  // namespace

bool shiftCheck(const TermPtr& t, std::uint32_t depth) {
  return scopedUnder(t, depth);
}

std::string pretty(const TermPtr& t, std::vector<std::string> names) {
  return Printer(t, std::move(names)).print(t);
}

}  // namespace etabench
