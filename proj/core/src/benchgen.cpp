#include "etabench/benchgen.hpp"

#include <map>
#include <memory>
#include <set>
#include <vector>

namespace etabench {

std::optional<Family> familyFromName(std::string_view name) {
  if (name == "stlc") return Family::Stlc;
  if (name == "asymptotics") return Family::Asymptotics;
  if (name == "eta") return Family::Eta;
  if (name == "etafree-random") return Family::EtaFreeRandom;
  return std::nullopt;
}

std::string_view familyName(Family f) {
  switch (f) {
    case Family::Stlc: return "stlc";
    case Family::Asymptotics: return "asymptotics";
    case Family::Eta: return "eta";
    case Family::EtaFreeRandom: return "etafree-random";
  }
  return "?";
}

// --- eta --------------------------------------------------------------

std::string genEta(std::uint32_t size) {
  std::string out;
  out +=
      "-- eta suite: every definition below needs a type-dependent equality\n"
      "def Eq : (A : U) -> A -> A -> U := \\A x y. (P : A -> U) -> P x -> P "
      "y\n";
  for (std::uint32_t i = 1; i <= size; ++i) {
    std::uint32_t shape = (i - 1) % 3;
    std::string n = std::to_string(i);
    switch (shape) {
      case 0: {
        std::string name = i == 1 ? "uc" : "uc" + n;
        out += "def " + name +
               " : (x : Unit) -> (y : Unit) -> Eq Unit x y := \\x y P px. "
               "px\n";
        break;
      }
      case 1:
        out += "def sp" + n +
               " : (p : (u : Unit) * Unit) -> Eq ((u : Unit) * Unit) p "
               "(p.1, p.2) := \\p P pp. pp\n";
        break;
      case 2:
        out += "def fc" + n +
               " : (f : Unit -> Unit) -> Eq (Unit -> Unit) f (\\u. tt) := "
               "\\f P pf. pf\n";
        break;
    }
  }
  return out;
}

// --- asymptotics ------------------------------------------------------

namespace {

std::string churchNat(std::uint32_t k) {
  std::string body = "z";
  for (std::uint32_t i = 0; i < k; ++i) body = "(s " + body + ")";
  if (k > 0) body = body.substr(1, body.size() - 2);  // outermost parens
  return "\\N s z. " + body;
}

}  // namespace

std::string genAsymptotics(std::uint32_t size) {
  std::string out;
  out +=
      "-- asymptotics suite: heavy term-level computation, simple types\n"
      "def Nat : U := (N : U) -> (N -> N) -> N -> N\n"
      "def zero : Nat := \\N s z. z\n"
      "def suc : Nat -> Nat := \\n N s z. s (n N s z)\n"
      "def add : Nat -> Nat -> Nat := \\m n N s z. m N s (n N s z)\n"
      "def mul : Nat -> Nat -> Nat := \\m n N s z. m N (n N s) z\n"
      "def Eq : (A : U) -> A -> A -> U := \\A x y. (P : A -> U) -> P x -> P "
      "y\n"
      "def refl : (A : U) -> (x : A) -> Eq A x x := \\A x P px. px\n"
      "def Tree : U := (T : U) -> (T -> T -> T) -> T -> T\n"
      "def leaf : Tree := \\T n l. l\n"
      "def node : Tree -> Tree -> Tree := \\a b T n l. n (a T n l) (b T n "
      "l)\n"
      "def mirror : Tree -> Tree := \\t T n l. t T (\\a b. n b a) l\n"
      "def tree0 : Tree := leaf\n"
      "def tree1 : Tree := node tree0 tree0\n"
      "def tree2 : Tree := node tree1 tree1\n"
      "def tree3 : Tree := node tree2 tree2\n"
      "def tree4 : Tree := node tree3 tree3\n";

  struct Obligation {
    std::uint32_t shape;
    std::uint32_t a = 0, b = 0, c = 0;
  };
  std::vector<Obligation> obls;
  std::set<std::uint32_t> lits;
  for (std::uint32_t i = 1; i <= size; ++i) {
    Obligation o;
    o.shape = i % 3;
    switch (o.shape) {
      case 0:  // add a (add b c) = a+b+c
        o.a = 6 + (i * 5) % 7;
        o.b = 6 + (i * 3) % 7;
        o.c = 6 + i % 7;
        lits.insert(o.a);
        lits.insert(o.b);
        lits.insert(o.c);
        lits.insert(o.a + o.b + o.c);
        break;
      case 1:  // mul a b = a*b
        o.a = 6 + (i * 5) % 7;
        o.b = 6 + (i * 3) % 7;
        lits.insert(o.a);
        lits.insert(o.b);
        lits.insert(o.a * o.b);
        break;
      case 2:  // mirror (mirror t) = t
        o.a = 2 + i % 3;
        break;
    }
    obls.push_back(o);
  }
  for (std::uint32_t k : lits) {
    out += "def lit" + std::to_string(k) + " : Nat := " + churchNat(k) + "\n";
  }
  std::uint32_t i = 1;
  for (const Obligation& o : obls) {
    std::string n = std::to_string(i++);
    switch (o.shape) {
      case 0: {
        std::string sum = std::to_string(o.a + o.b + o.c);
        out += "def chk" + n + " : Eq Nat (add lit" + std::to_string(o.a) +
               " (add lit" + std::to_string(o.b) + " lit" +
               std::to_string(o.c) + ")) lit" + sum + " := refl Nat lit" +
               sum + "\n";
        break;
      }
      case 1: {
        std::string prod = std::to_string(o.a * o.b);
        out += "def chk" + n + " : Eq Nat (mul lit" + std::to_string(o.a) +
               " lit" + std::to_string(o.b) + ") lit" + prod +
               " := refl Nat lit" + prod + "\n";
        break;
      }
      case 2: {
        std::string t = "tree" + std::to_string(o.a);
        out += "def chk" + n + " : Eq Tree (mirror (mirror " + t + ")) " + t +
               " := refl Tree " + t + "\n";
        break;
      }
    }
  }
  return out;
}

// --- stlc -------------------------------------------------------------

std::string genStlc(std::uint32_t size) {
  std::string out;
  out +=
      "-- stlc suite: Church-encoded STLC syntax; types carry the redexes\n"
      "def Ty : U := (T : U) -> T -> (T -> T -> T) -> T\n"
      "def tbase : Ty := \\T b a. b\n"
      "def tarr : Ty -> Ty -> Ty := \\d c T b a. a (d T b a) (c T b a)\n"
      "def Con : U := (C : U) -> C -> (Ty -> C -> C) -> C\n"
      "def cnil : Con := \\C n c. n\n"
      "def ccons : Ty -> Con -> Con := \\t g C n c. c t (g C n c)\n"
      "def Var : Con -> Ty -> U := \\G A. (V : Con -> Ty -> U)\n"
      "  -> ((G' : Con) -> (A' : Ty) -> V (ccons A' G') A')\n"
      "  -> ((G' : Con) -> (A' : Ty) -> (B' : Ty) -> V G' A' -> V (ccons B' "
      "G') A')\n"
      "  -> V G A\n"
      "def vz : (G : Con) -> (A : Ty) -> Var (ccons A G) A := \\G A V z s. z "
      "G A\n"
      "def vs : (G : Con) -> (A : Ty) -> (B : Ty) -> Var G A -> Var (ccons B "
      "G) A := \\G A B x V z s. s G A B (x V z s)\n"
      "def Tm : Con -> Ty -> U := \\G A. (T : Con -> Ty -> U)\n"
      "  -> ((G' : Con) -> (A' : Ty) -> Var G' A' -> T G' A')\n"
      "  -> ((G' : Con) -> (A' : Ty) -> (B' : Ty) -> T G' (tarr A' B') -> T "
      "G' A' -> T G' B')\n"
      "  -> ((G' : Con) -> (A' : Ty) -> (B' : Ty) -> T (ccons A' G') B' -> T "
      "G' (tarr A' B'))\n"
      "  -> T G A\n"
      "def tvar : (G : Con) -> (A : Ty) -> Var G A -> Tm G A := \\G A x T v "
      "ap lm. v G A x\n"
      "def tapp : (G : Con) -> (A : Ty) -> (B : Ty) -> Tm G (tarr A B) -> Tm "
      "G A -> Tm G B := \\G A B f a T v ap lm. ap G A B (f T v ap lm) (a T v "
      "ap lm)\n"
      "def tlam : (G : Con) -> (A : Ty) -> (B : Ty) -> Tm (ccons A G) B -> "
      "Tm G (tarr A B) := \\G A B b T v ap lm. lm G A B (b T v ap lm)\n"
      "-- alias ladders: redex chains through top-level definitions\n"
      "def ty0 : Ty := tbase\n"
      "def ty1 : Ty := tarr tbase ty0\n"
      "def ty2 : Ty := tarr tbase ty1\n"
      "def ty3 : Ty := tarr tbase ty2\n"
      "def ty4 : Ty := tarr tbase ty3\n"
      "def G0 : Con := cnil\n"
      "def G1 : Con := ccons tbase G0\n"
      "def G2 : Con := ccons tbase G1\n"
      "def G3 : Con := ccons tbase G2\n";

  for (std::uint32_t i = 1; i <= size; ++i) {
    std::string n = std::to_string(i);
    switch (i % 6) {
      case 0:
        // identity, spelled with raw constructors: fast-path heavy
        out += "def obj" + n +
               " : Tm cnil (tarr tbase tbase) := tlam cnil tbase tbase "
               "(tvar (ccons tbase cnil) tbase (vz cnil tbase))\n";
        break;
      case 1:
        // identity as an eliminator-style lambda: the body conversion
        // compares T-headed telescopes, which the typed backend walks
        // with full type information
        out += "def obj" + n +
               " : Tm G0 ty1 := \\T v ap lm. lm G0 tbase ty0 (v G1 ty0 (vz "
               "G0 ty0))\n";
        break;
      case 2:
        // identity through the alias ladder
        out += "def obj" + n +
               " : Tm G0 ty1 := tlam G0 tbase ty0 (tvar G1 ty0 (vz G0 "
               "ty0))\n";
        break;
      case 3:
        // eliminator-style with a raw variable witness as well
        out += "def obj" + n +
               " : Tm G0 ty1 := \\T v ap lm. lm G0 tbase ty0 (v G1 ty0 (\\V "
               "z s. z G0 ty0))\n";
        break;
      case 4:
        // \x. \y. y at ty2, combinator spelling
        out += "def obj" + n +
               " : Tm G0 ty2 := tlam G0 tbase ty1 (tlam G1 tbase ty0 (tvar "
               "G2 ty0 (vz G1 ty0)))\n";
        break;
      case 5:
        // \x. \y. y at ty2, eliminator spelling
        out += "def obj" + n +
               " : Tm G0 ty2 := \\T v ap lm. lm G0 tbase ty1 (lm G1 tbase "
               "ty0 (v G2 ty0 (\\V z s. z G1 ty0)))\n";
        break;
    }
  }
  return out;
}

// --- etafree-random ---------------------------------------------------

namespace {

// Generator-side types. Unit never appears, so no Unit-typed conversion
// obligations arise; pairs are only ever checked against Sigma types.
struct GTy;
using GTyP = std::shared_ptr<const GTy>;

struct GTy {
  enum class Kind { U, Ref, TyVar, Arrow, Prod } kind;
  std::uint32_t id = 0;  // Ref: def ordinal; TyVar: binder id
  GTyP a, b;
};

GTyP gU() {
  static const GTyP v = std::make_shared<GTy>(GTy{GTy::Kind::U, 0, {}, {}});
  return v;
}
GTyP gRef(std::uint32_t i) {
  return std::make_shared<GTy>(GTy{GTy::Kind::Ref, i, {}, {}});
}
GTyP gTyVar(std::uint32_t i) {
  return std::make_shared<GTy>(GTy{GTy::Kind::TyVar, i, {}, {}});
}
GTyP gArrow(GTyP a, GTyP b) {
  return std::make_shared<GTy>(
      GTy{GTy::Kind::Arrow, 0, std::move(a), std::move(b)});
}
GTyP gProd(GTyP a, GTyP b) {
  return std::make_shared<GTy>(
      GTy{GTy::Kind::Prod, 0, std::move(a), std::move(b)});
}

struct EtaFreeGen {
  Lcg rng;
  std::uint32_t size;
  std::string out;
  std::uint32_t freshId = 0;

  struct DefInfo {
    std::string name;
    bool isType = false;  // T{i} : U
    GTyP type;            // for isType: the type it abbreviates
  };
  std::vector<DefInfo> defs;

  struct ScopeVar {
    std::string name;
    GTyP type;
  };
  std::vector<ScopeVar> scope;
  std::map<std::uint32_t, std::string> tyVarNames;

  explicit EtaFreeGen(std::uint32_t size_, std::uint64_t seed)
      : rng(seed), size(size_) {}

  std::string fresh(const char* prefix) {
    return std::string(prefix) + std::to_string(freshId++);
  }

  // Expand Ref aliases; TyVars are rigid.
  GTyP norm(const GTyP& t) const {
    switch (t->kind) {
      case GTy::Kind::Ref: {
        const DefInfo& d = defs[t->id];
        return d.type ? norm(d.type) : gU();
      }
      case GTy::Kind::Arrow:
        return gArrow(norm(t->a), norm(t->b));
      case GTy::Kind::Prod:
        return gProd(norm(t->a), norm(t->b));
      default:
        return t;
    }
  }

  static bool eq(const GTyP& x, const GTyP& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case GTy::Kind::U: return true;
      case GTy::Kind::Ref:
      case GTy::Kind::TyVar: return x->id == y->id;
      case GTy::Kind::Arrow:
      case GTy::Kind::Prod:
        return eq(x->a, y->a) && eq(x->b, y->b);
    }
    return false;
  }

  bool sameType(const GTyP& x, const GTyP& y) const {
    return eq(norm(x), norm(y));
  }

  std::string printTy(const GTyP& t, bool atom = false) const {
    switch (t->kind) {
      case GTy::Kind::U: return "U";
      case GTy::Kind::Ref: return defs[t->id].name;
      case GTy::Kind::TyVar: return tyVarNames.at(t->id);
      case GTy::Kind::Arrow: {
        std::string s = printTy(t->a, true) + " -> " + printTy(t->b);
        return atom ? "(" + s + ")" : s;
      }
      case GTy::Kind::Prod: {
        std::string s = printTy(t->a, true) + " * " + printTy(t->b);
        return atom ? "(" + s + ")" : s;
      }
    }
    return "?";
  }

  // A random monomorphic type over earlier type defs.
  GTyP randomTy(std::uint32_t depth) {
    std::vector<std::uint32_t> tyDefs;
    for (std::uint32_t i = 0; i < defs.size(); ++i) {
      if (defs[i].isType) tyDefs.push_back(i);
    }
    std::uint32_t roll = rng.below(10);
    if (depth == 0 || tyDefs.empty()) {
      if (!tyDefs.empty() && roll < 6) {
        return gRef(tyDefs[rng.below(static_cast<std::uint32_t>(
            tyDefs.size()))]);
      }
      return gU();
    }
    if (roll < 4) {
      return gArrow(randomTy(depth - 1), randomTy(depth - 1));
    }
    if (roll < 6) {
      return gProd(randomTy(depth - 1), randomTy(depth - 1));
    }
    if (roll < 9) {
      return gRef(tyDefs[rng.below(static_cast<std::uint32_t>(
          tyDefs.size()))]);
    }
    return gU();
  }

  // A value of type U, i.e. a type expression.
  std::string synthTypeValue(std::uint32_t depth) {
    GTyP t = randomTy(depth);
    return printTy(t);
  }

  // Find an in-scope variable or earlier definition usable at the target
  // type, possibly through one pair projection.
  std::optional<std::string> lookupValue(const GTyP& target) {
    std::vector<std::string> hits;
    auto consider = [&](const std::string& name, const GTyP& ty) {
      if (sameType(ty, target)) hits.push_back(name);
      GTyP n = norm(ty);
      if (n->kind == GTy::Kind::Prod) {
        if (eq(n->a, norm(target))) hits.push_back(name + ".1");
        if (eq(n->b, norm(target))) hits.push_back(name + ".2");
      }
    };
    for (const ScopeVar& v : scope) consider(v.name, v.type);
    for (const DefInfo& d : defs) {
      if (!d.isType && d.type) consider(d.name, d.type);
    }
    if (hits.empty()) return std::nullopt;
    return hits[rng.below(static_cast<std::uint32_t>(hits.size()))];
  }

  std::string synthValue(const GTyP& target, std::uint32_t fuel) {
    if (fuel > 0 && rng.below(100) < 25) {
      if (auto hit = lookupValue(target)) return *hit;
    }
    // occasionally route through a let-bound identity: creates β-redexes
    if (fuel > 1 && rng.below(100) < 20) {
      std::string f = fresh("f");
      std::string tyStr = printTy(target, true);
      std::string inner = synthValue(target, fuel - 1);
      std::string x = fresh("x");
      return "let " + f + " : " + tyStr + " -> " + tyStr + " := \\" + x +
             ". " + x + "; " + f + " (" + inner + ")";
    }
    GTyP n = norm(target);
    switch (n->kind) {
      case GTy::Kind::U:
        return synthTypeValue(fuel > 0 ? 1 : 0);
      case GTy::Kind::Arrow: {
        std::string x = fresh("x");
        scope.push_back(ScopeVar{x, n->a});
        std::string body = synthValue(n->b, fuel > 0 ? fuel - 1 : 0);
        scope.pop_back();
        return "\\" + x + ". " + body;
      }
      case GTy::Kind::Prod: {
        std::string a = synthValue(n->a, fuel > 0 ? fuel - 1 : 0);
        std::string b = synthValue(n->b, fuel > 0 ? fuel - 1 : 0);
        return "(" + a + ", " + b + ")";
      }
      case GTy::Kind::TyVar: {
        if (auto hit = lookupValue(n)) return *hit;
        // unreachable for the template shapes below
        return "U";
      }
      default:
        return "U";
    }
  }

  // Polymorphic templates: every shape is synthesizable by construction.
  void polyDef(const std::string& name) {
    std::string a = fresh("A");
    std::uint32_t varId = freshId++;
    tyVarNames[varId] = a;
    GTyP alpha = gTyVar(varId);
    GTyP shapes[] = {
        gArrow(alpha, alpha),
        gArrow(alpha, gArrow(alpha, alpha)),
        gArrow(gArrow(alpha, alpha), gArrow(alpha, alpha)),
        gArrow(gProd(alpha, alpha), alpha),
        gArrow(alpha, gProd(alpha, alpha)),
    };
    GTyP body = shapes[rng.below(5)];
    std::string tyStr = "(" + a + " : U) -> " + printTy(body);
    scope.push_back(ScopeVar{a, gU()});
    std::string bodyStr = synthValue(body, 3);
    scope.pop_back();
    out += "def " + name + " : " + tyStr + " := \\" + a + ". " + bodyStr +
           "\n";
  }

  std::string wrongBody(const GTyP& target) {
    GTyP n = norm(target);
    switch (rng.below(3)) {
      case 0:
        if (n->kind != GTy::Kind::U) {
          // a type where a value of `target` is expected: rigid mismatch
          return "U";
        }
        [[fallthrough]];
      case 1:
        return defs[0].name + " " + defs[0].name;  // applying a non-function
      default:
        return defs[0].name + ".1";  // projecting a non-pair
    }
  }

  std::string run() {
    out += "-- etafree-random suite (seeded, deterministic)\n";
    bool erroneous = rng.below(100) < 45;
    std::uint32_t victim = size > 0 ? rng.below(size) : 0;
    for (std::uint32_t i = 0; i < size; ++i) {
      bool isTypeDef = (i % 3 == 0);
      if (isTypeDef) {
        std::string name = "T" + std::to_string(i);
        GTyP meaning = randomTy(i == 0 ? 0 : 2);
        defs.push_back(DefInfo{name, true, meaning});
        out += "def " + name + " : U := " + printTy(meaning) + "\n";
        continue;
      }
      std::string name = "v" + std::to_string(i);
      if (rng.below(100) < 40) {
        // polymorphic shape; never the error victim (kept simple)
        polyDef(name);
        defs.push_back(DefInfo{name, false, nullptr});
        continue;
      }
      GTyP ty = randomTy(2);
      std::string tyStr = printTy(ty);
      std::string body;
      if (erroneous && i == victim) {
        body = wrongBody(ty);
      } else {
        body = synthValue(ty, 4);
      }
      out += "def " + name + " : " + tyStr + " := " + body + "\n";
      defs.push_back(DefInfo{name, false, ty});
    }
    return out;
  }
};

}  // namespace

std::string genEtaFreeRandom(std::uint32_t size, std::uint64_t seed) {
  return EtaFreeGen(size, seed).run();
}

std::string generate(const SuiteSpec& spec) {
  switch (spec.family) {
    case Family::Stlc: return genStlc(spec.size);
    case Family::Asymptotics: return genAsymptotics(spec.size);
    case Family::Eta: return genEta(spec.size);
    case Family::EtaFreeRandom: return genEtaFreeRandom(spec.size, spec.seed);
  }
  return {};
}

}  // namespace etabench
