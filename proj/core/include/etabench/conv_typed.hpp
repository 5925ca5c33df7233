#pragma once

#include "etabench/conv_syntactic.hpp"

namespace etabench {
namespace conv_typed {

// Conversion context for the type-directed backend: the next fresh level
// and the type of every bound level. The vector is indexed by level and is
// extended/restored around recursion; callers see it unchanged.
struct ConvCxt {
  Lvl lvl = 0;
  std::vector<ValuePtr>& localTypes;
  const TopTable& tops;
  UnfoldCounter& counter;
  ConvOptions opts;
};

// Check judgment: v and w both have type ty; dispatches η on the forced
// type (Unit, Pi, Sigma), compares type values structurally at Univ, and
// defers stuck-typed neutrals to unifySyn. Throws ConvError.
void unifyChk(ConvCxt cxt, const ValuePtr& v, const ValuePtr& w,
              const ValuePtr& ty);

// Synth judgment on neutrals: heads must be equal; threads the head's type
// through both spines in lockstep and returns the type of the whole neutral.
ValuePtr unifySyn(ConvCxt cxt, const ValuePtr& n, const ValuePtr& m);

// Spine walk, base-first. `head` identifies the shared head so the neutral
// prefix can be rebuilt for the Σ second-projection step.
ValuePtr unifySp(ConvCxt cxt, const Head& head, const ValuePtr& headTy,
                 const SpinePtr& sp, const SpinePtr& sp2);

}  // namespace conv_typed
}  // namespace etabench
