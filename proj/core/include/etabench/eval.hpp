#pragma once

#include "etabench/value.hpp"

namespace etabench {

// Environment-passing interpreter to weak-head values. Top references
// become glued neutrals whose unfolded payload is NOT forced by eval.
ValuePtr eval(const EnvPtr& env, const TermPtr& t, const TopTable& tops);

// eval of c.body in c.env extended with v.
ValuePtr applyClosure(const Closure& c, const ValuePtr& v,
                      const TopTable& tops);

// β-reduce when the head constructor is present; otherwise extend the spine
// and map the operation over the lazy unfolded payload (kept lazy).
ValuePtr vApp(const ValuePtr& f, const ValuePtr& a, const TopTable& tops);
ValuePtr vFst(const ValuePtr& v, const TopTable& tops);
ValuePtr vSnd(const ValuePtr& v, const TopTable& tops);

// Unwrap Top-headed neutrals until the head is no longer a top-level
// definition; bumps the counter once per payload forced.
ValuePtr force(ValuePtr v, UnfoldCounter& counter);

enum class Unfold { All, None };

// Read a value back into β-normal syntax. Under Unfold::All no Top
// constructors remain; level-to-index conversion is ix = lvl − head_lvl − 1.
TermPtr quote(Lvl lvl, const ValuePtr& v, Unfold policy, const TopTable& tops);

}  // namespace etabench
