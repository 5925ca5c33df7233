#pragma once

#include <stdexcept>

#include "etabench/eval.hpp"

namespace etabench {

// Conversion failure. Carries both sides quoted with Unfold::None and a
// short description of the mismatch position.
struct ConvError : std::runtime_error {
  ConvError(std::string position_, TermPtr lhs_, TermPtr rhs_)
      : std::runtime_error("conversion failure: " + position_),
        position(std::move(position_)),
        lhs(std::move(lhs_)),
        rhs(std::move(rhs_)) {}

  std::string position;
  TermPtr lhs, rhs;
};

struct ConvOptions {
  // Try spine comparison on equal Top heads before unfolding. Disabling it
  // forces eagerly instead; the verdict must not change, only the counter.
  bool speculate = true;
};

namespace conv_syntactic {

// Untyped value conversion at level lvl: β plus η for functions only.
// Pair vs neutral fails (no Σ-η here). Throws ConvError on mismatch.
void unify(Lvl lvl, const ValuePtr& v, const ValuePtr& w, const TopTable& tops,
           UnfoldCounter& counter, const ConvOptions& opts = {});

// Pairwise spine comparison off already-matched heads: same length, same
// eliminators, unify on App arguments.
void unifySp(Lvl lvl, const SpinePtr& sp, const SpinePtr& sp2,
             const TopTable& tops, UnfoldCounter& counter,
             const ConvOptions& opts = {});

}  // namespace conv_syntactic

}  // namespace etabench
