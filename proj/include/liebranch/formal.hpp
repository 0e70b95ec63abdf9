#pragma once

#include <map>
#include <optional>

#include "liebranch/weight.hpp"

namespace liebranch {

// A finitely supported integer combination of formal exponentials e^{w},
// keyed by the exponent weight.  When min_grade is set (affine truncation)
// any term whose exponent grade drops below it is discarded; all factors we
// ever multiply by have exponents of nonpositive grade, so truncation
// commutes with multiplication on the retained window.
struct FormalElement {
  std::map<Weight, Int, WeightLess> terms;
  std::optional<Rat> min_grade;

  void add(const Weight& w, const Int& c);
};

FormalElement fe_one(int ambient, std::optional<Rat> min_grade);
bool fe_equal(const FormalElement& x, const FormalElement& y);
FormalElement fe_mul(const FormalElement& x, const FormalElement& y);
// Multiply in place by (1 - e^{-gamma})^{power}, power >= 0.
void fe_mul_binomial(FormalElement& x, const Weight& gamma, int power);
// Multiply in place by (1 - e^{-gamma})^{-1} = sum_m e^{-m gamma} for a
// gamma of positive grade; the truncation window makes the series finite.
void fe_mul_geometric(FormalElement& x, const Weight& gamma);
// Exact division by (1 - e^{-gamma}) for a grade-0 gamma, by synthetic
// division along the <., gamma> direction; fails if the division does not
// terminate or leaves a remainder.
FormalElement fe_div_binomial(const FormalElement& x, const Weight& gamma);

}  // namespace liebranch
