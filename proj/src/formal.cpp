#include "liebranch/formal.hpp"

#include <algorithm>

namespace liebranch {

void FormalElement::add(const Weight& w, const Int& c) {
  if (c == 0) return;
  if (min_grade && w.grade < *min_grade) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

FormalElement fe_one(int ambient, std::optional<Rat> min_grade) {
  FormalElement e;
  e.min_grade = std::move(min_grade);
  Weight zero;
  zero.finite.assign(ambient, Rat(0));
  e.terms.emplace(zero, Int(1));
  return e;
}

bool fe_equal(const FormalElement& x, const FormalElement& y) {
  return x.terms == y.terms;
}

FormalElement fe_mul(const FormalElement& x, const FormalElement& y) {
  FormalElement out;
  out.min_grade = x.min_grade ? x.min_grade : y.min_grade;
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) out.add(w_add(wx, wy), cx * cy);
  return out;
}

void fe_mul_binomial(FormalElement& x, const Weight& gamma, int power) {
  for (int p = 0; p < power; ++p) {
    FormalElement next;
    next.min_grade = x.min_grade;
    for (const auto& [w, c] : x.terms) {
      next.add(w, c);
      next.add(w_sub(w, gamma), -c);
    }
    x = std::move(next);
  }
}

void fe_mul_geometric(FormalElement& x, const Weight& gamma) {
  if (sgn_rat(gamma.grade) <= 0)
    fail("geometric series needs a positive-grade exponent");
  if (!x.min_grade) fail("geometric series needs a truncation window");
  FormalElement out;
  out.min_grade = x.min_grade;
  for (const auto& [w, c] : x.terms) {
    Weight shifted = w;
    while (shifted.grade >= *x.min_grade) {
      out.add(shifted, c);
      shifted = w_sub(shifted, gamma);
    }
  }
  x = std::move(out);
}

FormalElement fe_div_binomial(const FormalElement& x, const Weight& gamma) {
  if (sgn_rat(gamma.grade) != 0 || sgn_rat(gamma.level) != 0)
    fail("synthetic division expects a grade-0 classical direction");
  FormalElement quot, rem = x;
  quot.min_grade = x.min_grade;
  // Divide by the leading term e^0 of (1 - e^{-gamma}): repeatedly clear the
  // remaining term maximal along <., gamma>.  Exact division terminates; once
  // the working remainder sinks strictly below every term of the dividend it
  // can never cancel, so the divisor does not divide the element.
  std::optional<Rat> floor_key;
  for (const auto& [w, c] : x.terms) {
    Rat key = dot_finite(w, gamma);
    if (!floor_key || key < *floor_key) floor_key = key;
  }
  size_t steps = 0, cap = 2000000;
  while (!rem.terms.empty()) {
    if (++steps > cap) fail("inconsistent embedding: nonterminating character division");
    auto best = rem.terms.begin();
    Rat best_key = dot_finite(best->first, gamma);
    for (auto it = std::next(rem.terms.begin()); it != rem.terms.end(); ++it) {
      Rat key = dot_finite(it->first, gamma);
      if (key > best_key) { best = it; best_key = key; }
    }
    if (best_key < *floor_key)
      fail("inconsistent embedding: nonterminating character division");
    Weight w = best->first;
    Int c = best->second;
    quot.add(w, c);
    rem.terms.erase(best);
    rem.add(w_sub(w, gamma), c);
  }
  return quot;
}

}  // namespace liebranch
