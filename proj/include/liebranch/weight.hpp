#pragma once

#include <vector>

#include "liebranch/arith.hpp"

namespace liebranch {

// A weight in the epsilon (orthogonal) coordinates of the ambient space.
// Finite weights keep level = grade = 0.  Affine weights carry a level
// (coefficient of the central element in the dual pairing) and a grade
// equal to the delta-coefficient: a module weight mu - n*delta sits at
// grade -n, a positive real root alpha + n*delta at grade +n.
struct Weight {
  std::vector<Rat> finite;
  Rat level = 0;
  Rat grade = 0;

  Weight() = default;
  explicit Weight(std::vector<Rat> f) : finite(std::move(f)) {}
  Weight(std::vector<Rat> f, Rat lv, Rat gr)
      : finite(std::move(f)), level(std::move(lv)), grade(std::move(gr)) {}
};

// Structural order: by grade, then finite coords lexicographically, then
// level.  Used only as a map key; mathematical orders live elsewhere.
int weight_cmp(const Weight& x, const Weight& y);

struct WeightLess {
  bool operator()(const Weight& x, const Weight& y) const {
    return weight_cmp(x, y) < 0;
  }
};

inline bool operator==(const Weight& x, const Weight& y) {
  return weight_cmp(x, y) == 0;
}
inline bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }

Weight w_add(const Weight& x, const Weight& y);
Weight w_sub(const Weight& x, const Weight& y);
Weight w_neg(const Weight& x);
Weight w_scale(const Rat& c, const Weight& x);

// Euclidean dot product of the finite parts (no level/grade contribution).
Rat dot_finite(const Weight& x, const Weight& y);

bool is_zero(const Weight& x);

std::string weight_str(const Weight& x);

}  // namespace liebranch
