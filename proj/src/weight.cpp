#include "liebranch/weight.hpp"

#include <sstream>

namespace liebranch {

int weight_cmp(const Weight& x, const Weight& y) {
  if (x.grade != y.grade) return x.grade < y.grade ? -1 : 1;
  if (x.finite.size() != y.finite.size())
    return x.finite.size() < y.finite.size() ? -1 : 1;
  for (size_t i = 0; i < x.finite.size(); ++i)
    if (x.finite[i] != y.finite[i]) return x.finite[i] < y.finite[i] ? -1 : 1;
  if (x.level != y.level) return x.level < y.level ? -1 : 1;
  return 0;
}

Weight w_add(const Weight& x, const Weight& y) {
  if (x.finite.size() != y.finite.size()) fail("w_add: dimension mismatch");
  Weight z = x;
  for (size_t i = 0; i < z.finite.size(); ++i) z.finite[i] += y.finite[i];
  z.level += y.level;
  z.grade += y.grade;
  return z;
}

Weight w_sub(const Weight& x, const Weight& y) {
  if (x.finite.size() != y.finite.size()) fail("w_sub: dimension mismatch");
  Weight z = x;
  for (size_t i = 0; i < z.finite.size(); ++i) z.finite[i] -= y.finite[i];
  z.level -= y.level;
  z.grade -= y.grade;
  return z;
}

Weight w_neg(const Weight& x) {
  Weight z = x;
  for (auto& c : z.finite) c = -c;
  z.level = -z.level;
  z.grade = -z.grade;
  return z;
}

Weight w_scale(const Rat& c, const Weight& x) {
  Weight z = x;
  for (auto& v : z.finite) v *= c;
  z.level *= c;
  z.grade *= c;
  return z;
}

Rat dot_finite(const Weight& x, const Weight& y) {
  if (x.finite.size() != y.finite.size()) fail("dot_finite: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < x.finite.size(); ++i) s += x.finite[i] * y.finite[i];
  return s;
}

bool is_zero(const Weight& x) {
  if (x.level != 0 || x.grade != 0) return false;
  for (const auto& c : x.finite)
    if (c != 0) return false;
  return true;
}

std::string weight_str(const Weight& x) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < x.finite.size(); ++i) {
    if (i) os << ",";
    os << rat_str(x.finite[i]);
  }
  os << ")";
  if (x.level != 0 || x.grade != 0)
    os << "[k=" << rat_str(x.level) << ",n=" << rat_str(x.grade) << "]";
  return os.str();
}

}  // namespace liebranch
