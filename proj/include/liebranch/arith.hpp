// Exact arithmetic primitives: GMP-backed integers/rationals and small dense
// rational linear algebra (the ranks involved never exceed a handful).
#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace liebranch {

using Int = mpz_class;
using Rat = mpq_class;

[[noreturn]] void fail(const std::string& msg);

// Parses "p", "-p" or "p/q".
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);
std::string int_str(const Int& n);

inline int sgn_rat(const Rat& r) { return sgn(r); }
inline bool is_int(const Rat& r) { return r.get_den() == 1; }

// Row-major dense matrix over Rat.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

Mat mat_identity(int n);
Mat mat_mul(const Mat& x, const Mat& y);
std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& v);
bool mat_equal(const Mat& x, const Mat& y);

// Gauss-Jordan inverse; fails on singular input.
Mat mat_inverse(const Mat& m);

// Solves m*x = b; returns false if inconsistent. Free variables are set to 0.
bool solve_linear(const Mat& m, const std::vector<Rat>& b, std::vector<Rat>& x);

// Basis of the right nullspace {x : m*x = 0}.
std::vector<std::vector<Rat>> nullspace(const Mat& m);

}  // namespace liebranch
