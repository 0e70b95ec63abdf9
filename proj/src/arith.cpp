#include "liebranch/arith.hpp"

#include <stdexcept>

namespace liebranch {

void fail(const std::string& msg) { throw std::runtime_error(msg); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) fail("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) fail("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }
std::string int_str(const Int& n) { return n.get_str(); }

Mat mat_identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) fail("mat_mul: shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& v) {
  if (m.cols != static_cast<int>(v.size())) fail("mat_apply: shape mismatch");
  std::vector<Rat> out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

bool mat_equal(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

Mat mat_inverse(const Mat& m) {
  if (m.rows != m.cols) fail("mat_inverse: not square");
  int n = m.rows;
  Mat w = m, inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) fail("mat_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        swap(w.at(piv, j), w.at(col, j));
        swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = w.at(col, col);
    for (int j = 0; j < n; ++j) { w.at(col, j) /= d; inv.at(col, j) /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || w.at(r, col) == 0) continue;
      Rat f = w.at(r, col);
      for (int j = 0; j < n; ++j) {
        w.at(r, j) -= f * w.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {
// Row echelon reduction of [m | b]; returns pivot column per row.
struct Echelon {
  Mat m;
  std::vector<Rat> b;
  std::vector<int> pivot_col;
};

Echelon reduce(const Mat& m0, const std::vector<Rat>* b0) {
  Echelon e;
  e.m = m0;
  e.b = b0 ? *b0 : std::vector<Rat>(m0.rows);
  int row = 0;
  for (int col = 0; col < e.m.cols && row < e.m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < e.m.rows; ++r)
      if (e.m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < e.m.cols; ++j) swap(e.m.at(piv, j), e.m.at(row, j));
      swap(e.b[piv], e.b[row]);
    }
    Rat d = e.m.at(row, col);
    for (int j = 0; j < e.m.cols; ++j) e.m.at(row, j) /= d;
    e.b[row] /= d;
    for (int r = 0; r < e.m.rows; ++r) {
      if (r == row || e.m.at(r, col) == 0) continue;
      Rat f = e.m.at(r, col);
      for (int j = 0; j < e.m.cols; ++j) e.m.at(r, j) -= f * e.m.at(row, j);
      e.b[r] -= f * e.b[row];
    }
    e.pivot_col.push_back(col);
    ++row;
  }
  return e;
}
}  // namespace

bool solve_linear(const Mat& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
  if (m.rows != static_cast<int>(b.size())) fail("solve_linear: shape mismatch");
  Echelon e = reduce(m, &b);
  int rank = static_cast<int>(e.pivot_col.size());
  for (int r = rank; r < m.rows; ++r)
    if (e.b[r] != 0) return false;
  x.assign(m.cols, Rat(0));
  for (int r = 0; r < rank; ++r) x[e.pivot_col[r]] = e.b[r];
  return true;
}

std::vector<std::vector<Rat>> nullspace(const Mat& m) {
  Echelon e = reduce(m, nullptr);
  int rank = static_cast<int>(e.pivot_col.size());
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rat> v(m.cols);
    v[freec] = 1;
    for (int r = 0; r < rank; ++r) v[e.pivot_col[r]] = -e.m.at(r, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace liebranch
