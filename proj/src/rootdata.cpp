#include "liebranch/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace liebranch {

AlgebraSpec parse_algebra(const std::string& s) {
  if (s.empty()) fail("empty algebra name");
  std::string body = s;
  AlgebraSpec spec;
  if (body.back() == '^') {
    spec.affine = true;
    body.pop_back();
  }
  if (body.size() < 2) fail("bad algebra name '" + s + "'");
  switch (body[0]) {
    case 'A': spec.series = Series::A; break;
    case 'B': spec.series = Series::B; break;
    case 'C': spec.series = Series::C; break;
    case 'D': spec.series = Series::D; break;
    default: fail("unknown series in algebra name '" + s + "'");
  }
  for (size_t i = 1; i < body.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(body[i])))
      fail("bad rank in algebra name '" + s + "'");
  spec.rank = std::stoi(body.substr(1));
  if (spec.rank < 1) fail("rank must be positive in '" + s + "'");
  if (spec.series == Series::D && spec.rank < 3)
    fail("series D requires rank >= 3, got '" + s + "'");
  return spec;
}

std::string algebra_str(const AlgebraSpec& spec) {
  static const char* names = "ABCD";
  std::string out(1, names[static_cast<int>(spec.series)]);
  out += std::to_string(spec.rank);
  if (spec.affine) out += "^";
  return out;
}

bool spec_equal(const AlgebraSpec& x, const AlgebraSpec& y) {
  return x.series == y.series && x.rank == y.rank && x.affine == y.affine;
}

namespace {

Weight eps_weight(int ambient, std::initializer_list<std::pair<int, Rat>> entries) {
  Weight w;
  w.finite.assign(ambient, Rat(0));
  for (auto& [i, c] : entries) w.finite[i] = c;
  return w;
}

// Positive roots of the classical series in their usual orthogonal coordinates.
std::vector<Weight> classical_positive(const AlgebraSpec& spec, int ambient) {
  std::vector<Weight> out;
  int r = spec.rank;
  switch (spec.series) {
    case Series::A:
      for (int i = 0; i < r + 1; ++i)
        for (int j = i + 1; j < r + 1; ++j)
          out.push_back(eps_weight(ambient, {{i, 1}, {j, -1}}));
      break;
    case Series::B:
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          out.push_back(eps_weight(ambient, {{i, 1}, {j, -1}}));
          out.push_back(eps_weight(ambient, {{i, 1}, {j, 1}}));
        }
      for (int i = 0; i < r; ++i) out.push_back(eps_weight(ambient, {{i, 1}}));
      break;
    case Series::C:
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          out.push_back(eps_weight(ambient, {{i, 1}, {j, -1}}));
          out.push_back(eps_weight(ambient, {{i, 1}, {j, 1}}));
        }
      for (int i = 0; i < r; ++i) out.push_back(eps_weight(ambient, {{i, 2}}));
      break;
    case Series::D:
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          out.push_back(eps_weight(ambient, {{i, 1}, {j, -1}}));
          out.push_back(eps_weight(ambient, {{i, 1}, {j, 1}}));
        }
      break;
  }
  return out;
}

bool is_sum_of_two(const Weight& alpha, const std::vector<Weight>& positive) {
  for (const Weight& b : positive) {
    if (b == alpha) continue;
    Weight rest = w_sub(alpha, b);
    for (const Weight& c : positive)
      if (c == rest) return true;
  }
  return false;
}

void sort_weights(std::vector<Weight>& v) {
  std::sort(v.begin(), v.end(), WeightLess{});
}

}  // namespace

RootSystem root_system_from_positive(int ambient, std::vector<Weight> positive,
                                     bool affine, int imaginary_mult) {
  RootSystem rs;
  rs.affine = affine;
  rs.ambient = ambient;
  rs.imaginary_mult = imaginary_mult;
  sort_weights(positive);
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  rs.positive = positive;
  rs.rho.finite.assign(ambient, Rat(0));
  for (const Weight& a : positive) rs.rho = w_add(rs.rho, a);
  rs.rho = w_scale(Rat(1, 2), rs.rho);
  for (const Weight& a : positive)
    if (!is_sum_of_two(a, positive)) rs.simple.push_back(a);

  // Highest root: the dominant root of maximal squared length, when unique.
  std::vector<Weight> dominant;
  for (const Weight& a : positive) {
    bool dom = true;
    for (const Weight& s : rs.simple)
      if (sgn_rat(dot_finite(a, s)) < 0) { dom = false; break; }
    if (dom) dominant.push_back(a);
  }
  Rat best(0);
  int best_count = 0;
  for (const Weight& a : dominant) {
    Rat n = dot_finite(a, a);
    if (n > best) { best = n; rs.theta = a; best_count = 1; }
    else if (n == best) ++best_count;
  }
  if (best_count == 1) {
    rs.has_theta = true;
    rs.cl_scale = Rat(2) / best;
    rs.h_dual = 0;
    Rat h = pair_coroot(rs, rs.rho, rs.theta) + 1;
    if (!is_int(h)) fail("dual Coxeter number came out non-integral");
    rs.h_dual = h.get_num();
    rs.dim_alg = Int(rs.rank()) + 2 * Int(positive.size());
    if (affine) rs.rho.level = Rat(rs.h_dual);
  }
  return rs;
}

RootSystem build_root_system(const AlgebraSpec& spec) {
  int ambient = spec.rank + (spec.series == Series::A ? 1 : 0);
  RootSystem rs = root_system_from_positive(
      ambient, classical_positive(spec, ambient), spec.affine,
      spec.affine ? spec.rank : 0);
  if (!rs.has_theta) fail("standard system missing a highest root");
  rs.spec = spec;
  // Put the simple roots in standard node order so Dynkin labels line up
  // with the conventional numbering (alpha_i = e_i - e_{i+1}, then the
  // series-specific last node).
  std::vector<Weight> simple;
  int r = spec.rank;
  for (int i = 0; i + 1 < r; ++i)
    simple.push_back(eps_weight(ambient, {{i, 1}, {i + 1, -1}}));
  switch (spec.series) {
    case Series::A:
      simple.push_back(eps_weight(ambient, {{r - 1, 1}, {r, -1}}));
      break;
    case Series::B:
      simple.push_back(eps_weight(ambient, {{r - 1, 1}}));
      break;
    case Series::C:
      simple.push_back(eps_weight(ambient, {{r - 1, 2}}));
      break;
    case Series::D:
      simple.push_back(eps_weight(ambient, {{r - 2, 1}, {r - 1, 1}}));
      break;
  }
  if (simple.size() != rs.simple.size())
    fail("simple root count mismatch in standard construction");
  for (const Weight& s : simple)
    if (std::find(rs.simple.begin(), rs.simple.end(), s) == rs.simple.end())
      fail("standard simple root missing from sieved set");
  rs.simple = simple;
  return rs;
}

Weight delta_root(const RootSystem& rs) {
  Weight d;
  d.finite.assign(rs.ambient, Rat(0));
  d.grade = 1;
  return d;
}

Weight alpha0(const RootSystem& rs) {
  if (!rs.affine) fail("alpha0 requested for a non-affine system");
  if (!rs.has_theta) fail("alpha0 requires a highest root");
  Weight a = w_neg(rs.theta);
  a.grade = 1;
  return a;
}

Rat ip(const RootSystem& rs, const Weight& x, const Weight& y) {
  return rs.cl_scale * dot_finite(x, y) + x.level * y.grade + x.grade * y.level;
}

Rat pair_coroot(const RootSystem& rs, const Weight& x, const Weight& alpha) {
  Rat n = ip(rs, alpha, alpha);
  if (sgn_rat(n) == 0) fail("coroot pairing with an isotropic root");
  return Rat(2) * ip(rs, x, alpha) / n;
}

Weight reflect(const RootSystem& rs, const Weight& x, const Weight& alpha) {
  Rat p = pair_coroot(rs, x, alpha);
  return w_sub(x, w_scale(p, alpha));
}

std::vector<Rat> dynkin_labels(const RootSystem& rs, const Weight& x) {
  std::vector<Rat> out;
  out.reserve(rs.simple.size());
  for (const Weight& s : rs.simple) out.push_back(pair_coroot(rs, x, s));
  return out;
}

Rat affine_zero_label(const RootSystem& rs, const Weight& x) {
  if (!rs.affine) fail("affine label requested for a finite system");
  return x.level - pair_coroot(rs, x, rs.theta);
}

Mat span_projector(int ambient, const std::vector<Weight>& basis) {
  Mat p(ambient, ambient);
  if (basis.empty()) return p;
  int n = static_cast<int>(basis.size());
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram.at(i, j) = dot_finite(basis[i], basis[j]);
  Mat gram_inv = mat_inverse(gram);
  for (int r = 0; r < ambient; ++r)
    for (int c = 0; c < ambient; ++c) {
      Rat s(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += basis[i].finite[r] * gram_inv.at(i, j) * basis[j].finite[c];
      p.at(r, c) = s;
    }
  return p;
}

Weight apply_projector(const Mat& p, const Weight& w) {
  Weight out = w;
  out.finite = mat_apply(p, w.finite);
  return out;
}

Weight weight_from_labels(const RootSystem& rs, const std::vector<Rat>& labels) {
  if (labels.size() != rs.simple.size())
    fail("label count does not match rank");
  // Solve <x, alpha_i^vee> = l_i, then project into span(simple roots) to
  // pick the canonical representative (traceless for standard A-series).
  int rows = static_cast<int>(rs.simple.size());
  Mat m(rows, rs.ambient);
  std::vector<Rat> rhs(rows, Rat(0));
  for (int i = 0; i < rows; ++i) {
    const Weight& s = rs.simple[i];
    Rat n = dot_finite(s, s);
    for (int j = 0; j < rs.ambient; ++j) m.at(i, j) = Rat(2) * s.finite[j] / n;
    rhs[i] = labels[i];
  }
  Weight w;
  if (!solve_linear(m, rhs, w.finite)) fail("no weight with the requested labels");
  return apply_projector(span_projector(rs.ambient, rs.simple), w);
}

bool is_dominant(const RootSystem& rs, const Weight& x) {
  for (const Weight& s : rs.simple)
    if (sgn_rat(pair_coroot(rs, x, s)) < 0) return false;
  if (rs.affine && rs.has_theta && sgn_rat(affine_zero_label(rs, x)) < 0)
    return false;
  return true;
}

bool is_dominant_integral(const RootSystem& rs, const Weight& x) {
  for (const Weight& s : rs.simple) {
    Rat p = pair_coroot(rs, x, s);
    if (!is_int(p) || sgn_rat(p) < 0) return false;
  }
  if (rs.affine && rs.has_theta) {
    Rat p = affine_zero_label(rs, x);
    if (!is_int(p) || sgn_rat(p) < 0) return false;
  }
  return true;
}

Int weyl_dim(const RootSystem& rs, const Weight& mu) {
  Rat num(1), den(1);
  Weight shifted = w_add(mu, rs.rho);
  for (const Weight& a : rs.positive) {
    num *= dot_finite(shifted, a);
    den *= dot_finite(rs.rho, a);
  }
  Rat d = num / den;
  if (!is_int(d)) fail("Weyl dimension came out non-integral");
  return d.get_num();
}

std::vector<SignedOrbitPoint> weyl_orbit_signed(const RootSystem& rs,
                                                const Weight& start,
                                                std::optional<Rat> grade_floor) {
  if (rs.affine && !grade_floor)
    fail("affine orbit enumeration needs a grade floor");
  std::vector<Weight> gens = rs.simple;
  if (rs.affine && rs.has_theta) gens.push_back(alpha0(rs));
  for (const Weight& g : gens)
    if (sgn_rat(pair_coroot(rs, start, g)) <= 0)
      fail("orbit start is not strictly dominant");

  std::map<Weight, int, WeightLess> seen;
  std::deque<Weight> queue;
  seen.emplace(start, 1);
  queue.push_back(start);
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    int sx = seen.find(x)->second;
    for (const Weight& g : gens) {
      Rat p = pair_coroot(rs, x, g);
      if (sgn_rat(p) <= 0) continue;  // only descend; the orbit graph stays acyclic
      Weight y = w_sub(x, w_scale(p, g));
      if (grade_floor && y.grade < *grade_floor) continue;
      if (seen.emplace(y, -sx).second) queue.push_back(y);
    }
  }
  std::vector<SignedOrbitPoint> out;
  out.reserve(seen.size());
  for (auto& [w, s] : seen) out.push_back({w, s});
  return out;
}

Int weyl_order(const RootSystem& rs) {
  if (rs.simple.empty()) return 1;
  RootSystem finite = rs;
  finite.affine = false;
  Weight rho_cl = rs.rho;
  rho_cl.level = 0;
  return Int(weyl_orbit_signed(finite, rho_cl, std::nullopt).size());
}

std::vector<Weight> dominant_weights_at_level(const RootSystem& rs, const Int& level) {
  if (!rs.affine || !rs.has_theta)
    fail("level enumeration needs an affine system");
  int r = rs.rank();
  std::vector<Weight> fundamental;
  std::vector<Int> comark(r);
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> labels(r, Rat(0));
    labels[i] = 1;
    fundamental.push_back(weight_from_labels(rs, labels));
    Rat c = pair_coroot(rs, fundamental.back(), rs.theta);
    if (!is_int(c)) fail("comark came out non-integral");
    comark[i] = c.get_num();
  }
  std::vector<Weight> out;
  std::vector<Int> labels(r, 0);
  // Depth-first enumeration in lexicographic label order.
  std::function<void(int, Int)> rec = [&](int i, Int used) {
    if (i == r) {
      Weight w;
      w.finite.assign(rs.ambient, Rat(0));
      for (int j = 0; j < r; ++j)
        w = w_add(w, w_scale(Rat(labels[j]), fundamental[j]));
      w.level = Rat(level);
      out.push_back(w);
      return;
    }
    for (Int l = 0; used + l * comark[i] <= level; ++l) {
      labels[i] = l;
      rec(i + 1, used + l * comark[i]);
    }
    labels[i] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace liebranch
