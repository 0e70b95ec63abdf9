#include "liebranch/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace liebranch {

WeightDiagram freudenthal_multiplicities(const RootSystem& rs, const Weight& mu,
                                         std::optional<int> cutoff,
                                         size_t max_entries) {
  if (!is_dominant_integral(rs, mu))
    fail("Freudenthal expects a dominant integral highest weight");
  if (rs.affine && !cutoff) fail("affine weight diagram needs a depth cutoff");

  WeightDiagram diagram;
  diagram.mu = mu;
  diagram.cutoff = cutoff;

  Weight shifted_top = w_add(mu, rs.rho);
  Rat top_norm = ip(rs, shifted_top, shifted_top);

  std::vector<Weight> gens = rs.simple;
  if (rs.affine) gens.push_back(alpha0(rs));

  // Candidate weights: everything reachable from mu by subtracting simple
  // roots while the shifted norm bound and the depth window hold.  This is
  // a superset of the weights of L(mu); the recursion returns zero on the
  // extras.
  std::set<Weight, WeightLess> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (const Weight& g : gens) {
      Weight y = w_sub(x, g);
      if (cutoff && mu.grade - y.grade > Rat(*cutoff)) continue;
      Weight ys = w_add(y, rs.rho);
      if (ip(rs, ys, ys) > top_norm) continue;
      if (seen.insert(y).second) {
        if (seen.size() > max_entries)
          fail("weight diagram exceeds the entry cap");
        queue.push_back(y);
      }
    }
  }

  // Process in increasing distance from mu so every reference is resolved.
  std::vector<Weight> order(seen.begin(), seen.end());
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
    Rat hx = ip(rs, w_sub(mu, x), rs.rho);
    Rat hy = ip(rs, w_sub(mu, y), rs.rho);
    if (hx != hy) return hx < hy;
    return weight_cmp(x, y) < 0;
  });

  std::map<Weight, Int, WeightLess> mult;
  Weight delta = rs.affine ? delta_root(rs) : Weight{};
  for (const Weight& lam : order) {
    if (lam == mu) {
      mult[lam] = 1;
      continue;
    }
    Rat num(0);
    auto contribution = [&](const Weight& alpha, int root_mult, bool contiguous) {
      for (int j = 1;; ++j) {
        Weight y = w_add(lam, w_scale(Rat(j), alpha));
        if (cutoff && mu.grade - y.grade > Rat(*cutoff)) break;
        if (sgn_rat(mu.grade - y.grade) < 0) break;
        auto it = mult.find(y);
        if (it == mult.end() || it->second == 0) {
          if (contiguous) break;
          if (!rs.affine) break;
          continue;
        }
        num += Rat(root_mult) * Rat(it->second) * ip(rs, y, alpha);
      }
    };
    int max_depth = 0;
    if (rs.affine) {
      Rat d = mu.grade - lam.grade;
      max_depth = static_cast<int>(d.get_num().get_si());
    }
    for (const Weight& alpha : rs.positive) contribution(alpha, 1, true);
    if (rs.affine) {
      for (int n = 1; n <= max_depth; ++n) {
        Weight nd = w_scale(Rat(n), delta);
        for (const Weight& alpha : rs.positive) {
          contribution(w_add(alpha, nd), 1, true);
          contribution(w_add(w_neg(alpha), nd), 1, true);
        }
        contribution(nd, rs.imaginary_mult, false);
      }
    }
    if (sgn_rat(num) == 0) continue;
    Weight ls = w_add(lam, rs.rho);
    Rat den = top_norm - ip(rs, ls, ls);
    if (sgn_rat(den) <= 0)
      fail("Freudenthal denominator not positive at " + weight_str(lam));
    Rat m = Rat(2) * num / den;
    if (!is_int(m) || sgn_rat(m) < 0)
      fail("Freudenthal multiplicity not a nonnegative integer at " +
           weight_str(lam));
    if (sgn_rat(m) > 0) mult[lam] = m.get_num();
  }
  for (const auto& [w, m] : mult)
    if (m != 0) diagram.mult.emplace(w, m);
  return diagram;
}

namespace {

// Peel order: shallow grades first, then farthest along the a-dominance
// direction, then a structural tiebreak.
bool peel_before(const RootSystem& a, const Weight& x, const Weight& y) {
  if (x.grade != y.grade) return x.grade > y.grade;
  Rat hx = dot_finite(x, a.rho), hy = dot_finite(y, a.rho);
  if (hx != hy) return hx > hy;
  return weight_cmp(x, y) > 0;
}

}  // namespace

BranchingTable brute_force_branch(const Embedding& emb, const Weight& mu,
                                  std::optional<int> cutoff,
                                  size_t max_entries) {
  WeightDiagram gdiag =
      freudenthal_multiplicities(emb.g, mu, cutoff, max_entries);

  std::map<Weight, Int, WeightLess> residual;
  for (const auto& [w, m] : gdiag.mult) {
    Weight pr = emb.project(w);
    auto it = residual.emplace(pr, 0).first;
    it->second += m;
    if (it->second == 0) residual.erase(it);
  }

  BranchingTable table;
  table.cutoff = cutoff;
  Rat lvl = emb.x_e * mu.level;
  if (!is_int(lvl)) fail("non-integral a-level");
  table.a_level = lvl.get_num();

  size_t guard = 0;
  while (!residual.empty()) {
    if (++guard > max_entries) fail("peeling did not terminate");
    auto top = residual.begin();
    for (auto it = std::next(residual.begin()); it != residual.end(); ++it)
      if (peel_before(emb.a, it->first, top->first)) top = it;
    Weight nu = top->first;
    Int b = top->second;
    if (b < 0) fail("negative multiplicity while peeling at " + weight_str(nu));
    std::vector<Rat> labels = a_labels(emb, nu);
    for (const Rat& l : labels)
      if (!is_int(l) || sgn_rat(l) < 0)
        fail("peel top " + weight_str(nu) + " is not dominant integral for a");
    if (emb.a.affine) {
      Rat zl = affine_zero_label(emb.a, nu);
      if (!is_int(zl) || sgn_rat(zl) < 0)
        fail("peel top " + weight_str(nu) + " is not dominant integral for a");
    }
    Rat depth = mu.grade - nu.grade;
    std::optional<int> window;
    if (cutoff)
      window = *cutoff - static_cast<int>(depth.get_num().get_si());
    WeightDiagram adiag =
        freudenthal_multiplicities(emb.a, nu, window, max_entries);
    for (const auto& [w, m] : adiag.mult) {
      auto it = residual.emplace(w, 0).first;
      it->second -= b * m;
      if (it->second == 0) residual.erase(it);
    }
    BranchEntry e;
    for (const Rat& l : labels) e.labels.push_back(l.get_num());
    e.depth = depth.get_num();
    e.coeff = b;
    e.nu = nu;
    if (emb.a.affine) {
      auto& row = table.series[e.labels];
      if (cutoff) row.resize(static_cast<size_t>(*cutoff) + 1, 0);
      size_t di = e.depth.get_ui();
      if (row.size() <= di) row.resize(di + 1, 0);
      row[di] += b;
    }
    table.entries.push_back(std::move(e));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const BranchEntry& x, const BranchEntry& y) {
              if (x.depth != y.depth) return x.depth < y.depth;
              return x.labels < y.labels;
            });
  return table;
}

}  // namespace liebranch
