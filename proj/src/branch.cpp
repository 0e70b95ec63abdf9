#include "liebranch/branch.hpp"

#include <algorithm>
#include <set>

namespace liebranch {

AnomalousTable solve_recurrence(const Embedding& emb,
                                const SingularElement& singular,
                                const Fan& fan) {
  AnomalousTable out;
  out.cutoff = singular.cutoff;
  out.terms.min_grade = singular.element.min_grade;

  std::map<Weight, Int, WeightLess> accum;
  FanKeyLess less{&emb};
  std::set<Weight, FanKeyLess> pending(less);
  for (const auto& [sigma, c] : singular.element.terms) {
    Weight seed = w_add(sigma, fan.gamma0);
    accum[seed] += c;
    pending.insert(seed);
  }

  size_t caps = 20000000, steps = 0;
  while (!pending.empty()) {
    if (++steps > caps) fail("recurrence did not terminate");
    auto it = std::prev(pending.end());
    Weight xi = *it;
    pending.erase(it);
    Int v = accum[xi];
    accum.erase(xi);
    if (v == 0) continue;
    Int k = -v;
    if (!mpz_divisible_p(k.get_mpz_t(), fan.s_gamma0.get_mpz_t()))
      fail("recurrence produced a non-integral coefficient");
    k /= fan.s_gamma0;
    if (k == 0) continue;
    out.terms.add(xi, k);
    for (const FanTerm& t : fan.terms) {
      Weight target = w_sub(xi, t.gamma);
      if (out.terms.min_grade && target.grade < *out.terms.min_grade) continue;
      accum[target] += t.s * k;
      pending.insert(target);
    }
  }
  return out;
}

Weight module_weight(const RootSystem& g, const std::vector<Int>& labels,
                     const Int& level) {
  std::vector<Rat> l(labels.begin(), labels.end());
  Weight w = weight_from_labels(g, l);
  if (g.affine) w.level = Rat(level);
  if (!is_dominant_integral(g, w))
    fail("weight " + weight_str(w) + " is not dominant integral");
  return w;
}

namespace {

void sort_entries(BranchingTable& table) {
  std::sort(table.entries.begin(), table.entries.end(),
            [](const BranchEntry& x, const BranchEntry& y) {
              if (x.depth != y.depth) return x.depth < y.depth;
              return x.labels < y.labels;
            });
}

}  // namespace

BranchingTable extract_branching(const Embedding& emb, const Weight& mu,
                                 const AnomalousTable& anomalous) {
  BranchingTable table;
  table.cutoff = anomalous.cutoff;
  Rat lvl = emb.x_e * mu.level;
  if (!is_int(lvl)) fail("non-integral a-level");
  table.a_level = lvl.get_num();
  size_t skipped = 0;
  std::optional<Weight> example;

  for (const auto& [xi, k] : anomalous.terms.terms) {
    std::vector<Rat> labels = a_labels(emb, xi);
    bool integral = true, dominant = true;
    for (const Rat& l : labels) {
      if (!is_int(l)) integral = false;
      if (sgn_rat(l) < 0) dominant = false;
    }
    if (emb.a.affine) {
      Rat zero_label = affine_zero_label(emb.a, xi);
      if (!is_int(zero_label)) integral = false;
      if (sgn_rat(zero_label) < 0) dominant = false;
    }
    if (!integral) {
      if (dominant) {
        ++skipped;
        if (!example) example = xi;
      }
      continue;
    }
    if (!dominant) continue;
    if (k < 0)
      fail("negative branching coefficient at " + weight_str(xi));
    BranchEntry e;
    for (const Rat& l : labels) e.labels.push_back(l.get_num());
    Rat d = mu.grade - xi.grade;
    if (!is_int(d) || sgn_rat(d) < 0)
      fail("dominant a-weight above the module top");
    e.depth = d.get_num();
    e.coeff = k;
    e.nu = xi;
    if (emb.a.affine) {
      auto& row = table.series[e.labels];
      if (table.cutoff) row.resize(static_cast<size_t>(*table.cutoff) + 1, 0);
      size_t di = e.depth.get_ui();
      if (row.size() <= di) row.resize(di + 1, 0);
      row[di] += k;
    }
    table.entries.push_back(std::move(e));
  }
  if (skipped)
    table.diagnostics.push_back(
        "excluded " + std::to_string(skipped) +
        " dominant a-weights with non-integral labels, first at " +
        weight_str(*example));
  sort_entries(table);
  return table;
}

bool branching_equal(const BranchingTable& x, const BranchingTable& y) {
  if (x.entries.size() != y.entries.size()) return false;
  for (size_t i = 0; i < x.entries.size(); ++i) {
    const BranchEntry &a = x.entries[i], &b = y.entries[i];
    if (a.labels != b.labels || a.depth != b.depth || a.coeff != b.coeff)
      return false;
  }
  return x.series == y.series && x.a_level == y.a_level;
}

BranchResult branch_module(const Embedding& emb, const OrthogonalPair& orth,
                           const FormalElement& fan_element, const Fan& fan,
                           const Weight& mu, std::optional<int> cutoff) {
  BranchResult r;
  r.emb = emb;
  r.orth = orth;
  r.fan_product_element = fan_element;
  r.fan = fan;
  r.singular = build_singular_element(emb, orth, mu, cutoff);
  r.anomalous = solve_recurrence(emb, r.singular, fan);
  r.table = extract_branching(emb, mu, r.anomalous);
  return r;
}

BranchResult branch_module(const EmbeddingSpec& spec, const Weight& mu,
                           std::optional<int> cutoff) {
  Embedding emb = resolve_embedding(spec);
  OrthogonalPair orth = orthogonal_pair(emb);
  FormalElement prod = fan_product(emb, orth, cutoff);
  Fan fan = extract_fan(emb, prod);
  return branch_module(emb, orth, prod, fan, mu, cutoff);
}

}  // namespace liebranch
