#include "liebranch/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liebranch {

FanKey fan_key(const Embedding& emb, const Weight& w) {
  FanKey k;
  k.grade = w.grade;
  k.height = 0;
  for (const Weight& s : emb.a.simple)
    k.height += Rat(2) * dot_finite(w, s) / dot_finite(s, s);
  k.finite = w.finite;
  k.level = w.level;
  return k;
}

int fan_key_cmp(const FanKey& x, const FanKey& y) {
  if (x.grade != y.grade) return x.grade < y.grade ? -1 : 1;
  if (x.height != y.height) return x.height < y.height ? -1 : 1;
  if (x.finite.size() != y.finite.size())
    return x.finite.size() < y.finite.size() ? -1 : 1;
  for (size_t i = 0; i < x.finite.size(); ++i)
    if (x.finite[i] != y.finite[i]) return x.finite[i] < y.finite[i] ? -1 : 1;
  if (x.level != y.level) return x.level < y.level ? -1 : 1;
  return 0;
}

FormalElement fan_product(const Embedding& emb, const OrthogonalPair& orth,
                          std::optional<int> cutoff) {
  const RootSystem& g = emb.g;
  if (g.affine && !cutoff) fail("affine fan expansion needs a grade cutoff");
  int ambient = g.ambient;

  std::set<Weight, WeightLess> perp(orth.a_perp.positive.begin(),
                                    orth.a_perp.positive.end());

  // Net exponent of each binomial factor (1 - e^{-w}) after cancelling the
  // projected numerator against the a-side denominator.
  std::map<Weight, long, WeightLess> count;
  auto bump = [&](const Weight& w, long by) {
    auto it = count.emplace(w, 0).first;
    it->second += by;
    if (it->second == 0) count.erase(it);
  };

  for (const Weight& alpha : g.positive) {
    if (perp.count(alpha)) continue;
    bump(emb.project(alpha), 1);
  }
  for (const Weight& beta : emb.a.positive) bump(beta, -1);
  if (g.affine) {
    Weight delta = delta_root(g);
    for (int n = 1; n <= *cutoff; ++n) {
      Weight nd = w_scale(Rat(n), delta);
      for (const Weight& alpha : g.positive) {
        Weight pr = emb.project(alpha);
        bump(w_add(pr, nd), 1);
        bump(w_add(w_neg(pr), nd), 1);
      }
      bump(nd, g.imaginary_mult);
      for (const Weight& beta : emb.a.positive) {
        bump(w_add(beta, nd), -1);
        bump(w_add(w_neg(beta), nd), -1);
      }
      bump(nd, -emb.a.imaginary_mult);
    }
  }

  std::optional<Rat> min_grade;
  if (cutoff) min_grade = Rat(-*cutoff);
  FormalElement out = fe_one(ambient, min_grade);
  std::vector<std::pair<Weight, long>> divisions;
  for (const auto& [w, c] : count) {
    if (is_zero(w)) fail("inconsistent embedding: vanishing character factor");
    if (c > 0)
      fe_mul_binomial(out, w, static_cast<int>(c));
    else
      divisions.emplace_back(w, -c);
  }
  for (const auto& [w, c] : divisions) {
    if (sgn_rat(w.grade) > 0) {
      for (long i = 0; i < c; ++i) fe_mul_geometric(out, w);
    } else if (sgn_rat(w.grade) == 0) {
      for (long i = 0; i < c; ++i) out = fe_div_binomial(out, w);
    } else {
      fail("fan denominator with negative grade");
    }
  }
  for (auto& [w, c] : out.terms) c = -c;
  return out;
}

Fan extract_fan(const Embedding& emb, const FormalElement& product) {
  if (product.terms.empty()) fail("empty fan product");
  Fan fan;
  if (product.min_grade) {
    Rat mg = -*product.min_grade;
    if (!is_int(mg)) fail("non-integer fan cutoff");
    fan.cutoff = static_cast<int>(mg.get_num().get_si());
  }
  std::optional<FanKey> best;
  for (const auto& [w, c] : product.terms) {
    FanKey k = fan_key(emb, w_neg(w));
    if (!best || fan_key_cmp(k, *best) < 0) {
      best = k;
      fan.gamma0 = w_neg(w);
    }
  }
  fan.s_gamma0 = product.terms.at(w_neg(fan.gamma0));
  for (const auto& [w, c] : product.terms) {
    Weight gamma = w_sub(w_neg(w), fan.gamma0);
    if (is_zero(gamma)) continue;
    fan.terms.push_back({gamma, c});
  }
  FanKeyLess less{&emb};
  std::sort(fan.terms.begin(), fan.terms.end(),
            [&](const FanTerm& x, const FanTerm& y) {
              return less(x.gamma, y.gamma);
            });
  return fan;
}

}  // namespace liebranch
