// Acceptance checks: six end-to-end criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liebranch/cft.hpp"
#include "liebranch/oracle.hpp"

using namespace liebranch;

namespace {

struct Failure {
  std::string msg;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Failure{msg};
}

Weight eps(std::vector<Rat> v) {
  Weight w;
  w.finite = std::move(v);
  return w;
}

Embedding resolve(const std::string& g, std::vector<int> drop,
                  const std::string& a) {
  return resolve_embedding(
      regular_embedding(parse_algebra(g), std::move(drop), parse_algebra(a)));
}

EmbeddingSpec conformal_a1_a2() {
  return special_embedding(parse_algebra("A2^"), parse_algebra("A1^"),
                           {{Rat(1, 2), Rat(0), Rat(-1, 2)}});
}

std::map<std::vector<Int>, Int> depth0(const BranchingTable& t) {
  std::map<std::vector<Int>, Int> out;
  for (const BranchEntry& e : t.entries)
    if (e.depth == 0) out[e.labels] = e.coeff;
  return out;
}

// Classical slice of an affine formal element: grade-0 terms with the level
// forgotten, for comparison against a finite computation.
std::map<Weight, Int, WeightLess> grade0_slice(const FormalElement& e) {
  std::map<Weight, Int, WeightLess> out;
  for (const auto& [w, c] : e.terms)
    if (sgn_rat(w.grade) == 0) {
      Weight cl = w;
      cl.level = 0;
      out[cl] = c;
    }
  return out;
}

void criterion1() {
  EmbeddingSpec spec = regular_embedding(parse_algebra("B2"), {1, 2},
                                         parse_algebra("A1"));
  Embedding emb = resolve_embedding(spec);
  Weight mu = module_weight(emb.g, {1, 0}, 0);
  BranchResult r = branch_module(spec, mu, std::nullopt);

  require(is_zero(r.fan.gamma0) && r.fan.s_gamma0 == -1,
          "fan base point should be 0 with coefficient -1");
  require(r.fan.terms.size() == 2, "fan should have two shifted terms");
  require(a_labels(emb, r.fan.terms[0].gamma) == std::vector<Rat>{1} &&
              r.fan.terms[0].s == 2,
          "fan term at label 1 should have coefficient 2");
  require(a_labels(emb, r.fan.terms[1].gamma) == std::vector<Rat>{2} &&
              r.fan.terms[1].s == -1,
          "fan term at label 2 should have coefficient -1");

  std::map<Weight, Int, WeightLess> sing_expect;
  sing_expect[eps({Rat(1, 2), Rat(1, 2)})] = 2;
  sing_expect[eps({0, 0})] = -3;
  sing_expect[eps({-2, -2})] = 3;
  sing_expect[eps({Rat(-5, 2), Rat(-5, 2)})] = -2;
  require(r.singular.element.terms == sing_expect,
          "singular element should be the four signed orbit contributions");

  require(r.anomalous.terms.terms.at(eps({0, 0})) == 1,
          "lattice coefficient at the origin should be 1");
  auto d0 = depth0(r.table);
  require(d0.size() == 2 && d0.at({1}) == 2 && d0.at({0}) == 1,
          "the vector module should split as twice label 1 plus label 0");
}

void criterion2() {
  EmbeddingSpec spec = regular_embedding(parse_algebra("B4"), {2},
                                         parse_algebra("B2"));
  Embedding emb = resolve_embedding(spec);
  OrthogonalPair orth = orthogonal_pair(emb);
  require(orth.defect_perp == eps({-2, -2, 0, 0}),
          "complement defect should be -2(e1 + e2)");

  Weight mu = module_weight(emb.g, {0, 1, 0, 2}, 0);
  BranchResult r = branch_module(spec, mu, std::nullopt);
  require(r.singular.orbit_size == 384, "orbit should have 384 points");
  require(r.singular.selected.size() == 48, "48 orbit points should survive");

  std::map<std::vector<Int>, Int> expect{{{0, 0}, 6},  {{0, 2}, 60},
                                         {{0, 4}, 10}, {{1, 0}, 30},
                                         {{1, 2}, 40}, {{2, 0}, 19}};
  require(depth0(r.table) == expect, "branching table mismatch");
  Int total = 0;
  for (const BranchEntry& e : r.table.entries) {
    std::vector<Rat> l(e.labels.begin(), e.labels.end());
    total += e.coeff * weyl_dim(emb.a, weight_from_labels(emb.a, l));
  }
  require(total == 2772, "dimensions should sum to 2772");
}

void criterion3() {
  EmbeddingSpec spec = conformal_a1_a2();
  Embedding emb = resolve_embedding(spec);

  BranchResult vac = branch_module(spec, module_weight(emb.g, {0, 0}, 1), 6);
  require(is_zero(vac.fan.gamma0) && vac.fan.s_gamma0 == -1,
          "fan base point should be 0 with coefficient -1");
  require(vac.table.a_level == 4, "index 4 should send level 1 to level 4");
  require(vac.table.entries.size() == 2, "vacuum should split into two classes");
  require(vac.table.entries[0].labels == std::vector<Int>{0} &&
              vac.table.entries[0].depth == 0 && vac.table.entries[0].coeff == 1,
          "vacuum should contain class 0 at depth 0");
  require(vac.table.entries[1].labels == std::vector<Int>{4} &&
              vac.table.entries[1].depth == 1 && vac.table.entries[1].coeff == 1,
          "vacuum should contain class 4 at depth 1");

  for (const std::vector<Int>& labels :
       {std::vector<Int>{1, 0}, std::vector<Int>{0, 1}}) {
    BranchResult r = branch_module(spec, module_weight(emb.g, labels, 1), 6);
    require(r.table.entries.size() == 1 &&
                r.table.entries[0].labels == std::vector<Int>{2} &&
                r.table.entries[0].depth == 0 && r.table.entries[0].coeff == 1,
            "fundamental modules should branch to class 2 at depth 0");
  }

  PartitionFunction pf = assemble_partition_function(spec, 1, 6);
  require(pf.rendered ==
              "Z = |chi_(0;4;0) + chi_(4;4;0)|^2 + 2 chi_(2;4;0)^2",
          "partition function rendering mismatch: " + pf.rendered);
}

void criterion4(std::map<Weight, Int, WeightLess>* finite_singular) {
  EmbeddingSpec spec = regular_embedding(parse_algebra("B2^"), {1, 2},
                                         parse_algebra("A1^"));
  Embedding emb = resolve_embedding(spec);
  Weight mu = module_weight(emb.g, {1, 0}, 1);
  BranchResult r = branch_module(spec, mu, 12);

  require(r.table.series.at({0}) ==
              std::vector<Int>{1, 4, 8, 15, 29, 51, 85, 139, 222, 346, 530,
                               797, 1180},
          "branching function of class 0 mismatch");
  require(r.table.series.at({1}) ==
              std::vector<Int>{2, 2, 8, 12, 26, 42, 78, 120, 202, 306, 482,
                               714, 1080},
          "branching function of class 1 mismatch");

  auto chars = coset_characters(emb, mu, r.table);
  require(chars.at({0}).prefactor == Rat(5, 6),
          "coset character of class 0 should lead with q^(5/6)");
  require(chars.at({1}).prefactor == Rat(7, 12),
          "coset character of class 1 should lead with q^(7/12)");

  require(grade0_slice(r.singular.element) == *finite_singular,
          "grade-0 singular slice should match the finite computation");
}

void criterion5() {
  // Defining identity of the lattice coefficients, checked pointwise.
  auto residual_zero = [](const BranchResult& r) {
    std::vector<std::pair<Weight, Int>> shifts;
    shifts.emplace_back(r.fan.gamma0, r.fan.s_gamma0);
    for (const FanTerm& t : r.fan.terms)
      shifts.emplace_back(w_add(r.fan.gamma0, t.gamma), t.s);
    std::set<Weight, WeightLess> candidates;
    for (const auto& [w, c] : r.singular.element.terms) candidates.insert(w);
    for (const auto& [w, c] : r.anomalous.terms.terms)
      for (const auto& [gamma, s] : shifts) candidates.insert(w_sub(w, gamma));
    const auto& floor = r.anomalous.terms.min_grade;
    for (const Weight& xi : candidates) {
      if (floor && xi.grade < *floor) continue;
      Int res = 0;
      auto s_it = r.singular.element.terms.find(xi);
      if (s_it != r.singular.element.terms.end()) res += s_it->second;
      for (const auto& [gamma, s] : shifts) {
        auto k_it = r.anomalous.terms.terms.find(w_add(xi, gamma));
        if (k_it != r.anomalous.terms.terms.end()) res += s * k_it->second;
      }
      if (res != 0) return false;
    }
    return true;
  };
  for (const BranchResult& r :
       {branch_module(regular_embedding(parse_algebra("B2"), {1, 2},
                                        parse_algebra("A1")),
                      eps({1, 0}), std::nullopt),
        branch_module(regular_embedding(parse_algebra("C3"), {1},
                                        parse_algebra("C2")),
                      eps({1, 1, 0}), std::nullopt),
        branch_module(regular_embedding(parse_algebra("B2^"), {1, 2},
                                        parse_algebra("A1^")),
                      module_weight(build_root_system(parse_algebra("B2^")),
                                    {1, 0}, 1),
                      5)})
    require(residual_zero(r), "lattice residual should vanish identically");

  // Randomized agreement with the direct diagram expansion.
  struct Pool {
    std::string g, a;
    std::vector<int> drop;
  };
  std::vector<Pool> pool{{"B2", "A1", {1, 2}}, {"B4", "B2", {2}},
                         {"A3", "A2", {0, 3}}, {"A2", "A1", {0, 2}},
                         {"B4", "D4", {4}},    {"C3", "C2", {1}}};
  std::mt19937 rng(7771);
  int done = 0;
  for (int attempt = 0; attempt < 200 && done < 10; ++attempt) {
    const Pool& p = pool[rng() % pool.size()];
    EmbeddingSpec spec = regular_embedding(parse_algebra(p.g), p.drop,
                                           parse_algebra(p.a));
    Embedding emb = resolve_embedding(spec);
    std::vector<Int> labels;
    for (int i = 0; i < emb.g.rank(); ++i) labels.push_back(rng() % 3);
    Weight mu = module_weight(emb.g, labels, 0);
    if (weyl_dim(emb.g, mu) > 10000) continue;
    BranchResult engine = branch_module(spec, mu, std::nullopt);
    require(branching_equal(engine.table, brute_force_branch(emb, mu, std::nullopt)),
            "random module disagreed with the direct expansion");
    ++done;
  }
  require(done >= 10, "fewer than 10 random instances were exercised");

  // The affine flagship cases agree with the direct expansion per grade.
  {
    EmbeddingSpec sp = conformal_a1_a2();
    Embedding emb = resolve_embedding(sp);
    for (const std::vector<Int>& labels :
         {std::vector<Int>{0, 0}, std::vector<Int>{1, 0}, std::vector<Int>{0, 1}}) {
      Weight mu = module_weight(emb.g, labels, 1);
      require(branching_equal(branch_module(sp, mu, 6).table,
                              brute_force_branch(emb, mu, 6)),
              "conformal pair disagreed with the direct expansion");
    }
    EmbeddingSpec reg = regular_embedding(parse_algebra("B2^"), {1, 2},
                                          parse_algebra("A1^"));
    Embedding remb = resolve_embedding(reg);
    Weight rmu = module_weight(remb.g, {1, 0}, 1);
    require(branching_equal(branch_module(reg, rmu, 6).table,
                            brute_force_branch(remb, rmu, 6)),
            "coset pair disagreed with the direct expansion");
  }

  // Full-rank degeneration: the singular element is the projected orbit.
  {
    Embedding emb = resolve("B4", {4}, "D4");
    OrthogonalPair orth = orthogonal_pair(emb);
    Weight mu = module_weight(emb.g, {0, 1, 0, 2}, 0);
    SingularElement se = build_singular_element(emb, orth, mu, std::nullopt);
    require(se.selected.size() == se.orbit_size,
            "full-rank subalgebra should keep the whole orbit");
    for (const SingularTerm& t : se.selected)
      require(t.dim_perp == 1 &&
                  t.exponent == emb.project(w_sub(t.orbit_point, emb.g.rho)),
              "full-rank singular term should be the projected orbit point");
  }

  // Branching to the algebra itself is the identity map.
  {
    BranchResult r = branch_module(
        regular_embedding(parse_algebra("B2"), {}, parse_algebra("B2")),
        module_weight(build_root_system(parse_algebra("B2")), {2, 1}, 0),
        std::nullopt);
    require(r.table.entries.size() == 1 && r.table.entries[0].coeff == 1 &&
                r.table.entries[0].labels == std::vector<Int>{2, 1},
            "branching to the full algebra should be the identity");
  }

  // Cutoff stability of the affine series.
  {
    EmbeddingSpec reg = regular_embedding(parse_algebra("B2^"), {1, 2},
                                          parse_algebra("A1^"));
    Weight mu = module_weight(build_root_system(parse_algebra("B2^")), {1, 0}, 1);
    BranchResult shallow = branch_module(reg, mu, 4);
    BranchResult deep = branch_module(reg, mu, 8);
    for (const auto& [labels, row] : shallow.table.series) {
      const auto& drow = deep.table.series.at(labels);
      for (size_t d = 0; d < row.size(); ++d)
        require(row[d] == drow[d], "series changed under a deeper cutoff");
    }
  }

  // The fan is the exact quotient: multiplying back by the subalgebra
  // denominator returns the projected numerator.
  {
    Embedding emb = resolve("B4", {2}, "B2");
    OrthogonalPair orth = orthogonal_pair(emb);
    FormalElement prod = fan_product(emb, orth, std::nullopt);
    FormalElement den = fe_one(emb.g.ambient, std::nullopt);
    for (const Weight& beta : emb.a.positive) fe_mul_binomial(den, beta, 1);
    FormalElement lhs = fe_mul(prod, den);
    FormalElement num = fe_one(emb.g.ambient, std::nullopt);
    std::set<Weight, WeightLess> perp(orth.a_perp.positive.begin(),
                                      orth.a_perp.positive.end());
    for (const Weight& alpha : emb.g.positive)
      if (!perp.count(alpha)) fe_mul_binomial(num, emb.project(alpha), 1);
    for (auto& [w, c] : num.terms) c = -c;
    require(fe_equal(lhs, num), "fan times denominator should be the numerator");

    // And the complement aligns with the expected root system.
    std::set<Weight, WeightLess> expect{eps({1, -1, 0, 0}), eps({1, 1, 0, 0}),
                                        eps({1, 0, 0, 0}), eps({0, 1, 0, 0})};
    require(perp == expect, "complement roots of the rank-two pair mismatch");
  }
}

void criterion6() {
  EmbeddingSpec spec = conformal_a1_a2();
  Embedding emb = resolve_embedding(spec);
  OrthogonalPair orth = orthogonal_pair(emb);
  ConformalReport rep = conformal_check(emb, orth, 1);
  require(rep.conformal, "pair should be conformal at level 1");
  require(rep.c_g == 2 && rep.c_a == 2, "both central charges should equal 2");
  require(rep.perp_roots_empty, "no roots should project to zero");

  // Conformal pairs decompose level-1 modules into finitely many classes:
  // nothing appears beyond depth 1 however deep the window reaches.
  for (const std::vector<Int>& labels :
       {std::vector<Int>{0, 0}, std::vector<Int>{1, 0}, std::vector<Int>{0, 1}}) {
    Weight mu = module_weight(emb.g, labels, 1);
    BranchResult r = branch_module(spec, mu, 8);
    Int total = 0;
    for (const BranchEntry& e : r.table.entries) {
      require(e.depth <= 1, "class found below depth 1 in a conformal pair");
      total += e.coeff;
    }
    require(total <= 2, "conformal branching should be finite and small");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 = no limit
    std::function<void()> run;
  };

  std::map<Weight, Int, WeightLess> finite_singular;
  {
    Embedding emb = resolve("B2", {1, 2}, "A1");
    OrthogonalPair orth = orthogonal_pair(emb);
    Weight mu = module_weight(emb.g, {1, 0}, 0);
    for (const auto& [w, c] :
         build_singular_element(emb, orth, mu, std::nullopt).element.terms)
      finite_singular[w] = c;
  }

  std::vector<Criterion> criteria{
      {1, "B2 vector module under the long-root A1", 1.0, criterion1},
      {2, "B4 module [0,1,0,2] under B2", 10.0, criterion2},
      {3, "conformal A1 in A2 at level one", 30.0, criterion3},
      {4, "level-one branching functions of B2 under affine A1", 300.0,
       [&] { criterion4(&finite_singular); }},
      {5, "structural properties and independent cross-checks", 0.0, criterion5},
      {6, "conformal pair diagnostics", 0.0, criterion6},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      c.run();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.msg;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (verdict == "PASS" && c.limit_seconds > 0 && secs > c.limit_seconds) {
      verdict = "FAIL";
      std::ostringstream os;
      os << "exceeded the " << c.limit_seconds << "s budget";
      detail = os.str();
    }
    if (verdict == "FAIL") ++failures;
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", verdict.c_str(), c.number,
                c.title.c_str(), secs, detail.empty() ? "" : " - ",
                detail.c_str());
  }
  return failures;
}
