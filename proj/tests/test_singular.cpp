#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "liebranch/branch.hpp"
#include "liebranch/singular.hpp"

using namespace liebranch;

namespace {

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

}  // namespace

TEST_CASE("singular element of the B2 vector module under the long-root A1") {
  Embedding emb = resolve("B2", {1, 2}, "A1");
  OrthogonalPair orth = orthogonal_pair(emb);
  Weight mu = module_weight(emb.g, {1, 0}, 0);
  SingularElement se = build_singular_element(emb, orth, mu, std::nullopt);
  CHECK(se.orbit_size == 8);
  REQUIRE(se.selected.size() == 4);
  // Exponent against signed complement dimension, keyed by eps coordinates.
  std::map<Weight, Int, WeightLess> expect;
  expect[eps({Rat(1, 2), Rat(1, 2)})] = 2;
  expect[eps({0, 0})] = -3;
  expect[eps({-2, -2})] = 3;
  expect[eps({Rat(-5, 2), Rat(-5, 2)})] = -2;
  CHECK(se.element.terms == expect);
  for (const SingularTerm& t : se.selected) {
    CHECK(t.dim_perp >= 1);
    // Zero complement defect here, so the reported a-weight is the exponent.
    CHECK(t.mu_a == t.exponent);
  }
}

TEST_CASE("orbit selection for B2 inside B4") {
  Embedding emb = resolve("B4", {2}, "B2");
  OrthogonalPair orth = orthogonal_pair(emb);
  Weight mu = module_weight(emb.g, {0, 1, 0, 2}, 0);
  SingularElement se = build_singular_element(emb, orth, mu, std::nullopt);
  CHECK(se.orbit_size == 384);
  CHECK(se.selected.size() == 48);
  for (const SingularTerm& t : se.selected) {
    // Retained complement weights are dominant integral for the complement.
    for (const Rat& l : dynkin_labels(orth.a_perp, t.mu_perp)) {
      CHECK(is_int(l));
      CHECK(sgn_rat(l) >= 0);
    }
    CHECK(t.dim_perp >= 1);
    // The reported a-weight differs from the exponent by the defect.
    Weight shifted = t.exponent;
    for (int i = 0; i < emb.g.ambient; ++i)
      shifted.finite[i] += orth.defect_perp.finite[i];
    CHECK(t.mu_a == shifted);
  }
}

TEST_CASE("trivial embedding keeps the whole signed orbit") {
  Embedding emb = resolve("B2", {}, "B2");
  OrthogonalPair orth = orthogonal_pair(emb);
  Weight mu = module_weight(emb.g, {0, 0}, 0);
  SingularElement se = build_singular_element(emb, orth, mu, std::nullopt);
  CHECK(se.orbit_size == 8);
  CHECK(se.selected.size() == 8);
  int plus = 0, minus = 0;
  for (const SingularTerm& t : se.selected) {
    CHECK(t.dim_perp == 1);
    (t.sign > 0 ? plus : minus)++;
    // exponent = u(rho) - rho.
    CHECK(t.exponent == w_sub(t.orbit_point, emb.g.rho));
  }
  CHECK(plus == 4);
  CHECK(minus == 4);
}

TEST_CASE("full-rank subalgebras project the orbit termwise") {
  // Empty complement root system: every orbit point survives with unit
  // dimension and the exponent is just the projected shifted point.
  Embedding emb = resolve("B4", {4}, "D4");
  OrthogonalPair orth = orthogonal_pair(emb);
  Weight mu = module_weight(emb.g, {0, 1, 0, 2}, 0);
  SingularElement se = build_singular_element(emb, orth, mu, std::nullopt);
  CHECK(se.orbit_size == 384);
  CHECK(se.selected.size() == 384);
  for (const SingularTerm& t : se.selected) {
    CHECK(t.dim_perp == 1);
    CHECK(t.exponent == emb.project(w_sub(t.orbit_point, emb.g.rho)));
  }

  // Corank one, still no complement roots: same story after projection.
  Embedding emb2 = resolve("A3", {0, 3}, "A2");
  OrthogonalPair orth2 = orthogonal_pair(emb2);
  Weight mu2 = module_weight(emb2.g, {1, 0, 1}, 0);
  SingularElement se2 = build_singular_element(emb2, orth2, mu2, std::nullopt);
  CHECK(se2.orbit_size == 24);
  CHECK(se2.selected.size() == 24);
  for (const SingularTerm& t : se2.selected) CHECK(t.dim_perp == 1);
}

TEST_CASE("affine singular element carries the finite one at grade zero") {
  Embedding aff = resolve("B2^", {1, 2}, "A1^");
  OrthogonalPair aorth = orthogonal_pair(aff);
  Weight mu = module_weight(aff.g, {1, 0}, 1);
  SingularElement se = build_singular_element(aff, aorth, mu, 3);

  Embedding fin = resolve("B2", {1, 2}, "A1");
  OrthogonalPair forth = orthogonal_pair(fin);
  Weight fmu = module_weight(fin.g, {1, 0}, 0);
  SingularElement fse = build_singular_element(fin, forth, fmu, std::nullopt);

  std::map<Weight, Int, WeightLess> slice;
  for (const auto& [w, c] : se.element.terms) {
    CHECK(w.grade >= -3);
    CHECK(w.grade <= 0);
    if (sgn_rat(w.grade) == 0) {
      Weight cl = w;
      cl.level = 0;
      slice[cl] = c;
    }
  }
  std::map<Weight, Int, WeightLess> fslice;
  for (const auto& [w, c] : fse.element.terms) fslice[w] = c;
  CHECK(slice == fslice);

  // Deeper cutoffs only extend the element downward.
  SingularElement deep = build_singular_element(aff, aorth, mu, 6);
  for (const auto& [w, c] : se.element.terms) {
    REQUIRE(deep.element.terms.count(w));
    CHECK(deep.element.terms.at(w) == c);
  }
}

TEST_CASE("non-dominant module weights are rejected") {
  Embedding emb = resolve("B2", {1, 2}, "A1");
  OrthogonalPair orth = orthogonal_pair(emb);
  Weight bad = eps({Rat(-1), Rat(0)});
  CHECK_THROWS(build_singular_element(emb, orth, bad, std::nullopt));
  Weight frac = eps({Rat(1, 3), Rat(0)});
  CHECK_THROWS(build_singular_element(emb, orth, frac, std::nullopt));
}
