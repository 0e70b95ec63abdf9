#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liebranch/cft.hpp"

using namespace liebranch;

namespace {

EmbeddingSpec a1_in_a2(bool affine) {
  return special_embedding(parse_algebra(affine ? "A2^" : "A2"),
                           parse_algebra(affine ? "A1^" : "A1"),
                           {{Rat(1, 2), Rat(0), Rat(-1, 2)}});
}

}  // namespace

TEST_CASE("Sugawara central charges") {
  CHECK(central_charge(parse_algebra("A2^"), 1) == 2);
  CHECK(central_charge(parse_algebra("A1^"), 4) == 2);
  CHECK(central_charge(parse_algebra("B2^"), 1) == Rat(5, 2));
  CHECK(central_charge(parse_algebra("A1^"), 1) == 1);
  CHECK(central_charge(parse_algebra("A1^"), 0) == 0);
  // Classical names carry the same data.
  CHECK(central_charge(parse_algebra("B2"), 1) == Rat(5, 2));
}

TEST_CASE("conformal pairs have equal central charges") {
  Embedding emb = resolve_embedding(a1_in_a2(true));
  ConformalReport rep = conformal_check(emb, orthogonal_pair(emb), 1);
  CHECK(rep.conformal);
  CHECK(rep.c_g == 2);
  CHECK(rep.c_a == 2);
  CHECK(rep.x_e == 4);
  CHECK(rep.perp_roots_empty);
  // The same pair at level two is not conformal.
  ConformalReport rep2 = conformal_check(emb, orthogonal_pair(emb), 2);
  CHECK_FALSE(rep2.conformal);

  EmbeddingSpec reg = regular_embedding(parse_algebra("B2^"), {1, 2},
                                        parse_algebra("A1^"));
  Embedding remb = resolve_embedding(reg);
  ConformalReport rrep = conformal_check(remb, orthogonal_pair(remb), 1);
  CHECK_FALSE(rrep.conformal);
  CHECK(rrep.c_g == Rat(5, 2));
  CHECK(rrep.c_a == 1);
}

TEST_CASE("modular anomalies of small modules") {
  CHECK(modular_anomaly(parse_algebra("B2^"), 1, {1, 0}) == Rat(19, 24));
  CHECK(modular_anomaly(parse_algebra("A1^"), 1, {0}) == Rat(-1, 24));
  CHECK(modular_anomaly(parse_algebra("A1^"), 1, {1}) == Rat(5, 24));
  // The vacuum anomaly is -c/24.
  CHECK(modular_anomaly(parse_algebra("A2^"), 1, {0, 0}) == Rat(-1, 12));
  CHECK(modular_anomaly(parse_algebra("A1^"), 4, {0}) == Rat(-1, 12));
}

TEST_CASE("coset characters attach anomaly prefactors to the series") {
  EmbeddingSpec spec = regular_embedding(parse_algebra("B2^"), {1, 2},
                                         parse_algebra("A1^"));
  Embedding emb = resolve_embedding(spec);
  Weight mu = module_weight(emb.g, {1, 0}, 1);
  BranchResult r = branch_module(spec, mu, 4);
  auto chars = coset_characters(emb, mu, r.table);
  REQUIRE(chars.size() == 2);
  const QSeries& b0 = chars.at({0});
  CHECK(b0.prefactor == Rat(5, 6));
  CHECK(b0.coeffs == std::vector<Int>{1, 4, 8, 15, 29});
  const QSeries& b1 = chars.at({1});
  CHECK(b1.prefactor == Rat(7, 12));
  CHECK(b1.coeffs == std::vector<Int>{2, 2, 8, 12, 26});
}

TEST_CASE("class names") {
  CHECK(class_name({2}, 4) == "(2;4;0)");
  CHECK(class_name({0, 1}, 3) == "(0,1;3;0)");
}

TEST_CASE("diagonal invariant of A2 level one through the conformal A1") {
  PartitionFunction pf = assemble_partition_function(a1_in_a2(true), 1, 6);
  CHECK(pf.g_level == 1);
  CHECK(pf.a_level == 4);
  REQUIRE(pf.classes.size() == 5);
  for (Int l = 0; l <= 4; ++l)
    CHECK(pf.classes[l.get_ui()] == std::vector<Int>{l});
  REQUIRE(pf.modules.size() == 3);
  CHECK(pf.modules[0].first == std::vector<Int>{0, 0});
  CHECK(pf.modules[0].second == std::vector<Int>{1, 0, 0, 0, 1});
  CHECK(pf.modules[1].first == std::vector<Int>{0, 1});
  CHECK(pf.modules[1].second == std::vector<Int>{0, 0, 1, 0, 0});
  CHECK(pf.modules[2].first == std::vector<Int>{1, 0});
  CHECK(pf.modules[2].second == std::vector<Int>{0, 0, 1, 0, 0});

  // Mass matrix: vacuum block plus a doubled middle class, symmetric.
  std::vector<std::vector<Int>> expect(5, std::vector<Int>(5, 0));
  expect[0][0] = expect[0][4] = expect[4][0] = expect[4][4] = 1;
  expect[2][2] = 2;
  CHECK(pf.mass == expect);
  CHECK(pf.rendered ==
        "Z = |chi_(0;4;0) + chi_(4;4;0)|^2 + 2 chi_(2;4;0)^2");
}

TEST_CASE("non-conformal pairs cannot form the invariant") {
  EmbeddingSpec spec = regular_embedding(parse_algebra("B2^"), {1, 2},
                                         parse_algebra("A1^"));
  CHECK_THROWS(assemble_partition_function(spec, 1, 4));
}
