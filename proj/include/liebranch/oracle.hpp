#pragma once

#include <map>
#include <optional>

#include "liebranch/branch.hpp"

namespace liebranch {

struct WeightDiagram {
  Weight mu;
  std::map<Weight, Int, WeightLess> mult;
  std::optional<int> cutoff;
};

// Multiplicities of L(mu) by Freudenthal's recursion, exact.  For affine
// systems cutoff bounds the depth below mu and is required.  max_entries
// caps the candidate set; exceeding it is an error.
WeightDiagram freudenthal_multiplicities(const RootSystem& rs, const Weight& mu,
                                         std::optional<int> cutoff,
                                         size_t max_entries = 1000000);

// Independent branching computation: expand the g-module weight diagram,
// project it to the a side, and peel off complete a-module diagrams from
// the top down.  Slow but free of the recurrence machinery.
BranchingTable brute_force_branch(const Embedding& emb, const Weight& mu,
                                  std::optional<int> cutoff,
                                  size_t max_entries = 1000000);

}  // namespace liebranch
