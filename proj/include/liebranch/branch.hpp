#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liebranch/fan.hpp"
#include "liebranch/singular.hpp"

namespace liebranch {

// Coefficients k_xi on the a-weight lattice, the unique solution of
//   s(gamma0) k_xi = -( singular(xi - gamma0) + sum_gamma s(gamma+gamma0) k_{xi+gamma} ).
struct AnomalousTable {
  FormalElement terms;
  std::optional<int> cutoff;
};

AnomalousTable solve_recurrence(const Embedding& emb,
                                const SingularElement& singular, const Fan& fan);

struct BranchEntry {
  std::vector<Int> labels;  // classical a-labels
  Int depth = 0;            // grade offset below the top of the module
  Int coeff = 0;
  Weight nu;
};

struct BranchingTable {
  std::vector<BranchEntry> entries;  // sorted by depth, then labels
  // Affine: per-class coefficient series indexed by depth (branching
  // functions); the class key is the classical label vector.
  std::map<std::vector<Int>, std::vector<Int>> series;
  std::vector<std::string> diagnostics;
  Int a_level = 0;
  std::optional<int> cutoff;
};

bool branching_equal(const BranchingTable& x, const BranchingTable& y);

BranchingTable extract_branching(const Embedding& emb, const Weight& mu,
                                 const AnomalousTable& anomalous);

struct BranchResult {
  Embedding emb;
  OrthogonalPair orth;
  FormalElement fan_product_element;
  Fan fan;
  SingularElement singular;
  AnomalousTable anomalous;
  BranchingTable table;
};

// Full pipeline for one module.  The variant taking a resolved embedding
// and fan lets callers reuse the module-independent pieces.
BranchResult branch_module(const EmbeddingSpec& spec, const Weight& mu,
                           std::optional<int> cutoff);
BranchResult branch_module(const Embedding& emb, const OrthogonalPair& orth,
                           const FormalElement& fan_element, const Fan& fan,
                           const Weight& mu, std::optional<int> cutoff);

// Convenience: dominant integral module weight from classical labels.
Weight module_weight(const RootSystem& g, const std::vector<Int>& labels,
                     const Int& level);

}  // namespace liebranch
