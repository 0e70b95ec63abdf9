#pragma once

#include <map>
#include <string>

#include "liebranch/cft.hpp"
#include "liebranch/oracle.hpp"

namespace liebranch {

// Parse a weight from JSON: either {"labels":[...]} (+"level" when affine)
// or {"eps":[...], "level":..., "grade":...} with grade counted as depth
// below the top (so the stored grade is its negation).
Weight weight_from_json_text(const RootSystem& rs, const std::string& text);

std::string fan_table(const Embedding& emb, const OrthogonalPair& orth,
                      const Fan& fan);
std::string fan_json(const Embedding& emb, const OrthogonalPair& orth,
                     const Fan& fan);
std::string fan_grid(const Embedding& emb, const Fan& fan);

std::string singular_table(const Embedding& emb, const Weight& mu,
                           const SingularElement& se);
std::string singular_json(const Embedding& emb, const Weight& mu,
                          const SingularElement& se);
std::string singular_grid(const Embedding& emb, const Weight& mu,
                          const SingularElement& se);

std::string branch_table(const BranchResult& res, const Weight& mu);
std::string branch_json(const BranchResult& res, const Weight& mu);
std::string branch_qseries(const BranchResult& res, const Weight& mu);

std::string verify_report(const BranchResult& res, const Weight& mu,
                          const BranchingTable& oracle, bool match);

std::string coset_report(const BranchResult& res, const Weight& mu,
                         const std::map<std::vector<Int>, QSeries>& chars,
                         const ConformalReport& conf);
std::string coset_json(const BranchResult& res, const Weight& mu,
                       const std::map<std::vector<Int>, QSeries>& chars,
                       const ConformalReport& conf);

std::string invariant_report(const PartitionFunction& pf,
                             const ConformalReport& conf);
std::string invariant_json(const PartitionFunction& pf,
                           const ConformalReport& conf);

}  // namespace liebranch
