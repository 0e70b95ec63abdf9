#pragma once

#include <map>
#include <string>
#include <vector>

#include "liebranch/branch.hpp"

namespace liebranch {

// Sugawara central charge k dim(g) / (k + h_dual) of the classical series
// underlying spec, at the given level.
Rat central_charge(const AlgebraSpec& spec, const Rat& level);

struct ConformalReport {
  bool conformal = false;
  Rat c_g, c_a;
  Rat x_e;
  bool perp_roots_empty = false;
};

// A pair (g at level k, embedded a at level x_e k) is conformal exactly when
// the two central charges agree.
ConformalReport conformal_check(const Embedding& emb, const OrthogonalPair& orth,
                                const Rat& level);

// Modular anomaly h - c/24 of the highest-weight module with the given
// classical labels, in the normalization where short roots have length
// squared 2.
Rat modular_anomaly(const AlgebraSpec& spec, const Rat& level,
                    const std::vector<Rat>& labels);

struct QSeries {
  Rat prefactor;             // leading q-exponent
  std::vector<Int> coeffs;   // integer coefficients from q^prefactor up
};

// Coset characters q^{m_mu - m_nu} b_nu(q), one per branching class.
std::map<std::vector<Int>, QSeries> coset_characters(const Embedding& emb,
                                                     const Weight& mu,
                                                     const BranchingTable& table);

struct PartitionFunction {
  std::vector<std::vector<Int>> classes;  // a-class labels at level x_e k
  // Per g-module class multiplicity vectors (total over depths).
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> modules;
  std::vector<std::vector<Int>> mass;     // sum over modules of n n^T
  std::string rendered;
  Int g_level = 0, a_level = 0;
};

// Diagonal modular invariant of g at the given level, re-expressed through
// the characters of the embedded a.  Requires a conformal pair.
PartitionFunction assemble_partition_function(const EmbeddingSpec& spec,
                                              const Int& level, int cutoff);

std::string class_name(const std::vector<Int>& labels, const Int& level);

}  // namespace liebranch
