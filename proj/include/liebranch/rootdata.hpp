#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liebranch/weight.hpp"

namespace liebranch {

enum class Series { A, B, C, D };

struct AlgebraSpec {
  Series series = Series::A;
  int rank = 0;
  bool affine = false;
};

// Grammar: "A3", "B2", "B4^" (trailing ^ marks the untwisted affine extension).
AlgebraSpec parse_algebra(const std::string& s);
std::string algebra_str(const AlgebraSpec& spec);
bool spec_equal(const AlgebraSpec& x, const AlgebraSpec& y);

// Root data in an ambient orthogonal coordinate system.  One representation
// serves standard algebras, subalgebras embedded in a larger ambient space,
// and orthogonal complements (which may be reducible or empty).  Affine
// systems store the classical data and expose delta / alpha0 parametrically;
// weights carry (level, grade) with grade = the delta-coefficient, so module
// weights mu - n*delta sit at grade -n.
struct RootSystem {
  std::optional<AlgebraSpec> spec;
  bool affine = false;
  int ambient = 0;
  std::vector<Weight> simple;    // classical simple roots
  std::vector<Weight> positive;  // classical positive roots
  Weight rho;                    // classical Weyl vector; level = h_dual when affine
  Weight theta;                  // highest root (set for irreducible systems)
  bool has_theta = false;
  Int h_dual = 0;
  Int dim_alg = 0;               // dimension of the classical algebra
  Rat cl_scale = 1;              // 2/(theta,theta)_dot, normalizes theta^2 = 2
  int imaginary_mult = 0;        // multiplicity of n*delta (affine only)

  int rank() const { return static_cast<int>(simple.size()); }
};

RootSystem build_root_system(const AlgebraSpec& spec);

// Assemble root data from an explicit positive system in an ambient space.
// Simple roots are extracted by the indecomposability sieve; rho is the
// half-sum; theta, h_dual, dim and cl_scale are filled when the system is
// irreducible (they are meaningless for products and left defaulted there).
RootSystem root_system_from_positive(int ambient, std::vector<Weight> positive,
                                     bool affine, int imaginary_mult);

Weight delta_root(const RootSystem& rs);  // (0; 0; 1)
Weight alpha0(const RootSystem& rs);      // (-theta; 0; 1)

// Invariant bilinear form: cl_scale * dot(finite) + level*grade' + grade*level'.
Rat ip(const RootSystem& rs, const Weight& x, const Weight& y);
// <x, alpha^vee> = 2 (x, alpha) / (alpha, alpha) for a real root alpha.
Rat pair_coroot(const RootSystem& rs, const Weight& x, const Weight& alpha);
Weight reflect(const RootSystem& rs, const Weight& x, const Weight& alpha);

// Orthogonal projector onto the span of the given finite weights, and its
// action on the finite part of a weight (level and grade pass through).
Mat span_projector(int ambient, const std::vector<Weight>& basis);
Weight apply_projector(const Mat& p, const Weight& w);

// Labels against the classical simple roots, in their stored order.
std::vector<Rat> dynkin_labels(const RootSystem& rs, const Weight& x);
// Affine node-0 label: level - <finite part, theta^vee>.
Rat affine_zero_label(const RootSystem& rs, const Weight& x);
// Inverse of dynkin_labels on the classical weight lattice.  For A-series
// standard systems the traceless representative is returned.
Weight weight_from_labels(const RootSystem& rs, const std::vector<Rat>& labels);

bool is_dominant(const RootSystem& rs, const Weight& x);
bool is_dominant_integral(const RootSystem& rs, const Weight& x);

// Classical Weyl dimension formula; exact, result checked to be an integer.
Int weyl_dim(const RootSystem& rs, const Weight& mu);
// |W| of the classical part, computed as the orbit size of rho.
Int weyl_order(const RootSystem& rs);

struct SignedOrbitPoint {
  Weight weight;
  int sign = 1;
};

// Signed Weyl orbit of a strictly dominant start (callers pass mu + rho).
// Descending BFS over simple reflections (alpha0 included when affine); for
// affine systems grade_floor bounds the delta-coefficient from below and is
// mandatory.  Points come back sorted by the structural weight order.
std::vector<SignedOrbitPoint> weyl_orbit_signed(const RootSystem& rs,
                                                const Weight& start,
                                                std::optional<Rat> grade_floor);

// All dominant integral weights of the given level of an affine system,
// ordered lexicographically by label vector.
std::vector<Weight> dominant_weights_at_level(const RootSystem& rs, const Int& level);

}  // namespace liebranch
