#pragma once

#include <cstddef>
#include <vector>

#include "tropgroups/circle_bundles.hpp"
#include "tropgroups/root_data.hpp"
#include "tropgroups/trop_group.hpp"
#include "tropgroups/weyl.hpp"

namespace tropgroups {

// Standard parabolic P = M^_R x| W_P for a set D_P of simple indices.
struct ParabolicSubgroup {
  std::vector<std::size_t> simple_subset;  // sorted
  Subgroup weyl;                           // W_P
  FundamentalGroup pi1;                    // M^ / <alpha^_i : i in D_P>
};

ParabolicSubgroup make_parabolic(const TropicalGroup& g, std::vector<std::size_t> simple_subset);
ParabolicSubgroup full_parabolic(const TropicalGroup& g);

// phi_P(lambda) = lambda - sum_{i in D_P} c_i alpha^_i with <alpha_j, phi_P> = 0
// for j in D_P.
QVec slope(const TropicalGroup& g, const ParabolicSubgroup& p, const QVec& lambda);
QVec slope(const TropicalGroup& g, const ParabolicSubgroup& p, const ZVec& lambda);

// mu - lambda is a nonnegative combination of the simple coroots.
bool dominance_leq(const RootDatum& phi, const QVec& lambda, const QVec& mu);
bool dominance_less(const RootDatum& phi, const QVec& lambda, const QVec& mu);

struct Reduction {
  FundamentalGroupElement degree;  // in pi_1(P)
  ZVec lift;                       // v . m for the least v producing this class
  std::size_t v = 0;
};

// One entry per class, ordered by the least v producing it.
std::vector<Reduction> reduction_degrees(const CircleCocycle& c, const ParabolicSubgroup& p);

struct StabilityViolation {
  std::vector<std::size_t> simple_subset;
  ZVec lambda_p;
  QVec slope_p;
  QVec slope_g;
  bool strict_only = false;  // slope_p == slope_g: breaks stability only
};

struct StabilityReport {
  bool semistable = true;
  bool stable = true;
  std::vector<StabilityViolation> violations;
};

StabilityReport check_stability(const CircleCocycle& c);
bool is_semistable(const CircleCocycle& c);
bool is_stable(const CircleCocycle& c);

// Image of lambda in pi_1(G^ad) = prod Z/n_i, one entry per A_{n_i - 1}
// factor. Throws HypothesisViolation if G is not of product-A type.
ZVec adjoint_degree(const TropicalGroup& g, const ZVec& lambda);
bool is_stable_degree(const TropicalGroup& g, const ZVec& lambda);

// D_P = {i : <omega_i, phi_G(lambda) - lambda> not integral}.
ParabolicSubgroup minimal_parabolic_for_degree(const TropicalGroup& g, const ZVec& lambda);

}  // namespace tropgroups
