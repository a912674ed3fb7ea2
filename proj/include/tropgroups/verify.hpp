#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tropgroups/json_io.hpp"

namespace tropgroups {

struct SuiteCase {
  Json report;
  bool pass = false;
};

// Least Weyl element whose permutation is one full cycle.
std::optional<std::size_t> full_cycle_element(const TropicalGroup& g);

// Indecomposable-class component of SL_n: torus rank 0 and n discrete points.
SuiteCase verify_sl_count(int n);
// Indecomposable-class component of PGL_n: invariant factors [n].
SuiteCase verify_pgl_count(int n);
// GL_n with an n-cycle monodromy and degree d, against its determinant in GL_1.
SuiteCase verify_det_homeo(int n, int d, std::uint64_t seed, int samples = 500);
// relative_weyl_check over all product-A parabolics and indecomposable w.
SuiteCase verify_relative_weyl(Family family, int n);

}  // namespace tropgroups
