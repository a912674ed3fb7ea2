#pragma once

#include <string>
#include <vector>

namespace tropgroups {

// 0-based permutation: p[j] is the image of j.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_permutation(const Perm& p);

// (compose(s, t))(j) = s(t(j)).
Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& p);
int sign(const Perm& p);

// Cycles including fixed points; each starts at its least element,
// lists follow p, and cycles are ordered by their starting point.
std::vector<std::vector<int>> cycles(const Perm& p);

bool is_full_cycle(const Perm& p);

// 1-based cycle notation, e.g. "(1 2)(3)".
std::string cycle_string(const Perm& p);

}  // namespace tropgroups
