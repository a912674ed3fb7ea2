#include "tropgroups/perm.hpp"

#include <stdexcept>

namespace tropgroups {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation degree mismatch");
  Perm r(s.size());
  for (std::size_t j = 0; j < t.size(); ++j) r[j] = s[t[j]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[p[j]] = static_cast<int>(j);
  return r;
}

int sign(const Perm& p) {
  int s = 1;
  for (const auto& c : cycles(p))
    if (c.size() % 2 == 0) s = -s;
  return s;
}

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_full_cycle(const Perm& p) { return !p.empty() && cycles(p).size() == 1; }

std::string cycle_string(const Perm& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s;
}

}  // namespace tropgroups
