#include "tropgroups/stability.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropgroups/checked.hpp"

namespace tropgroups {

namespace {

std::vector<std::size_t> all_simple(const RootDatum& phi) {
  std::vector<std::size_t> s(phi.semisimple_rank());
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

QMatrix simple_coroot_matrix(const RootDatum& phi) {
  std::vector<QVec> cols;
  for (std::size_t i = 0; i < phi.semisimple_rank(); ++i) cols.push_back(to_rational(phi.simple_coroot(i)));
  return QMatrix::from_columns(cols, phi.rank);
}

}  // namespace

ParabolicSubgroup make_parabolic(const TropicalGroup& g, std::vector<std::size_t> simple_subset) {
  const auto& phi = g.datum();
  std::sort(simple_subset.begin(), simple_subset.end());
  simple_subset.erase(std::unique(simple_subset.begin(), simple_subset.end()), simple_subset.end());
  for (auto i : simple_subset)
    if (i >= phi.semisimple_rank()) throw std::out_of_range("simple index out of range");
  ParabolicSubgroup p;
  p.weyl = parabolic_subgroup(g.weyl(), simple_subset);
  p.pi1 = parabolic_fundamental_group(phi, simple_subset);
  p.simple_subset = std::move(simple_subset);
  return p;
}

ParabolicSubgroup full_parabolic(const TropicalGroup& g) { return make_parabolic(g, all_simple(g.datum())); }

QVec slope(const TropicalGroup& g, const ParabolicSubgroup& p, const QVec& lambda) {
  const auto& phi = g.datum();
  const auto& d = p.simple_subset;
  if (d.empty()) return lambda;
  QMatrix a(d.size(), d.size());
  QVec rhs(d.size());
  for (std::size_t r = 0; r < d.size(); ++r) {
    QVec root = to_rational(phi.simple_root(d[r]));
    rhs[r] = phi.pair(root, lambda);
    for (std::size_t c = 0; c < d.size(); ++c) a(r, c) = phi.pair(phi.simple_root(d[r]), phi.simple_coroot(d[c]));
  }
  auto inv = inverse(a);
  if (!inv) throw std::logic_error("Cartan matrix of a parabolic is singular");
  QVec coeff = mat_apply(*inv, rhs);
  QVec out = lambda;
  for (std::size_t i = 0; i < d.size(); ++i) out = sub(out, scale(coeff[i], to_rational(phi.simple_coroot(d[i]))));
  return out;
}

QVec slope(const TropicalGroup& g, const ParabolicSubgroup& p, const ZVec& lambda) {
  return slope(g, p, to_rational(lambda));
}

bool dominance_leq(const RootDatum& phi, const QVec& lambda, const QVec& mu) {
  QVec diff = sub(mu, lambda);
  if (is_zero(diff)) return true;
  QMatrix c = simple_coroot_matrix(phi);
  auto coeff = solve(c, diff);
  if (!coeff || mat_apply(c, *coeff) != diff) return false;
  return std::all_of(coeff->begin(), coeff->end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool dominance_less(const RootDatum& phi, const QVec& lambda, const QVec& mu) {
  return lambda != mu && dominance_leq(phi, lambda, mu);
}

// A reduction of c to P is a gauge-equivalent cocycle (m', alpha', w') with
// w' in W_P. Gauging by (k, beta, v) gives w' = v w v^{-1} and
// m' = k + v m - w' k. For w' in W_P, w' k - k lies in <alpha^_i : i in D_P>
// (each simple reflection s_i moves k by a multiple of alpha^_i), so
// [m']_P = [v m]_P. Any further gauge inside P keeps w' in W_P and, by the
// same argument together with W_P acting trivially on pi_1(P), keeps the
// class. Hence the reduction degrees are exactly {[v m]_P : v w v^{-1} in W_P}.
std::vector<Reduction> reduction_degrees(const CircleCocycle& c, const ParabolicSubgroup& p) {
  const auto& W = c.parent->weyl();
  std::vector<Reduction> out;
  std::set<FundamentalGroupElement> seen;
  for (std::size_t v = 0; v < W.order(); ++v) {
    if (!contains(p.weyl, W.conjugate(v, c.w))) continue;
    ZVec lift = W.act(v, c.m);
    auto d = p.pi1.project(lift);
    if (seen.insert(d).second) out.push_back({d, lift, v});
  }
  return out;
}

StabilityReport check_stability(const CircleCocycle& c) {
  const auto& g = *c.parent;
  const auto& phi = g.datum();
  const QVec slope_g = slope(g, full_parabolic(g), c.m);
  const std::size_t s = phi.semisimple_rank();
  StabilityReport report;
  const std::size_t full = (std::size_t{1} << s) - 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    ParabolicSubgroup p = make_parabolic(g, subset);
    for (const auto& red : reduction_degrees(c, p)) {
      QVec sp = slope(g, p, red.lift);
      if (!dominance_leq(phi, sp, slope_g)) {
        report.semistable = report.stable = false;
        report.violations.push_back({subset, red.lift, sp, slope_g, false});
      } else if (sp == slope_g) {
        report.stable = false;
        report.violations.push_back({subset, red.lift, sp, slope_g, true});
      }
    }
  }
  return report;
}

bool is_semistable(const CircleCocycle& c) { return check_stability(c).semistable; }
bool is_stable(const CircleCocycle& c) { return check_stability(c).stable; }

// For a chain i_0 - i_1 - ... - i_{k-1} of type A_k with N = k + 1, the map
// lambda -> sum_t (t + 1) <alpha_{i_t}, lambda> mod N is the class of
// sum_t <alpha_{i_t}, lambda> omega^_t in coweights / coroots = Z/N, since
// omega^_t has class t + 1.
ZVec adjoint_degree(const TropicalGroup& g, const ZVec& lambda) {
  const auto& tag = g.type_a_tag();
  if (!tag) throw HypothesisViolation("group is not of product-A type");
  const auto& phi = g.datum();
  ZVec out;
  for (const auto& chain : tag->chains) {
    const auto n = static_cast<std::int64_t>(chain.size() + 1);
    std::int64_t d = 0;
    for (std::size_t t = 0; t < chain.size(); ++t)
      d = checked_add(d, checked_mul(static_cast<std::int64_t>(t + 1), phi.pair(phi.simple_root(chain[t]), lambda)));
    out.push_back(((d % n) + n) % n);
  }
  return out;
}

bool is_stable_degree(const TropicalGroup& g, const ZVec& lambda) {
  const auto& tag = g.type_a_tag();
  if (!tag) throw HypothesisViolation("group is not of product-A type");
  ZVec d = adjoint_degree(g, lambda);
  for (std::size_t f = 0; f < d.size(); ++f)
    if (std::gcd(d[f], static_cast<std::int64_t>(tag->chains[f].size() + 1)) != 1) return false;
  return true;
}

ParabolicSubgroup minimal_parabolic_for_degree(const TropicalGroup& g, const ZVec& lambda) {
  const auto& phi = g.datum();
  QVec diff = sub(slope(g, full_parabolic(g), lambda), to_rational(lambda));
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < phi.semisimple_rank(); ++i)
    if (!is_integral(phi.pair(phi.fundamental_weights[i], diff))) subset.push_back(i);
  return make_parabolic(g, subset);
}

}  // namespace tropgroups
