#include "tropgroups/verify.hpp"

#include <cstdlib>
#include <numeric>
#include <random>

namespace tropgroups {

namespace {

std::optional<ComponentDescription> indecomposable_component(const TropicalGroup& g) {
  auto w = full_cycle_element(g);
  if (!w) return std::nullopt;
  for (auto& d : classify_components(g))
    if (contains(conjugacy_class(g.weyl(), *w), d.class_rep)) return d;
  return std::nullopt;
}

Json component_report(const std::string& family, int n, const ComponentDescription& d, const TropicalGroup& g) {
  Json out;
  out["family"] = family;
  out["n"] = n;
  out["component"] = to_json(d, g);
  return out;
}

// Degree map M^/(1 - w)M^ = Z -> pi_1 = Z is an isomorphism.
bool degree_map_is_iso(const ComponentDescription& d) {
  return d.invariant_factors == ZVec{0} && d.torus_rank == 1 && d.degree_images.size() == 1 &&
         d.degree_images[0].coords.size() == 1 && std::llabs(d.degree_images[0].coords[0]) == 1;
}

Rational random_rational(std::mt19937_64& rng, int bound, int max_den) {
  std::uniform_int_distribution<int> num(-bound * max_den, bound * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

}  // namespace

std::optional<std::size_t> full_cycle_element(const TropicalGroup& g) {
  const auto& W = g.weyl();
  if (!W.has_permutation_model()) return std::nullopt;
  for (std::size_t w = 0; w < W.order(); ++w)
    if (is_full_cycle(W.permutation(w))) return w;
  return std::nullopt;
}

SuiteCase verify_sl_count(int n) {
  auto g = TropicalGroup::build(Family::SL, n);
  auto d = indecomposable_component(*g);
  if (!d) return {Json{{"family", "SL"}, {"n", n}, {"error", "no full-cycle class"}}, false};
  SuiteCase c{component_report("SL", n, *d, *g), false};
  c.pass = d->torus_rank == 0 && d->discrete_orbits == static_cast<std::size_t>(n);
  c.report["expected_size"] = n;
  c.report["pass"] = c.pass;
  return c;
}

SuiteCase verify_pgl_count(int n) {
  auto g = TropicalGroup::build(Family::PGL, n);
  auto d = indecomposable_component(*g);
  if (!d) return {Json{{"family", "PGL"}, {"n", n}, {"error", "no full-cycle class"}}, false};
  SuiteCase c{component_report("PGL", n, *d, *g), false};
  c.pass = d->torus_rank == 0 && d->invariant_factors == ZVec{n} && d->discrete_orbits == static_cast<std::size_t>(n);
  c.report["expected_invariant_factors"] = Json::array({n});
  c.report["pass"] = c.pass;
  return c;
}

SuiteCase verify_det_homeo(int n, int d, std::uint64_t seed, int samples) {
  auto gl = TropicalGroup::build(Family::GL, n);
  auto gl1 = TropicalGroup::build(Family::GL, 1);
  auto det = determinant_hom(gl, gl1);
  const auto& W = gl->weyl();
  const std::size_t w = *full_cycle_element(*gl);
  ZVec lambda(n, 0);
  lambda[0] = d;

  Json report;
  report["n"] = n;
  report["degree"] = d;
  const bool stable_degree = is_stable_degree(*gl, lambda);
  report["stable_degree"] = stable_degree;

  auto comps = classify_components(*gl);
  const ComponentDescription* source = nullptr;
  for (const auto& cd : comps)
    if (contains(conjugacy_class(W, w), cd.class_rep)) source = &cd;
  const auto target = classify_components(*gl1).front();
  const bool discrete = source && degree_map_is_iso(*source) && degree_map_is_iso(target);
  report["discrete_bijection"] = discrete;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-5, 5), gauge_k(-3, 3), coin(0, 1), shift(-2, 2);
  std::uniform_int_distribution<std::size_t> pick_v(0, W.order() - 1);
  int agree = 0, unstable = 0, equal_pairs = 0;
  const Rational j = 1;
  for (int s = 0; s < samples; ++s) {
    ZVec m(n);
    std::int64_t total = 0;
    for (int i = 0; i + 1 < n; ++i) total += (m[i] = small(rng));
    m[n - 1] = d - total;
    QVec alpha(n);
    for (auto& a : alpha) a = random_rational(rng, 3, 6);
    auto c1 = make_cocycle(gl, m, alpha, w, j);

    GaugeTriple g{ZVec(n), QVec(n), pick_v(rng)};
    for (auto& k : g.k) k = gauge_k(rng);
    for (auto& b : g.beta) b = random_rational(rng, 2, 5);
    auto c2 = gauge_transform(c1, g);

    const bool same_det = coin(rng) == 1;
    QVec delta(n);
    Rational sum = 0;
    for (int i = 0; i + 1 < n; ++i) sum += (delta[i] = random_rational(rng, 2, 4));
    Rational target_sum = j * Rational(shift(rng));
    if (!same_det) {
      std::uniform_int_distribution<int> den(2, 7);
      int q = den(rng);
      std::uniform_int_distribution<int> num(1, q - 1);
      target_sum += j * Rational(num(rng)) / Rational(q);
    }
    delta[n - 1] = target_sum - sum;
    c2.alpha = add(c2.alpha, delta);
    equal_pairs += same_det;

    const bool det_iso = are_isomorphic(pushforward(det, c1), pushforward(det, c2)).isomorphic;
    const bool iso = are_isomorphic(c1, c2).isomorphic;
    if (det_iso == same_det && iso == det_iso) ++agree;
    if (!is_stable(c1)) ++unstable;
  }
  report["samples"] = samples;
  report["equal_determinant_pairs"] = equal_pairs;
  report["agreements"] = agree;
  report["unstable_samples"] = unstable;
  const bool pass = stable_degree && discrete && agree == samples && unstable == 0;
  report["pass"] = pass;
  return {report, pass};
}

SuiteCase verify_relative_weyl(Family family, int n) {
  auto g = TropicalGroup::build(family, n);
  const auto& phi = g->datum();
  const auto& W = g->weyl();
  const std::size_t s = phi.semisimple_rank();
  int cases = 0;
  Json failures = Json::array();
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    auto tag = product_a_tag(phi, subset);
    if (!tag) continue;
    for (auto w : parabolic_subgroup(W, subset)) {
      if (!is_indecomposable(W, *tag, w)) continue;
      ++cases;
      try {
        relative_weyl_check(phi, W, subset, w);
      } catch (const std::exception& e) {
        Json f;
        f["D_P"] = subset;
        f["w"] = w;
        f["error"] = e.what();
        failures.push_back(f);
      }
    }
  }
  Json report;
  report["family"] = to_string(family);
  report["n"] = n;
  report["cases"] = cases;
  report["failures"] = failures;
  const bool pass = cases > 0 && failures.empty();
  report["pass"] = pass;
  return {report, pass};
}

}  // namespace tropgroups
