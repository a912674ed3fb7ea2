#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "test_support.hpp"
#include "tropgroups/circle_bundles.hpp"

using namespace tropgroups;
using namespace testing_support;

namespace {

std::size_t by_perm(const GroupPtr& g, const Perm& p) { return *g->weyl().find_permutation(p); }

// Section x -> (alpha + x m, w) as a group element.
TropGroupElement section(const GroupPtr& g, const ZVec& m, const QVec& alpha, std::size_t w, const Rational& x) {
  QVec v = alpha;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += x * Rational(m[i]);
  return make_element(g, v, w);
}

// h(x) c(x) h(x + j)^{-1} evaluated pointwise with the group law.
TropGroupElement pointwise_gauge(const CircleCocycle& c, const GaugeTriple& h, const Rational& x) {
  auto hx = section(c.parent, h.k, h.beta, h.v, x);
  auto hxj = section(c.parent, h.k, h.beta, h.v, x + c.j);
  return compose(compose(hx, section(c.parent, c.m, c.alpha, c.w, x)), inverse(hxj));
}

// Brute-force isomorphism for GL_n with w = id: m2 = v m1 and
// alpha2 - v alpha1 in j Z^n for some permutation v.
bool trivial_monodromy_iso(const CircleCocycle& a, const CircleCocycle& b) {
  const std::size_t n = a.m.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (b.m[p[i]] != a.m[i]) ok = false;
      Rational q = (b.alpha[p[i]] - a.alpha[i]) / a.j;
      if (q.get_den() != 1) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

using LineInvariant = std::tuple<Rational, std::int64_t, Rational>;

std::multiset<LineInvariant> line_invariants(const MultiLineBundle& b) {
  std::multiset<LineInvariant> out;
  for (const auto& c : b.components) out.insert({c.length, c.degree, c.jacobian_class});
  return out;
}

std::vector<GroupPtr> sample_groups() {
  return {TropicalGroup::build(Family::GL, 1), TropicalGroup::build(Family::GL, 3), TropicalGroup::build(Family::SL, 3),
          TropicalGroup::build(Family::PGL, 3), TropicalGroup::build(Family::Sp, 2), TropicalGroup::build(Family::SO_odd, 2),
          TropicalGroup::build(Family::SO_even, 3), TropicalGroup::build(Family::G2, 2)};
}

}  // namespace

TEST(CircleCocycle, Validation) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  EXPECT_THROW(make_cocycle(gl2, {1}, {0, 0}, 0, 1), std::invalid_argument);
  EXPECT_THROW(make_cocycle(gl2, {1, 0}, {0, 0}, 0, 0), std::invalid_argument);
  EXPECT_THROW(make_cocycle(gl2, {1, 0}, {0, 0}, 5, 1), std::out_of_range);
}

TEST(Gauge, Examples) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  auto id = gl2->weyl().identity();
  auto c = make_cocycle(gl2, {1, 0}, {0, 0}, id, 1);
  EXPECT_EQ(gauge_transform(c, identity_gauge(*gl2)), c);
  auto swapped = gauge_transform(c, {0, 0}, {0, 0}, by_perm(gl2, {1, 0}));
  EXPECT_EQ(swapped.m, (ZVec{0, 1}));
  EXPECT_EQ(swapped.alpha, (QVec{0, 0}));
  EXPECT_EQ(swapped.w, id);

  auto gl1 = TropicalGroup::build(Family::GL, 1);
  Rational j = Rational(3) / Rational(2);
  auto l = make_cocycle(gl1, {1}, {0}, 0, j);
  auto shifted = gauge_transform(l, {1}, {0}, 0);
  EXPECT_EQ(shifted.m, ZVec{1});
  EXPECT_EQ(shifted.alpha, QVec{-j});
}

TEST(Gauge, MatchesPointwiseGroupLaw) {
  for (const auto& g : sample_groups()) {
    for (int t = 0; t < 60; ++t) {
      Rational j = Rational(uniform(1, 6)) / Rational(uniform(1, 3));
      auto c = random_cocycle(g, j);
      auto h = random_gauge(g);
      auto d = gauge_transform(c, h);
      for (int s = 0; s < 3; ++s) {
        Rational x = random_rational(3, 4);
        EXPECT_EQ(pointwise_gauge(c, h, x), section(g, d.m, d.alpha, d.w, x));
      }
    }
  }
}

TEST(Gauge, CompositionIsSemidirectProduct) {
  for (const auto& g : sample_groups()) {
    for (int t = 0; t < 500 / 8 + 1; ++t) {
      auto c = random_cocycle(g, Rational(uniform(1, 4)));
      auto g1 = random_gauge(g), g2 = random_gauge(g);
      EXPECT_EQ(gauge_transform(gauge_transform(c, g1), g2), gauge_transform(c, compose_gauge(*g, g2, g1)));
    }
  }
}

TEST(Degree, ExamplesAndGaugeInvariance) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  auto d = degree(make_cocycle(gl2, {1, 0}, {0, 0}, 0, 1)).coords;
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(std::llabs(d[0]), 1);
  EXPECT_EQ(degree(make_cocycle(gl2, {1, -1}, {0, 0}, 0, 1)).coords, ZVec{0});
  auto pgl2 = TropicalGroup::build(Family::PGL, 2);
  EXPECT_EQ(degree(make_cocycle(pgl2, {1}, {0}, 0, 1)).coords, ZVec{1});

  for (const auto& g : sample_groups())
    for (int t = 0; t < 125; ++t) {
      auto c = random_cocycle(g);
      EXPECT_EQ(degree(gauge_transform(c, random_gauge(g))), degree(c));
    }
}

TEST(Isomorphism, Examples) {
  auto gl1 = TropicalGroup::build(Family::GL, 1);
  auto a = make_cocycle(gl1, {0}, {0}, 0, 1);
  EXPECT_FALSE(are_isomorphic(a, make_cocycle(gl1, {0}, {Rational(1) / Rational(2)}, 0, 1)).isomorphic);
  auto r = are_isomorphic(a, make_cocycle(gl1, {0}, {1}, 0, 1));
  ASSERT_TRUE(r.isomorphic);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->k, ZVec{-1});
  EXPECT_FALSE(are_isomorphic(a, make_cocycle(gl1, {1}, {0}, 0, 1)).isomorphic);

  EXPECT_THROW(are_isomorphic(a, make_cocycle(gl1, {0}, {0}, 0, 2)), std::invalid_argument);
  EXPECT_THROW(are_isomorphic(a, make_cocycle(TropicalGroup::build(Family::GL, 1), {0}, {0}, 0, 1)),
               std::invalid_argument);
}

TEST(Isomorphism, GaugeOrbitsAreDetectedWithWitness) {
  for (const auto& g : sample_groups())
    for (int t = 0; t < 125; ++t) {
      auto c = random_cocycle(g, Rational(uniform(1, 3)));
      auto d = gauge_transform(c, random_gauge(g));
      auto r = are_isomorphic(c, d);
      ASSERT_TRUE(r.isomorphic);
      EXPECT_EQ(gauge_transform(c, *r.witness), d);
    }
}

TEST(Isomorphism, EquivalenceRelation) {
  for (const auto& g : sample_groups())
    for (int t = 0; t < 20; ++t) {
      auto a = random_cocycle(g);
      auto b = gauge_transform(a, random_gauge(g));
      auto c = gauge_transform(b, random_gauge(g));
      EXPECT_TRUE(are_isomorphic(a, a).isomorphic);
      EXPECT_TRUE(are_isomorphic(b, a).isomorphic);
      EXPECT_TRUE(are_isomorphic(a, c).isomorphic);
      // A perturbation that changes the iso class on one side only.
      auto x = random_cocycle(g);
      EXPECT_EQ(are_isomorphic(a, x).isomorphic, are_isomorphic(x, a).isomorphic);
      EXPECT_EQ(are_isomorphic(a, x).isomorphic, are_isomorphic(c, x).isomorphic);
    }
}

TEST(Isomorphism, TrivialMonodromyOracle) {
  auto gl3 = TropicalGroup::build(Family::GL, 3);
  const auto id = gl3->weyl().identity();
  int hits = 0;
  for (int t = 0; t < 300; ++t) {
    Rational j = Rational(uniform(1, 2));
    auto small_alpha = [] { return QVec{Rational(uniform(0, 3)) / 2, Rational(uniform(0, 3)) / 2, Rational(uniform(0, 3)) / 2}; };
    auto a = make_cocycle(gl3, random_zvec(3, 1), small_alpha(), id, j);
    auto b = make_cocycle(gl3, random_zvec(3, 1), small_alpha(), id, j);
    if (t % 2 == 0) b = gauge_transform(a, {0, 0, 0}, {0, 0, 0}, pick(6));
    if (t % 3 == 0) b.alpha[pick(3)] += j * Rational(uniform(-1, 1));
    bool expected = trivial_monodromy_iso(a, b);
    hits += expected;
    EXPECT_EQ(are_isomorphic(a, b).isomorphic, expected);
  }
  EXPECT_GT(hits, 50);
}

TEST(Isomorphism, GLMatchesMultilineInvariants) {
  // Iso classes of GL_n cocycles are iso classes of multi-line bundles:
  // the cover plus (degree, Jacobian class) on each component.
  for (int n = 2; n <= 3; ++n) {
    auto gl = TropicalGroup::build(Family::GL, n);
    int agree_true = 0, agree_false = 0;
    for (int t = 0; t < 300; ++t) {
      auto a = random_cocycle(gl, 1, 2);
      auto b = gauge_transform(a, random_gauge(gl));
      if (t % 2 == 1) {
        b.alpha[pick(n)] += Rational(uniform(-2, 2)) / Rational(uniform(1, 3));
        if (t % 4 == 1) b.m[pick(n)] += uniform(-1, 1);
      }
      bool iso = are_isomorphic(a, b).isomorphic;
      EXPECT_EQ(iso, line_invariants(to_multiline(a)) == line_invariants(to_multiline(b)));
      (iso ? agree_true : agree_false)++;
    }
    EXPECT_GT(agree_true, 100);
    EXPECT_GT(agree_false, 30);
  }
}

TEST(Classify, GL1) {
  auto comps = classify_components(*TropicalGroup::build(Family::GL, 1));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].torus_rank, 1u);
  EXPECT_EQ(comps[0].invariant_factors, ZVec{0});
  ASSERT_EQ(comps[0].degree_images.size(), 1u);
  EXPECT_EQ(std::llabs(comps[0].degree_images[0].coords.at(0)), 1);
}

TEST(Classify, MatchesConjugacyAndOracles) {
  for (const auto& g : sample_groups()) {
    const auto& W = g->weyl();
    auto comps = classify_components(*g);
    auto classes = conjugacy_classes(W);
    ASSERT_EQ(comps.size(), classes.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& d = comps[i];
      EXPECT_EQ(d.class_rep, classes[i].front());
      EXPECT_EQ(d.class_size, classes[i].size());
      total += d.class_size;
      EXPECT_EQ(d.class_size * d.centralizer_order, W.order());
      IntMatrix one_minus_w = IntMatrix::identity(g->rank()) - W.element(d.class_rep);
      EXPECT_EQ(d.torus_rank, g->rank() - rank(QMatrix(one_minus_w)));
      EXPECT_EQ(d.invariant_factors, oracle_invariant_factors(one_minus_w));
      bool finite = std::none_of(d.invariant_factors.begin(), d.invariant_factors.end(), [](auto f) { return f == 0; });
      EXPECT_EQ(d.discrete_orbits.has_value(), finite);
    }
    EXPECT_EQ(total, W.order());
  }
}

TEST(Classify, TrivialClassOfGL) {
  for (int n = 1; n <= 4; ++n) {
    auto g = TropicalGroup::build(Family::GL, n);
    auto comps = classify_components(*g);
    auto it = std::find_if(comps.begin(), comps.end(), [&](const auto& d) { return d.class_rep == g->weyl().identity(); });
    ASSERT_NE(it, comps.end());
    EXPECT_EQ(it->torus_rank, static_cast<std::size_t>(n));
    EXPECT_EQ(it->invariant_factors, ZVec(n, 0));
    EXPECT_EQ(it->centralizer_order, static_cast<std::size_t>(factorial(n)));
  }
}

TEST(Classify, IndecomposableClassOfSLAndPGL) {
  for (int n = 2; n <= 5; ++n) {
    for (Family f : {Family::SL, Family::PGL}) {
      auto g = TropicalGroup::build(f, n);
      Perm cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
      auto w = by_perm(g, cyc);
      auto comps = classify_components(*g);
      auto it = std::find_if(comps.begin(), comps.end(),
                             [&](const auto& d) { return contains(conjugacy_class(g->weyl(), w), d.class_rep); });
      ASSERT_NE(it, comps.end());
      EXPECT_EQ(it->torus_rank, 0u);
      EXPECT_EQ(it->discrete_orbits, std::optional<std::size_t>(n));
      if (f == Family::PGL) {
        EXPECT_EQ(it->invariant_factors, ZVec{n});
      } else {
        std::int64_t size = 1;
        for (auto x : it->invariant_factors) size *= x;
        EXPECT_EQ(size, n);
      }
    }
  }
}

TEST(Pushforward, Examples) {
  auto gl3 = TropicalGroup::build(Family::GL, 3);
  auto gl1 = TropicalGroup::build(Family::GL, 1);
  auto det = determinant_hom(gl3, gl1);
  for (int t = 0; t < 50; ++t) {
    auto c = random_cocycle(gl3);
    auto d = pushforward(det, c);
    EXPECT_EQ(d.m, ZVec{c.m[0] + c.m[1] + c.m[2]});
    EXPECT_EQ(d.alpha, QVec{c.alpha[0] + c.alpha[1] + c.alpha[2]});
    EXPECT_EQ(d.w, gl1->weyl().identity());
    EXPECT_EQ(pushforward(identity_hom(gl3), c), c);
    // Gauge-equivalent inputs push forward to isomorphic outputs.
    EXPECT_TRUE(are_isomorphic(d, pushforward(det, gauge_transform(c, random_gauge(gl3)))).isomorphic);
  }
  auto sl2 = TropicalGroup::build(Family::SL, 2);
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  TropGroupHom inc(sl2, gl2, sl2->model()->lattice_map);
  auto e = pushforward(inc, make_cocycle(sl2, {1}, {0}, 0, 1));
  EXPECT_EQ(e.m, (ZVec{1, -1}));
  EXPECT_EQ(degree(e).coords, ZVec{0});
  EXPECT_THROW(pushforward(inc, make_cocycle(gl2, {0, 0}, {0, 0}, 0, 1)), std::invalid_argument);
}

TEST(Multiline, Examples) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  auto b = to_multiline(make_cocycle(gl2, {1, 0}, {0, 0}, by_perm(gl2, {1, 0}), 1));
  ASSERT_EQ(b.components.size(), 1u);
  EXPECT_EQ(b.components[0].length, Rational(2));
  EXPECT_EQ(b.components[0].degree, 1);
  EXPECT_EQ(b.components[0].jacobian_coordinate, Rational(0));

  auto gl3 = TropicalGroup::build(Family::GL, 3);
  Rational j = Rational(5) / Rational(2);
  auto t = to_multiline(make_cocycle(gl3, {2, -1, 4}, {Rational(1) / Rational(3), 3, -1}, gl3->weyl().find_permutation({0, 1, 2}).value(), j));
  ASSERT_EQ(t.components.size(), 3u);
  EXPECT_EQ(t.components[0].degree, 2);
  EXPECT_EQ(t.components[1].degree, -1);
  EXPECT_EQ(t.components[2].degree, 4);
  EXPECT_EQ(t.components[0].jacobian_coordinate, Rational(1) / Rational(3));
  EXPECT_EQ(t.components[1].jacobian_coordinate, Rational(1) / Rational(2));
  EXPECT_EQ(t.components[2].jacobian_coordinate, Rational(3) / Rational(2));
  for (const auto& c : t.components) EXPECT_EQ(c.length, j);

  EXPECT_THROW(to_multiline(make_cocycle(TropicalGroup::build(Family::SL, 2), {1}, {0}, 0, 1)), std::invalid_argument);
}

TEST(Multiline, DegreesAndGaugeInvariants) {
  for (int n = 1; n <= 4; ++n) {
    auto gl = TropicalGroup::build(Family::GL, n);
    for (int t = 0; t < 50; ++t) {
      auto c = random_cocycle(gl, Rational(uniform(1, 3)));
      auto b = to_multiline(c);
      std::int64_t total = 0;
      Rational length = 0;
      for (const auto& comp : b.components) {
        total += comp.degree;
        length += comp.length;
      }
      EXPECT_EQ(total, std::accumulate(c.m.begin(), c.m.end(), std::int64_t{0}));
      EXPECT_EQ(length, c.j * Rational(n));
      EXPECT_EQ(b.components.size(), cycles(gl->weyl().permutation(c.w)).size());
      EXPECT_EQ(line_invariants(to_multiline(gauge_transform(c, random_gauge(gl)))), line_invariants(b));
    }
  }
}

TEST(SpStructure, SymplecticCocyclesPass) {
  auto sp2 = TropicalGroup::build(Family::Sp, 1);
  for (int d = -3; d <= 3; ++d) {
    auto b = sp_structure(make_cocycle(sp2, {d}, {Rational(d) / Rational(3)}, 0, 1));
    EXPECT_TRUE(b.sp_ok());
    std::int64_t total = 0;
    for (const auto& c : b.components) total += c.degree;
    EXPECT_EQ(total, 0);
  }
  for (int n = 1; n <= 3; ++n) {
    auto sp = TropicalGroup::build(Family::Sp, n);
    for (int t = 0; t < 40; ++t) {
      auto b = sp_structure(random_cocycle(sp, Rational(uniform(1, 3))));
      EXPECT_TRUE(b.sp_ok());
      ASSERT_TRUE(b.involution.has_value());
      for (std::size_t ci = 0; ci < b.component_involution.size(); ++ci)
        EXPECT_EQ(b.component_involution[b.component_involution[ci]], ci);
    }
  }
}

TEST(SpStructure, GLViolations) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  auto id = gl2->weyl().identity();
  EXPECT_TRUE(sp_structure(make_cocycle(gl2, {1, -1}, {Rational(1) / Rational(3), Rational(-1) / Rational(3)}, id, 1)).sp_ok());
  auto bad_degree = sp_structure(make_cocycle(gl2, {1, 0}, {0, 0}, id, 1));
  EXPECT_FALSE(bad_degree.sp_ok());
  EXPECT_FALSE(bad_degree.violations.empty());
  auto bad_offset = sp_structure(make_cocycle(gl2, {1, -1}, {Rational(1) / Rational(3), 0}, id, 1));
  EXPECT_FALSE(bad_offset.sp_ok());
  auto gl4 = TropicalGroup::build(Family::GL, 4);
  auto noncommuting = sp_structure(make_cocycle(gl4, {0, 0, 0, 0}, {0, 0, 0, 0}, *gl4->weyl().find_permutation({1, 0, 2, 3}), 1));
  EXPECT_FALSE(noncommuting.sp_ok());
  EXPECT_THROW(sp_structure(make_cocycle(TropicalGroup::build(Family::GL, 3), {0, 0, 0}, {0, 0, 0}, 0, 1)),
               std::invalid_argument);
}

TEST(SpStructure, AgreesWithExplicitPushforward) {
  auto sp4 = TropicalGroup::build(Family::Sp, 2);
  auto gl4 = TropicalGroup::build(Family::GL, 4);
  TropGroupHom f(sp4, gl4, sp4->model()->lattice_map);
  for (int t = 0; t < 30; ++t) {
    auto c = random_cocycle(sp4, Rational(uniform(1, 3)));
    auto direct = sp_structure(c);
    auto via_gl = sp_structure(pushforward(f, c));
    EXPECT_EQ(direct.sigma, via_gl.sigma);
    EXPECT_EQ(line_invariants(direct), line_invariants(via_gl));
    EXPECT_EQ(direct.sp_ok(), via_gl.sp_ok());
  }
}
