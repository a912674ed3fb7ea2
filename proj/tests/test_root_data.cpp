#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "tropgroups/root_data.hpp"

using namespace tropgroups;
using namespace testing_support;

namespace {

std::set<ZVec> as_set(const std::vector<ZVec>& v) { return {v.begin(), v.end()}; }

IntMatrix coroot_matrix(const RootDatum& phi) {
  // One coroot from each +/- pair suffices for the span.
  std::vector<ZVec> cols;
  std::set<ZVec> seen;
  for (const auto& c : phi.coroots)
    if (!seen.count(neg(c))) {
      seen.insert(c);
      cols.push_back(c);
    }
  return IntMatrix::from_columns(cols, phi.rank);
}

struct Case {
  Family family;
  int n;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (int n = 1; n <= 4; ++n) out.push_back({Family::GL, n});
  for (int n = 2; n <= 4; ++n) {
    out.push_back({Family::SL, n});
    out.push_back({Family::PGL, n});
    out.push_back({Family::SO_even, n});
  }
  for (int n = 1; n <= 4; ++n) {
    out.push_back({Family::Sp, n});
    out.push_back({Family::SO_odd, n});
  }
  out.push_back({Family::G2, 2});
  return out;
}

}  // namespace

TEST(RootData, FamilyNames) {
  EXPECT_EQ(parse_family("gl"), Family::GL);
  EXPECT_EQ(parse_family("SO-odd"), Family::SO_odd);
  EXPECT_EQ(parse_family("so_even"), Family::SO_even);
  EXPECT_EQ(to_string(Family::G2), "G2");
  EXPECT_THROW(parse_family("E8"), std::invalid_argument);
}

TEST(RootData, BuilderExamples) {
  RootDatum gl2 = build_root_datum(Family::GL, 2);
  EXPECT_EQ(gl2.rank, 2u);
  EXPECT_EQ(as_set(gl2.roots), (std::set<ZVec>{{1, -1}, {-1, 1}}));
  EXPECT_EQ(as_set(gl2.coroots), (std::set<ZVec>{{1, -1}, {-1, 1}}));

  RootDatum sl2 = build_root_datum(Family::SL, 2);
  EXPECT_EQ(sl2.rank, 1u);
  EXPECT_EQ(sl2.roots.size(), 2u);

  RootDatum sp4 = build_root_datum(Family::Sp, 2);
  EXPECT_EQ(sp4.pairing, IntMatrix::identity(2));
  EXPECT_EQ(as_set(sp4.roots),
            (std::set<ZVec>{{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  EXPECT_EQ(as_set(sp4.coroots),
            (std::set<ZVec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));

  RootDatum so4 = build_root_datum(Family::SO_even, 2);
  EXPECT_EQ(as_set(so4.roots), (std::set<ZVec>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  EXPECT_EQ(as_set(so4.roots), as_set(so4.coroots));

  RootDatum g2 = build_root_datum(Family::G2, 0);
  EXPECT_EQ(g2.roots.size(), 12u);
  EXPECT_EQ(g2.cartan(), IntMatrix::from_rows({{2, -1}, {-3, 2}}, 2));

  EXPECT_THROW(build_root_datum(Family::SL, 1), std::invalid_argument);
  EXPECT_THROW(build_root_datum(Family::SO_even, 1), std::invalid_argument);
  EXPECT_THROW(build_root_datum(Family::GL, 0), std::invalid_argument);
}

TEST(RootData, BuildersSatisfyAxioms) {
  for (const auto& c : all_cases()) {
    RootDatum phi = build_root_datum(c.family, c.n);
    EXPECT_TRUE(validate_root_datum(phi).empty()) << to_string(c.family) << " " << c.n;
    for (std::size_t i = 0; i < phi.roots.size(); ++i) {
      EXPECT_EQ(phi.pair(phi.roots[i], phi.coroots[i]), 2);
      // s_alpha^ permutes the coroots.
      IntMatrix s = phi.coreflection(i);
      std::set<ZVec> img;
      for (const auto& cv : phi.coroots) img.insert(s * cv);
      EXPECT_EQ(img, as_set(phi.coroots));
    }
    // <omega_i, alpha^_j> = delta_ij.
    for (std::size_t i = 0; i < phi.semisimple_rank(); ++i)
      for (std::size_t j = 0; j < phi.semisimple_rank(); ++j)
        EXPECT_EQ(phi.pair(phi.fundamental_weights[i], to_rational(phi.simple_coroot(j))), Rational(i == j ? 1 : 0));
  }
}

TEST(RootData, ValidationReportsViolations) {
  RootDatum phi = build_root_datum(Family::GL, 2);
  RootDatum doubled = phi;
  doubled.coroots[0] = {2, -2};
  EXPECT_FALSE(validate_root_datum(doubled).empty());

  RootDatum gl3 = build_root_datum(Family::GL, 3);
  RootDatum missing = gl3;
  missing.roots.pop_back();
  missing.coroots.pop_back();
  missing.simple.clear();
  EXPECT_FALSE(validate_root_datum(missing).empty());
}

TEST(RootData, FundamentalGroupMatchesDeterminantalOracle) {
  for (const auto& c : all_cases()) {
    RootDatum phi = build_root_datum(c.family, c.n);
    EXPECT_EQ(fundamental_group(phi).invariant_factors(), oracle_invariant_factors(coroot_matrix(phi)))
        << to_string(c.family) << " " << c.n;
  }
}

TEST(RootData, FundamentalGroupTable) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(fundamental_group(build_root_datum(Family::GL, n)).invariant_factors(), ZVec{0});
    EXPECT_TRUE(fundamental_group(build_root_datum(Family::SL, n)).invariant_factors().empty());
    EXPECT_EQ(fundamental_group(build_root_datum(Family::PGL, n)).invariant_factors(), ZVec{n});
    EXPECT_TRUE(fundamental_group(build_root_datum(Family::Sp, n)).invariant_factors().empty());
    EXPECT_EQ(fundamental_group(build_root_datum(Family::SO_odd, n)).invariant_factors(), ZVec{2});
    // With cocharacters Z^n and coroots +-e_i +- e_j the quotient is Z/2.
    EXPECT_EQ(fundamental_group(build_root_datum(Family::SO_even, n)).invariant_factors(), ZVec{2});
  }
  EXPECT_TRUE(fundamental_group(build_root_datum(Family::G2, 2)).invariant_factors().empty());
}

TEST(RootData, ProjectionDetectsDegrees) {
  RootDatum gl2 = build_root_datum(Family::GL, 2);
  auto pi = fundamental_group(gl2);
  auto d = pi.project({1, 0});
  EXPECT_EQ(std::llabs(d.coords.at(0)), 1);
  EXPECT_EQ(pi.project({1, -1}).coords, ZVec{0});
  RootDatum pgl2 = build_root_datum(Family::PGL, 2);
  auto pp = fundamental_group(pgl2);
  EXPECT_EQ(pp.project({1}).coords, ZVec{1});
  EXPECT_EQ(pp.project({2}).coords, ZVec{0});
}

TEST(RootData, DualityOfSLAndPGL) {
  RootDatum gl = build_root_datum(Family::GL, 3);
  RootDatum gld = dual(gl);
  EXPECT_EQ(as_set(gld.roots), as_set(gl.roots));
  EXPECT_EQ(as_set(gld.coroots), as_set(gl.coroots));
  for (int n = 2; n <= 4; ++n) {
    RootDatum sl_dual = dual(build_root_datum(Family::SL, n));
    RootDatum pgl = build_root_datum(Family::PGL, n);
    EXPECT_TRUE(validate_root_datum(sl_dual).empty());
    EXPECT_EQ(sl_dual.rank, pgl.rank);
    EXPECT_EQ(sl_dual.roots.size(), pgl.roots.size());
    EXPECT_EQ(fundamental_group(sl_dual).invariant_factors(), fundamental_group(pgl).invariant_factors());
    // The pairing matrices are inverse transposes of unimodular bases of the
    // same lattices, so the coroot-lattice indices agree.
    EXPECT_EQ(determinantal_divisor(coroot_matrix(sl_dual), pgl.rank),
              determinantal_divisor(coroot_matrix(pgl), pgl.rank));
  }
}

TEST(RootData, LeviDatum) {
  RootDatum gl4 = build_root_datum(Family::GL, 4);
  RootDatum levi = levi_datum(gl4, {0, 2});
  EXPECT_TRUE(validate_root_datum(levi).empty());
  EXPECT_EQ(levi.roots.size(), 4u);
  EXPECT_EQ(levi.semisimple_rank(), 2u);
  EXPECT_EQ(parabolic_fundamental_group(gl4, {0, 2}).invariant_factors(), (ZVec{0, 0}));
}
