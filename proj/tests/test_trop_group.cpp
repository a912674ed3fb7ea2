#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tropgroups/trop_core.hpp"
#include "tropgroups/trop_group.hpp"

using namespace tropgroups;
using namespace testing_support;

namespace {

std::vector<std::pair<Family, int>> model_cases() {
  return {{Family::GL, 1},     {Family::GL, 3},     {Family::SL, 3},      {Family::PGL, 3},
          {Family::Sp, 1},     {Family::Sp, 3},     {Family::SO_odd, 1},  {Family::SO_odd, 3},
          {Family::SO_even, 2}, {Family::SO_even, 3}, {Family::G2, 2}};
}

std::size_t by_perm(const GroupPtr& g, const Perm& p) { return *g->weyl().find_permutation(p); }

// PGL_n lattice map Z^n -> Z^n / Z(1,...,1) in representatives with last entry 0.
IntMatrix gl_to_pgl(int n) {
  IntMatrix f(n - 1, n);
  for (int k = 0; k + 1 < n; ++k) {
    f(k, k) = 1;
    f(k, n - 1) = -1;
  }
  return f;
}

}  // namespace

TEST(TropGroup, GroupLawExamples) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  auto swap = by_perm(gl2, {1, 0});
  auto e = identity_element(gl2);
  auto a = make_element(gl2, {1, 2}, gl2->weyl().identity());
  auto b = make_element(gl2, {0, 0}, swap);
  EXPECT_EQ(compose(e, b), b);
  auto ab = compose(a, b);
  auto sq = compose(ab, ab);
  EXPECT_EQ(sq.m, (QVec{3, 3}));
  EXPECT_EQ(sq.w, gl2->weyl().identity());
  EXPECT_EQ(inverse(a).m, (QVec{-1, -2}));
  auto other = TropicalGroup::build(Family::GL, 2);
  EXPECT_THROW(compose(a, identity_element(other)), std::invalid_argument);
}

TEST(TropGroup, AssociativityAndInverse) {
  for (auto [f, n] : model_cases()) {
    auto g = TropicalGroup::build(f, n);
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(g), b = random_element(g), c = random_element(g);
      EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      EXPECT_EQ(compose(a, inverse(a)), identity_element(g));
    }
  }
}

TEST(TropGroup, Center) {
  EXPECT_EQ(center(*TropicalGroup::build(Family::GL, 4)).size(), 1u);
  auto c = center(*TropicalGroup::build(Family::GL, 3));
  EXPECT_EQ(c[0][0], c[0][1]);
  EXPECT_EQ(c[0][1], c[0][2]);
  EXPECT_TRUE(center(*TropicalGroup::build(Family::SL, 3)).empty());
  EXPECT_TRUE(center(*TropicalGroup::build(Family::G2, 2)).empty());
  EXPECT_TRUE(center(*TropicalGroup::build(Family::Sp, 2)).empty());
  EXPECT_EQ(center(*TropicalGroup::build(Family::GL, 1)).size(), 1u);
}

TEST(TropGroup, DeterminantMap) {
  auto gl3 = TropicalGroup::build(Family::GL, 3);
  // The free coordinate is +-(sum of entries) with a fixed sign.
  auto unit = determinant_map(make_element(gl3, {1, 0, 0}, 0));
  ASSERT_EQ(unit.size(), 1u);
  for (int i = 0; i < 100; ++i) {
    auto a = random_element(gl3), b = random_element(gl3);
    Rational sum = a.m[0] + a.m[1] + a.m[2];
    EXPECT_EQ(determinant_map(a)[0], sum * unit[0]);
    EXPECT_EQ(determinant_map(compose(a, b)), add(determinant_map(a), determinant_map(b)));
  }
  auto root = make_element(gl3, {Rational(1) / Rational(2), Rational(-1) / Rational(2), 0}, 0);
  EXPECT_EQ(determinant_map(root), QVec{0});
  EXPECT_TRUE(determinant_map(random_element(TropicalGroup::build(Family::Sp, 2))).empty());
}

TEST(TropGroup, MatrixModelExamples) {
  auto gl2 = TropicalGroup::build(Family::GL, 2);
  auto a = make_element(gl2, {1, -1}, by_perm(gl2, {1, 0}));
  EXPECT_EQ(to_matrix(a), (GenPermDecomposition{{1, -1}, {1, 0}}.assemble()));
  EXPECT_EQ(from_matrix(to_matrix(a), gl2), a);
  EXPECT_EQ(to_matrix(identity_element(gl2)), TropMatrix::identity(2));

  auto sp2 = TropicalGroup::build(Family::Sp, 1);
  auto s = by_perm(sp2, {1, 0});
  auto b = make_element(sp2, {Rational(5) / Rational(3)}, s);
  EXPECT_EQ(to_matrix(b), (GenPermDecomposition{{Rational(5) / Rational(3), Rational(-5) / Rational(3)}, {1, 0}}.assemble()));

  auto sl2 = TropicalGroup::build(Family::SL, 2);
  EXPECT_THROW(from_matrix(GenPermDecomposition{{1, 0}, {0, 1}}.assemble(), sl2), NotInGroup);
  TropMatrix zeros(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) zeros(i, j) = TropValue::zero();
  EXPECT_THROW(from_matrix(zeros, gl2), NotInvertible);
  EXPECT_THROW(from_matrix(TropMatrix::identity(3), gl2), NotInGroup);
}

TEST(TropGroup, MatrixModelIsFaithfulHomomorphism) {
  for (auto [f, n] : model_cases()) {
    auto g = TropicalGroup::build(f, n);
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(g), b = random_element(g);
      TropMatrix ma = to_matrix(a), mb = to_matrix(b);
      EXPECT_TRUE(matrix_in_group(ma, *g)) << to_string(f) << " " << n;
      EXPECT_TRUE(model_matrices_equal(*g, to_matrix(compose(a, b)), trop_matrix_mul(ma, mb)));
      EXPECT_EQ(from_matrix(ma, g), a);
    }
  }
}

TEST(TropGroup, Homomorphisms) {
  const int n = 3;
  auto sl = TropicalGroup::build(Family::SL, n);
  auto gl = TropicalGroup::build(Family::GL, n);
  auto pgl = TropicalGroup::build(Family::PGL, n);
  TropGroupHom inc(sl, gl, sl->model()->lattice_map);
  TropGroupHom proj(gl, pgl, gl_to_pgl(n));
  for (int i = 0; i < 100; ++i) {
    auto a = random_element(sl), b = random_element(sl);
    EXPECT_EQ(hom_apply(inc, compose(a, b)), compose(hom_apply(inc, a), hom_apply(inc, b)));
    auto x = random_element(gl), y = random_element(gl);
    EXPECT_EQ(hom_apply(proj, compose(x, y)), compose(hom_apply(proj, x), hom_apply(proj, y)));
    // Inclusion agrees with the matrix models.
    EXPECT_EQ(to_matrix(hom_apply(inc, a)), to_matrix(a));
  }
  // SL -> GL -> PGL is injective with index n on lattices.
  IntMatrix composite = proj.lattice_map() * inc.lattice_map();
  EXPECT_EQ(std::llabs(determinant(composite)), n);
  EXPECT_EQ(oracle_invariant_factors(composite), ZVec{n});

  auto gl1 = TropicalGroup::build(Family::GL, 1);
  auto det = determinant_hom(gl, gl1);
  auto a = random_element(gl);
  EXPECT_EQ(hom_apply(det, a).m, QVec{a.m[0] + a.m[1] + a.m[2]});
  auto id = identity_hom(gl);
  EXPECT_EQ(hom_apply(id, a), a);
  // A lattice map that is not Weyl-compatible is rejected.
  EXPECT_THROW(TropGroupHom(gl, gl, IntMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 3)),
               std::invalid_argument);
}
