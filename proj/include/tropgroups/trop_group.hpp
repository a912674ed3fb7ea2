#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tropgroups/linalg.hpp"
#include "tropgroups/root_data.hpp"
#include "tropgroups/trop_core.hpp"
#include "tropgroups/weyl.hpp"

namespace tropgroups {

class NotInGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Faithful matrix presentation: (m, w) -> D(F m) (.) P_{rho(w)}. Slots not
// hit by the permutation model stay fixed with y = 0 (index 0 for odd SO,
// label 7 for G2). A projective model is only defined up to scalars.
struct MatrixModel {
  std::size_t size = 0;
  IntMatrix lattice_map;           // size x rank
  std::vector<int> point_slot;     // model slot of each permutation-model point
  bool projective = false;
};

class TropicalGroup;
using GroupPtr = std::shared_ptr<const TropicalGroup>;

// M^_R x| W for a validated root datum. Shared by identity: elements of
// different group objects never mix.
class TropicalGroup {
 public:
  static GroupPtr create(RootDatum phi, std::size_t guard = default_guard());
  static GroupPtr build(Family family, int n, std::size_t guard = default_guard());

  const RootDatum& datum() const { return phi_; }
  const WeylGroup& weyl() const { return weyl_; }
  const FundamentalGroup& pi1() const { return pi1_; }
  std::size_t rank() const { return phi_.rank; }
  const std::optional<MatrixModel>& model() const { return model_; }
  // Full-group product-A tag, when the root system is of that type.
  const std::optional<ProductATag>& type_a_tag() const { return tag_; }

  // Permutation of the model slots for w.
  Perm model_permutation(std::size_t w) const;

 private:
  TropicalGroup() = default;
  RootDatum phi_;
  WeylGroup weyl_;
  FundamentalGroup pi1_;
  std::optional<MatrixModel> model_;
  std::optional<ProductATag> tag_;
};

struct TropGroupElement {
  GroupPtr parent;
  QVec m;
  std::size_t w = 0;

  bool operator==(const TropGroupElement& o) const { return parent == o.parent && m == o.m && w == o.w; }
};

TropGroupElement identity_element(const GroupPtr& g);
TropGroupElement make_element(const GroupPtr& g, QVec m, std::size_t w);
TropGroupElement compose(const TropGroupElement& a, const TropGroupElement& b);
TropGroupElement inverse(const TropGroupElement& a);

// Rational basis of R^perp = {m : <alpha, m> = 0 for all roots}.
std::vector<QVec> center(const TropicalGroup& g);
QVec determinant_map(const TropGroupElement& a);

TropMatrix to_matrix(const TropGroupElement& a);
TropGroupElement from_matrix(const TropMatrix& a, const GroupPtr& g);
// Membership of a matrix in the family's matrix group (trop_core checks).
bool matrix_in_group(const TropMatrix& a, const TropicalGroup& g);
// Equality of matrices, up to a global tropical scalar for projective models.
bool model_matrices_equal(const TropicalGroup& g, const TropMatrix& a, const TropMatrix& b);

// F = (f, phi) with phi(g) f(m) = f(g m).
class TropGroupHom {
 public:
  // phi is determined on the simple reflections by the unique w2 with
  // w2 f = f s_i; throws if it does not exist or is not unique.
  TropGroupHom(GroupPtr domain, GroupPtr codomain, IntMatrix f);
  // Explicit images of the simple reflections of the domain.
  TropGroupHom(GroupPtr domain, GroupPtr codomain, IntMatrix f, const std::vector<std::size_t>& simple_images);

  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  const IntMatrix& lattice_map() const { return f_; }
  std::size_t weyl_image(std::size_t w) const { return phi_.at(w); }

 private:
  void extend_and_check(const std::vector<std::size_t>& simple_images);
  GroupPtr domain_, codomain_;
  IntMatrix f_;
  std::vector<std::size_t> phi_;
};

TropGroupElement hom_apply(const TropGroupHom& f, const TropGroupElement& a);

// Standard maps between builder groups.
TropGroupHom determinant_hom(const GroupPtr& gl_n, const GroupPtr& gl_1);
TropGroupHom identity_hom(const GroupPtr& g);

}  // namespace tropgroups
