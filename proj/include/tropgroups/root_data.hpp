#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropgroups/linalg.hpp"
#include "tropgroups/rational.hpp"

namespace tropgroups {

enum class Family { GL, SL, PGL, Sp, SO_odd, SO_even, G2 };

std::string to_string(Family f);
// Accepts the enum spellings plus "SO-odd"/"SO-even"; case-insensitive.
Family parse_family(const std::string& name);

// Phi = (M, R, M^, R^). M and M^ have equal rank and are paired by
// <u, v> = u^T * pairing * v (u in M, v in M^).
struct RootDatum {
  std::size_t rank = 0;
  IntMatrix pairing;
  std::vector<ZVec> roots;
  std::vector<ZVec> coroots;  // coroots[i] belongs to roots[i]
  std::vector<std::size_t> simple;  // indices into roots; position in this list is the simple index
  std::vector<QVec> fundamental_weights;  // in M (x) Q, lying in the span of R

  // Points of M^ (x) Q permuted by the Weyl group, used for the permutation
  // interpretation of Weyl elements. Empty for hand-built data.
  std::vector<QVec> perm_points;

  std::optional<Family> family;
  int n = 0;

  std::int64_t pair(const ZVec& u, const ZVec& v) const;
  Rational pair(const QVec& u, const QVec& v) const;
  // u^T * pairing, the functional <u, .> on M^.
  ZVec functional(const ZVec& u) const;

  std::size_t semisimple_rank() const { return simple.size(); }
  const ZVec& simple_root(std::size_t i) const { return roots.at(simple.at(i)); }
  const ZVec& simple_coroot(std::size_t i) const { return coroots.at(simple.at(i)); }
  // Cartan entries A_{ij} = <alpha_i, alpha^_j> over the simple roots.
  IntMatrix cartan() const;
  // Reflection s_{alpha^} on M^ as a matrix: v -> v - <alpha, v> alpha^.
  IntMatrix coreflection(std::size_t root_index) const;
  std::optional<std::size_t> root_index(const ZVec& alpha) const;
};

RootDatum build_root_datum(Family family, int n);

// Hand-built datum; fundamental weights are filled in when the Cartan
// matrix of the chosen simple roots is invertible.
RootDatum make_root_datum(std::size_t rank, const IntMatrix& pairing, std::vector<ZVec> roots,
                          std::vector<ZVec> coroots, std::vector<std::size_t> simple);

std::vector<std::string> validate_root_datum(const RootDatum& phi);

// Swap (M, R) with (M^, R^).
RootDatum dual(const RootDatum& phi);

// Same lattices; roots restricted to the subsystem generated by the simple
// roots with the given simple indices.
RootDatum levi_datum(const RootDatum& phi, const std::vector<std::size_t>& simple_subset);

struct FundamentalGroupElement {
  ZVec coords;
  bool operator==(const FundamentalGroupElement&) const = default;
  auto operator<=>(const FundamentalGroupElement&) const = default;
};

// pi_1 = M^ / <R^>, or more generally M^ / <alpha^_i : i in D_P>.
class FundamentalGroup {
 public:
  FundamentalGroup() = default;
  explicit FundamentalGroup(QuotientLattice q) : quotient_(std::move(q)) {}

  const ZVec& invariant_factors() const { return quotient_.invariant_factors(); }
  FundamentalGroupElement project(const ZVec& cocharacter) const { return {quotient_.project(cocharacter)}; }
  QVec free_part(const QVec& x) const { return quotient_.free_part(x); }
  const QuotientLattice& quotient() const { return quotient_; }

 private:
  QuotientLattice quotient_;
};

FundamentalGroup fundamental_group(const RootDatum& phi);
FundamentalGroup parabolic_fundamental_group(const RootDatum& phi, const std::vector<std::size_t>& simple_subset);

}  // namespace tropgroups
