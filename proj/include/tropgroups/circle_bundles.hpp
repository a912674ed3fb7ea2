#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropgroups/rational.hpp"
#include "tropgroups/root_data.hpp"
#include "tropgroups/trop_group.hpp"

namespace tropgroups {

// Transition datum of a G-bundle on the circle R/jZ: the affine section
// x -> (alpha + x m, w) of M^_R x| W. Gauges act by h(x) c(x) h(x + j)^{-1}.
struct CircleCocycle {
  GroupPtr parent;
  ZVec m;
  QVec alpha;
  std::size_t w = 0;
  Rational j = 1;

  bool operator==(const CircleCocycle& o) const {
    return parent == o.parent && m == o.m && alpha == o.alpha && w == o.w && j == o.j;
  }
};

// Throws std::invalid_argument on wrong ranks or j <= 0, std::out_of_range
// for w outside W.
CircleCocycle make_cocycle(const GroupPtr& g, ZVec m, QVec alpha, std::size_t w, Rational j);

// Constant-slope gauge h(x) = (beta + x k, v).
struct GaugeTriple {
  ZVec k;
  QVec beta;
  std::size_t v = 0;
};

GaugeTriple identity_gauge(const TropicalGroup& g);

// (k + v.m - u.k, beta + v.alpha - u.(beta + j k), u) with u = v w v^{-1}.
CircleCocycle gauge_transform(const CircleCocycle& c, const GaugeTriple& g);
CircleCocycle gauge_transform(const CircleCocycle& c, const ZVec& k, const QVec& beta, std::size_t v);

// Gauge product in (M^ x M^_Q) x| W: acting by the result equals acting by
// `first` and then by `second`.
GaugeTriple compose_gauge(const TropicalGroup& g, const GaugeTriple& second, const GaugeTriple& first);

FundamentalGroupElement degree(const CircleCocycle& c);

struct IsoResult {
  bool isomorphic = false;
  std::optional<GaugeTriple> witness;  // gauge_transform(c1, *witness) == c2
};

// Witness uses the least v in the Weyl order. Throws std::invalid_argument
// on parent or length mismatch.
IsoResult are_isomorphic(const CircleCocycle& c1, const CircleCocycle& c2);

struct ComponentDescription {
  std::size_t class_rep = 0;  // least element of the conjugacy class
  std::size_t class_size = 0;
  std::size_t torus_rank = 0;        // rank ker(1 - w)
  ZVec invariant_factors;            // of M^ / (1 - w) M^, torsion then 0s
  std::size_t centralizer_order = 0;
  std::vector<std::size_t> centralizer;
  // pi_1 image of each SNF generator of M^ / (1 - w) M^.
  std::vector<FundamentalGroupElement> degree_images;
  // Number of C_W(w)-orbits on the discrete part when it is finite.
  std::optional<std::size_t> discrete_orbits;
};

std::vector<ComponentDescription> classify_components(const TropicalGroup& g);

CircleCocycle pushforward(const TropGroupHom& f, const CircleCocycle& c);

struct CoverComponent {
  std::vector<int> cycle;  // slots of sigma, starting at the least one
  Rational length;         // cycle length times j
  std::int64_t degree = 0;
  // Transition offset of the line bundle on the cover circle, reduced mod
  // `length`, for the origin at the first slot of the cycle.
  Rational jacobian_coordinate;
  // Reduction modulus j gcd(cycle length, degree): moving the origin by a
  // deck rotation shifts the coordinate by multiples of j degree.
  Rational jacobian_modulus;
  Rational jacobian_class;
};

struct SpViolation {
  std::size_t component = 0;
  std::string reason;
};

struct MultiLineBundle {
  Rational j;
  Perm sigma;
  std::vector<CoverComponent> components;
  // Sp structure: iota on slots, its action on components, and the
  // trivialization check of (L (x) iota^* L) / iota.
  std::optional<Perm> involution;
  std::vector<std::size_t> component_involution;
  std::vector<SpViolation> violations;
  bool sp_ok() const { return involution.has_value() && violations.empty(); }
};

// Requires a GL parent.
MultiLineBundle to_multiline(const CircleCocycle& c);

// Accepts a cocycle over Sp_2n, or over GL_2n to test for an Sp structure.
MultiLineBundle sp_structure(const CircleCocycle& c);

}  // namespace tropgroups
