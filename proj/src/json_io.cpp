#include "tropgroups/json_io.hpp"

#include <stdexcept>

#include "tropgroups/checked.hpp"
#include "tropgroups/perm.hpp"

namespace tropgroups {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const ZVec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json to_json(const TropValue& v) { return to_string(v); }

Json to_json(const TropMatrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const FundamentalGroupElement& e) { return to_json(e.coords); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return from_int64(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  QVec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

ZVec zvec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  ZVec out;
  for (const auto& x : j) {
    Rational q = rational_from_json(x);
    if (!is_integral(q)) throw std::invalid_argument("expected an integer entry");
    out.push_back(to_int64(q.get_num()));
  }
  return out;
}

TropMatrix trop_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("expected a matrix");
  TropMatrix a(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != a.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Json& e = j[r][c];
      a(r, c) = e.is_string() ? parse_trop_value(e.get<std::string>()) : TropValue(rational_from_json(e));
    }
  }
  return a;
}

Json to_json(const CircleCocycle& c) {
  Json out;
  out["m"] = to_json(c.m);
  out["alpha"] = to_json(c.alpha);
  out["w"] = c.w;
  out["j"] = to_string(c.j);
  return out;
}

CircleCocycle cocycle_from_json(const Json& j, const GroupPtr& g) {
  if (!j.is_object()) throw std::invalid_argument("cocycle must be a JSON object");
  for (const char* key : {"m", "alpha", "w"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("cocycle is missing \"") + key + "\"");
  std::size_t w = 0;
  const Json& jw = j["w"];
  if (jw.is_number_unsigned() || jw.is_number_integer()) {
    auto idx = jw.get<std::int64_t>();
    if (idx < 0) throw std::invalid_argument("Weyl index must be nonnegative");
    w = static_cast<std::size_t>(idx);
  } else if (jw.is_array()) {
    Perm p;
    for (const auto& x : jw) p.push_back(x.get<int>());
    if (!is_permutation(p)) throw std::invalid_argument("\"w\" is not a permutation");
    auto found = g->weyl().find_permutation(p);
    if (!found) throw std::invalid_argument("\"w\" is not in the Weyl group");
    w = *found;
  } else {
    throw std::invalid_argument("\"w\" must be an index or a permutation");
  }
  if (w >= g->weyl().order()) throw std::invalid_argument("Weyl index out of range");
  Rational len = j.contains("j") ? rational_from_json(j["j"]) : Rational(1);
  return make_cocycle(g, zvec_from_json(j["m"]), qvec_from_json(j["alpha"]), w, len);
}

Json to_json(const GaugeTriple& g) {
  Json out;
  out["k"] = to_json(g.k);
  out["beta"] = to_json(g.beta);
  out["v"] = g.v;
  return out;
}

Json to_json(const ComponentDescription& d, const TropicalGroup& g) {
  Json out;
  out["class_rep"] = d.class_rep;
  if (g.weyl().has_permutation_model()) out["class_rep_cycles"] = cycle_string(g.weyl().permutation(d.class_rep));
  out["class_size"] = d.class_size;
  out["torus_rank"] = d.torus_rank;
  out["invariant_factors"] = to_json(d.invariant_factors);
  out["centralizer_order"] = d.centralizer_order;
  Json images = Json::array();
  for (const auto& e : d.degree_images) images.push_back(to_json(e));
  out["degree_images"] = images;
  out["discrete_orbits"] = d.discrete_orbits ? Json(*d.discrete_orbits) : Json(nullptr);
  return out;
}

Json to_json(const StabilityReport& r) {
  Json out;
  out["semistable"] = r.semistable;
  out["stable"] = r.stable;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    Json dp = Json::array();
    for (auto i : v.simple_subset) dp.push_back(i);
    e["D_P"] = dp;
    e["lambda_P"] = to_json(v.lambda_p);
    e["slope_P"] = to_json(v.slope_p);
    e["slope_G"] = to_json(v.slope_g);
    e["strict_only"] = v.strict_only;
    vs.push_back(e);
  }
  out["violations"] = vs;
  return out;
}

Json group_info(const TropicalGroup& g) {
  Json out;
  out["weyl_order"] = g.weyl().order();
  out["pi1"] = to_json(g.pi1().invariant_factors());
  out["center_rank"] = center(g).size();
  return out;
}

}  // namespace tropgroups
