#include "tropgroups/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropgroups/json_io.hpp"
#include "tropgroups/verify.hpp"

namespace tropgroups {

namespace {

class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::vector<std::string> positional;
  std::string family;
  int n = 0;
  std::string j = "1";
  std::optional<int> degree;
  std::string in;
  std::string out;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Request& r) {
  sub->add_option("args", r.positional, "family and n, or a verify suite name");
  sub->add_option("--family", r.family, "GL, SL, PGL, Sp, SO_odd, SO_even, G2");
  sub->add_option("--n", r.n, "family parameter");
  sub->add_option("--j", r.j, "circle length as p/q");
  sub->add_option("--degree", r.degree, "degree for verify det-homeo");
  sub->add_option("--in", r.in, "input JSON file, or inline JSON");
  sub->add_option("--out", r.out, "output file (default stdout)");
  sub->add_option("--seed", r.seed, "seed for randomized suites");
}

Json read_input(const Request& r) {
  if (r.in.empty()) throw RequestError("--in is required");
  std::string text;
  if (r.in.front() == '{') {
    text = r.in;
  } else {
    std::ifstream f(r.in);
    if (!f) throw RequestError("cannot open input file " + r.in);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

// Group from flags, then positional arguments, then the input file.
GroupPtr resolve_group(const Request& r, const Json* input) {
  std::string family = r.family;
  int n = r.n;
  if (family.empty() && !r.positional.empty()) family = r.positional[0];
  if (n == 0 && r.positional.size() > 1) n = parse_int(r.positional[1]);
  if (input && input->is_object()) {
    if (family.empty() && input->contains("family")) family = (*input)["family"].get<std::string>();
    if (n == 0 && input->contains("n")) n = (*input)["n"].get<int>();
  }
  if (family.empty()) throw RequestError("group family is required");
  Family f = parse_family(family);
  if (n == 0 && f == Family::G2) n = 2;
  return TropicalGroup::build(f, n);
}

Json cmd_group_info(const Request& r) { return group_info(*resolve_group(r, nullptr)); }

Json cmd_classify(const Request& r) {
  auto g = resolve_group(r, nullptr);
  Rational j = parse_rational(r.j);
  if (j <= 0) throw RequestError("--j must be positive");
  Json out;
  out["family"] = to_string(*g->datum().family);
  out["n"] = g->datum().n;
  out["j"] = to_string(j);
  Json comps = Json::array();
  for (const auto& d : classify_components(*g)) comps.push_back(to_json(d, *g));
  out["components"] = comps;
  return out;
}

Json cmd_check_stability(const Request& r) {
  Json input = read_input(r);
  auto g = resolve_group(r, &input);
  const Json& cj = input.contains("cocycle") ? input["cocycle"] : input;
  return to_json(check_stability(cocycle_from_json(cj, g)));
}

Json cmd_iso_test(const Request& r) {
  Json input = read_input(r);
  auto g = resolve_group(r, &input);
  if (!input.contains("c1") || !input.contains("c2")) throw RequestError("input needs \"c1\" and \"c2\"");
  auto c1 = cocycle_from_json(input["c1"], g);
  auto c2 = cocycle_from_json(input["c2"], g);
  auto res = are_isomorphic(c1, c2);
  Json out;
  out["isomorphic"] = res.isomorphic;
  out["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
  return out;
}

std::vector<int> requested_ns(const Request& r, std::vector<int> defaults) {
  if (r.n != 0) return {r.n};
  if (r.positional.size() > 1) return {parse_int(r.positional[1])};
  return defaults;
}

Json cmd_verify(const Request& r, bool& pass) {
  if (r.positional.empty()) throw RequestError("verify needs a suite: sl-count, pgl-count, det-homeo, relative-weyl");
  const std::string suite = r.positional[0];
  std::vector<SuiteCase> cases;
  if (suite == "sl-count") {
    for (int n : requested_ns(r, {2, 3, 4, 5})) cases.push_back(verify_sl_count(n));
  } else if (suite == "pgl-count") {
    for (int n : requested_ns(r, {2, 3, 4, 5})) cases.push_back(verify_pgl_count(n));
  } else if (suite == "det-homeo") {
    std::vector<std::pair<int, int>> pairs = {{2, 1}, {3, 1}, {3, 2}};
    if (r.n != 0 || r.degree) {
      if (r.n == 0 || !r.degree) throw RequestError("det-homeo needs both --n and --degree");
      if (r.n < 1) throw RequestError("--n must be positive");
      pairs = {{r.n, *r.degree}};
    }
    for (auto [n, d] : pairs) cases.push_back(verify_det_homeo(n, d, r.seed));
  } else if (suite == "relative-weyl") {
    std::vector<std::pair<Family, int>> groups = {{Family::GL, 4}, {Family::Sp, 2}, {Family::Sp, 3}, {Family::G2, 2}};
    if (!r.family.empty()) groups = {{parse_family(r.family), r.n != 0 ? r.n : 2}};
    for (auto [f, n] : groups) cases.push_back(verify_relative_weyl(f, n));
  } else {
    throw RequestError("unknown verify suite: " + suite);
  }
  pass = true;
  Json out;
  out["suite"] = suite;
  Json list = Json::array();
  for (auto& c : cases) {
    pass = pass && c.pass;
    list.push_back(c.report);
  }
  out["cases"] = list;
  out["pass"] = pass;
  return out;
}

void emit(const Request& r, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (r.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(r.out, std::ios::binary);
  if (!f) throw RequestError("cannot open output file " + r.out);
  f << text;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical reductive groups and their bundles on metric circles"};
  app.require_subcommand(1);
  Request r;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const char* name : {"group-info", "classify", "check-stability", "iso-test", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, r);
    subs.emplace_back(name, sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string command;
  for (auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    bool pass = true;
    Json result;
    if (command == "group-info") result = cmd_group_info(r);
    else if (command == "classify") result = cmd_classify(r);
    else if (command == "check-stability") result = cmd_check_stability(r);
    else if (command == "iso-test") result = cmd_iso_test(r);
    else result = cmd_verify(r, pass);
    emit(r, result, out);
    return pass ? 0 : 1;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const RequestError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tropgroups
