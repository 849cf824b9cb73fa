#include "sdyn/spec_io.hpp"

#include "sdyn/errors.hpp"
#include "sdyn/sexpr.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

namespace sdyn {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(std::string(what) + " must be a \"p/q\" string or an integer");
}

int int_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
  return obj[key].get<int>();
}

RootSubset parse_x(const json& j, const RootDatum& rd) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "all") return RootSubset::all(rd);
    if (s == "none") return RootSubset::none(rd);
    throw ParseError("X must be \"all\", \"none\" or a list of root indices");
  }
  if (!j.is_array()) throw ParseError("X must be \"all\", \"none\" or a list of root indices");
  std::vector<int> idx;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("X entries must be integers");
    idx.push_back(e.get<int>());
  }
  try {
    return RootSubset::of(rd, idx);
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string("X: ") + e.what());
  }
}

TwoForm parse_d(const json& j, int rank) {
  TwoForm D = TwoForm::zero(rank);
  if (j.is_null()) return D;
  if (!j.is_array()) throw ParseError("D must be a list of {i, j, ratfun}");
  std::set<std::pair<int, int>> given;
  std::vector<std::tuple<int, int, RationalFunction>> entries;
  for (const auto& e : j) {
    if (!e.is_object()) throw ParseError("D entries must be objects");
    int i = int_field(e, "i");
    int k = int_field(e, "j");
    if (i < 0 || k < 0 || i >= rank || k >= rank) throw ParseError("D index out of range for rank " + std::to_string(rank));
    if (!e.contains("ratfun") || !e["ratfun"].is_string()) throw ParseError("D entry needs a 'ratfun' string");
    ScalarExpr f = ScalarExpr::parse(e["ratfun"].get<std::string>());
    auto rf = f.as_rational();
    if (!rf) throw ParseError("D entries must be rational functions (no coth)");
    if (!given.insert({i, k}).second) throw ParseError("D entry (" + std::to_string(i) + ", " + std::to_string(k) + ") given twice");
    entries.emplace_back(i, k, *rf);
  }
  for (const auto& [i, k, f] : entries) D.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = f;
  for (const auto& [i, k, f] : entries)
    if (!given.count({k, i})) D.d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = -f;
  return D;
}

std::map<int, int> parse_signs(const json& j) {
  std::map<int, int> out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw ParseError("sign_choice must map root indices to \"+\" or \"-\"");
  for (const auto& [key, value] : j.items()) {
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("sign_choice key '" + key + "' is not a root index");
    }
    int s = 0;
    if (value.is_string() && value.get<std::string>() == "+") s = 1;
    else if (value.is_string() && value.get<std::string>() == "-") s = -1;
    else if (value.is_number_integer() && (value.get<int>() == 1 || value.get<int>() == -1)) s = value.get<int>();
    else throw ParseError("sign_choice value for root " + key + " must be \"+\" or \"-\"");
    out[idx] = s;
  }
  return out;
}

void check_roots(const json& roots, const RootDatum& rd) {
  if (!roots.is_array()) throw ParseError("'roots' must be a list");
  if (static_cast<int>(roots.size()) != rd.size())
    throw ParseError("'roots' lists " + std::to_string(roots.size()) + " roots, algebra has " + std::to_string(rd.size()));
  for (int a = 0; a < rd.size(); ++a) {
    const auto& r = roots[static_cast<std::size_t>(a)];
    if (!r.contains("functional")) throw ParseError("root " + std::to_string(a) + " has no functional");
    RationalVector f;
    for (const auto& x : r["functional"]) f.push_back(rational_field(x, "functional entry"));
    if (f != rd.root(a).functional) throw ParseError("root " + std::to_string(a) + " does not match the algebra's root ordering");
  }
}

}  // namespace

LieSuperalgebra build_algebra(const std::string& family, int m, int n) {
  if (family == "gl") return build_gl(m, n);
  if (family == "sl") return build_sl(m, n);
  throw std::invalid_argument("unknown family '" + family + "' (expected gl or sl)");
}

LoadedSpec load_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  if (!j.contains("algebra") || !j["algebra"].is_string()) throw ParseError("missing string field 'algebra'");
  std::string family = j["algebra"].get<std::string>();
  if (family != "gl" && family != "sl") throw ParseError("algebra must be \"gl\" or \"sl\"");
  int m = int_field(j, "m");
  int n = int_field(j, "n");
  LieSuperalgebra g = build_algebra(family, m, n);
  RootDatum rd = root_decomposition(g);

  RMatrixSpec spec;
  try {
    spec.epsilon = j.contains("epsilon") ? rational_field(j["epsilon"], "epsilon") : Rational(0);
    spec.nu.assign(static_cast<std::size_t>(rd.rank()), Rational(0));
    if (j.contains("nu")) {
      if (!j["nu"].is_array()) throw ParseError("nu must be a list");
      spec.nu.clear();
      for (const auto& x : j["nu"]) spec.nu.push_back(rational_field(x, "nu entry"));
    }
    spec.X = j.contains("X") ? parse_x(j["X"], rd) : RootSubset::all(rd);
    spec.D = parse_d(j.contains("D") ? j["D"] : json(), rd.rank());
    spec.sign_choice = parse_signs(j.contains("sign_choice") ? j["sign_choice"] : json());
    if (j.contains("roots")) check_roots(j["roots"], rd);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed spec: ") + e.what());
  }
  return LoadedSpec{family, m, n, std::move(g), std::move(rd), std::move(spec)};
}

RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in rational list '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ParseError("empty rational list");
  return out;
}

}  // namespace sdyn
