#include "sdyn/report.hpp"

#include <cstdint>
#include <cstdio>

namespace sdyn {

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json to_json(const ResidualReport& rep) {
  nlohmann::json j = {{"check", rep.check}, {"status", to_string(rep.status)}, {"passed", rep.passed()}};
  if (rep.status == ZeroStatus::probably_zero) {
    j["max_abs"] = rep.max_abs;
    j["points"] = rep.points;
  }
  if (rep.status == ZeroStatus::nonzero) {
    j["witness"] = rep.witness;
    if (!rep.sample_point.empty()) j["sample_point"] = rep.sample_point;
    if (rep.max_abs != 0.0) j["max_abs"] = rep.max_abs;
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  j["seconds"] = rep.seconds;
  return j;
}

namespace {

nlohmann::json rationals(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

nlohmann::json algebra_descriptor(const LieSuperalgebra& g, const RootDatum& rd) {
  nlohmann::json parities = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i) {
    parities.push_back(to_string(g.parity(i)));
    labels.push_back(g.label(i));
  }
  nlohmann::json structure = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (const auto& t : g.bracket_terms(i, j)) structure.push_back({i, j, t.index, t.coefficient.get_str()});
  nlohmann::json form = nlohmann::json::array();
  for (const auto& row : g.form_matrix()) form.push_back(rationals(row));
  nlohmann::json cartan = nlohmann::json::array();
  for (int x : g.cartan_indices()) cartan.push_back(x);
  nlohmann::json roots = nlohmann::json::array();
  for (int a = 0; a < rd.size(); ++a) {
    const Root& r = rd.root(a);
    roots.push_back({{"index", a},
                     {"basis_index", r.basis_index},
                     {"label", g.label(r.basis_index)},
                     {"functional", rationals(r.functional)},
                     {"parity", to_string(r.parity)},
                     {"positive", r.positive},
                     {"negative", rd.negative(a)},
                     {"A", rd.sign_A(a)},
                     {"pairing", rd.pairing(a).get_str()},
                     {"coroot", rationals(rd.coroot_coordinates(a))}});
  }
  return {{"name", g.name()}, {"dim", g.dim()},      {"rank", g.rank()},   {"labels", labels},
          {"parities", parities}, {"structure", structure}, {"form", form}, {"cartan", cartan},
          {"roots", roots}};
}

nlohmann::json verification_report(const std::string& spec_text, const LieSuperalgebra& g,
                                   const std::vector<ResidualReport>& checks, const RunSettings& settings) {
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    all = all && c.passed();
  }
  return {{"spec_digest", fnv1a_digest(spec_text)},
          {"algebra", g.name()},
          {"tool_version", kToolVersion},
          {"precision_bits", settings.precision_bits},
          {"tolerance", settings.tolerance},
          {"points", settings.points},
          {"seed", settings.seed},
          {"passed", all},
          {"checks", list}};
}

}  // namespace sdyn
