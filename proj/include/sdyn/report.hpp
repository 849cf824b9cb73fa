#pragma once

#include "sdyn/root_datum.hpp"
#include "sdyn/tensor.hpp"
#include "sdyn/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sdyn {

inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_digest(const std::string& text);

nlohmann::json to_json(const ResidualReport& rep);

/// [{indices, labels, coefficient}] ordered lexicographically by indices.
template <std::size_t R>
nlohmann::json tensor_to_json(const SparseTensor<R>& t, const LieSuperalgebra& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [idx, c] : t.terms()) {
    nlohmann::json labels = nlohmann::json::array();
    for (int i : idx) labels.push_back(g.label(i));
    out.push_back({{"indices", idx}, {"labels", labels}, {"coefficient", c.to_sexpr()}});
  }
  return out;
}

/// dim, labels, parities, structure constants [i, j, k, "p/q"], form matrix,
/// Cartan indices and the root list in the order spec files refer to.
nlohmann::json algebra_descriptor(const LieSuperalgebra& g, const RootDatum& rd);

struct RunSettings {
  int precision_bits = 128;
  double tolerance = 1e-25;
  int points = 20;
  std::uint64_t seed = 0;
};

nlohmann::json verification_report(const std::string& spec_text, const LieSuperalgebra& g,
                                   const std::vector<ResidualReport>& checks, const RunSettings& settings);

}  // namespace sdyn
