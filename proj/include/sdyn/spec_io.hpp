#pragma once

#include "sdyn/rmatrix.hpp"

#include <string>

namespace sdyn {

/// An r-matrix spec file together with the algebra it names.
///
/// JSON schema:
///   { "algebra": "gl" | "sl", "m": 2, "n": 1,
///     "epsilon": "p/q",                      (default "0")
///     "nu": ["p/q", ...],                    (default all zero)
///     "X": "all" | "none" | [root indices],  (default "all")
///     "D": [{"i": 0, "j": 1, "ratfun": "<s-expression>"}],
///     "sign_choice": {"<positive root index>": "+" | "-"},
///     "roots": [...] }                       (optional, see below)
/// A D entry sets D_ij; D_ji is set to -D_ij unless given explicitly.
/// "roots" may carry the root list of an exported algebra descriptor; each
/// functional must then match the root with the same index.
struct LoadedSpec {
  std::string family;
  int m = 0;
  int n = 0;
  LieSuperalgebra g;
  RootDatum rd;
  RMatrixSpec spec;
};

/// Throws ParseError for malformed input, DegenerateFormError /
/// std::invalid_argument for an unsupported algebra.
LoadedSpec load_spec(const std::string& json_text);

LieSuperalgebra build_algebra(const std::string& family, int m, int n);

/// Rationals separated by commas, e.g. "2, -1/3".
RationalVector parse_rational_list(const std::string& text);

}  // namespace sdyn
