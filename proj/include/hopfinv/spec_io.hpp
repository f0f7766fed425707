#ifndef HOPFINV_SPEC_IO_HPP
#define HOPFINV_SPEC_IO_HPP

#include <string>

#include "hopfinv/action.hpp"

namespace hopfinv {

// Spec file schema (UTF-8 JSON):
//   { "field": {"kind":"rational"} | {"kind":"prime","p":7},
//     "rank": r,
//     "group_likes":     [ {"name":"g", "matrix":[[lit,...],...]}, ... ],
//     "skew_primitives": [ {"name":"d", "sigma":"g-or-1", "tau":"g-or-1",
//                           "matrix":[[lit,...],...]}, ... ],
//     "group_table": { "g,g": "1", ... } }          (optional)
// Matrices are row-major with entry [i][j] = coefficient of x_{i+1} in the
// image of x_{j+1}; entries are scalar literals (strings) or plain integers.

/// Structural parse only; throws ParseError on malformed documents.
ActionSpec parse_spec_json(const std::string& text);

/// Parse, then run validate_spec; findings of severity Error raise
/// ValidationError carrying their messages.
ActionSpec parse_spec_file(const std::string& text);

/// Canonical serialization; parse_spec_json(serialize_spec(s)) == s.
std::string serialize_spec(const ActionSpec& spec);

bool specs_equal(const ActionSpec& a, const ActionSpec& b);

} // namespace hopfinv

#endif
