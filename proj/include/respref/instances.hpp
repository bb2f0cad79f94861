#pragma once

#include <nlohmann/json_fwd.hpp>

#include "respref/algebra.hpp"

namespace respref {

/// Builds an algebra from an instance spec document, e.g.
///   {"kind": "tropical"}
///   {"kind": "chain", "n": 4}
///   {"kind": "extended-int"}
///   {"kind": "powerset", "universe": ["x", "y"]}
///   {"kind": "flat-capped", "n": 4}
///   {"kind": "product", "left": ..., "right": ...}
///   {"kind": "lex", "base": ..., "k": 2}
///   {"kind": "lex-omega", "base": ...}
///
/// Throws ValidationError on malformed specs and on lex/lex-omega over a
/// base that is not residuated with an absorbing bottom.
AlgebraPtr make_algebra(const nlohmann::json& spec);

AlgebraPtr make_algebra(const std::string& spec_text);

}  // namespace respref
