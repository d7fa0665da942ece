#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ringtop/ring.hpp"

namespace ringtop {

/// Shorthand grammar:
///   zn:<n> | prod:<spec>,<spec> | ut:f2|f3 | m2:f2|f3 | file:<path>
/// The returned ring's spec field echoes the shorthand so results replay.
FiniteRing parse_ring_spec(const std::string& spec);

/// JSON ring description:
///   {"kind":"zn","n":6}
///   {"kind":"matrix","base":{...},"k":2}
///   {"kind":"upper_triangular","base":{...}}
///   {"kind":"product","first":{...},"second":{...}}
///   {"kind":"tables","order":n,"add":[row-major],"mul":[row-major],
///    "zero":i,"one":j,"labels":[...]?}
FiniteRing ring_from_json(const nlohmann::json& j);

/// Accepts an element as a decimal index ("5") or an exact label
/// ("[[1,1],[0,0]]"); labels win when both readings are possible.
elem parse_element(const FiniteRing& r, std::string_view text);

ActionSide parse_side(std::string_view text);

}  // namespace ringtop
