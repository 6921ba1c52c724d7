#pragma once

#include <string>

#include <json.hpp>

#include "kirbyspin/framed_link.hpp"

namespace kirby {

// Integer <-> JSON with arbitrary precision: values that fit in a JSON
// number (int64) are emitted as numbers, anything larger as a decimal
// string.  The parser accepts either form, so round-trips are lossless.
nlohmann::ordered_json int_json(const Int& v);
Int parse_int_json(const nlohmann::json& j, const std::string& where);

// {"components": [...names...], "matrix": [[...]]}
nlohmann::ordered_json framed_link_json(const FramedLink& l);
FramedLink parse_framed_link(const nlohmann::json& j);

// Convenience: parse raw text, mapping JSON syntax errors to ParseError.
nlohmann::json parse_json_text(const std::string& text, const std::string& what);

}  // namespace kirby
