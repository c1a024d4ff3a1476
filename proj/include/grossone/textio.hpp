#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "grossone/config.hpp"
#include "grossone/numeral.hpp"

namespace grossone {

/// Parses the numeral notation, G standing for the unit:
///
///   numeral := sterm (("+" | "-") term)*
///   sterm   := "-"? term
///   term    := coeff ("*"? gross)? | gross
///   gross   := "G" ("^" power)?
///   power   := snum | "(" numeral ")"
///   coeff   := num
///   num     := digits ("." digits)? | digits "/" digits
///   snum    := "-"? num
///
/// Whitespace between tokens is ignored; decimals are read exactly.
/// Throws SyntaxError (with a byte offset) and propagates LevelExceeded or
/// Undecided from canonicalization.
Numeral parse(std::string_view text, const Config &cfg = {});

/// Canonical text: terms in decreasing grosspower order, e.g. "G + 1",
/// "3/2*G^2 - G^(-1)", "G^(G^(-1))". parse(print_canonical(t)) == t.
std::string print_canonical(const Numeral &t);

std::string to_string(const Rational &q);

/// {"terms": [{"digit": {"num": "..", "den": ".."}, "power": {...}}]}
nlohmann::json to_json(const Numeral &t);
Numeral from_json(const nlohmann::json &j, const Config &cfg = {});

} // namespace grossone
