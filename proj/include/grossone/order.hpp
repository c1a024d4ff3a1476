#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "grossone/config.hpp"
#include "grossone/numeral.hpp"

namespace grossone {

// Semantics: a numeral denotes the function B -> sum c_i B^{p_i(B)}, and
// every order question is about its eventual behaviour as the base B grows.
// G = nu! with nu infinitely large is exactly such a base.

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class Ordering { Less, Equal, Greater };

std::string_view to_string(Sign s) noexcept;
std::string_view to_string(Ordering o) noexcept;

/// Internal term of the order engine: coeff * G^power * L^logdeg, L = log G.
struct GenMonomial {
    Rational coeff;
    Numeral power;
    unsigned logdeg = 0;
};

/// Leading asymptotic behaviour: value ~ coeff * G^power * L^logdeg.
/// `power` is reported modulo infinitesimal parts (terms of the grosspower
/// that tend to 0 are dropped since they do not change the ratio limit).
struct Dominant {
    Numeral power;
    unsigned logdeg = 0;
    Sign sign = Sign::Zero;
    Rational coeff;
};

struct NegativeInfinity {
    friend bool operator==(NegativeInfinity, NegativeInfinity) { return true; }
};
struct PositiveInfinity {
    friend bool operator==(PositiveInfinity, PositiveInfinity) { return true; }
};
using ExtendedLimit = std::variant<NegativeInfinity, Rational, PositiveInfinity>;

Sign sign(const Numeral &t, const Config &cfg = {});
Ordering compare(const Numeral &a, const Numeral &b, const Config &cfg = {});

/// Throws Error{ZeroInput} for t == 0 and Error{Undecided} when the expansion
/// budget runs out before a dominance certificate is found.
Dominant dominant(const Numeral &t, const Config &cfg = {});

ExtendedLimit limit(const Numeral &t, const Config &cfg = {});

/// Nonzero with limit 0.
bool is_infinitesimal(const Numeral &t, const Config &cfg = {});

/// Dominant monomial of a general sum of GenMonomials. Exposed for tests.
Dominant dominant_of(std::vector<GenMonomial> sum, const Config &cfg = {});

} // namespace grossone
