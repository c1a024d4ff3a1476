#pragma once

#include <string_view>

#include "grossone/config.hpp"
#include "grossone/numeral.hpp"

namespace grossone {

/// Classes assigned by the purely syntactic rules on grosspowers.
enum class SyntacticClass { Finite, Infinite, Infinitesimal, Unclassified };

/// Classes assigned by value: comparison with every positive rational.
enum class SemanticClass { Zero, Infinitesimal, FiniteNonzero, Infinite };

/// How "finite" is read in the syntactic scheme.
enum class FiniteReading {
    /// Exactly one term, and its grosspower is 0.
    Literal,
    /// Some grosspower is 0 and all others are negative.
    Inclusive,
};

std::string_view to_string(SyntacticClass c) noexcept;
std::string_view to_string(SemanticClass c) noexcept;

/// Rules are tried in order Finite, Infinite (some grosspower > 0),
/// Infinitesimal (nonzero, all grosspowers < 0); what matches none of them,
/// zero included, is Unclassified.
SyntacticClass sergeyev_class(const Numeral &t, FiniteReading reading = FiniteReading::Literal,
                              const Config &cfg = {});

SemanticClass semantic_class(const Numeral &t, const Config &cfg = {});

} // namespace grossone
