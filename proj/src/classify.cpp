#include "grossone/classify.hpp"

#include <algorithm>
#include <variant>

#include "grossone/order.hpp"

namespace grossone {

std::string_view to_string(SyntacticClass c) noexcept
{
    switch (c) {
    case SyntacticClass::Finite: return "Finite";
    case SyntacticClass::Infinite: return "Infinite";
    case SyntacticClass::Infinitesimal: return "Infinitesimal";
    case SyntacticClass::Unclassified: return "Unclassified";
    }
    return "?";
}

std::string_view to_string(SemanticClass c) noexcept
{
    switch (c) {
    case SemanticClass::Zero: return "Zero";
    case SemanticClass::Infinitesimal: return "Infinitesimal";
    case SemanticClass::FiniteNonzero: return "FiniteNonzero";
    case SemanticClass::Infinite: return "Infinite";
    }
    return "?";
}

SyntacticClass sergeyev_class(const Numeral &t, FiniteReading reading, const Config &cfg)
{
    const auto terms = t.terms();
    if (terms.empty())
        return SyntacticClass::Unclassified;

    std::vector<Sign> power_signs;
    power_signs.reserve(terms.size());
    for (const auto &term : terms)
        power_signs.push_back(sign(term.power, cfg));

    const auto count = [&](Sign s) { return std::count(power_signs.begin(), power_signs.end(), s); };
    const auto zeros = count(Sign::Zero);
    const auto negatives = count(Sign::Negative);
    const auto positives = count(Sign::Positive);

    if (reading == FiniteReading::Literal && terms.size() == 1 && zeros == 1)
        return SyntacticClass::Finite;
    if (reading == FiniteReading::Inclusive && zeros == 1 &&
        negatives == static_cast<std::ptrdiff_t>(terms.size()) - 1)
        return SyntacticClass::Finite;
    if (positives > 0)
        return SyntacticClass::Infinite;
    if (negatives == static_cast<std::ptrdiff_t>(terms.size()))
        return SyntacticClass::Infinitesimal;
    return SyntacticClass::Unclassified;
}

SemanticClass semantic_class(const Numeral &t, const Config &cfg)
{
    if (t.is_zero())
        return SemanticClass::Zero;
    const ExtendedLimit l = limit(t, cfg);
    if (!std::holds_alternative<Rational>(l))
        return SemanticClass::Infinite;
    return std::get<Rational>(l) == 0 ? SemanticClass::Infinitesimal : SemanticClass::FiniteNonzero;
}

} // namespace grossone
