#include "grossone/order.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "grossone/arith.hpp"

namespace grossone {

namespace {

enum class Magnitude { Less, Comparable, Greater };

Sign sign_of(const Rational &q)
{
    const int s = sgn(q);
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

int limit_sign(const ExtendedLimit &l)
{
    if (std::holds_alternative<NegativeInfinity>(l))
        return -1;
    if (std::holds_alternative<PositiveInfinity>(l))
        return 1;
    return sgn(std::get<Rational>(l));
}

bool tends_to_zero(const Numeral &t, const Config &cfg)
{
    if (t.is_zero())
        return true;
    const ExtendedLimit l = limit(t, cfg);
    return std::holds_alternative<Rational>(l) && std::get<Rational>(l) == 0;
}

// Ratio test between G^p1 L^k1 and G^p2 L^k2. A grosspower gap with nonzero
// limit outweighs any power of L; an infinitesimal gap d has |d L| -> 0, so
// G^d -> 1 and the log degrees decide.
Magnitude compare_magnitude(const Numeral &p1, unsigned k1, const Numeral &p2, unsigned k2,
                            const Config &cfg)
{
    const Numeral gap = sub(p1, p2, cfg);
    if (!gap.is_zero()) {
        const int s = limit_sign(limit(gap, cfg));
        if (s > 0)
            return Magnitude::Greater;
        if (s < 0)
            return Magnitude::Less;
    }
    if (k1 > k2)
        return Magnitude::Greater;
    if (k1 < k2)
        return Magnitude::Less;
    return Magnitude::Comparable;
}

Magnitude compare_magnitude(const Dominant &a, const Dominant &b, const Config &cfg)
{
    return compare_magnitude(a.power, a.logdeg, b.power, b.logdeg, cfg);
}

// Drops grosspower terms that tend to zero.
Numeral strip_vanishing(const Numeral &power, const Config &cfg)
{
    std::vector<Term> kept;
    kept.reserve(power.size());
    for (const auto &term : power.terms()) {
        if (term.power.is_zero() || limit_sign(limit(term.power, cfg)) >= 0)
            kept.push_back(term);
    }
    if (kept.size() == power.size())
        return power;
    return make_canonical_unchecked(std::move(kept));
}

void merge_like(std::vector<GenMonomial> &sum)
{
    std::stable_sort(sum.begin(), sum.end(), [](const GenMonomial &a, const GenMonomial &b) {
        if (auto c = structural_compare(a.power, b.power); c != 0)
            return c < 0;
        return a.logdeg < b.logdeg;
    });
    std::vector<GenMonomial> out;
    out.reserve(sum.size());
    for (auto &m : sum) {
        if (!out.empty() && out.back().logdeg == m.logdeg && out.back().power == m.power)
            out.back().coeff += m.coeff;
        else
            out.push_back(std::move(m));
    }
    std::erase_if(out, [](const GenMonomial &m) { return m.coeff == 0; });
    sum = std::move(out);
}

[[noreturn]] void undecided(const std::string &why)
{
    throw Error(ErrorKind::Undecided, "order undecided: " + why);
}

} // namespace

std::string_view to_string(Sign s) noexcept
{
    switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    }
    return "?";
}

std::string_view to_string(Ordering o) noexcept
{
    switch (o) {
    case Ordering::Less: return "LT";
    case Ordering::Equal: return "EQ";
    case Ordering::Greater: return "GT";
    }
    return "?";
}

// Sign determination for sum_i c_i G^{p_i} L^{k_i}.
//
// The terms whose grosspowers differ from the largest one, p*, only
// infinitesimally form the leading archimedean class. Inside it
//   G^{p_i} = G^{p*} exp(d_i L),  d_i = p_i - p* <= 0 infinitesimal,
// and exp(d_i L) is expanded to order E with Lagrange remainder
// |d_i L|^{E+1}/(E+1)! (valid because d_i L <= 0). The truncated expansion is a
// sum whose grosspowers are one level lower, so its dominant monomial is found
// recursively. It is accepted only if it strictly beats the remainder bound
// and everything outside the class; otherwise E grows up to the budget.
Dominant dominant_of(std::vector<GenMonomial> sum, const Config &cfg)
{
    merge_like(sum);
    if (sum.empty())
        throw Error(ErrorKind::ZeroInput, "dominant monomial of zero");

    const bool rational_powers = std::all_of(sum.begin(), sum.end(), [](const GenMonomial &m) {
        return m.power.is_constant();
    });
    if (rational_powers) {
        const auto top = std::max_element(sum.begin(), sum.end(), [](const GenMonomial &a,
                                                                     const GenMonomial &b) {
            const int c = cmp(a.power.constant_value(), b.power.constant_value());
            return c != 0 ? c < 0 : a.logdeg < b.logdeg;
        });
        return Dominant{top->power, top->logdeg, sign_of(top->coeff), top->coeff};
    }

    std::sort(sum.begin(), sum.end(), [&cfg](const GenMonomial &a, const GenMonomial &b) {
        const Ordering o = compare(a.power, b.power, cfg);
        if (o != Ordering::Equal)
            return o == Ordering::Greater;
        return a.logdeg > b.logdeg;
    });

    const Numeral top = sum.front().power;
    std::vector<Numeral> offsets{Numeral()};
    std::size_t class_size = 1;
    while (class_size < sum.size()) {
        Numeral d = sub(sum[class_size].power, top, cfg);
        if (!tends_to_zero(d, cfg))
            break;
        offsets.push_back(std::move(d));
        ++class_size;
    }
    const std::vector<GenMonomial> rest(sum.begin() + static_cast<std::ptrdiff_t>(class_size),
                                        sum.end());

    // Size of each nonzero offset: |d_i| ~ G^{q_i} L^{j_i} with lim q_i < 0.
    std::vector<std::optional<Dominant>> offset_size(class_size);
    bool has_tail = false;
    for (std::size_t i = 0; i < class_size; ++i) {
        if (offsets[i].is_zero())
            continue;
        has_tail = true;
        Dominant d = dominant(offsets[i], cfg);
        if (d.power.is_zero() || limit_sign(limit(d.power, cfg)) >= 0)
            undecided("infinitesimal offset is not power-small");
        offset_size[i] = std::move(d);
    }
    const bool uniform_logdeg =
        std::all_of(sum.begin(), sum.begin() + static_cast<std::ptrdiff_t>(class_size),
                    [&](const GenMonomial &m) { return m.logdeg == sum.front().logdeg; });

    std::optional<Dominant> rest_dominant;
    std::vector<Numeral> offset_power(class_size, Numeral::constant(1));
    std::vector<GenMonomial> expansion;
    Rational factorial = 1;
    const unsigned max_order = has_tail ? cfg.expansion_budget : 0;

    for (unsigned e = 0; e <= max_order; ++e) {
        if (e > 0) {
            factorial *= e;
            for (std::size_t i = 0; i < class_size; ++i)
                offset_power[i] = mul(offset_power[i], offsets[i], cfg);
        }
        for (std::size_t i = 0; i < class_size; ++i) {
            for (const auto &term : offset_power[i].terms())
                expansion.push_back(GenMonomial{sum[i].coeff * term.digit / factorial, term.power,
                                                sum[i].logdeg + e});
        }
        merge_like(expansion);
        if (expansion.empty()) {
            if (uniform_logdeg && e + 1 >= class_size)
                throw std::logic_error("class expansion vanished past the Vandermonde bound");
            continue;
        }

        const Dominant inner = dominant_of(expansion, cfg);
        Dominant candidate{add(top, inner.power, cfg), inner.logdeg, inner.sign, inner.coeff};

        const bool beats_rest = std::all_of(rest.begin(), rest.end(), [&](const GenMonomial &m) {
            return compare_magnitude(candidate.power, candidate.logdeg, m.power, m.logdeg, cfg) ==
                   Magnitude::Greater;
        });
        if (!beats_rest) {
            if (!rest_dominant)
                rest_dominant = dominant_of(rest, cfg);
            switch (compare_magnitude(candidate, *rest_dominant, cfg)) {
            case Magnitude::Greater:
                break;
            case Magnitude::Less:
                candidate = *rest_dominant;
                break;
            case Magnitude::Comparable: {
                const Rational merged = candidate.coeff + rest_dominant->coeff;
                if (merged == 0)
                    continue;
                candidate.coeff = merged;
                candidate.sign = sign_of(merged);
                break;
            }
            }
        }

        bool tail_ok = true;
        for (std::size_t i = 0; i < class_size && tail_ok; ++i) {
            if (!offset_size[i])
                continue;
            const Numeral bound_power = add(top, scale(offset_size[i]->power, Rational(e + 1)), cfg);
            const unsigned bound_logdeg = (e + 1) * offset_size[i]->logdeg + sum[i].logdeg + e + 1;
            tail_ok = compare_magnitude(candidate.power, candidate.logdeg, bound_power, bound_logdeg,
                                        cfg) == Magnitude::Greater;
        }
        if (tail_ok) {
            candidate.power = strip_vanishing(candidate.power, cfg);
            return candidate;
        }
    }
    undecided("expansion budget of " + std::to_string(cfg.expansion_budget) + " exhausted");
}

Dominant dominant(const Numeral &t, const Config &cfg)
{
    if (t.is_zero())
        throw Error(ErrorKind::ZeroInput, "dominant monomial of zero");
    if (t.level() > cfg.max_level)
        throw Error(ErrorKind::LevelExceeded, "numeral level exceeds configured maximum");
    if (t.level() <= 1) {
        const Term &lead = t.terms().front();
        return Dominant{lead.power, 0, sign_of(lead.digit), lead.digit};
    }
    std::vector<GenMonomial> sum;
    sum.reserve(t.size());
    for (const auto &term : t.terms())
        sum.push_back(GenMonomial{term.digit, term.power, 0});
    return dominant_of(std::move(sum), cfg);
}

Sign sign(const Numeral &t, const Config &cfg)
{
    if (t.is_zero())
        return Sign::Zero;
    return dominant(t, cfg).sign;
}

Ordering compare(const Numeral &a, const Numeral &b, const Config &cfg)
{
    if (a == b)
        return Ordering::Equal;
    if (a.is_constant() && b.is_constant())
        return a.constant_value() < b.constant_value() ? Ordering::Less : Ordering::Greater;
    return sign(sub(a, b, cfg), cfg) == Sign::Positive ? Ordering::Greater : Ordering::Less;
}

ExtendedLimit limit(const Numeral &t, const Config &cfg)
{
    if (t.is_constant())
        return t.constant_value();
    const Dominant d = dominant(t, cfg);
    const int growth = d.power.is_zero() ? 0 : limit_sign(limit(d.power, cfg));
    if (growth < 0)
        return Rational(0);
    if (growth > 0 || d.logdeg > 0) {
        if (d.sign == Sign::Positive)
            return PositiveInfinity{};
        return NegativeInfinity{};
    }
    return d.coeff;
}

bool is_infinitesimal(const Numeral &t, const Config &cfg)
{
    return !t.is_zero() && tends_to_zero(t, cfg);
}

} // namespace grossone
