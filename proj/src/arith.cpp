#include "grossone/arith.hpp"

#include <string>
#include <vector>

#include "grossone/order.hpp"

namespace grossone {

namespace {

std::vector<RawTerm> raw_terms(const Numeral &t)
{
    std::vector<RawTerm> out;
    out.reserve(t.size());
    for (const auto &term : t.terms())
        out.push_back(RawTerm{term.digit, term.power});
    return out;
}

bool is_natural_constant(const Numeral &t)
{
    if (!t.is_constant())
        return false;
    const Rational v = t.constant_value();
    return v >= 0 && v.get_den() == 1 && v.get_num().fits_ulong_p();
}

} // namespace

Numeral negate(const Numeral &t) { return scale(t, Rational(-1)); }

Numeral scale(const Numeral &t, const Rational &c)
{
    if (c == 0 || t.is_zero())
        return Numeral();
    std::vector<Term> terms(t.terms().begin(), t.terms().end());
    for (auto &term : terms)
        term.digit *= c;
    // Scaling by a nonzero rational keeps the grosspower order intact.
    return make_canonical_unchecked(std::move(terms));
}

Numeral add(const Numeral &a, const Numeral &b, const Config &cfg)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    auto raw = raw_terms(a);
    for (const auto &term : b.terms())
        raw.push_back(RawTerm{term.digit, term.power});
    return canonicalize(raw, cfg);
}

Numeral sub(const Numeral &a, const Numeral &b, const Config &cfg)
{
    return add(a, negate(b), cfg);
}

Numeral mul(const Numeral &a, const Numeral &b, const Config &cfg)
{
    if (a.is_zero() || b.is_zero())
        return Numeral();
    if (a.is_constant())
        return scale(b, a.constant_value());
    if (b.is_constant())
        return scale(a, b.constant_value());
    std::vector<RawTerm> raw;
    raw.reserve(a.size() * b.size());
    for (const auto &x : a.terms()) {
        for (const auto &y : b.terms())
            raw.push_back(RawTerm{x.digit * y.digit, add(x.power, y.power, cfg)});
    }
    return canonicalize(raw, cfg);
}

Numeral int_pow(const Numeral &t, std::uint64_t n, const Config &cfg)
{
    Numeral result = Numeral::constant(1);
    Numeral base = t;
    while (n > 0) {
        if (n & 1U)
            result = mul(result, base, cfg);
        n >>= 1U;
        if (n > 0)
            base = mul(base, base, cfg);
    }
    return result;
}

Numeral div_exact(const Numeral &a, const Numeral &b, const Config &cfg)
{
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (a.is_zero())
        return Numeral();

    if (b.size() == 1) {
        const Term &d = b.terms().front();
        std::vector<RawTerm> raw;
        raw.reserve(a.size());
        for (const auto &term : a.terms())
            raw.push_back(RawTerm{term.digit / d.digit, sub(term.power, d.power, cfg)});
        return canonicalize(raw, cfg);
    }

    const Term &lead = b.terms().front();
    std::vector<RawTerm> quotient;
    Numeral remainder = a;
    while (!remainder.is_zero()) {
        if (quotient.size() >= cfg.division_budget)
            throw Error(ErrorKind::NotExactlyDivisible,
                        "long division did not terminate within " +
                            std::to_string(cfg.division_budget) + " quotient terms");
        const Term &r = remainder.terms().front();
        const Numeral step =
            Numeral::monomial(r.digit / lead.digit, sub(r.power, lead.power, cfg));
        quotient.push_back(RawTerm{step.terms().front().digit, step.terms().front().power});
        remainder = sub(remainder, mul(step, b, cfg), cfg);
    }
    Numeral q = canonicalize(quotient, cfg);
    if (!(mul(q, b, cfg) == a))
        throw Error(ErrorKind::NotExactlyDivisible, "quotient does not multiply back");
    return q;
}

Numeral pow_special(const Numeral &base, const Numeral &exp, const Config &cfg)
{
    if (base.is_zero() && !exp.is_zero() && sign(exp, cfg) == Sign::Positive)
        return Numeral();
    if (base.is_constant() && base.constant_value() == 1)
        return Numeral::constant(1);
    if (base.size() == 1 && base.terms().front().digit == 1) {
        const RawTerm t{1, mul(base.terms().front().power, exp, cfg)};
        return canonicalize(std::span(&t, 1), cfg);
    }
    if (is_natural_constant(exp))
        return int_pow(base, exp.constant_value().get_num().get_ui(), cfg);
    throw Error(ErrorKind::NotRepresentable, "power has no numeral form in this fragment");
}

} // namespace grossone
