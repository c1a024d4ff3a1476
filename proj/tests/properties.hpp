#pragma once

// Property checks shared by the unit suite (small sample) and the acceptance
// runner (full sample). Each returns counts instead of asserting so the
// caller decides how to report.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grossone/arith.hpp"
#include "grossone/oracle.hpp"
#include "grossone/order.hpp"
#include "grossone/textio.hpp"
#include "support.hpp"

namespace grossone::testing {

struct PropertyStats {
    int cases = 0;
    int decided = 0;
    int undecided = 0;
    int failures = 0;
    std::vector<std::string> notes;

    double undecided_rate() const { return cases == 0 ? 0.0 : double(undecided) / cases; }

    void fail(const std::string &what)
    {
        ++failures;
        if (notes.size() < 10)
            notes.push_back(what);
    }
};

/// Runs `body` for one case; an Undecided anywhere marks the case undecided.
inline void run_case(PropertyStats &stats, const std::function<void()> &body)
{
    ++stats.cases;
    try {
        body();
        ++stats.decided;
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::Undecided)
            throw;
        ++stats.undecided;
    }
}

inline std::string show(const Numeral &a) { return print_canonical(a); }

inline PropertyStats check_ring_axioms(std::uint64_t seed, int count)
{
    NumeralGenerator gen(seed);
    PropertyStats stats;
    for (int i = 0; i < count; ++i) {
        const Numeral a = gen.numeral();
        const Numeral b = gen.numeral();
        const Numeral c = gen.numeral();
        run_case(stats, [&] {
            const auto ctx = "a=" + show(a) + " b=" + show(b) + " c=" + show(c);
            if (!(add(a, b) == add(b, a)))
                stats.fail("add not commutative: " + ctx);
            if (!(mul(a, b) == mul(b, a)))
                stats.fail("mul not commutative: " + ctx);
            if (!(add(add(a, b), c) == add(a, add(b, c))))
                stats.fail("add not associative: " + ctx);
            if (!(mul(mul(a, b), c) == mul(a, mul(b, c))))
                stats.fail("mul not associative: " + ctx);
            if (!(mul(a, add(b, c)) == add(mul(a, b), mul(a, c))))
                stats.fail("not distributive: " + ctx);
            if (!add(a, negate(a)).is_zero())
                stats.fail("no additive inverse: " + ctx);
            if (!(mul(a, Numeral::constant(1)) == a) || !(add(a, Numeral()) == a))
                stats.fail("identity elements: " + ctx);
        });
    }
    return stats;
}

inline Ordering flip(Ordering o)
{
    return o == Ordering::Less ? Ordering::Greater : (o == Ordering::Greater ? Ordering::Less : o);
}

inline PropertyStats check_order_laws(std::uint64_t seed, int count)
{
    NumeralGenerator gen(seed);
    PropertyStats stats;
    for (int i = 0; i < count; ++i) {
        const Numeral a = gen.numeral();
        const Numeral b = i % 2 == 0 ? gen.nearby(a) : gen.numeral();
        const Numeral c = i % 3 == 0 ? gen.nearby(b) : gen.numeral();
        run_case(stats, [&] {
            const auto ctx = "a=" + show(a) + " b=" + show(b) + " c=" + show(c);
            const Ordering ab = compare(a, b);
            const Ordering ba = compare(b, a);
            const Ordering bc = compare(b, c);
            const Ordering ac = compare(a, c);

            // Trichotomy: Equal exactly for identical canonical forms.
            if ((ab == Ordering::Equal) != (a == b))
                stats.fail("Equal disagrees with equals: " + ctx);
            if (compare(a, a) != Ordering::Equal)
                stats.fail("compare not reflexive: " + ctx);
            // Antisymmetry.
            if (ba != flip(ab))
                stats.fail("antisymmetry: " + ctx);
            // Transitivity.
            if (ab == Ordering::Less && bc == Ordering::Less && ac != Ordering::Less)
                stats.fail("transitivity (<): " + ctx);
            if (ab == Ordering::Greater && bc == Ordering::Greater && ac != Ordering::Greater)
                stats.fail("transitivity (>): " + ctx);
            // sign(t) = Zero iff t = 0.
            if ((sign(sub(a, b)) == Sign::Zero) != (a == b))
                stats.fail("sign zero iff equal: " + ctx);

            // Translation and positive scaling preserve strict order.
            if (ab != Ordering::Equal) {
                const Numeral &lo = ab == Ordering::Less ? a : b;
                const Numeral &hi = ab == Ordering::Less ? b : a;
                if (compare(add(lo, c), add(hi, c)) != Ordering::Less)
                    stats.fail("additive monotonicity: " + ctx);
                if (sign(c) == Sign::Positive && compare(mul(lo, c), mul(hi, c)) != Ordering::Less)
                    stats.fail("multiplicative monotonicity: " + ctx);
            }

            // G^x is increasing in x.
            const Numeral ga = Numeral::monomial(1, a);
            const Numeral gb = Numeral::monomial(1, b);
            if (compare(ga, gb) != ab)
                stats.fail("power monotonicity: " + ctx);
        });
    }
    return stats;
}

inline constexpr std::array<unsigned, 5> factorial_schedule{7, 10, 14, 17, 20};

struct AgreementStats {
    int cases = 0;
    int decided = 0;
    int undecided = 0;
    int unstabilized = 0;
    int compared = 0;
    int mismatches = 0;
    std::vector<std::string> notes;
};

/// order.sign against the stabilized finite-base sign on a - b for generated
/// pairs (and on single numerals).
inline AgreementStats check_oracle_agreement(std::uint64_t seed, int count)
{
    NumeralGenerator gen(seed);
    AgreementStats stats;
    for (int i = 0; i < count; ++i) {
        const Numeral a = gen.numeral();
        const Numeral t = i % 3 == 0 ? a : sub(a, i % 3 == 1 ? gen.nearby(a) : gen.numeral());
        ++stats.cases;
        Sign symbolic;
        try {
            symbolic = sign(t);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::Undecided)
                throw;
            ++stats.undecided;
            continue;
        }
        ++stats.decided;
        const std::optional<Sign> stable = stabilized_sign(t, factorial_schedule);
        if (!stable) {
            ++stats.unstabilized;
            continue;
        }
        ++stats.compared;
        if (*stable != symbolic) {
            ++stats.mismatches;
            if (stats.notes.size() < 10)
                stats.notes.push_back(show(t) + ": order " + std::string(to_string(symbolic)) +
                                      ", oracle " + std::string(to_string(*stable)));
        }
    }
    return stats;
}

} // namespace grossone::testing
