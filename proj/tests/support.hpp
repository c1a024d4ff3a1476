#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "grossone/arith.hpp"
#include "grossone/numeral.hpp"
#include "grossone/textio.hpp"

namespace grossone::testing {

inline Numeral N(std::string_view text) { return parse(text); }

inline Rational Q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Random canonical numerals of level <= 2 with at most 5 terms.
///
/// Digits have numerator in [-10, 10] and denominator in {1, 2}; grosspower
/// constants have numerator in [-10, 10] and denominator in {1, 2}. The
/// denominators are held small so that distinct rational parts of grosspowers
/// are separated by at least G^(1/2): with digit ratios up to 20 the
/// finite-base oracle then reaches the asymptotic regime inside the
/// 7! .. 20! schedule.
class NumeralGenerator {
public:
    explicit NumeralGenerator(std::uint64_t seed) : rng_(seed) {}

    Rational digit()
    {
        long num = 0;
        while (num == 0)
            num = uniform(-10, 10);
        return Q(num, uniform(1, 2));
    }

    Rational exponent() { return Q(uniform(-10, 10), uniform(1, 2)); }


    /// Sum of up to `max_terms` terms with rational grosspowers.
    Numeral level1(int max_terms)
    {
        std::vector<RawTerm> raw;
        const int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i)
            raw.push_back(RawTerm{digit(), Numeral::constant(exponent())});
        return canonicalize(raw);
    }

    /// Infinitesimal of level <= 1: s G^-e or s G^-e + t G^-f.
    Numeral perturbation()
    {
        std::vector<RawTerm> raw{RawTerm{digit(), Numeral::constant(Q(-uniform(1, 2), uniform(1, 2)))}};
        if (uniform(0, 2) == 0)
            raw.push_back(RawTerm{digit(), Numeral::constant(Q(-uniform(2, 3)))});
        return canonicalize(raw);
    }

    /// A grosspower of level <= 1. The rational part comes from a small pool
    /// so that several terms of one numeral often share an archimedean class.
    Numeral grosspower()
    {
        const Numeral base = Numeral::constant(uniform(0, 1) == 0 ? pooled() : exponent());
        switch (uniform(0, 5)) {
        case 0:
        case 1:
            return base;
        case 2:
        case 3:
            return add(base, perturbation());
        case 4:
            return perturbation();
        default:
            return level1(2);
        }
    }

    Numeral numeral()
    {
        std::vector<RawTerm> raw;
        const int n = uniform(1, 5);
        const bool deep = uniform(0, 3) > 0;
        for (int i = 0; i < n; ++i)
            raw.push_back(RawTerm{digit(), deep ? grosspower() : Numeral::constant(exponent())});
        // Cancelling pairs c G^p - c G^(p + d), d infinitesimal: the leading
        // digit sum of the class vanishes and log factors appear.
        if (deep && n <= 3 && uniform(0, 1) == 0) {
            const Rational c = digit();
            const Numeral p = grosspower();
            raw.push_back(RawTerm{c, p});
            raw.push_back(RawTerm{-c, add(p, perturbation())});
        }
        return canonicalize(raw);
    }

    /// A numeral close to t: its leading terms plus up to two terms from
    /// t's own classes; at most 5 terms.
    Numeral nearby(const Numeral &t)
    {
        const auto kept = t.terms().first(std::min<std::size_t>(t.size(), 3));
        std::vector<RawTerm> raw;
        for (const auto &term : kept)
            raw.push_back(RawTerm{term.digit, term.power});
        if (!kept.empty()) {
            const Term &lead = kept[static_cast<std::size_t>(uniform(0, static_cast<int>(kept.size()) - 1))];
            raw.push_back(RawTerm{digit(), add(lead.power, perturbation())});
        }
        if (uniform(0, 1) == 0)
            raw.push_back(RawTerm{digit(), Numeral::constant(pooled())});
        return canonicalize(raw);
    }

private:
    Rational pooled()
    {
        static const long pool[][2] = {{-1, 1}, {0, 1}, {1, 2}, {1, 1}, {2, 1}};
        const auto &e = pool[uniform(0, 4)];
        return Q(e[0], e[1]);
    }

public:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

} // namespace grossone::testing
