#pragma once

#include <cstdint>

#include "grossone/config.hpp"
#include "grossone/numeral.hpp"

namespace grossone {

Numeral negate(const Numeral &t);
Numeral add(const Numeral &a, const Numeral &b, const Config &cfg = {});
Numeral sub(const Numeral &a, const Numeral &b, const Config &cfg = {});
Numeral mul(const Numeral &a, const Numeral &b, const Config &cfg = {});
Numeral scale(const Numeral &t, const Rational &c);

/// t^n by repeated squaring; t^0 = 1 for every t, including 0.
Numeral int_pow(const Numeral &t, std::uint64_t n, const Config &cfg = {});

/// Exact quotient. Single-term divisors always succeed; otherwise long
/// division in decreasing grosspower order, bounded by cfg.division_budget
/// quotient terms (NotExactlyDivisible past it).
Numeral div_exact(const Numeral &a, const Numeral &b, const Config &cfg = {});

/// The few numeral-valued powers the system admits: 0^p (p > 0), 1^p,
/// (G^q)^p = G^{q p} and t^n for constant n in N. Anything else is
/// NotRepresentable.
Numeral pow_special(const Numeral &base, const Numeral &exp, const Config &cfg = {});

} // namespace grossone
