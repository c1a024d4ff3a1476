#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "grossone/numeral.hpp"
#include "grossone/order.hpp"
#include "grossone/segment.hpp"

namespace grossone {

/// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    /// Decimal rendering with `digits` significant digits, rounded in the
    /// given direction so that printed bounds stay bounds.
    std::string to_string(int digits, mpfr_rnd_t rounding) const;

private:
    mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
    BigFloat lo;
    BigFloat hi;

    explicit Interval(mpfr_prec_t precision);

    bool contains(const Rational &q) const;
    bool contains(const Interval &inner) const;
    /// hi - lo, rounded up.
    BigFloat width() const;
    /// "[lo, hi]"; exact integer endpoints print as integers.
    std::string to_string() const;
};

/// Finite model of the unit: G is replaced by B = m!.
struct EvalContext {
    unsigned m = 7;
    mpz_class base;
    mpfr_prec_t precision = 128;

    /// Throws std::invalid_argument unless m >= 2 and precision >= 64.
    static EvalContext factorial(unsigned m, mpfr_prec_t precision = 128);
};

/// Certified enclosure of t evaluated at G = B. Grosspowers are evaluated
/// first; terms with small integer grosspowers are summed exactly.
Interval eval_interval(const Numeral &t, const EvalContext &ctx);

/// As above, but throws PrecisionExhausted if the width exceeds max_width.
Interval eval_interval(const Numeral &t, const EvalContext &ctx, const Rational &max_width);

/// Sign of the value at the finite base B (not the asymptotic sign). Works in
/// the log domain, doubling precision until 0 is excluded; throws
/// PrecisionExhausted when that never happens (e.g. the value is exactly 0).
Sign eval_sign(const Numeral &t, const EvalContext &ctx);

/// Number of members of s in {1, ..., B}, by enumeration. Throws
/// BudgetExceeded when B exceeds `budget`.
mpz_class brute_count(const SetExpr &s, const EvalContext &ctx,
                      std::uint64_t budget = 100'000'000);

/// Finite-base signs along an increasing factorial schedule; the result is the
/// common sign at the two largest bases, or nullopt if they disagree or
/// either evaluation fails.
std::optional<Sign> stabilized_sign(const Numeral &t, std::span<const unsigned> schedule,
                                    mpfr_prec_t precision = 128);

} // namespace grossone
