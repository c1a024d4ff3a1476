#include "grossone/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <variant>
#include <vector>

namespace grossone {

BigFloat::BigFloat(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    // mpfr_swap needs an initialized target.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rounding) const
{
    if (mpfr_integer_p(value_)) {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
        if (mpz_sizeinbase(z.get_mpz_t(), 10) <= static_cast<std::size_t>(digits))
            return z.get_str();
    }
    char *buffer = nullptr;
    const char *format = rounding == MPFR_RNDD ? "%.*RDg" : (rounding == MPFR_RNDU ? "%.*RUg" : "%.*RNg");
    if (mpfr_asprintf(&buffer, format, digits, value_) < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

Interval::Interval(mpfr_prec_t precision) : lo(precision), hi(precision) {}

bool Interval::contains(const Rational &q) const
{
    return mpfr_cmp_q(lo.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval &inner) const
{
    return mpfr_lessequal_p(lo.get(), inner.lo.get()) && mpfr_greaterequal_p(hi.get(), inner.hi.get());
}

BigFloat Interval::width() const
{
    BigFloat w(std::max(lo.precision(), hi.precision()));
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    return w;
}

std::string Interval::to_string() const
{
    const int digits = static_cast<int>(std::max(lo.precision(), hi.precision()) * 0.30103) + 1;
    return "[" + lo.to_string(digits, MPFR_RNDD) + ", " + hi.to_string(digits, MPFR_RNDU) + "]";
}

EvalContext EvalContext::factorial(unsigned m, mpfr_prec_t precision)
{
    if (m < 2)
        throw std::invalid_argument("base factorial m must be at least 2");
    if (precision < 64)
        throw std::invalid_argument("precision must be at least 64 bits");
    EvalContext ctx;
    ctx.m = m;
    mpz_fac_ui(ctx.base.get_mpz_t(), m);
    ctx.precision = precision;
    return ctx;
}

namespace {

// Integer grosspowers up to this many bits of B^n are summed exactly.
constexpr std::size_t exact_power_bits = 1U << 20;

Interval point(const Rational &q, mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval log_of(const mpz_class &z, mpfr_prec_t prec)
{
    Interval r(prec);
    BigFloat x(prec);
    mpfr_set_z(x.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_log(r.lo.get(), x.get(), MPFR_RNDD);
    mpfr_set_z(x.get(), z.get_mpz_t(), MPFR_RNDU);
    mpfr_log(r.hi.get(), x.get(), MPFR_RNDU);
    return r;
}

Interval log_of(const Rational &q, mpfr_prec_t prec)
{
    Interval r(prec);
    BigFloat x(prec);
    const Rational a = abs(q);
    mpfr_set_q(x.get(), a.get_mpq_t(), MPFR_RNDD);
    mpfr_log(r.lo.get(), x.get(), MPFR_RNDD);
    mpfr_set_q(x.get(), a.get_mpq_t(), MPFR_RNDU);
    mpfr_log(r.hi.get(), x.get(), MPFR_RNDU);
    return r;
}

void add_into(Interval &acc, const Interval &x)
{
    mpfr_add(acc.lo.get(), acc.lo.get(), x.lo.get(), MPFR_RNDD);
    mpfr_add(acc.hi.get(), acc.hi.get(), x.hi.get(), MPFR_RNDU);
}

void sanitize(BigFloat &v, int infinity_sign)
{
    if (mpfr_nan_p(v.get()))
        mpfr_set_inf(v.get(), infinity_sign);
}

Interval multiply(const Interval &a, const Interval &b, mpfr_prec_t prec)
{
    Interval r(prec);
    BigFloat t(prec);
    const BigFloat *xs[] = {&a.lo, &a.hi};
    const BigFloat *ys[] = {&b.lo, &b.hi};
    bool first = true;
    for (const auto *x : xs) {
        for (const auto *y : ys) {
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
            sanitize(t, -1);
            if (first || mpfr_less_p(t.get(), r.lo.get()))
                mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
            sanitize(t, 1);
            if (first || mpfr_greater_p(t.get(), r.hi.get()))
                mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval scale_by(const Interval &x, const Rational &c, mpfr_prec_t prec)
{
    return multiply(point(c, prec), x, prec);
}

Interval exp_of(const Interval &x, mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_exp(r.lo.get(), x.lo.get(), MPFR_RNDD);
    mpfr_exp(r.hi.get(), x.hi.get(), MPFR_RNDU);
    return r;
}

std::optional<long> small_integer_power(const Numeral &power, const mpz_class &base)
{
    if (!power.is_constant())
        return std::nullopt;
    const Rational p = power.constant_value();
    if (p.get_den() != 1 || !p.get_num().fits_slong_p())
        return std::nullopt;
    const long n = p.get_num().get_si();
    if (static_cast<std::size_t>(std::labs(n)) * mpz_sizeinbase(base.get_mpz_t(), 2) > exact_power_bits)
        return std::nullopt;
    return n;
}

Rational exact_power(const mpz_class &base, long n)
{
    mpz_class z;
    mpz_pow_ui(z.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::labs(n)));
    if (n >= 0)
        return Rational(z);
    Rational q(mpz_class(1), z);
    return q;
}

Interval evaluate(const Numeral &t, const EvalContext &ctx, mpfr_prec_t prec)
{
    Rational exact = 0;
    Interval acc(prec);
    std::optional<Interval> log_base;
    for (const auto &term : t.terms()) {
        if (auto n = small_integer_power(term.power, ctx.base)) {
            exact += term.digit * exact_power(ctx.base, *n);
            continue;
        }
        if (!log_base)
            log_base = log_of(ctx.base, prec);
        const Interval power = evaluate(term.power, ctx, prec);
        add_into(acc, scale_by(exp_of(multiply(power, *log_base, prec), prec), term.digit, prec));
    }
    add_into(acc, point(exact, prec));
    return acc;
}

std::optional<Sign> sign_at_precision(const Numeral &t, const EvalContext &ctx, mpfr_prec_t prec)
{
    // Every contribution is written as s * exp(E) with E an interval; the sum
    // is then rescaled by exp(-max E) so that huge values never overflow.
    struct Piece {
        int sign;
        Interval log_magnitude;
    };
    std::vector<Piece> pieces;
    Rational exact = 0;
    std::optional<Interval> log_base;
    for (const auto &term : t.terms()) {
        if (auto n = small_integer_power(term.power, ctx.base)) {
            exact += term.digit * exact_power(ctx.base, *n);
            continue;
        }
        if (!log_base)
            log_base = log_of(ctx.base, prec);
        Interval e = multiply(evaluate(term.power, ctx, prec), *log_base, prec);
        add_into(e, log_of(term.digit, prec));
        pieces.push_back(Piece{sgn(term.digit), std::move(e)});
    }
    if (pieces.empty()) {
        const int s = sgn(exact);
        return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
    }
    if (exact != 0)
        pieces.push_back(Piece{sgn(exact), log_of(exact, prec)});

    BigFloat top(prec);
    mpfr_set_inf(top.get(), -1);
    for (const auto &p : pieces) {
        if (!mpfr_number_p(p.log_magnitude.lo.get()) || !mpfr_number_p(p.log_magnitude.hi.get()))
            return std::nullopt;
        mpfr_max(top.get(), top.get(), p.log_magnitude.hi.get(), MPFR_RNDU);
    }

    Interval sum(prec);
    for (const auto &p : pieces) {
        Interval shifted(prec);
        mpfr_sub(shifted.lo.get(), p.log_magnitude.lo.get(), top.get(), MPFR_RNDD);
        mpfr_sub(shifted.hi.get(), p.log_magnitude.hi.get(), top.get(), MPFR_RNDU);
        Interval scaled = exp_of(shifted, prec);
        if (p.sign < 0) {
            mpfr_swap(scaled.lo.get(), scaled.hi.get());
            mpfr_neg(scaled.lo.get(), scaled.lo.get(), MPFR_RNDD);
            mpfr_neg(scaled.hi.get(), scaled.hi.get(), MPFR_RNDU);
        }
        add_into(sum, scaled);
    }
    if (mpfr_sgn(sum.lo.get()) > 0)
        return Sign::Positive;
    if (mpfr_sgn(sum.hi.get()) < 0)
        return Sign::Negative;
    return std::nullopt;
}

bool member(const SetPart &part, std::uint64_t x)
{
    if (const auto *p = std::get_if<Progression>(&part))
        return x >= p->start && (x - p->start) % p->step == 0;
    const auto &e = std::get<FiniteSet>(part).elements;
    return std::binary_search(e.begin(), e.end(), x);
}

} // namespace

Interval eval_interval(const Numeral &t, const EvalContext &ctx)
{
    return evaluate(t, ctx, ctx.precision);
}

Interval eval_interval(const Numeral &t, const EvalContext &ctx, const Rational &max_width)
{
    Interval r = evaluate(t, ctx, ctx.precision);
    if (mpfr_cmp_q(r.width().get(), max_width.get_mpq_t()) > 0)
        throw Error(ErrorKind::PrecisionExhausted,
                    "interval wider than requested at " + std::to_string(ctx.precision) + " bits");
    return r;
}

Sign eval_sign(const Numeral &t, const EvalContext &ctx)
{
    if (t.is_zero())
        return Sign::Zero;
    const mpfr_prec_t max_prec = ctx.precision * 64;
    for (mpfr_prec_t prec = ctx.precision; prec <= max_prec; prec *= 2) {
        if (auto s = sign_at_precision(t, ctx, prec))
            return *s;
    }
    throw Error(ErrorKind::PrecisionExhausted,
                "cannot separate value from 0 at base " + std::to_string(ctx.m) + "!");
}

mpz_class brute_count(const SetExpr &s, const EvalContext &ctx, std::uint64_t budget)
{
    if (!ctx.base.fits_ulong_p() || ctx.base.get_ui() > budget)
        throw Error(ErrorKind::BudgetExceeded, "base " + ctx.base.get_str() + " too large to enumerate");
    SetExpr sorted = s;
    for (auto &part : sorted.parts) {
        if (auto *f = std::get_if<FiniteSet>(&part))
            std::sort(f->elements.begin(), f->elements.end());
    }
    const std::uint64_t b = ctx.base.get_ui();
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= b; ++x) {
        if (std::any_of(sorted.parts.begin(), sorted.parts.end(),
                        [x](const SetPart &part) { return member(part, x); }))
            ++count;
    }
    return mpz_class(count);
}

std::optional<Sign> stabilized_sign(const Numeral &t, std::span<const unsigned> schedule,
                                    mpfr_prec_t precision)
{
    if (schedule.size() < 2)
        throw std::invalid_argument("stabilization needs at least two bases");
    std::optional<Sign> previous;
    std::optional<Sign> last;
    for (const unsigned m : schedule.last(2)) {
        previous = last;
        try {
            last = eval_sign(t, EvalContext::factorial(m, precision));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::PrecisionExhausted)
                throw;
            return std::nullopt;
        }
    }
    if (previous && last && *previous == *last)
        return last;
    return std::nullopt;
}

} // namespace grossone
