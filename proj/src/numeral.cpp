#include "grossone/numeral.hpp"

#include <algorithm>
#include <string>

#include "grossone/order.hpp"

namespace grossone {

struct Numeral::Data {
    std::vector<Term> terms;
    unsigned level = 0;
};

namespace {

unsigned compute_level(const std::vector<Term> &terms)
{
    if (terms.empty())
        return 0;
    if (terms.size() == 1 && terms.front().power.is_zero())
        return 0;
    unsigned deepest = 0;
    for (const auto &t : terms)
        deepest = std::max(deepest, t.power.level());
    return deepest + 1;
}

std::strong_ordering compare_rationals(const Rational &a, const Rational &b)
{
    const int c = cmp(a, b);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::LevelExceeded: return "LevelExceeded";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotExactlyDivisible: return "NotExactlyDivisible";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::SegmentOverflow: return "SegmentOverflow";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

Numeral::Numeral()
{
    static const auto zero = std::make_shared<const Data>();
    data_ = zero;
}

Numeral::Numeral(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Numeral Numeral::constant(const Rational &c)
{
    if (c == 0)
        return Numeral();
    return make_canonical_unchecked({Term{c, Numeral()}});
}

Numeral Numeral::gross()
{
    return make_canonical_unchecked({Term{Rational(1), constant(1)}});
}

Numeral Numeral::monomial(const Rational &c, const Numeral &power)
{
    if (c == 0)
        return Numeral();
    return make_canonical_unchecked({Term{c, power}});
}

std::span<const Term> Numeral::terms() const noexcept { return data_->terms; }

std::size_t Numeral::size() const noexcept { return data_->terms.size(); }

bool Numeral::is_zero() const noexcept { return data_->terms.empty(); }

unsigned Numeral::level() const noexcept { return data_->level; }

bool Numeral::is_constant() const noexcept
{
    return data_->terms.empty() ||
           (data_->terms.size() == 1 && data_->terms.front().power.is_zero());
}

Rational Numeral::constant_value() const
{
    if (data_->terms.empty())
        return Rational(0);
    return data_->terms.front().digit;
}

bool operator==(const Numeral &a, const Numeral &b)
{
    if (a.data_ == b.data_)
        return true;
    return a.data_->level == b.data_->level && a.data_->terms == b.data_->terms;
}

bool operator==(const Term &a, const Term &b)
{
    return a.digit == b.digit && a.power == b.power;
}

bool equals(const Numeral &a, const Numeral &b) { return a == b; }

unsigned level(const Numeral &t) { return t.level(); }

std::strong_ordering structural_compare(const Numeral &a, const Numeral &b)
{
    const auto ta = a.terms();
    const auto tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = structural_compare(ta[i].power, tb[i].power); c != 0)
            return c;
        if (auto c = compare_rationals(ta[i].digit, tb[i].digit); c != 0)
            return c;
    }
    return ta.size() <=> tb.size();
}

Numeral make_canonical_unchecked(std::vector<Term> terms)
{
    if (terms.empty())
        return Numeral();
    auto data = std::make_shared<Numeral::Data>();
    data->level = compute_level(terms);
    data->terms = std::move(terms);
    return Numeral(std::move(data));
}

Numeral canonicalize(std::span<const RawTerm> raw, const Config &cfg)
{
    std::vector<Term> merged;
    merged.reserve(raw.size());
    for (const auto &r : raw) {
        if (r.digit != 0)
            merged.push_back(Term{r.digit, r.power});
    }

    std::stable_sort(merged.begin(), merged.end(), [](const Term &x, const Term &y) {
        return structural_compare(x.power, y.power) < 0;
    });
    std::vector<Term> collected;
    collected.reserve(merged.size());
    for (auto &t : merged) {
        if (!collected.empty() && collected.back().power == t.power) {
            collected.back().digit += t.digit;
        } else {
            collected.push_back(std::move(t));
        }
    }
    std::erase_if(collected, [](const Term &t) { return t.digit == 0; });

    for (const auto &t : collected) {
        if (t.power.level() + 1 > cfg.max_level && !t.power.is_zero())
            throw Error(ErrorKind::LevelExceeded,
                        "numeral level exceeds configured maximum " + std::to_string(cfg.max_level));
    }

    // Value order on grosspowers; they sit one level down, so this recursion
    // terminates.
    std::sort(collected.begin(), collected.end(), [&cfg](const Term &x, const Term &y) {
        return compare(x.power, y.power, cfg) == Ordering::Greater;
    });
    return make_canonical_unchecked(std::move(collected));
}

} // namespace grossone
