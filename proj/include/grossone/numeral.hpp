#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "grossone/config.hpp"
#include "grossone/error.hpp"

namespace grossone {

/// Grossdigits are exact rationals, always kept in lowest terms.
using Rational = mpq_class;

struct Term;

/// A finite sum of terms c * G^p in canonical form.
///
/// Canonical form means: every digit is nonzero, every grosspower is itself a
/// canonical Numeral of strictly smaller level, no two grosspowers coincide,
/// and terms are sorted strictly decreasing by the value order (see order.hpp).
/// Zero is the empty sum. Instances are immutable and cheap to copy.
class Numeral {
public:
    /// The zero numeral.
    Numeral();

    static Numeral constant(const Rational &c);
    /// The infinite unit G (grossone) itself.
    static Numeral gross();
    /// c * G^power; zero when c == 0.
    static Numeral monomial(const Rational &c, const Numeral &power);

    std::span<const Term> terms() const noexcept;
    std::size_t size() const noexcept;
    bool is_zero() const noexcept;
    unsigned level() const noexcept;

    /// True for 0 and for c * G^0.
    bool is_constant() const noexcept;
    /// Value of a constant numeral; precondition is_constant().
    Rational constant_value() const;

    friend bool operator==(const Numeral &a, const Numeral &b);

private:
    struct Data;
    explicit Numeral(std::shared_ptr<const Data> data);

    std::shared_ptr<const Data> data_;

    friend Numeral make_canonical_unchecked(std::vector<Term> terms);
};

struct Term {
    Rational digit;
    Numeral power;

    friend bool operator==(const Term &a, const Term &b);
};

/// Input to canonicalize: an arbitrary digit/power pair. The power is already
/// a canonical Numeral, which is what makes canonicalization bottom-up.
struct RawTerm {
    Rational digit;
    Numeral power;
};

/// Merges like grosspowers, drops zero digits and sorts by the value order.
/// Throws Error{LevelExceeded} past cfg.max_level and propagates Undecided
/// from the ordering of grosspowers.
Numeral canonicalize(std::span<const RawTerm> raw, const Config &cfg = {});

/// Structural identity of canonical numerals.
bool equals(const Numeral &a, const Numeral &b);

/// Stratification level: 0 for rational constants, otherwise one more than
/// the deepest grosspower.
unsigned level(const Numeral &t);

/// A total order on the *syntax* of canonical numerals (not their values).
/// Used for deterministic merging and for keying maps.
std::strong_ordering structural_compare(const Numeral &a, const Numeral &b);

/// Internal: builds a numeral from terms already in canonical order.
Numeral make_canonical_unchecked(std::vector<Term> terms);

} // namespace grossone
