#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "grossone/config.hpp"
#include "grossone/numeral.hpp"

namespace grossone {

/// {start, start + step, start + 2 step, ...} inside the segment {1, ..., G}.
struct Progression {
    std::uint64_t start = 1;
    std::uint64_t step = 1;
};

/// An explicit set of finite naturals.
struct FiniteSet {
    std::vector<std::uint64_t> elements;
};

using SetPart = std::variant<Progression, FiniteSet>;

/// Finite union of progressions and explicit finite sets.
struct SetExpr {
    std::vector<SetPart> parts;
};

/// True iff the two parts share an element of the segment. Progressions meet
/// iff their starts agree modulo gcd of the steps (the segment is infinite,
/// so a common residue always has members in it).
bool intersects(const SetPart &a, const SetPart &b);

/// Counting measure on the segment: G/n - floor((k-1)/n) for a progression,
/// |A| for an explicit set, additive over the parts. Throws NotDisjoint if
/// any two parts overlap and std::invalid_argument for a zero start, step or
/// element.
Numeral measure(const SetExpr &s, const Config &cfg = {});

/// 1 <= t <= G in the value order. Integrality of t is not checked.
bool contains_segment(const Numeral &t, const Config &cfg = {});

/// t + 1, or SegmentOverflow when it leaves the segment (t = G is the
/// witness that the segment is not closed under successor).
Numeral successor_in_segment(const Numeral &t, const Config &cfg = {});

} // namespace grossone
