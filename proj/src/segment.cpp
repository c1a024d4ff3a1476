#include "grossone/segment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grossone/arith.hpp"
#include "grossone/order.hpp"

namespace grossone {

namespace {

bool progression_contains(const Progression &p, std::uint64_t x)
{
    return x >= p.start && (x - p.start) % p.step == 0;
}

void validate(const SetPart &part)
{
    if (const auto *p = std::get_if<Progression>(&part)) {
        if (p->start == 0 || p->step == 0)
            throw std::invalid_argument("progression start and step must be positive");
    } else {
        const auto &set = std::get<FiniteSet>(part);
        if (std::find(set.elements.begin(), set.elements.end(), 0U) != set.elements.end())
            throw std::invalid_argument("finite set elements must be positive naturals");
    }
}

std::vector<std::uint64_t> distinct(std::vector<std::uint64_t> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

bool intersects(const SetPart &a, const SetPart &b)
{
    const auto *pa = std::get_if<Progression>(&a);
    const auto *pb = std::get_if<Progression>(&b);
    if (pa && pb) {
        const std::uint64_t g = std::gcd(pa->step, pb->step);
        return pa->start % g == pb->start % g;
    }
    if (pa || pb) {
        const Progression &p = pa ? *pa : *pb;
        const auto &set = std::get<FiniteSet>(pa ? b : a);
        return std::any_of(set.elements.begin(), set.elements.end(),
                           [&](std::uint64_t x) { return progression_contains(p, x); });
    }
    const auto sa = distinct(std::get<FiniteSet>(a).elements);
    const auto sb = distinct(std::get<FiniteSet>(b).elements);
    std::vector<std::uint64_t> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    return !common.empty();
}

Numeral measure(const SetExpr &s, const Config &cfg)
{
    for (const auto &part : s.parts)
        validate(part);
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        for (std::size_t j = i + 1; j < s.parts.size(); ++j) {
            if (intersects(s.parts[i], s.parts[j]))
                throw Error(ErrorKind::NotDisjoint, "set parts " + std::to_string(i) + " and " +
                                                        std::to_string(j) + " overlap");
        }
    }

    Numeral total;
    for (const auto &part : s.parts) {
        if (const auto *p = std::get_if<Progression>(&part)) {
            // G is divisible by every finite n, so the residue class of k has
            // exactly G/n members; drop the ones below k.
            const Rational below((p->start - 1) / p->step);
            const Rational share(mpz_class(1), mpz_class(p->step));
            const Numeral count = add(Numeral::monomial(share, Numeral::constant(1)),
                                      Numeral::constant(-below), cfg);
            total = add(total, count, cfg);
        } else {
            const auto n = distinct(std::get<FiniteSet>(part).elements).size();
            total = add(total, Numeral::constant(Rational(n)), cfg);
        }
    }
    return total;
}

bool contains_segment(const Numeral &t, const Config &cfg)
{
    return compare(t, Numeral::constant(1), cfg) != Ordering::Less &&
           compare(t, Numeral::gross(), cfg) != Ordering::Greater;
}

Numeral successor_in_segment(const Numeral &t, const Config &cfg)
{
    if (!contains_segment(t, cfg))
        throw std::invalid_argument("successor_in_segment: argument outside the segment");
    Numeral next = add(t, Numeral::constant(1), cfg);
    if (!contains_segment(next, cfg))
        throw Error(ErrorKind::SegmentOverflow, "successor leaves the segment {1, ..., G}");
    return next;
}

} // namespace grossone
