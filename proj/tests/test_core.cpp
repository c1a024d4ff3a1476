#include <doctest.h>

#include "grossone/error.hpp"
#include "grossone/numeral.hpp"
#include "support.hpp"

using namespace grossone;
using grossone::testing::N;
using grossone::testing::Q;

namespace {

Numeral canon(std::vector<RawTerm> raw, const Config &cfg = {}) { return canonicalize(raw, cfg); }

} // namespace

TEST_CASE("zero digits vanish")
{
    CHECK(canon({{0, Numeral::constant(0)}}).is_zero());
    CHECK(canon({{0, Numeral::constant(1)}}).is_zero());
    CHECK(equals(canon({{0, Numeral::constant(0)}}), canon({{0, Numeral::constant(1)}})));
}

TEST_CASE("a zero grosspower written as 0*G^0 is the power 0")
{
    const Numeral zero_power = canon({{0, Numeral::constant(0)}});
    const Numeral one = canon({{1, zero_power}});
    CHECK(one == Numeral::constant(1));
    CHECK(one.is_constant());
    CHECK(one.constant_value() == 1);
}

TEST_CASE("like powers merge and cancel")
{
    const Numeral g = Numeral::constant(1);
    CHECK(canon({{2, g}, {3, g}}) == Numeral::monomial(5, g));
    CHECK(canon({{2, g}, {-2, g}}).is_zero());
    CHECK(canon({{1, g}, {1, Numeral()}, {-1, g}}) == Numeral::constant(1));
}

TEST_CASE("terms are ordered by decreasing grosspower value")
{
    const Numeral t = canon({{1, Numeral::constant(-1)}, {1, Numeral::constant(2)}, {1, Numeral()},
                             {1, Numeral::constant(Q(1, 2))}});
    REQUIRE(t.size() == 4);
    CHECK(t.terms()[0].power == Numeral::constant(2));
    CHECK(t.terms()[1].power == Numeral::constant(Q(1, 2)));
    CHECK(t.terms()[2].power.is_zero());
    CHECK(t.terms()[3].power == Numeral::constant(-1));
}

TEST_CASE("nested powers order by value, not by syntax")
{
    // Powers that differ by an infinitesimal stay distinct.
    const Numeral t = N("G + G^(1 + G^(-1)) + G^(1 - G^(-1)) + G^(1 + G^(-2))");
    REQUIRE(t.size() == 4);
    CHECK(t.terms()[0].power == N("1 + G^(-1)"));
    CHECK(t.terms()[1].power == N("1 + G^(-2)"));
    CHECK(t.terms()[2].power == N("1"));
    CHECK(t.terms()[3].power == N("1 - G^(-1)"));
}

TEST_CASE("canonicalize is order independent")
{
    const Numeral a = Numeral::constant(3);
    const Numeral b = N("G^(-1)");
    CHECK(canon({{1, a}, {2, b}, {-1, Numeral()}}) == canon({{-1, Numeral()}, {2, b}, {1, a}}));
}

TEST_CASE("level")
{
    CHECK(level(Numeral()) == 0);
    CHECK(level(Numeral::constant(Q(7, 3))) == 0);
    CHECK(level(Numeral::gross()) == 1);
    CHECK(level(N("G^-1 + 5")) == 1);
    CHECK(level(N("G^(G^(-1))")) == 2);
    CHECK(level(N("G^(G^(G))")) == 3);
}

TEST_CASE("level bound")
{
    Config cfg;
    cfg.max_level = 2;
    CHECK_NOTHROW(canon({{1, N("G^(-1)")}}, cfg));
    try {
        canon({{1, N("G^(G)")}}, cfg);
        FAIL("expected LevelExceeded");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::LevelExceeded);
    }
    cfg.max_level = 1;
    CHECK_NOTHROW(canon({{4, Numeral::constant(Q(-3, 2))}}, cfg));
    CHECK_THROWS_AS(canon({{4, N("G")}}, cfg), Error);
}

TEST_CASE("structural equality")
{
    CHECK(N("G + 1") == N("1 + G"));
    CHECK_FALSE(N("G + 1") == N("G + 2"));
    CHECK_FALSE(N("G^(1/2)") == N("G^(2/4 + G^(-1))"));
    CHECK(N("G^(2/4)") == N("G^(1/2)"));
}

TEST_CASE("factories")
{
    CHECK(Numeral::constant(0).is_zero());
    CHECK(Numeral::monomial(0, N("G")).is_zero());
    CHECK(Numeral::gross() == N("G"));
    CHECK(Numeral::monomial(Q(-1, 2), Numeral::constant(3)) == N("-1/2*G^3"));
}

TEST_CASE("error kinds have names")
{
    CHECK(to_string(ErrorKind::Undecided) == "Undecided");
    CHECK(to_string(ErrorKind::NotDisjoint) == "NotDisjoint");
    const SyntaxError e(4, "bad");
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.position() == 4);
}
