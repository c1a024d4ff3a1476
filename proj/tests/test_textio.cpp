#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "grossone/error.hpp"
#include "grossone/textio.hpp"
#include "support.hpp"

using namespace grossone;
using grossone::testing::N;
using grossone::testing::Q;

namespace {

std::size_t syntax_position(std::string_view text)
{
    try {
        parse(text);
    } catch (const SyntaxError &e) {
        return e.position();
    }
    FAIL("parsed: " << text);
    return 0;
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("printing")
{
    CHECK(print_canonical(Numeral()) == "0");
    CHECK(print_canonical(N("G")) == "G");
    CHECK(print_canonical(N("-G")) == "-G");
    CHECK(print_canonical(N("1 + G")) == "G + 1");
    CHECK(print_canonical(N("G^(G^(-1)) - 1")) == "G^(G^(-1)) - 1");
    CHECK(print_canonical(N("G^2 - 3/2*G^(-1/2)")) == "G^2 - 3/2*G^(-1/2)");
    CHECK(print_canonical(N("G^0.5")) == "G^1/2");
    CHECK(print_canonical(N("-7/2")) == "-7/2");
}

TEST_CASE("parsing forms")
{
    CHECK(N("2G") == N("2*G"));
    CHECK(N(" G ^ ( G ^ ( -1 ) ) ") == N("G^(G^(-1))"));
    CHECK(N("G^-1") == N("G^(-1)"));
    CHECK(N("0.125") == Numeral::constant(Q(1, 8)));
    CHECK(N("4/6") == Numeral::constant(Q(2, 3)));
    CHECK(N("G - G + 0") == Numeral());
    CHECK(N("G^1/2") == Numeral::monomial(1, Numeral::constant(Q(1, 2))));
}

TEST_CASE("syntax errors report positions")
{
    CHECK(syntax_position("") == 0);
    CHECK(syntax_position("G +") == 3);
    CHECK(syntax_position("G^(1") == 4);
    CHECK(syntax_position("1/0") == 2);
    CHECK(syntax_position("2 * 3") == 4);
    CHECK(syntax_position("G x") == 2);
    CHECK(syntax_position("--1") == 1);
    std::string deep;
    for (int i = 0; i < 300; ++i)
        deep += "G^(";
    CHECK(syntax_position(deep + "1") > 0);
}

TEST_CASE("round trip on generated numerals")
{
    grossone::testing::NumeralGenerator gen(31);
    for (int i = 0; i < 300; ++i) {
        const Numeral t = gen.numeral();
        CHECK(parse(print_canonical(t)) == t);
        CHECK(from_json(to_json(t)) == t);
    }
}

TEST_CASE("json form")
{
    CHECK(to_json(Numeral()).dump() == R"({"terms":[]})");
    CHECK(to_json(N("-1/2*G")).dump() ==
          R"({"terms":[{"digit":{"den":"2","num":"-1"},"power":{"terms":[{"digit":{"den":"1","num":"1"},"power":{"terms":[]}}]}}]})");
    CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"terms":[{"digit":1}]})")), SyntaxError);
    CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"terms":[{"digit":{"num":"1","den":"0"},"power":{"terms":[]}}]})")),
                    SyntaxError);
    CHECK_THROWS_AS(from_json(nlohmann::json::parse("[]")), SyntaxError);
    // Input need not be canonical.
    const auto raw = nlohmann::json::parse(
        R"({"terms":[{"digit":{"num":"2","den":"4"},"power":{"terms":[]}},{"digit":{"num":"1","den":"2"},"power":{"terms":[]}}]})");
    CHECK(from_json(raw) == N("1"));
}

TEST_CASE("golden canonical forms")
{
    std::istringstream in(slurp(GOLDEN_DIR "/normalize.in"));
    std::string line;
    std::string out;
    while (std::getline(in, line))
        out += print_canonical(parse(line)) + "\n";
    CHECK(out == slurp(GOLDEN_DIR "/normalize.out"));
}
