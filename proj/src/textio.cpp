#include "grossone/textio.hpp"

#include <cctype>
#include <vector>

namespace grossone {

namespace {

constexpr std::size_t max_nesting = 256;

class Parser {
public:
    Parser(std::string_view src, const Config &cfg) : src_(src), cfg_(cfg) {}

    Numeral parse_all()
    {
        Numeral n = parse_numeral();
        skip();
        if (pos_ != src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return n;
    }

private:
    Numeral parse_numeral()
    {
        std::vector<RawTerm> raw;
        skip();
        const bool negative = accept('-');
        raw.push_back(parse_term(negative));
        for (;;) {
            skip();
            if (accept('+'))
                raw.push_back(parse_term(false));
            else if (accept('-'))
                raw.push_back(parse_term(true));
            else
                break;
        }
        return canonicalize(raw, cfg_);
    }

    RawTerm parse_term(bool negative)
    {
        skip();
        Rational coeff = 1;
        Numeral power;
        if (peek() == 'G') {
            power = parse_gross();
        } else {
            coeff = parse_num();
            skip();
            if (accept('*')) {
                skip();
                if (peek() != 'G')
                    fail("expected 'G' after '*'");
                power = parse_gross();
            } else if (peek() == 'G') {
                power = parse_gross();
            }
        }
        if (negative)
            coeff = -coeff;
        return RawTerm{coeff, power};
    }

    Numeral parse_gross()
    {
        ++pos_; // 'G'
        skip();
        if (!accept('^'))
            return Numeral::constant(1);
        skip();
        if (accept('(')) {
            if (++depth_ > max_nesting)
                fail("grosspowers nested too deeply");
            Numeral inner = parse_numeral();
            skip();
            if (!accept(')'))
                fail("expected ')'");
            --depth_;
            return inner;
        }
        const bool negative = accept('-');
        skip();
        const Rational r = parse_num();
        return Numeral::constant(negative ? Rational(-r) : r);
    }

    Rational parse_num()
    {
        const mpz_class whole = parse_digits();
        if (accept('.')) {
            const std::size_t start = pos_;
            const mpz_class frac = parse_digits();
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - start);
            Rational r(whole * scale + frac, scale);
            r.canonicalize();
            return r;
        }
        if (accept('/')) {
            const std::size_t at = pos_;
            const mpz_class den = parse_digits();
            if (den == 0)
                throw SyntaxError(at, "zero denominator");
            Rational r(whole, den);
            r.canonicalize();
            return r;
        }
        return Rational(whole);
    }

    mpz_class parse_digits()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(pos_ < src_.size() ? "expected a number, found '" + std::string(1, src_[pos_]) + "'"
                                    : "expected a number, found end of input");
        return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
    }

    void skip()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string &what) const { throw SyntaxError(pos_, what); }

    std::string_view src_;
    const Config &cfg_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

std::string print_power(const Numeral &p)
{
    if (p.is_constant() && p.constant_value() >= 0)
        return to_string(p.constant_value());
    return "(" + print_canonical(p) + ")";
}

Rational digit_from_json(const nlohmann::json &d)
{
    if (!d.is_object() || !d.contains("num") || !d.contains("den") || !d["num"].is_string() ||
        !d["den"].is_string())
        throw SyntaxError(0, "digit must be {\"num\": string, \"den\": string}");
    try {
        const mpz_class num(d["num"].get<std::string>(), 10);
        const mpz_class den(d["den"].get<std::string>(), 10);
        if (den <= 0)
            throw SyntaxError(0, "digit denominator must be positive");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument &) {
        throw SyntaxError(0, "digit is not an integer string");
    }
}

} // namespace

Numeral parse(std::string_view text, const Config &cfg) { return Parser(text, cfg).parse_all(); }

std::string to_string(const Rational &q) { return q.get_str(); }

std::string print_canonical(const Numeral &t)
{
    if (t.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &term : t.terms()) {
        const bool negative = term.digit < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        const Rational magnitude = abs(term.digit);
        if (term.power.is_zero()) {
            out += to_string(magnitude);
            continue;
        }
        if (magnitude != 1)
            out += to_string(magnitude) + "*";
        out += "G";
        if (!(term.power.is_constant() && term.power.constant_value() == 1))
            out += "^" + print_power(term.power);
    }
    return out;
}

nlohmann::json to_json(const Numeral &t)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &term : t.terms()) {
        terms.push_back({{"digit", {{"num", term.digit.get_num().get_str()},
                                    {"den", term.digit.get_den().get_str()}}},
                         {"power", to_json(term.power)}});
    }
    return {{"terms", std::move(terms)}};
}

Numeral from_json(const nlohmann::json &j, const Config &cfg)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw SyntaxError(0, "numeral must be an object with a \"terms\" array");
    std::vector<RawTerm> raw;
    for (const auto &term : j["terms"]) {
        if (!term.is_object() || !term.contains("digit") || !term.contains("power"))
            throw SyntaxError(0, "term must carry \"digit\" and \"power\"");
        raw.push_back(RawTerm{digit_from_json(term["digit"]), from_json(term["power"], cfg)});
    }
    return canonicalize(raw, cfg);
}

} // namespace grossone
