#include "grossone/cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "grossone/arith.hpp"
#include "grossone/classify.hpp"
#include "grossone/oracle.hpp"
#include "grossone/order.hpp"
#include "grossone/segment.hpp"
#include "grossone/textio.hpp"

namespace grossone {

namespace {

struct Options {
    Config cfg;
    bool json = false;
    std::string scheme = "both";
    std::string finite_reading = "literal";
    unsigned base_factorial = 0;
    unsigned precision = 128;
    std::vector<std::string> progressions;
    std::string union_spec;
    std::string set_spec;
};

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto at = s.find(sep, start);
        out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos)
            break;
        start = at + 1;
    }
    return out;
}

std::uint64_t parse_natural(const std::string &s)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw SyntaxError(0, "'" + s + "' is not a natural number");
    return v;
}

Progression parse_progression(const std::string &spec)
{
    const auto fields = split(spec, ',');
    if (fields.size() != 2)
        throw SyntaxError(0, "progression must be K,N; got '" + spec + "'");
    return Progression{parse_natural(fields[0]), parse_natural(fields[1])};
}

SetExpr build_set(const Options &opt)
{
    SetExpr s;
    for (const auto &p : opt.progressions)
        s.parts.emplace_back(parse_progression(p));
    if (!opt.union_spec.empty()) {
        for (const auto &p : split(opt.union_spec, ';'))
            s.parts.emplace_back(parse_progression(p));
    }
    if (!opt.set_spec.empty()) {
        FiniteSet f;
        for (const auto &e : split(opt.set_spec, ','))
            f.elements.push_back(parse_natural(e));
        s.parts.emplace_back(std::move(f));
    }
    if (s.parts.empty())
        throw SyntaxError(0, "measure needs --progression, --union or --set");
    return s;
}

std::string render(const Numeral &n, const Options &opt)
{
    return opt.json ? to_json(n).dump() : print_canonical(n);
}

std::string run_classify(const Numeral &t, const Options &opt)
{
    if (opt.scheme != "sergeyev" && opt.scheme != "semantic" && opt.scheme != "both")
        throw SyntaxError(0, "unknown scheme '" + opt.scheme + "'");
    const FiniteReading reading =
        opt.finite_reading == "inclusive" ? FiniteReading::Inclusive : FiniteReading::Literal;
    nlohmann::json j = nlohmann::json::object();
    std::vector<std::string> parts;
    if (opt.scheme != "semantic") {
        const auto c = to_string(sergeyev_class(t, reading, opt.cfg));
        j["sergeyev"] = c;
        parts.push_back("sergeyev: " + std::string(c));
    }
    if (opt.scheme != "sergeyev") {
        const auto c = to_string(semantic_class(t, opt.cfg));
        j["semantic"] = c;
        parts.push_back("semantic: " + std::string(c));
    }
    if (opt.json)
        return j.dump();
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? "; " : "") + parts[i];
    return out;
}

std::string run_eval(const Numeral &t, const Options &opt)
{
    if (opt.base_factorial == 0)
        throw SyntaxError(0, "eval needs --base-factorial M");
    const auto ctx = EvalContext::factorial(opt.base_factorial, opt.precision);
    const Interval iv = eval_interval(t, ctx);
    if (opt.json) {
        const int digits = static_cast<int>(opt.precision * 0.30103) + 1;
        return nlohmann::json{{"lo", iv.lo.to_string(digits, MPFR_RNDD)},
                              {"hi", iv.hi.to_string(digits, MPFR_RNDU)}}
            .dump();
    }
    return iv.to_string();
}

/// Executes one operation; throws on any failure.
std::string dispatch(const std::string &command, const std::vector<std::string> &args,
                     const Options &opt)
{
    const auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw SyntaxError(0, command + " expects " + std::to_string(n) + " argument(s)");
    };
    const auto arg = [&](std::size_t i) { return parse(args.at(i), opt.cfg); };

    if (command == "normalize") {
        need(1);
        return render(arg(0), opt);
    }
    if (command == "compare") {
        need(2);
        const auto o = to_string(compare(arg(0), arg(1), opt.cfg));
        return opt.json ? nlohmann::json{{"result", o}}.dump() : std::string(o);
    }
    if (command == "classify") {
        need(1);
        return run_classify(arg(0), opt);
    }
    if (command == "eval") {
        need(1);
        return run_eval(arg(0), opt);
    }
    if (command == "add" || command == "mul" || command == "div") {
        need(2);
        const Numeral a = arg(0);
        const Numeral b = arg(1);
        if (command == "add")
            return render(add(a, b, opt.cfg), opt);
        if (command == "mul")
            return render(mul(a, b, opt.cfg), opt);
        return render(div_exact(a, b, opt.cfg), opt);
    }
    if (command == "measure") {
        need(0);
        return render(measure(build_set(opt), opt.cfg), opt);
    }
    throw SyntaxError(0, "unknown command '" + command + "'");
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SyntaxError:
        return exit_code::syntax;
    case ErrorKind::Undecided:
    case ErrorKind::PrecisionExhausted:
        return exit_code::abstained;
    default:
        return exit_code::domain;
    }
}

/// Runs `body`, mapping exceptions to exit codes and a stderr line.
template <typename F>
int guarded(std::string &err, F &&body)
{
    try {
        body();
        return exit_code::ok;
    } catch (const Error &e) {
        err += "error: " + std::string(to_string(e.kind())) + ": " + e.what() + "\n";
        return exit_code_for(e.kind());
    } catch (const std::invalid_argument &e) {
        err += std::string("error: ") + e.what() + "\n";
        return exit_code::syntax;
    }
}

const std::vector<std::string> repl_commands = {"normalize", "compare", "classify", "add", "mul",
                                                "div", "eval"};

// One line: "<command> <arg> ; <arg>" or a bare expression to normalize.
// eval takes "eval M ; <expr>".
void repl(std::istream &in, const Options &base, CommandResult &result)
{
    std::string line;
    while (std::getline(in, line)) {
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        if (text == "quit" || text == "exit")
            break;
        Options opt = base;
        std::string command = "normalize";
        std::string rest = text;
        const auto space = text.find(' ');
        const std::string head = text.substr(0, space);
        if (std::find(repl_commands.begin(), repl_commands.end(), head) != repl_commands.end()) {
            command = head;
            rest = space == std::string::npos ? "" : text.substr(space + 1);
        }
        guarded(result.out, [&] {
            auto args = split(rest, ';');
            if (command == "eval") {
                if (args.size() != 2)
                    throw SyntaxError(0, "usage: eval M ; <expr>");
                opt.base_factorial = static_cast<unsigned>(parse_natural(args[0]));
                args.erase(args.begin());
            }
            result.out += dispatch(command, args, opt) + "\n";
        });
    }
}

} // namespace

CommandResult run_command(const std::vector<std::string> &args, std::istream &in)
{
    CommandResult result;
    Options opt;

    CLI::App app{"Exact calculator for grossone numerals", "grosscalc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-level", opt.cfg.max_level, "Deepest grosspower nesting")->capture_default_str();
    app.add_option("--expansion-budget", opt.cfg.expansion_budget, "Order budget of the sign engine")
        ->capture_default_str();
    app.add_flag("--json", opt.json, "Structured output");

    std::vector<std::string> exprs;
    const auto expr_command = [&](const char *name, const char *help, std::size_t count) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("expr", exprs, "Numeral expression(s)")->required()->expected(static_cast<int>(count));
        return sub;
    };
    expr_command("normalize", "Print the canonical form", 1);
    expr_command("compare", "Compare two numerals (LT, EQ, GT)", 2);
    auto *classify = expr_command("classify", "Syntactic and semantic classification", 1);
    classify->add_option("--scheme", opt.scheme, "sergeyev | semantic | both")
        ->check(CLI::IsMember({"sergeyev", "semantic", "both"}))
        ->capture_default_str();
    classify->add_option("--finite-reading", opt.finite_reading, "literal | inclusive")
        ->check(CLI::IsMember({"literal", "inclusive"}))
        ->capture_default_str();
    auto *eval = expr_command("eval", "Interval value at G = M!", 1);
    eval->add_option("--base-factorial", opt.base_factorial, "M, the base is M!")->required();
    eval->add_option("--precision", opt.precision, "Working precision in bits")->capture_default_str();
    expr_command("add", "Sum", 2);
    expr_command("mul", "Product", 2);
    expr_command("div", "Exact quotient", 2);
    auto *measure = app.add_subcommand("measure", "Counting measure of a set in {1, ..., G}");
    measure->add_option("--progression", opt.progressions, "K,N for {K, K+N, ...}");
    measure->add_option("--union", opt.union_spec, "\"K1,N1;K2,N2;...\"");
    measure->add_option("--set", opt.set_spec, "\"a,b,c\"");
    app.add_subcommand("repl", "Read commands from standard input");

    // "-G ..." and "-3 ..." are expressions, not short options; a leading
    // blank keeps the option parser off them.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        const bool negative_expr =
            it->size() > 1 && (*it)[0] == '-' && (std::string_view("G0123456789.( ").find((*it)[1]) != std::string_view::npos);
        reversed.push_back(negative_expr ? " " + *it : *it);
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? exit_code::ok : exit_code::syntax;
        return result;
    }

    for (auto &e : exprs) {
        if (e.starts_with(" -") && std::find(args.begin(), args.end(), e.substr(1)) != args.end())
            e.erase(0, 1);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "repl") {
        repl(in, opt, result);
        return result;
    }
    result.exit_code = guarded(result.err, [&] { result.out = dispatch(command, exprs, opt) + "\n"; });
    return result;
}

CommandResult run_command(const std::vector<std::string> &args)
{
    std::istringstream empty;
    return run_command(args, empty);
}

} // namespace grossone
