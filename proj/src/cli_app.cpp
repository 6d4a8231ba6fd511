#include "grossnum/cli_app.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grossnum/gross_number.hpp"
#include "grossnum/ranking.hpp"
#include "grossnum/sets.hpp"
#include "grossnum/text.hpp"

namespace grossnum {
namespace {

// Malformed input discovered after flag parsing; reported as a usage error
// (exit 2), unlike domain errors (exit 1).
struct UsageFailure {
    std::string message;
};

struct Options {
    bool json = false;
    PrintOptions print;
    int div_budget = kDefaultDivTerms;
};

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::pair<std::string, std::string> split_on_semicolon(const std::string& rest,
                                                       const char* verb) {
    std::size_t pos = rest.find(';');
    if (pos == std::string::npos || rest.find(';', pos + 1) != std::string::npos)
        throw UsageFailure{std::string(verb) + " takes two operands separated by ';'"};
    return {trim(rest.substr(0, pos)), trim(rest.substr(pos + 1))};
}

void report(const GrossError& e, std::ostream& err) {
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e))
        err << s->name() << " at position " << s->position() << ": " << s->what() << "\n";
    else
        err << e.name() << ": " << e.what() << "\n";
}

// ---------------------------------------------------------------------------
// Verbs, shared between one-shot subcommands and the repl

void do_eval(const Options& o, std::ostream& out, const std::string& expr) {
    GrossNumber v = eval_text(expr, o.div_budget);
    if (o.json)
        out << nlohmann::json{{"value", print(v, o.print)}}.dump() << "\n";
    else
        out << print(v, o.print) << "\n";
}

void do_cmp(const Options& o, std::ostream& out, const std::string& lhs,
            const std::string& rhs) {
    Ordering r = compare(eval_text(lhs, o.div_budget), eval_text(rhs, o.div_budget));
    if (o.json)
        out << nlohmann::json{{"result", ordering_symbol(r)}}.dump() << "\n";
    else
        out << ordering_symbol(r) << "\n";
}

void do_measure(const Options& o, std::ostream& out, const std::string& text) {
    Measure m = measure(parse_set(text));
    if (o.json)
        out << m.to_json().dump() << "\n";
    else
        out << m.str(o.print) << "\n";
}

void do_measure_cmp(const Options& o, std::ostream& out, const std::string& lhs,
                    const std::string& rhs) {
    Ordering r = compare_measure(measure(parse_set(lhs)), measure(parse_set(rhs)));
    if (o.json)
        out << nlohmann::json{{"result", ordering_symbol(r)}}.dump() << "\n";
    else
        out << ordering_symbol(r) << "\n";
}

struct RankEntry {
    std::string label;
    ScoreVector scores;
};

ScoreVector parse_scores(const std::string& text) {
    ScoreVector v;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string token = trim(text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        auto r = Rational::from_numeral(token);
        if (!r) throw UsageFailure{"malformed score '" + token + "'"};
        v.scores.push_back(*r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

void do_rank(const Options& o, std::ostream& out, const std::string& method,
             std::vector<RankEntry> entries) {
    const bool binary = method == "binary";
    if (entries.empty()) throw UsageFailure{"rank needs at least one score vector"};
    for (const auto& e : entries) validate(e.scores);
    for (const auto& e : entries)
        if (e.scores.k() != entries.front().scores.k())
            throw DimensionMismatch("all ranked vectors must have the same length");

    auto cmp = [&](const ScoreVector& a, const ScoreVector& b) {
        return binary ? binary_compare(a, b) : gross_compare(a, b);
    };
    if (binary)
        for (const auto& e : entries) binary_rank(e.scores);  // surface errors up front

    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cmp(entries[a].scores, entries[b].scores) == Ordering::Greater;
    });

    // Competition numbering: ties share a rank, the next distinct entry gets
    // its 1-based position.
    std::vector<std::size_t> rank(order.size(), 1);
    for (std::size_t i = 1; i < order.size(); ++i)
        rank[i] = cmp(entries[order[i]].scores, entries[order[i - 1]].scores) ==
                          Ordering::Equal
                      ? rank[i - 1]
                      : i + 1;

    nlohmann::json board = nlohmann::json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const RankEntry& e = entries[order[i]];
        std::string value = binary ? "0." + binary_rank(e.scores).bits
                                   : print(gross_rank(e.scores), o.print);
        if (o.json) {
            nlohmann::json row{{"rank", rank[i]},
                               {"label", e.label},
                               {"scores", e.scores.to_json().at("scores")},
                               {"value", value}};
            if (binary) {
                BitRank r = binary_rank(e.scores);
                row["bits"] = r.bits;
                row["bit_length"] = r.bit_length();
            }
            board.push_back(std::move(row));
        } else {
            out << rank[i] << ". " << e.label << " " << value;
            if (binary) out << " (" << binary_rank(e.scores).bit_length() << " bits)";
            out << "\n";
        }
    }
    if (o.json)
        out << nlohmann::json{{"method", method}, {"leaderboard", std::move(board)}}.dump()
            << "\n";
}

// ---------------------------------------------------------------------------
// Repl

void run_repl_line(const Options& o, std::ostream& out, const std::string& line) {
    std::size_t space = line.find_first_of(" \t");
    std::string verb = line.substr(0, space);
    std::string rest = space == std::string::npos ? "" : trim(line.substr(space + 1));

    if (verb == "eval") {
        do_eval(o, out, rest);
    } else if (verb == "cmp") {
        auto [lhs, rhs] = split_on_semicolon(rest, "cmp");
        do_cmp(o, out, lhs, rhs);
    } else if (verb == "measure") {
        do_measure(o, out, rest);
    } else if (verb == "measure-cmp") {
        auto [lhs, rhs] = split_on_semicolon(rest, "measure-cmp");
        do_measure_cmp(o, out, lhs, rhs);
    } else if (verb == "rank") {
        std::istringstream words(rest);
        std::string method;
        words >> method;
        if (method != "gross" && method != "binary")
            throw UsageFailure{"rank needs a method, gross or binary"};
        std::vector<RankEntry> entries;
        std::string word;
        while (words >> word) {
            std::size_t eq = word.find('=');
            RankEntry e;
            e.label = eq == std::string::npos ? "#" + std::to_string(entries.size() + 1)
                                              : word.substr(0, eq);
            e.scores = parse_scores(eq == std::string::npos ? word : word.substr(eq + 1));
            entries.push_back(std::move(e));
        }
        do_rank(o, out, method, std::move(entries));
    } else if (verb == "help") {
        out << "verbs:\n"
               "  eval <expr>\n"
               "  cmp <expr> ; <expr>\n"
               "  measure <set>\n"
               "  measure-cmp <set> ; <set>\n"
               "  rank gross|binary [LABEL=]g,s,b ...\n"
               "  quit\n"
               "a bare expression is evaluated as if by eval\n";
    } else {
        do_eval(o, out, line);
    }
}

void repl(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const bool interactive = (&in == &std::cin) && isatty(STDIN_FILENO);
    std::string line;
    for (;;) {
        if (interactive) out << "grossnum> " << std::flush;
        if (!std::getline(in, line)) break;
        std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        if (trimmed == "quit" || trimmed == "exit") break;
        try {
            run_repl_line(o, out, trimmed);
        } catch (const GrossError& e) {
            report(e, err);
        } catch (const UsageFailure& u) {
            err << "usage error: " << u.message << "\n";
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Options o;
    if (const char* env = std::getenv("GROSSNUM_MAX_DIV_TERMS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*env == '\0' || *end != '\0' || v < 1 || v > 1000000) {
            err << "usage error: GROSSNUM_MAX_DIV_TERMS must be a positive integer, got '"
                << env << "'\n";
            return 2;
        }
        o.div_budget = static_cast<int>(v);
    }

    CLI::App app{"exact arithmetic, set measurement, and ranking over the grossone numeral system"};
    app.name("grossnum");
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "emit JSON instead of plain text");
    app.add_flag("--unicode", o.print.unicode,
                 "print the circled-one symbol instead of its ASCII alias G");

    std::string expr, cmp_lhs, cmp_rhs, set_text, set_lhs, set_rhs;
    std::string method = "gross";
    std::vector<std::string> scores_raw, labels;

    auto* c_eval = app.add_subcommand("eval", "evaluate an expression to canonical form");
    c_eval->add_option("expr", expr, "expression, e.g. \"3*G^2 - (G - 1)\"")->required();

    auto* c_cmp = app.add_subcommand("cmp", "compare two expressions");
    c_cmp->add_option("lhs", cmp_lhs)->required();
    c_cmp->add_option("rhs", cmp_rhs)->required();

    auto* c_measure = app.add_subcommand("measure", "measure a described infinite set");
    c_measure->add_option("set", set_text, "set descriptor, e.g. \"num[1,2)@10\"")->required();

    auto* c_measure_cmp = app.add_subcommand("measure-cmp", "compare two set measures");
    c_measure_cmp->add_option("lhs", set_lhs)->required();
    c_measure_cmp->add_option("rhs", set_rhs)->required();

    auto* c_rank = app.add_subcommand("rank", "rank score vectors lexicographically");
    c_rank->add_option("--method", method, "gross or binary")
        ->check(CLI::IsMember({"gross", "binary"}));
    c_rank->add_option("--scores", scores_raw, "comma-separated scores, one flag per entrant")
        ->required();
    c_rank->add_option("--label", labels, "entrant name, one flag per entrant");

    auto* c_repl = app.add_subcommand("repl", "interactive loop over the same verbs");

    for (auto* sub : {c_eval, c_cmp, c_measure, c_measure_cmp, c_rank, c_repl})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_eval->parsed()) {
            do_eval(o, out, expr);
        } else if (c_cmp->parsed()) {
            do_cmp(o, out, cmp_lhs, cmp_rhs);
        } else if (c_measure->parsed()) {
            do_measure(o, out, set_text);
        } else if (c_measure_cmp->parsed()) {
            do_measure_cmp(o, out, set_lhs, set_rhs);
        } else if (c_rank->parsed()) {
            if (!labels.empty() && labels.size() != scores_raw.size())
                throw UsageFailure{"got " + std::to_string(labels.size()) + " labels for " +
                                   std::to_string(scores_raw.size()) + " score vectors"};
            std::vector<RankEntry> entries;
            for (std::size_t i = 0; i < scores_raw.size(); ++i) {
                RankEntry e;
                e.label = i < labels.size() ? labels[i] : "#" + std::to_string(i + 1);
                e.scores = parse_scores(scores_raw[i]);
                entries.push_back(std::move(e));
            }
            do_rank(o, out, method, std::move(entries));
        } else if (c_repl->parsed()) {
            repl(o, in, out, err);
        }
    } catch (const GrossError& e) {
        report(e, err);
        return 1;
    } catch (const UsageFailure& u) {
        err << "usage error: " << u.message << "\n";
        return 2;
    }
    return 0;
}

}  // namespace grossnum
