#pragma once

// Command implementations behind the `moufang` executable. Each returns the
// text to print and the process exit code: 0 success, 1 a verification or
// internal check failed, 2 usage or parse error.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "moufang/expr.hpp"
#include "moufang/loop.hpp"
#include "moufang/subloop.hpp"
#include "moufang/symbolic.hpp"
#include "moufang/verify.hpp"

namespace moufang::cli {

enum class Format { Text, Json };

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline CommandResult usage_error(const std::string& message, Format format) {
    if (format == Format::Json) return {kExitUsage, json{{"error", message}}.dump(2) + "\n"};
    return {kExitUsage, "error: " + message + "\n"};
}

inline CommandResult failure(const std::string& message, Format format) {
    if (format == Format::Json) return {kExitFailure, json{{"error", message}}.dump(2) + "\n"};
    return {kExitFailure, "error: " + message + "\n"};
}

}  // namespace detail

inline CommandResult cmd_verify(const VerifyOptions& options, const Tables& tables, Format format) {
    const VerificationReport report = run_verification(options, tables);
    const int code = report.overall() ? kExitOk : kExitFailure;
    if (format == Format::Json) return {code, to_json(report).dump(2) + "\n"};
    return {code, to_text(report)};
}

inline const std::vector<std::string>& proof_claims() {
    static const std::vector<std::string> claims = {"moufang", "inverse", "identity", "normal-form"};
    return claims;
}

inline CommandResult cmd_prove(const std::string& claim, const Tables& tables, Format format) {
    ProofReport report;
    if (claim == "moufang") {
        report = prove_moufang(tables);
    } else if (claim == "inverse") {
        report = prove_inverse_law(tables);
    } else if (claim == "identity") {
        report = prove_identity_law(tables);
    } else if (claim == "normal-form") {
        report = prove_normal_form(tables);
    } else {
        return detail::usage_error("unknown claim '" + claim + "' (expected moufang, inverse, identity or normal-form)", format);
    }
    const int code = report.proved() ? kExitOk : kExitFailure;
    if (format == Format::Json) {
        json j = to_json(report);
        j["millis"] = report.millis;
        return {code, j.dump(2) + "\n"};
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", report.millis);
    return {code, to_text(report) + "  time: " + ms + " ms\n"};
}

inline CommandResult cmd_eval(const std::string& expression, const Loop& loop, Format format) {
    try {
        const LoopElement v = evaluate_expression(expression, loop);
        if (format == Format::Json)
            return {kExitOk, json{{"expression", expression}, {"value", format_element(v)}, {"sparse", format_sparse(v)}}.dump(2) + "\n"};
        return {kExitOk, format_element(v) + "\n"};
    } catch (const ParseError& e) {
        return detail::usage_error(e.what(), format);
    } catch (const Error& e) {
        return detail::failure(e.what(), format);
    }
}

inline CommandResult cmd_closure(const std::vector<std::string>& generators, std::size_t cap, const Loop& loop, Format format,
                                 bool list_elements = false) {
    std::vector<LoopElement> gens;
    try {
        for (const auto& g : generators) gens.push_back(parse_element(g));
    } catch (const ParseError& e) {
        return detail::usage_error(e.what(), format);
    }
    if (cap < 1) return detail::usage_error("cap must be at least 1", format);
    ClosureResult r;
    try {
        r = closure(gens, cap, loop);
    } catch (const Error& e) {
        return detail::failure(e.what(), format);
    }
    std::vector<int> support;
    for (int i = 1; i <= kCoordCount; ++i)
        for (const auto& x : r.elements)
            if (!x.at(i).is_zero()) {
                support.push_back(i);
                break;
            }
    const int code = (r.truncated || r.closed) ? kExitOk : kExitFailure;
    if (format == Format::Json) {
        json j{{"generators", json::array()}, {"order", r.order()}, {"closed", r.closed}, {"truncated", r.truncated}, {"support", support}};
        for (const auto& g : gens) j["generators"].push_back(format_element(g));
        if (list_elements) {
            j["elements"] = json::array();
            for (const auto& x : r.elements) j["elements"].push_back(format_element(x));
        }
        return {code, j.dump(2) + "\n"};
    }
    std::string out = "order: " + std::to_string(r.order()) + (r.truncated ? " (truncated at cap)" : "") + "\n";
    out += std::string("closed: ") + (r.closed ? "yes" : "no") + "\n";
    out += "support:";
    for (int i : support) out += " " + std::to_string(i);
    out += "\n";
    if (list_elements)
        for (const auto& x : r.elements) out += format_element(x) + "\n";
    return {code, out};
}

enum class DensityMode { Exact, Sample };

inline CommandResult cmd_density(const std::string& a_text, const std::string& b_text, DensityMode mode, long long trials,
                                 std::uint64_t seed, const Tables& tables, Format format) {
    LoopElement a, b;
    try {
        a = parse_element(a_text);
        b = parse_element(b_text);
    } catch (const ParseError& e) {
        return detail::usage_error(e.what(), format);
    }
    try {
        if (mode == DensityMode::Exact) {
            const LSetCount c = count_l_set(a, b, SymbolicLoop(tables));
            if (format == Format::Json)
                return {kExitOk, json{{"mode", "exact"},
                                      {"a", format_element(a)},
                                      {"b", format_element(b)},
                                      {"count", c.count},
                                      {"total", c.total},
                                      {"density", c.density()},
                                      {"l_set_size", c.full_size()}}
                                         .dump(2) +
                                     "\n"};
            return {kExitOk, "count: " + std::to_string(c.count) + " / " + std::to_string(c.total) + " assignments of x1..x10\n" +
                                 "density: " + json(c.density()).dump() + "\n" + "|l_{a,b}|: " + std::to_string(c.full_size()) + "\n"};
        }
        if (trials < 1) return detail::usage_error("trials must be at least 1", format);
        if (seed == 0) return detail::usage_error("seed must be nonzero", format);
        const DensityEstimate e = density_sample(a, b, seed, trials, Loop(tables));
        if (format == Format::Json)
            return {kExitOk, json{{"mode", "sample"},
                                  {"a", format_element(a)},
                                  {"b", format_element(b)},
                                  {"seed", seed},
                                  {"trials", trials},
                                  {"hits", e.hits},
                                  {"density", e.density()},
                                  {"standard_error", e.standard_error()}}
                                     .dump(2) +
                                 "\n"};
        return {kExitOk, "hits: " + std::to_string(e.hits) + " / " + std::to_string(trials) + "\n" + "density: " + json(e.density()).dump() +
                             " +/- " + json(e.standard_error()).dump() + "\n"};
    } catch (const Error& e) {
        return detail::failure(e.what(), format);
    }
}

inline CommandResult cmd_order(const std::string& x_text, long long cap, const Loop& loop, Format format) {
    LoopElement x;
    try {
        x = parse_element(x_text);
    } catch (const ParseError& e) {
        return detail::usage_error(e.what(), format);
    }
    if (cap < 1) return detail::usage_error("cap must be at least 1", format);
    try {
        const long long n = loop.order(x, cap);
        if (format == Format::Json) return {kExitOk, json{{"element", format_element(x)}, {"order", n}}.dump(2) + "\n"};
        return {kExitOk, std::to_string(n) + "\n"};
    } catch (const Error& e) {
        return detail::failure(e.what(), format);
    }
}

inline CommandResult cmd_tables(const Tables& tables, Format format) {
    try {
        const auto r = validate_tables(tables);
        if (format == Format::Json) {
            auto one = [](const TableReport& t) {
                json indices = json::object();
                for (const auto& [block, set] : t.indices_read) indices[std::string(1, block)] = set;
                return json{{"term_counts", t.term_counts}, {"total_terms", t.total_terms}, {"max_degree", t.max_degree}, {"indices_read", indices}};
            };
            return {kExitOk, json{{"f", one(r.f)}, {"h", one(r.h)}}.dump(2) + "\n"};
        }
        std::string out;
        auto one = [&](const char* name, const FormulaTable& table, const TableReport& t) {
            out += std::string(name) + "-table: " + std::to_string(t.total_terms) + " terms, max degree " + std::to_string(t.max_degree) + "\n";
            for (int k = 1; k <= kCoordCount; ++k)
                if (!table.coord(k).is_zero())
                    out += "  " + std::string(name) + std::to_string(k) + " = " + table.coord(k).to_string() + "\n";
        };
        one("f", tables.f, r.f);
        one("h", tables.h, r.h);
        return {kExitOk, out};
    } catch (const ValidationFailure& e) {
        return detail::failure(e.what(), format);
    }
}

}  // namespace moufang::cli
