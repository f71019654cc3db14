#pragma once

// The end-to-end verification run: exact checks of the counterexample,
// seeded random sweeps of the loop laws, and the symbolic proofs.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "moufang/formula_tables.hpp"
#include "moufang/loop.hpp"
#include "moufang/subloop.hpp"
#include "moufang/symbolic.hpp"
#include "moufang/version.hpp"

namespace moufang {

using json = nlohmann::json;

struct CheckResult {
    std::string name;
    bool passed = false;
    json details = json::object();
    double millis = 0.0;
};

struct VerificationReport {
    std::string tool_version = kVersion;
    std::uint64_t seed = 0;
    long long trials = 0;
    bool symbolic = false;
    std::vector<CheckResult> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Serialization helpers

inline json element_json(const LoopElement& x) { return format_element(x); }

inline json to_json(const ProofReport& r) {
    json j;
    j["claim"] = r.claim;
    j["verdict"] = to_string(r.verdict);
    j["identities"] = json::array();
    for (const auto& id : r.identities) {
        json d = json::array();
        for (int k = 1; k <= kCoordCount; ++k) d.push_back(id.difference.at(k).to_string());
        j["identities"].push_back({{"identity", id.name},
                                   {"holds", id.holds()},
                                   {"lhs_terms", id.lhs_terms},
                                   {"rhs_terms", id.rhs_terms},
                                   {"max_degree", id.max_degree},
                                   {"difference", d}});
    }
    j["sub_checks"] = json::array();
    for (const auto& s : r.sub_checks) j["sub_checks"].push_back({{"name", s.name}, {"passed", s.passed}});
    if (r.witness) {
        json w;
        w["identity"] = r.witness->identity;
        w["coordinate"] = r.witness->coordinate;
        w["assignment"] = json::object();
        for (const auto& [name, value] : r.witness->assignment) w["assignment"][name] = value;
        w["elements"] = json::object();
        for (const auto& [block, x] : r.witness->elements) w["elements"][std::string(1, block)] = format_element(x);
        w["confirmed"] = r.witness->confirmed;
        j["witness"] = w;
        j["note"] = "a nonzero difference points at a table transcription error";
    }
    return j;
}

inline std::string to_text(const ProofReport& r) {
    std::string out = "claim " + r.claim + ": " + to_string(r.verdict) + "\n";
    for (const auto& s : r.sub_checks) out += std::string("  [") + (s.passed ? "ok" : "FAIL") + "] " + s.name + "\n";
    for (const auto& id : r.identities) {
        out += std::string("  [") + (id.holds() ? "ok" : "FAIL") + "] " + id.name + "  (lhs terms " + std::to_string(id.lhs_terms) +
               ", rhs terms " + std::to_string(id.rhs_terms) + ", max degree " + std::to_string(id.max_degree) + ")\n";
        if (!id.holds()) {
            const int k = id.first_nonzero();
            out += "    coordinate " + std::to_string(k) + " differs by " + id.difference.at(k).to_string() + "\n";
        }
    }
    if (r.witness) {
        out += "  witness:";
        for (const auto& [block, x] : r.witness->elements) out += std::string(" ") + block + " = " + format_sparse(x) + ";";
        out += std::string(" concretely ") + (r.witness->confirmed ? "confirmed" : "NOT confirmed") + "\n";
        out += "  a nonzero difference points at a table transcription error\n";
    }
    return out;
}

inline json to_json(const VerificationReport& r) {
    json j;
    j["tool_version"] = r.tool_version;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["symbolic"] = r.symbolic;
    j["checks"] = json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"verdict", c.passed ? "pass" : "fail"}, {"details", c.details}, {"millis", c.millis}});
    j["overall"] = r.overall() ? "pass" : "fail";
    return j;
}

inline std::string to_text(const VerificationReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", c.millis);
        out += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + "  (" + ms + " ms)\n";
        if (!c.passed) out += "      " + c.details.dump() + "\n";
    }
    out += std::string("overall: ") + (r.overall() ? "pass" : "fail");
    if (const auto* f = r.first_failure()) out += " (first failing check: " + f->name + ")";
    out += "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace detail {

inline CheckResult timed_check(std::string name, const std::function<void(CheckResult&)>& body) {
    CheckResult c;
    c.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.passed = false;
        c.details["error"] = e.what();
    }
    c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

}  // namespace detail

struct Identification {
    int index;
    std::string expression;
    LoopElement value;
};

/// e_5 .. e_19 as commutators and associators of a, b, c, d.
inline std::vector<Identification> identification_table(const Loop& loop = Loop::standard()) {
    const LoopElement a = basis(1), b = basis(2), c = basis(3), d = basis(4);
    auto comm = [&](const LoopElement& x, const LoopElement& y) { return loop.commutator(x, y); };
    return {
        {5, "[a,b]", comm(a, b)},
        {6, "[a,c]", comm(a, c)},
        {7, "[a,d]", comm(a, d)},
        {8, "[b,c]", comm(b, c)},
        {9, "[b,d]", comm(b, d)},
        {10, "[c,d]", comm(c, d)},
        {11, "[[a,b],c]", comm(comm(a, b), c)},
        {12, "[[a,b],d]", comm(comm(a, b), d)},
        {13, "[[a,c],b]", comm(comm(a, c), b)},
        {14, "[[a,c],d]", comm(comm(a, c), d)},
        {15, "[[a,d],b]", comm(comm(a, d), b)},
        {16, "[[a,d],c]", comm(comm(a, d), c)},
        {17, "[[b,c],d]", comm(comm(b, c), d)},
        {18, "[[b,d],c]", comm(comm(b, d), c)},
        {19, "([a,b],c,d)", loop.associator(comm(a, b), c, d)},
    };
}

inline CheckResult check_tables(const Tables& tables) {
    return detail::timed_check("table-validation", [&](CheckResult& c) {
        const auto r = validate_tables(tables);
        c.details["f_terms"] = r.f.total_terms;
        c.details["h_terms"] = r.h.total_terms;
        c.details["f_max_degree"] = r.f.max_degree;
        c.details["h_max_degree"] = r.h.max_degree;
        c.passed = true;
    });
}

inline CheckResult check_identification(const Loop& loop) {
    return detail::timed_check("identification-table", [&](CheckResult& c) {
        c.passed = true;
        json failures = json::array();
        for (const auto& id : identification_table(loop)) {
            if (id.value != basis(id.index)) {
                c.passed = false;
                failures.push_back({{"expected", "e" + std::to_string(id.index)}, {"expression", id.expression}, {"value", element_json(id.value)}});
            }
        }
        c.details["equalities"] = 15;
        if (!failures.empty()) c.details["failures"] = failures;
    });
}

inline CheckResult check_generator_associators(const Loop& loop) {
    return detail::timed_check("generator-associators", [&](CheckResult& c) {
        const LoopElement a = basis(1), b = basis(2), cc = basis(3), d = basis(4);
        const struct {
            const char* name;
            LoopElement value;
        } triples[] = {{"(a,b,c)", loop.associator(a, b, cc)},
                       {"(a,b,d)", loop.associator(a, b, d)},
                       {"(a,c,d)", loop.associator(a, cc, d)},
                       {"(b,c,d)", loop.associator(b, cc, d)}};
        c.passed = true;
        for (const auto& t : triples) {
            c.details[t.name] = element_json(t.value);
            c.passed = c.passed && t.value.is_identity();
        }
        const LoopElement tail = loop.associator(basis(5), cc, d);
        c.details["(e5,c,d)"] = element_json(tail);
        c.passed = c.passed && tail == basis(19);
    });
}

inline CheckResult check_nonsubloop(const Loop& loop) {
    return detail::timed_check("nonsubloop-witness", [&](CheckResult& c) {
        const Witness w = nonsubloop_witness(loop);
        c.details["members"] = {"a", "b"};
        c.details["violating"] = element_json(w.violating);
        c.details["violating_associator"] = element_json(w.violating_associator);
        c.passed = w.violating == basis(5) && w.violating_associator == basis(19);
    });
}

/// All 64 ordered triples of {a,b,c,d} associate, yet ([a,b],c,d) != 1.
inline CheckResult check_generating_set(const Loop& loop) {
    return detail::timed_check("generating-set-associative-loop-not", [&](CheckResult& c) {
        int trivial = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                for (int k = 1; k <= 4; ++k)
                    if (loop.associator(basis(i), basis(j), basis(k)).is_identity()) ++trivial;
        const LoopElement witness = loop.associator(loop.commutator(basis(1), basis(2)), basis(3), basis(4));
        c.details["trivial_generator_triples"] = trivial;
        c.details["nonassociative_witness"] = element_json(witness);
        c.passed = trivial == 64 && !witness.is_identity();
    });
}

/// Counts of law violations found by a seeded sweep.
struct SweepResult {
    long long trials = 0;
    long long moufang = 0;
    long long left_alternative = 0;
    long long right_alternative = 0;
    long long flexible = 0;
    long long inverse = 0;
    long long tail_central = 0;
    /// First failing triple (x, y, z) per law.
    std::map<std::string, std::vector<LoopElement>> first_violation;
};

/// Draws (x, y, z) per trial from one xorshift stream and checks
/// (xy)(zx) = (x(yz))x, (xx)y = x(xy), (yx)x = y(xx), (xy)x = x(yx),
/// x x^-1 = x^-1 x = 1, and x o t = t o x = x + t for t the 11..19 tail of z.
inline SweepResult run_sweeps(const Loop& loop, std::uint64_t seed, long long trials) {
    SweepResult r;
    r.trials = trials;
    if (trials <= 0) return r;
    ElementSampler sampler(seed);
    auto note = [&](long long& counter, const char* law, const LoopElement& x, const LoopElement& y, const LoopElement& z) {
        ++counter;
        r.first_violation.try_emplace(law, std::vector<LoopElement>{x, y, z});
    };
    for (long long t = 0; t < trials; ++t) {
        const LoopElement x = sampler.next();
        const LoopElement y = sampler.next();
        const LoopElement z = sampler.next();
        const LoopElement xy = loop.mul(x, y), yx = loop.mul(y, x), xx = loop.mul(x, x);
        if (loop.mul(xy, loop.mul(z, x)) != loop.mul(loop.mul(x, loop.mul(y, z)), x)) note(r.moufang, "moufang", x, y, z);
        if (loop.mul(xx, y) != loop.mul(x, xy)) note(r.left_alternative, "left_alternative", x, y, z);
        if (loop.mul(yx, x) != loop.mul(y, xx)) note(r.right_alternative, "right_alternative", x, y, z);
        if (loop.mul(xy, x) != loop.mul(x, yx)) note(r.flexible, "flexible", x, y, z);
        const LoopElement inv = loop.inverse_formula(x);
        if (!loop.mul(x, inv).is_identity() || !loop.mul(inv, x).is_identity()) note(r.inverse, "inverse", x, y, z);
        const LoopElement tail = restrict_to(z, 11, kCoordCount);
        const LoopElement sum = x + tail;
        if (loop.mul(x, tail) != sum || loop.mul(tail, x) != sum) note(r.tail_central, "tail_central", x, y, z);
    }
    return r;
}

struct VerifyOptions {
    bool symbolic = false;
    long long trials = 1'000'000;
    std::uint64_t seed = 42;
};

inline CheckResult proof_check(const std::string& name, const std::function<ProofReport(const Tables&)>& prove, const Tables& tables) {
    return detail::timed_check(name, [&](CheckResult& c) {
        const ProofReport r = prove(tables);
        c.details = to_json(r);
        c.passed = r.proved();
    });
}

/// Runs every check in order; each check records its own failure, so one
/// failing check does not hide the others.
inline VerificationReport run_verification(const VerifyOptions& options, const Tables& tables = Tables::shipped()) {
    VerificationReport report;
    report.seed = options.seed;
    report.trials = options.trials;
    report.symbolic = options.symbolic;
    report.checks.push_back(check_tables(tables));

    std::optional<Loop> loop;
    report.checks.push_back(detail::timed_check("loop-construction", [&](CheckResult& c) {
        loop.emplace(tables);
        c.passed = true;
    }));
    if (loop) {
        report.checks.push_back(check_identification(*loop));
        report.checks.push_back(check_generator_associators(*loop));
        report.checks.push_back(check_nonsubloop(*loop));
        report.checks.push_back(check_generating_set(*loop));

        if (options.trials > 0) {
            SweepResult sweep;
            const auto start = std::chrono::steady_clock::now();
            std::string error;
            try {
                sweep = run_sweeps(*loop, options.seed, options.trials);
            } catch (const std::exception& e) {
                error = e.what();
            }
            const double share = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / 6.0;
            const std::pair<const char*, long long> laws[] = {{"moufang", sweep.moufang},
                                                              {"left_alternative", sweep.left_alternative},
                                                              {"right_alternative", sweep.right_alternative},
                                                              {"flexible", sweep.flexible},
                                                              {"inverse", sweep.inverse},
                                                              {"tail_central", sweep.tail_central}};
            for (const auto& [law, violations] : laws) {
                CheckResult c;
                c.name = std::string("sweep-") + law;
                c.passed = error.empty() && violations == 0;
                c.details["trials"] = options.trials;
                c.details["violations"] = violations;
                if (!error.empty()) c.details["error"] = error;
                if (auto it = sweep.first_violation.find(law); it != sweep.first_violation.end()) {
                    c.details["witness"] = {{"x", element_json(it->second[0])}, {"y", element_json(it->second[1])}, {"z", element_json(it->second[2])}};
                }
                c.millis = share;
                report.checks.push_back(std::move(c));
            }
        }
    }
    if (options.symbolic) {
        report.checks.push_back(proof_check("prove-moufang", [](const Tables& t) { return prove_moufang(t); }, tables));
        report.checks.push_back(proof_check("prove-inverse", [](const Tables& t) { return prove_inverse_law(t); }, tables));
        report.checks.push_back(proof_check("prove-identity", [](const Tables& t) { return prove_identity_law(t); }, tables));
        report.checks.push_back(proof_check("prove-normal-form", [](const Tables& t) { return prove_normal_form(t); }, tables));
    }
    return report;
}

}  // namespace moufang
