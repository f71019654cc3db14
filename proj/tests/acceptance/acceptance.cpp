// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Every tolerance and size is fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "moufang/moufang.hpp"

using namespace moufang;

namespace {

constexpr std::uint64_t kSweepSeed = 42;
constexpr long long kSweepTrials = 1'000'000;
constexpr double kSweepBudgetSeconds = 60.0;
constexpr double kExactBudgetSeconds = 1.0;
constexpr double kMoufangBudgetSeconds = 600.0;
constexpr long long kDensityTrials = 100'000;
constexpr double kDensitySigmas = 3.0;
constexpr std::uint64_t kExpectedLSetCount = 19683;
constexpr long long kConsistencyTrials = 10'000;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
    bool passed = false;
    std::string detail;
};

Outcome guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

// --- criteria 1..6, parameterised by the tables so mutants can reuse them ---

Outcome golden_identities(const Tables& tables) {
    const auto start = std::chrono::steady_clock::now();
    const Loop loop(tables);
    int ok = 0;
    std::string bad;
    for (const auto& id : identification_table(loop)) {
        if (id.value == basis(id.index))
            ++ok;
        else if (bad.empty())
            bad = " first mismatch e" + std::to_string(id.index) + " = " + id.expression;
    }
    const double t = seconds_since(start);
    return {ok == 15 && t < kExactBudgetSeconds, std::to_string(ok) + "/15 equalities in " + std::to_string(t) + " s" + bad};
}

Outcome generator_associators(const Tables& tables) {
    const auto start = std::chrono::steady_clock::now();
    const Loop loop(tables);
    const LoopElement a = basis(1), b = basis(2), c = basis(3), d = basis(4);
    int trivial = 0;
    for (const auto& v : {loop.associator(a, b, c), loop.associator(a, b, d), loop.associator(a, c, d), loop.associator(b, c, d)})
        trivial += v.is_identity();
    const LoopElement tail = loop.associator(basis(5), c, d);
    const double t = seconds_since(start);
    return {trivial == 4 && tail == basis(19) && !tail.is_identity() && t < kExactBudgetSeconds,
            std::to_string(trivial) + "/4 trivial, (e5,e3,e4) = " + format_sparse(tail)};
}

Outcome nonsubloop(const Tables& tables) {
    const Loop loop(tables);
    const Witness w = nonsubloop_witness(loop);
    return {w.violating == basis(5) && w.violating_associator == basis(19),
            "a, b in l_{c,d}; [a,b] = " + format_sparse(w.violating) + " with ([a,b],c,d) = " + format_sparse(w.violating_associator)};
}

Outcome generating_set(const Tables& tables) {
    const Loop loop(tables);
    int trivial = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) trivial += loop.associator(basis(i), basis(j), basis(k)).is_identity();
    const LoopElement w = loop.associator(loop.commutator(basis(1), basis(2)), basis(3), basis(4));
    return {trivial == 64 && !w.is_identity(), std::to_string(trivial) + "/64 generator triples trivial, witness " + format_sparse(w)};
}

Outcome moufang_proof(const Tables& tables) {
    const ProofReport r = prove_moufang(tables);
    const double t = r.millis / 1000.0;
    std::string detail = std::string(to_string(r.verdict)) + " in " + std::to_string(t) + " s";
    if (!r.identities.empty())
        detail += ", lhs " + std::to_string(r.identities[0].lhs_terms) + " terms, degree " + std::to_string(r.identities[0].max_degree);
    return {r.proved() && t <= kMoufangBudgetSeconds, detail};
}

Outcome other_proofs(const Tables& tables) {
    const ProofReport inv = prove_inverse_law(tables), id = prove_identity_law(tables), nf = prove_normal_form(tables);
    int basis_checks = 0;
    for (const auto& s : nf.sub_checks)
        if (s.passed && s.name.rfind("f(e", 0) == 0) ++basis_checks;
    const bool ok = inv.proved() && id.proved() && nf.proved() && basis_checks == kCoordCount;
    return {ok, std::string("inverse ") + to_string(inv.verdict) + ", identity " + to_string(id.verdict) + ", normal-form " + to_string(nf.verdict) +
                    ", f(e_i,e_i)=0 for " + std::to_string(basis_checks) + "/19"};
}

using Criterion = std::function<Outcome(const Tables&)>;

const std::vector<std::pair<int, Criterion>>& table_criteria() {
    static const std::vector<std::pair<int, Criterion>> list = {
        {1, golden_identities}, {2, generator_associators}, {3, nonsubloop}, {4, generating_set}, {5, moufang_proof}, {6, other_proofs}};
    return list;
}

// --- criteria 7..11 ---------------------------------------------------------

Outcome sweeps() {
    const auto start = std::chrono::steady_clock::now();
    const SweepResult r = run_sweeps(Loop::standard(), kSweepSeed, kSweepTrials);
    const double t = seconds_since(start);
    const long long total = r.moufang + r.left_alternative + r.right_alternative + r.flexible + r.inverse + r.tail_central;
    return {total == 0 && t <= kSweepBudgetSeconds,
            std::to_string(kSweepTrials) + " trials, " + std::to_string(total) + " violations in " + std::to_string(t) + " s"};
}

/// |{x in F_3^10 : (x, e3, e4) = 1}| using concrete associators only.
std::uint64_t brute_force_l_count(const LoopElement& a, const LoopElement& b) {
    const Loop& loop = Loop::standard();
    std::uint64_t count = 0;
    LoopElement x;
    for (int n = 0; n < 59049; ++n) {
        int rest = n;
        for (int i = 0; i < 10; ++i, rest /= 3) x[i] = Gf3{rest % 3};
        count += loop.associator(x, a, b).is_identity();
    }
    return count;
}

Outcome oracle_equivalence() {
    const LoopElement c = basis(3), d = basis(4);
    const LSetCount exact = count_l_set(c, d);
    const std::uint64_t brute = brute_force_l_count(c, d);
    const DensityEstimate est = density_sample(c, d, kSweepSeed, kDensityTrials);
    const double p = exact.density();
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(kDensityTrials));
    const double z = std::abs(est.density() - p) / se;
    return {exact.count == brute && brute == kExpectedLSetCount && z <= kDensitySigmas,
            "symbolic " + std::to_string(exact.count) + ", brute force " + std::to_string(brute) + ", sampled " + std::to_string(est.density()) +
                " vs " + std::to_string(p) + " (" + std::to_string(z) + " se)"};
}

Outcome closure_fixtures() {
    const struct {
        std::vector<LoopElement> gens;
        std::size_t order;
    } cases[] = {{{basis(1)}, 3}, {{basis(3), basis(4)}, 27}, {{basis(19)}, 3}};
    std::string detail;
    bool ok = true;
    for (const auto& c : cases) {
        const ClosureResult r = closure(c.gens);
        ok = ok && !r.truncated && r.closed && is_closed(r.elements) && r.order() == c.order;
        detail += (detail.empty() ? "" : ", ") + std::to_string(r.order());
    }
    return {ok, "orders " + detail};
}

struct Mutant {
    std::string name;
    Tables tables;
};

std::vector<Mutant> mutants() {
    const Tables& t = Tables::shipped();
    return {
        {"f5 = -x2*y2", {t.f.with_coord(5, parse_poly("-x2*y2")), t.h}},
        {"f10 = x4*y3", {t.f.with_coord(10, parse_poly("x4*y3")), t.h}},
        {"f11 drops -x8*y1", {t.f.with_coord(11, t.f.coord(11) + parse_poly("x8*y1")), t.h}},
        {"f19 drops x4*y3*y5", {t.f.with_coord(19, t.f.coord(19) - parse_poly("x4*y3*y5")), t.h}},
        {"f16 flips sign of x7*y3", {t.f.with_coord(16, t.f.coord(16) + parse_poly("x7*y3")), t.h}},
        {"h5 = -x1*x3", {t.f, t.h.with_coord(5, parse_poly("-x1*x3"))}},
        {"h19 = 0", {t.f, t.h.with_coord(19, Poly{})}},
    };
}

Outcome mutation_sensitivity() {
    int caught = 0;
    std::string missed;
    const auto list = mutants();
    for (const auto& m : list) {
        bool any_failed = false;
        for (const auto& [index, criterion] : table_criteria()) {
            if (!guarded([&] { return criterion(m.tables); }).passed) {
                any_failed = true;
                break;
            }
        }
        if (any_failed)
            ++caught;
        else
            missed += " [" + m.name + "]";
    }
    return {list.size() >= 5 && caught == static_cast<int>(list.size()),
            std::to_string(caught) + "/" + std::to_string(list.size()) + " mutants rejected" + (missed.empty() ? "" : "; missed" + missed)};
}

Outcome consistency() {
    const ConsistencyReport r = consistency_sweep(kSweepSeed, kConsistencyTrials);
    return {r.mismatches == 0, std::to_string(r.trials) + " trials, " + std::to_string(r.comparisons) + " comparisons, " +
                                   std::to_string(r.mismatches) + " mismatches"};
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::function<Outcome()>>> criteria;
    for (const auto& [index, criterion] : table_criteria())
        criteria.emplace_back(index, [c = criterion] { return c(Tables::shipped()); });
    criteria.emplace_back(7, sweeps);
    criteria.emplace_back(8, oracle_equivalence);
    criteria.emplace_back(9, closure_fixtures);
    criteria.emplace_back(10, mutation_sensitivity);
    criteria.emplace_back(11, consistency);

    int failures = 0;
    for (const auto& [index, run] : criteria) {
        const Outcome o = guarded(run);
        failures += !o.passed;
        std::printf("%s  criterion %2d: %s\n", o.passed ? "PASS" : "FAIL", index, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
