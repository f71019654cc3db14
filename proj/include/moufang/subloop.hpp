#pragma once

// Subloop generation, l-set membership and counting, and the non-subloop
// witness for l_{c,d}.

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "moufang/errors.hpp"
#include "moufang/loop.hpp"
#include "moufang/symbolic.hpp"

namespace moufang {

struct ClosureResult {
    std::vector<LoopElement> elements;
    std::vector<LoopElement> generators;
    /// Set by closure() only when the saturated set passed is_closed().
    bool closed = false;
    /// The cap was hit; `elements` is a partial set and `closed` is false.
    bool truncated = false;

    std::size_t order() const { return elements.size(); }
};

/// True iff the set is closed under mul and inverse. Checks all pairs.
inline bool is_closed(const std::vector<LoopElement>& set, const Loop& loop = Loop::standard()) {
    std::unordered_set<LoopElement, LoopElementHash> members(set.begin(), set.end());
    for (const auto& a : set) {
        if (!members.contains(loop.inverse(a))) return false;
        for (const auto& b : set)
            if (!members.contains(loop.mul(a, b))) return false;
    }
    return true;
}

/// Smallest subset containing 1 and the generators that is closed under
/// products and inverses, by worklist saturation. Stops at `cap` elements.
inline ClosureResult closure(const std::vector<LoopElement>& generators, std::size_t cap = 10'000'000,
                             const Loop& loop = Loop::standard()) {
    if (cap < 1) throw PreconditionViolation("closure cap must be at least 1");
    ClosureResult result;
    result.generators = generators;
    std::unordered_set<LoopElement, LoopElementHash> seen;
    auto& elems = result.elements;
    auto add = [&](const LoopElement& x) {
        if (seen.contains(x)) return true;
        if (elems.size() >= cap) {
            result.truncated = true;
            return false;
        }
        seen.insert(x);
        elems.push_back(x);
        return true;
    };
    if (!add(identity())) return result;
    for (const auto& g : generators)
        if (!add(g)) return result;

    // Element i is combined with every j <= i in both orders, so each pair is
    // visited once both are present.
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!add(loop.inverse(elems[i]))) return result;
        for (std::size_t j = 0; j <= i; ++j) {
            const LoopElement a = elems[i], b = elems[j];
            if (!add(loop.mul(a, b)) || !add(loop.mul(b, a))) return result;
        }
    }
    result.closed = is_closed(elems, loop);
    return result;
}

/// x is in l_{a,b} iff (x, a, b) = 1.
inline bool in_l_set(const LoopElement& x, const LoopElement& a, const LoopElement& b, const Loop& loop = Loop::standard()) {
    return loop.associator(x, a, b).is_identity();
}

struct Witness {
    /// a, b, c, d.
    std::vector<LoopElement> generators;
    /// Elements checked to lie in l_{c,d} (a and b).
    std::vector<LoopElement> members;
    /// [a, b], which is not in l_{c,d}.
    LoopElement violating;
    /// ([a, b], c, d).
    LoopElement violating_associator;
    /// (a,b,c), (a,b,d), (a,c,d), (b,c,d).
    std::vector<LoopElement> generator_associators;
};

/// Checks a, b in l_{c,d}, [a, b] not in l_{c,d}, and that the four
/// associators of generator triples vanish. Throws WitnessFailed otherwise.
inline Witness nonsubloop_witness(const Loop& loop = Loop::standard()) {
    const LoopElement a = basis(1), b = basis(2), c = basis(3), d = basis(4);
    Witness w;
    w.generators = {a, b, c, d};
    for (const auto& x : {a, b}) {
        if (!in_l_set(x, c, d, loop)) throw WitnessFailed("generator " + format_sparse(x) + " is not in l_{c,d}");
        w.members.push_back(x);
    }
    w.violating = loop.commutator(a, b);
    w.violating_associator = loop.associator(w.violating, c, d);
    if (w.violating_associator.is_identity()) throw WitnessFailed("[a,b] lies in l_{c,d}");
    w.generator_associators = {loop.associator(a, b, c), loop.associator(a, b, d), loop.associator(a, c, d), loop.associator(b, c, d)};
    for (const auto& v : w.generator_associators)
        if (!v.is_identity()) throw WitnessFailed("a generator triple does not associate: " + format_sparse(v));
    return w;
}

struct LSetCount {
    /// Assignments of x_1..x_10 with (x, a, b) = 1.
    std::uint64_t count = 0;
    std::uint64_t total = 59049;
    double density() const { return static_cast<double>(count) / static_cast<double>(total); }
    /// |l_{a,b}|: every solution extends freely over x_11..x_19.
    std::uint64_t full_size() const { return count * 19683; }
};

/// Exact count over all 3^10 assignments of x_1..x_10, using the associator
/// variety. The tables read only coordinates 1..10, so x_11..x_19 are free.
inline LSetCount count_l_set(const LoopElement& a, const LoopElement& b, const SymbolicLoop& sym = SymbolicLoop::standard()) {
    const SymElement variety = sym.associator_variety(a, b);
    for (int k = 0; k < kCoordCount; ++k)
        variety[k].variables().for_each([&](int code) {
            if (VarId::from_code(code).index() > 10)
                throw ValidationFailure("associator variety reads " + VarId::from_code(code).name() + "; counting over x_1..x_10 is not exact");
        });
    LSetCount result;
    LoopElement x;
    for (std::uint64_t n = 0; n < result.total; ++n) {
        std::uint64_t rest = n;
        for (int i = 0; i < 10; ++i, rest /= 3) x[i] = Gf3{static_cast<long long>(rest % 3)};
        Assignment sigma;
        bind_element(sigma, Block::X, x);
        bool zero = true;
        for (int k = 0; k < kCoordCount && zero; ++k) zero = evaluate(variety[k], sigma).is_zero();
        if (zero) ++result.count;
    }
    return result;
}

struct DensityEstimate {
    std::uint64_t seed = 0;
    long long trials = 0;
    long long hits = 0;
    double density() const { return static_cast<double>(hits) / static_cast<double>(trials); }
    /// Binomial standard error of the estimate.
    double standard_error() const {
        const double p = density();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    }
};

/// Fraction of seeded random x in l_{a,b}.
inline DensityEstimate density_sample(const LoopElement& a, const LoopElement& b, std::uint64_t seed, long long trials,
                                      const Loop& loop = Loop::standard()) {
    if (trials < 1) throw PreconditionViolation("density sampling needs at least one trial");
    ElementSampler sampler(seed);
    DensityEstimate est{seed, trials, 0};
    for (long long t = 0; t < trials; ++t)
        if (in_l_set(sampler.next(), a, b, loop)) ++est.hits;
    return est;
}

}  // namespace moufang
