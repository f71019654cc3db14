#include <cmath>
#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "moufang/subloop.hpp"

namespace moufang {
namespace {

const Loop& L() { return Loop::standard(); }

std::set<int> support_of(const std::vector<LoopElement>& elems) {
    std::set<int> s;
    for (const auto& x : elems)
        for (int i : x.support()) s.insert(i);
    return s;
}

bool is_power_of_three(std::size_t n) {
    while (n > 1 && n % 3 == 0) n /= 3;
    return n == 1;
}

TEST(Closure, Fixtures) {
    const ClosureResult one = closure({basis(1)});
    EXPECT_EQ(one.order(), 3u);
    EXPECT_TRUE(one.closed);
    EXPECT_FALSE(one.truncated);
    const std::vector<LoopElement> expected = {identity(), basis(1), Gf3{2} * basis(1)};
    for (const auto& x : expected) EXPECT_NE(std::find(one.elements.begin(), one.elements.end(), x), one.elements.end());

    const ClosureResult cd = closure({basis(3), basis(4)});
    EXPECT_EQ(cd.order(), 27u);
    EXPECT_TRUE(cd.closed);
    EXPECT_EQ(support_of(cd.elements), (std::set<int>{3, 4, 10}));

    EXPECT_EQ(closure({basis(19)}).order(), 3u);
    EXPECT_EQ(closure({}).order(), 1u);
}

TEST(Closure, LargerSubloopsAreClosedWithThreePowerOrder) {
    for (const auto& gens : std::vector<std::vector<LoopElement>>{{basis(1), basis(2)}, {basis(1), basis(3)}, {basis(2), basis(5)}}) {
        const ClosureResult r = closure(gens);
        EXPECT_TRUE(r.closed);
        EXPECT_TRUE(is_power_of_three(r.order())) << r.order();
    }
    EXPECT_EQ(closure({basis(1), basis(2)}).order(), 27u);
}

TEST(Closure, TruncatesAtCap) {
    const ClosureResult r = closure({basis(3), basis(4)}, 10);
    EXPECT_TRUE(r.truncated);
    EXPECT_FALSE(r.closed);
    EXPECT_EQ(r.order(), 10u);
    EXPECT_THROW(closure({basis(1)}, 0), PreconditionViolation);
}

TEST(IsClosed, Examples) {
    EXPECT_TRUE(is_closed(closure({basis(1)}).elements));
    EXPECT_FALSE(is_closed({identity(), basis(1)}));
    EXPECT_TRUE(is_closed({identity()}));
}

TEST(LSet, Membership) {
    EXPECT_TRUE(in_l_set(basis(1), basis(3), basis(4)));
    EXPECT_TRUE(in_l_set(basis(2), basis(3), basis(4)));
    EXPECT_FALSE(in_l_set(basis(5), basis(3), basis(4)));
    EXPECT_TRUE(in_l_set(basis(5), identity(), basis(4)));
}

TEST(LSet, NonSubloopWitness) {
    const Witness w = nonsubloop_witness();
    EXPECT_EQ(w.violating, basis(5));
    EXPECT_EQ(w.violating_associator, basis(19));
    ASSERT_EQ(w.generator_associators.size(), 4u);
    for (const auto& a : w.generator_associators) EXPECT_TRUE(a.is_identity());
    EXPECT_EQ(w.members.size(), 2u);
}

TEST(LSet, NonSubloopWitnessFailsOnBrokenTables) {
    const Tables& t = Tables::shipped();
    // without f_19's x4*y3*y5 term, (e5, c, d) no longer reaches e19
    const Loop broken({t.f.with_coord(19, t.f.coord(19) - parse_poly("x4*y3*y5") + parse_poly("x4*x5*y3")), t.h});
    EXPECT_THROW(nonsubloop_witness(broken), Error);
}

// Oracle: brute force over x_1..x_10 with the concrete associator only.
std::uint64_t brute_force_count(const LoopElement& a, const LoopElement& b) {
    std::uint64_t count = 0;
    LoopElement x;
    for (int n = 0; n < 59049; ++n) {
        int rest = n;
        for (int i = 0; i < 10; ++i, rest /= 3) x[i] = Gf3{rest % 3};
        if (L().associator(x, a, b).is_identity()) ++count;
    }
    return count;
}

TEST(LSet, ExactCountMatchesBruteForceOracle) {
    const LSetCount cd = count_l_set(basis(3), basis(4));
    EXPECT_EQ(cd.count, 19683u);  // frozen from tests/oracles/loop_oracle.py
    EXPECT_EQ(cd.count, brute_force_count(basis(3), basis(4)));
    EXPECT_LT(cd.density(), 1.0);
    EXPECT_EQ(cd.full_size(), 19683ULL * 19683ULL);

    const LSetCount trivial = count_l_set(identity(), identity());
    EXPECT_EQ(trivial.count, 59049u);
    EXPECT_DOUBLE_EQ(trivial.density(), 1.0);

    const LoopElement p = parse_element("e1 + e3 + 2*e6"), q = parse_element("e2 + e4");
    EXPECT_EQ(count_l_set(p, q).count, brute_force_count(p, q));
}

TEST(LSet, CountingOverTenCoordinatesIsExact) {
    // coordinates 11..19 of x never change membership
    ElementSampler s(55);
    for (int i = 0; i < 300; ++i) {
        const LoopElement x = s.next();
        EXPECT_EQ(in_l_set(x, basis(3), basis(4)), in_l_set(restrict_to(x, 1, 10), basis(3), basis(4)));
    }
}

TEST(LSet, DensitySample) {
    const DensityEstimate est = density_sample(basis(3), basis(4), 42, 20000);
    const double exact = count_l_set(basis(3), basis(4)).density();
    EXPECT_LE(std::abs(est.density() - exact), 3.0 * std::sqrt(exact * (1 - exact) / 20000.0));
    EXPECT_EQ(density_sample(basis(3), basis(4), 42, 20000).hits, est.hits);
    EXPECT_DOUBLE_EQ(density_sample(identity(), identity(), 7, 100).density(), 1.0);
    EXPECT_THROW(density_sample(identity(), identity(), 7, 0), PreconditionViolation);
}

}  // namespace
}  // namespace moufang
