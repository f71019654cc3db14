#include <gtest/gtest.h>

#include "moufang/expr.hpp"

namespace moufang {
namespace {

LoopElement eval(const char* text) { return evaluate_expression(text); }

TEST(Expression, CounterexampleValues) {
    EXPECT_EQ(format_element(eval("assoc(e5, e3, e4)")), "(0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1)");
    EXPECT_EQ(eval("comm(e1, e2)"), basis(5));
    EXPECT_EQ(eval("assoc(comm(a,b), c, d)"), basis(19));
    EXPECT_EQ(eval("comm(comm(b,d),c)"), basis(18));
}

TEST(Expression, ProductsPowersAndLiterals) {
    EXPECT_EQ(eval("e2*e1"), Loop::standard().mul(basis(2), basis(1)));
    EXPECT_EQ(eval("(e1*e2)*e3"), Loop::standard().mul(Loop::standard().mul(basis(1), basis(2)), basis(3)));
    EXPECT_EQ(eval("e1^-1"), Gf3{2} * basis(1));
    EXPECT_EQ(eval("e1^3"), identity());
    EXPECT_EQ(eval("(e1 * e2)^-1 * (e1*e2)"), identity());
    EXPECT_EQ(eval("inv(e1)"), Gf3{2} * basis(1));
    EXPECT_EQ(eval("[e1 + 2*e5]"), parse_element("e1 + 2*e5"));
    EXPECT_EQ(eval("(1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0) * id"), basis(1) + basis(2));
    EXPECT_EQ(eval("0 * e19"), basis(19));
}

TEST(Expression, ThreeFactorsNeedParentheses) {
    EXPECT_THROW(eval("e1*e2*e3"), AmbiguousBracketing);
    EXPECT_THROW(eval("a * b * c * d"), AmbiguousBracketing);
    EXPECT_NO_THROW(eval("e1*(e2*e3)"));
}

TEST(Expression, ParseErrors) {
    for (const char* bad : {"", "e20", "foo(e1)", "comm(e1)", "assoc(e1,e2)", "(e1*e2", "e1 e2", "e1^", "[e1", "e1 + e2"}) {
        EXPECT_THROW(eval(bad), ParseError) << bad;
    }
    try {
        eval("comm(e1, e25)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
}

}  // namespace
}  // namespace moufang
