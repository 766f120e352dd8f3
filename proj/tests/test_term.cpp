#include "common.hpp"

using namespace d4;
using d4test::T;

TEST(Term, Normalization)
{
    Term e1 = gen(1), e2 = gen(2), e3 = gen(3), e4 = gen(4);
    EXPECT_EQ(meet({e1, top()}), e1);
    EXPECT_EQ(meet({e1, bottom()}), bottom());
    EXPECT_EQ(join({e1, bottom()}), e1);
    EXPECT_EQ(join({e1, e1}), e1);
    EXPECT_EQ(e1 + e2, e2 + e1);
    EXPECT_EQ((e1 + e2) + e3, e1 + (e2 + e3));
    EXPECT_EQ(print(e2 * (e3 + e4)), "(* e2 (+ e3 e4))");
    EXPECT_EQ(print(join({e2, e3, e4})), "(+ e2 e3 e4)");
}

TEST(Term, ParseRoundTrip)
{
    EXPECT_EQ(T("(+ e2 e3 e4)"), gen(2) + gen(3) + gen(4));
    EXPECT_EQ(T(" (* e2\n (+ e3 e4) ) "), gen(2) * (gen(3) + gen(4)));
    EXPECT_EQ(T("I"), top());
    EXPECT_EQ(T("0"), bottom());
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        Term t = random_term(rng, 4);
        EXPECT_EQ(parse(print(t)), t);
    }
}

TEST(Term, ParseErrorsCarryPositions)
{
    try {
        parse("(+ e1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 0u);
    }
    try {
        parse("(* e1 e5)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(parse("(+ e1)"), ParseError);
    EXPECT_THROW(parse("e1 e2"), ParseError);
    EXPECT_THROW(parse("(- e1 e2)"), ParseError);
}

TEST(Term, Substitute)
{
    Term q = (gen(1) + gen(2)) * (gen(3) + gen(4));
    std::array<Term, 4> img{gen(1) * q, gen(2) * q, gen(3) * q, gen(4) * q};
    EXPECT_EQ(substitute(gen(1), img), gen(1) * (gen(1) + gen(2)) * (gen(3) + gen(4)));
    EXPECT_TRUE(d4test::same(substitute(gen(1), img), gen(1) * (gen(3) + gen(4))));
    std::array<Term, 4> id{gen(1), gen(2), gen(3), gen(4)};
    Term t = T("(+ (* e1 e2) (* e3 (+ e1 e4)))");
    EXPECT_EQ(substitute(t, id), t);
    EXPECT_EQ(substitute(top(), img), top());
}

TEST(Term, DagSharing)
{
    Term a = gen(1) + gen(2);
    Term t = (a * gen(3)) + (a * gen(4));
    // e1..e4, a, two meets, the join
    EXPECT_EQ(dag_size(t), 8u);
}
