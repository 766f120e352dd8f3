#include "common.hpp"

using namespace d4;
using d4test::T;
using d4test::same;

TEST(Atomic, Definition)
{
    EXPECT_EQ(atomic(1, 2, 0), top());
    EXPECT_EQ(atomic(1, 2, 1), gen(1) + gen(2));
    EXPECT_EQ(atomic(3, 4, 2), T("(+ e3 (* e4 (+ e1 e2)))"));
    EXPECT_THROW(atomic(1, 1, 1), std::invalid_argument);
    EXPECT_THROW(atomic(1, 2, -1), std::invalid_argument);
}

TEST(Admissible, WorkedExamples)
{
    CanonForm f21{SeqType::F21, {0, 0, 1}, 1, 2};
    EXPECT_EQ(print(e_alpha(f21)), "(* e2 (+ e3 e4))");
    EXPECT_TRUE(same(e_alpha(seq_from_string("121")), gen(1) * atomic(3, 4, 2)));
    EXPECT_TRUE(same(e_alpha(seq_from_string("2141")), T("(* e2 (+ e4 (* e1 (+ e3 e2))) (+ e3 e4))")));
    EXPECT_TRUE(same(f_alpha0(Seq{1}), T("(* e1 (+ e2 e3 e4))")));
    EXPECT_TRUE(same(f_alpha0(seq_from_string("21")), T("(* e2 (+ e3 e4) (+ e4 (* e3 (+ e1 e2)) e1))")));
    Term e121 = e_alpha(seq_from_string("121"));
    EXPECT_TRUE(same(f_alpha0(seq_from_string("121")),
                     e121 * (gen(1) * (gen(2) + gen(3)) + (gen(2) + gen(4)) * (gen(3) + gen(4)))));
}

TEST(Admissible, ClassInvariant)
{
    EXPECT_EQ(e_alpha(seq_from_string("1421")), e_alpha(seq_from_string("1231")));
    EXPECT_TRUE(same(e_alpha(seq_from_string("321")), e_alpha(seq_from_string("341"))));
}

TEST(Unified, Examples)
{
    EXPECT_EQ(unified_e(1, 0, 0, 0), gen(1));
    EXPECT_TRUE(same(unified_e(1, 0, 0, 1), gen(1) * (gen(3) + gen(4))));
    EXPECT_THROW(unified_f(1, 0, 0, 0), std::invalid_argument);
    // F12 row: e_1 a^{32}_{2r} a^{42}_{2s} a^{34}_{2t-1}
    for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s)
            for (int t = 1; t <= 2; ++t)
                EXPECT_TRUE(same(unified_e(1, 2 * r, 2 * s, 2 * t - 1),
                                 gen(1) * atomic(3, 2, 2 * r) * atomic(4, 2, 2 * s) * atomic(3, 4, 2 * t - 1)));
}

TEST(Unified, AllSignaturesAppear)
{
    std::set<std::string> rows;
    for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s)
            for (int t = 0; t <= 1; ++t)
                rows.insert(signature_of(r, s, t).name);
    EXPECT_EQ(rows.size(), 8u);
}

TEST(GelfandPonomarev, Coincidence)
{
    EXPECT_EQ(gp_e(seq_from_string("21")), gen(2) * (gen(3) + gen(4)));
    EXPECT_TRUE(same(gp_e(seq_from_string("321")), T("(* e3 (+ e1 e2) (+ e1 e4))")));
    EXPECT_TRUE(same(gp_e(seq_from_string("2341")), T("(* e2 (+ e4 e3) (+ (* e1 (+ e2 e3)) e4))")));
    for (const char* a : {"21", "121", "321", "2341"})
        EXPECT_TRUE(same(gp_e(seq_from_string(a)), e_alpha(seq_from_string(a)))) << a;
    for (const char* a : {"21", "121", "321"})
        EXPECT_TRUE(same(gp_f(seq_from_string(a)), f_alpha0(seq_from_string(a)))) << a;
}

TEST(Cumulative, SmallCases)
{
    EXPECT_EQ(cumulative_e(1, 1), gen(1));
    Term e = gen(1), f = gen(2), g = gen(3), h = gen(4);
    (void)e;
    EXPECT_TRUE(same(cumulative_e(1, 2), f * (g + h) + g * (f + h) + h * (f + g)));
    EXPECT_EQ(slice_at(3, 1).size(), 6u);
    EXPECT_EQ(cumulative_f0(1), top());
    std::vector<Term> fs;
    for (int i = 1; i <= 4; ++i) {
        std::vector<Term> rest;
        for (int j = 1; j <= 4; ++j)
            if (j != i)
                rest.push_back(gen(j));
        fs.push_back(gen(i) * join(rest));
    }
    EXPECT_TRUE(same(cumulative_f0(2), join(fs)));
    EXPECT_EQ(inv_cumulative_e(1, 1), gen(1));
}
