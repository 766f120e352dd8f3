#include "common.hpp"

using namespace d4;
using d4test::T;
using d4test::same;

TEST(Endomorphism, Q)
{
    EXPECT_EQ(q(EndoSpec(1, 2)), (gen(1) + gen(2)) * (gen(3) + gen(4)));
    EXPECT_EQ(q(EndoSpec(3, 4)), q(EndoSpec(1, 2)));
    EXPECT_EQ(q(EndoSpec(1, 3)), (gen(1) + gen(3)) * (gen(2) + gen(4)));
    EXPECT_EQ(parse_endo("34"), EndoSpec(1, 2));
    EXPECT_THROW(parse_endo("11"), std::invalid_argument);
    EXPECT_THROW(parse_endo("1"), std::invalid_argument);
}

TEST(Endomorphism, Gamma)
{
    EXPECT_TRUE(same(gamma(EndoSpec(1, 2), gen(1)), gen(1) * (gen(3) + gen(4))));
    EXPECT_TRUE(same(gamma(EndoSpec(1, 2), bottom()), bottom()));
    Term f10 = f_alpha0(Seq{1});
    EXPECT_TRUE(same(gamma(EndoSpec(1, 2), f10), T("(* e1 (+ e3 e4) (+ (* e1 (+ e3 e2)) (+ e4 e2)))")));
    EXPECT_TRUE(same(gamma_rst(1, 0, 0, f10), unified_f(1, 1, 0, 0)));
    EXPECT_TRUE(same(gamma(EndoSpec(1, 3), gamma(EndoSpec(1, 4), T("(+ (* e1 e2) e3)"))),
                     gamma(EndoSpec(1, 4), gamma(EndoSpec(1, 3), T("(+ (* e1 e2) e3)")))));
}

TEST(Herrmann, PerfectPolynomials)
{
    EXPECT_EQ(s_poly(1), gen(1) + gen(2) + gen(3) + gen(4));
    EXPECT_EQ(r_endo(s_poly(1)), s_poly(2));
    EXPECT_EQ(r_endo(bottom()), bottom());
    EXPECT_EQ(print(t1_poly()), print(T("(* (+ e1 e2 e3) (+ e1 e2 e4) (+ e1 e3 e4) (+ e2 e3 e4))")));
    EXPECT_EQ(h_poly(1, 1), gen(2) + gen(3) + gen(4));
    EXPECT_EQ(h_poly(4, 1), gen(1) + gen(2) + gen(3));
    EXPECT_TRUE(same(r_endo(cum_f0(2)), cum_f0(3)));
}

TEST(Herrmann, CubeRows)
{
    for (int n = 1; n <= 2; ++n) {
        auto rows = cube(n);
        ASSERT_EQ(rows.size(), 16u);
        Term all_h = h_poly(1, n) + h_poly(2, n) + h_poly(3, n) + h_poly(4, n);
        EXPECT_TRUE(same(rows[0].gp, all_h));
        EXPECT_TRUE(same(rows[0].herrmann, s_poly(n)));
        EXPECT_TRUE(same(rows[15].herrmann, t_poly(n)));
        EXPECT_TRUE(same(rows[15].cumulative, cum_f0(n + 1)));
        EXPECT_TRUE(same(rows[14].gp, h_poly(2, n) * h_poly(3, n) * h_poly(4, n)));
        EXPECT_TRUE(same(rows[14].herrmann, p_poly(1, n)));
        for (const auto& r : rows) {
            EXPECT_TRUE(same(r.gp, r.herrmann)) << r.label;
            EXPECT_TRUE(same(r.gp, r.cumulative)) << r.label;
        }
    }
}

TEST(Herrmann, SequenceLengths)
{
    EXPECT_EQ(herrmann_sequence(1, 0, 0, 0), Seq{1});
    for (int r = 0; r <= 2; ++r)
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; t <= 2; ++t)
                EXPECT_EQ(herrmann_sequence(1, r, s, t).size(), static_cast<size_t>(1 + r + s + t));
}
