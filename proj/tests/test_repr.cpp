#include "common.hpp"

using namespace d4;

namespace {

QuadRep lines3() { return four_lines_reps(3).at(0); }

QuadRep one_dim(int mask, int p = 2)
{
    for (auto& r : one_dim_reps(p))
        if (r.label == std::string("k;") + char('0' + (mask & 1)) + char('0' + (mask >> 1 & 1)) +
                           char('0' + (mask >> 2 & 1)) + char('0' + (mask >> 3 & 1)))
            return r;
    throw std::logic_error("no such rep");
}

}

TEST(Eval, Generators)
{
    QuadRep x = lines3();
    EXPECT_EQ(eval(gen(2), x), x.Y[1]);
    EXPECT_EQ(eval(gen(2) * (gen(3) + gen(4)), x), x.Y[1]);
    EXPECT_TRUE(eval(gen(1) * gen(2), x).is_zero());
    EXPECT_TRUE(eval(top(), x).is_full());
}

TEST(Coxeter, Dimensions)
{
    // Phi+ of (k; k,k,k,k) has dim 4 - 1 = 3
    QuadRep all = one_dim(15, 5);
    CoxeterStep st = coxeter_plus(all);
    EXPECT_EQ(st.plus.dim0, 3);
    EXPECT_EQ(st.dimR, 4);
    // four lines in the plane: 4*1 - 2 = 2
    EXPECT_EQ(coxeter_plus(lines3()).plus.dim0, 2);
    EXPECT_EQ(coxeter_plus(one_dim(0)).plus.dim0, 0);
}

TEST(Coxeter, ElementaryMaps)
{
    for (const auto& r : catalog(3)) {
        ReprTower tw = tower(r, 2);
        for (int i = 1; i <= 4; ++i) {
            EXPECT_TRUE(phi_compose(tw, {i, i}).is_zero());
            EXPECT_TRUE(tw.steps[0].phi_image(i, Subspace::zero(3, tw.steps[0].plus.dim0)).is_zero());
        }
    }
    EXPECT_THROW(phi_compose(tower(lines3(), 1), {1, 2}), std::invalid_argument);
}

TEST(Psi, BasicEquations)
{
    for (const auto& r : catalog(5)) {
        CoxeterStep st = coxeter_plus(r);
        EXPECT_TRUE(nu0(st)(top()).is_full());
        for (int i = 1; i <= 4; ++i)
            EXPECT_EQ(psi(i, gen(i), st), st.X01());
        EXPECT_EQ(psi(1, gen(2), st), nu0(st)(gen(1) * (gen(3) + gen(4))));
        EXPECT_EQ(psi(1, gen(3) * gen(4), st), nu0(st)(gen(1) * gen(2)));
    }
}

TEST(Semantic, Witness)
{
    const auto& reps = d4test::reps();
    EXPECT_TRUE(semantically_equal(gen(1), gen(1), reps));
    const QuadRep* w = semantic_witness(gen(1) * gen(2), bottom(), reps);
    ASSERT_NE(w, nullptr);
    EXPECT_FALSE(eval(gen(1) * gen(2), *w).is_zero());
    EXPECT_TRUE(semantically_leq(gen(1) * gen(2), gen(1), reps));
}

TEST(Perfect, Check)
{
    EXPECT_TRUE(eval(h_poly(1, 1), one_dim(0)).is_zero());
    EXPECT_TRUE(eval(h_poly(1, 1), one_dim(2)).is_full());
    EXPECT_TRUE(eval(s_poly(2), lines3()).is_full());
    EXPECT_TRUE(perfect_check(h_poly(1, 1), catalog(2)).ok());
    EXPECT_FALSE(perfect_check(gen(1), {lines3()}).ok());
}

TEST(DirectSum, EvaluationSplits)
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        Term t = random_term(rng, 3);
        QuadRep x = random_rep(5, 3, rng), y = random_rep(5, 3, rng);
        EXPECT_EQ(eval(t, direct_sum(x, y)), direct_sum(eval(t, x), eval(t, y)));
    }
}
