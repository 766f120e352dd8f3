#include "common.hpp"

using namespace d4;

namespace {

Subspace span(int p, int n, std::vector<std::vector<int>> rows)
{
    return Subspace(Mat::from_rows(p, n, rows));
}

}

TEST(Rref, HandEliminated)
{
    EXPECT_EQ(rref(Mat::from_rows(2, 2, {{1, 1}, {0, 1}})), Mat::identity(2, 2));
    EXPECT_EQ(rref(Mat::from_rows(3, 1, {{2}})), Mat::from_rows(3, 1, {{1}}));
    Mat z(5, 2, 3);
    EXPECT_EQ(rref(z), z);
}

TEST(Rref, ModularInverse)
{
    for (int p : {2, 3, 5, 7, 251})
        for (int a = 1; a < p; ++a)
            EXPECT_EQ(a * mod_inv(a, p) % p, 1);
    EXPECT_THROW(mod_inv(0, 5), std::domain_error);
    EXPECT_THROW(Mat(4, 1, 1), std::invalid_argument);
}

TEST(Subspace, SumAndIntersection)
{
    auto x = span(2, 2, {{1, 0}}), y = span(2, 2, {{0, 1}}), d = span(2, 2, {{1, 1}});
    EXPECT_TRUE(sum(x, y).is_full());
    EXPECT_EQ(sum(x, x), x);
    EXPECT_TRUE(sum(span(3, 2, {{1, 0}}), span(3, 2, {{1, 1}})).is_full());
    EXPECT_TRUE(intersect(x, d).is_zero());
    EXPECT_EQ(intersect(Subspace::full(2, 2), d), d);
    auto full5 = span(5, 2, {{1, 0}, {0, 1}}), d5 = span(5, 2, {{1, 1}});
    EXPECT_EQ(intersect(full5, d5), d5);
    EXPECT_THROW(sum(x, span(3, 2, {{1, 0}})), std::invalid_argument);
}

TEST(Subspace, IntersectionMatchesEnumeration)
{
    // two planes in GF(3)^3, intersected by brute force over all 27 vectors
    auto a = span(3, 3, {{1, 2, 0}, {0, 1, 1}}), b = span(3, 3, {{1, 0, 1}, {1, 1, 0}});
    int common = 0;
    for (int v = 0; v < 27; ++v) {
        Subspace line = span(3, 3, {{v % 3, v / 3 % 3, v / 9}});
        if (leq(line, a) && leq(line, b))
            ++common;
    }
    EXPECT_EQ(common, 3);  // a one-dimensional space over GF(3)
    EXPECT_EQ(intersect(a, b).dim(), 1);
}

TEST(Kernel, Nullity)
{
    EXPECT_EQ(kernel(Mat::from_rows(3, 4, {{1, 1, 1, 1}})).dim(), 3);
    EXPECT_TRUE(kernel(Mat::identity(5, 3)).is_zero());
    EXPECT_TRUE(kernel(Mat(2, 1, 2)).is_full());
}

TEST(ApplyMap, Projection)
{
    auto d = span(2, 2, {{1, 1}});
    EXPECT_EQ(apply_map(Mat::identity(2, 2), d), d);
    EXPECT_TRUE(apply_map(Mat(2, 2, 2), d).is_zero());
    EXPECT_TRUE(apply_map(Mat::from_rows(2, 2, {{1, 0}}), d).is_full());
}
