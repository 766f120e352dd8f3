#include "common.hpp"

using namespace d4;

namespace {

Seq S(const char* s) { return seq_from_string(s); }

std::set<Seq> seqs(std::initializer_list<const char*> xs)
{
    std::set<Seq> out;
    for (auto x : xs)
        out.insert(S(x));
    return out;
}

}

TEST(Sequence, Admissible)
{
    EXPECT_TRUE(is_admissible(S("21")));
    EXPECT_FALSE(is_admissible(S("11")));
    EXPECT_TRUE(is_admissible(S("1321")));
    EXPECT_THROW(seq_from_string("15"), std::invalid_argument);
}

TEST(Sequence, Rewrites)
{
    EXPECT_TRUE(rewrite_neighbors(S("21")).empty());
    EXPECT_EQ(rewrite_neighbors(S("321")), seqs({"341"}));
    EXPECT_EQ(rewrite_neighbors(S("1321")), seqs({"1421", "1341"}));
}

TEST(Sequence, Closure)
{
    EXPECT_EQ(class_closure(S("21")), seqs({"21"}));
    EXPECT_EQ(class_closure(S("1321")), seqs({"1421", "1321", "1341", "1241", "1431", "1231"}));
    EXPECT_TRUE(same_class(S("23121"), S("24121")));
    EXPECT_FALSE(same_class(S("2131"), S("3121")));
}

TEST(Canonical, TableRows)
{
    auto c = canonicalize(S("21"));
    EXPECT_EQ(c.type, SeqType::F21);
    EXPECT_EQ(c.e.t, 1);
    EXPECT_EQ(c.e.r + c.e.s, 0);
    EXPECT_EQ(canonicalize(S("121")).type, SeqType::G11);
    EXPECT_EQ(to_string(canonicalize(S("1421"))), "H11 r=1 s=0 t=1");
    EXPECT_EQ(canonicalize(S("1421")), canonicalize(S("1231")));
    EXPECT_EQ(to_string(spell(canonicalize(S("2141")))), "2141");
}

TEST(Canonical, StartRelabel)
{
    auto c = canonicalize(S("12"));
    EXPECT_EQ(c.start, 2);
    EXPECT_EQ(c.end(), 1);
    EXPECT_EQ(spell(c), S("12"));
}

TEST(Canonical, PrependTable)
{
    CanonForm f21{SeqType::F21, {0, 0, 1}, 1, 2};
    EXPECT_EQ(type_action(SeqType::F21, 1), SeqType::G11);
    EXPECT_EQ(prepend(1, f21).type, SeqType::G11);
    EXPECT_FALSE(type_action(SeqType::F21, 2).has_value());
    EXPECT_THROW(prepend(2, f21), std::invalid_argument);
    EXPECT_FALSE(type_action(SeqType::H11, 1).has_value());
}

TEST(Slices, TriangularCounts)
{
    EXPECT_EQ(slice_enumerate(1).size(), 1u);
    EXPECT_EQ(slice_enumerate(3).size(), 6u);
    EXPECT_EQ(slice_enumerate(4).size(), 10u);
    // brute force: classes of all 3^(n-1) words
    for (int n = 2; n <= 6; ++n) {
        std::set<Seq> seen;
        size_t classes = 0;
        for (const auto& s : all_sequences(n, 1))
            if (!seen.count(s)) {
                auto c = class_closure(s);
                seen.insert(c.begin(), c.end());
                ++classes;
            }
        EXPECT_EQ(classes, slice_enumerate(n).size()) << n;
    }
}

TEST(Slices, InternalPoints)
{
    EXPECT_EQ(suites::internal_points(4).size(), 1u);
    EXPECT_EQ(suites::internal_points(5).size(), 3u);
    EXPECT_EQ(suites::internal_points(6).size(), 6u);
}

TEST(Pattern, Spelling)
{
    EXPECT_EQ(Pattern("(21)^t(41)^r(31)^s").spell({1, 0, 1}), S("2141"));
    EXPECT_EQ(Pattern("(14)^r(31)^s(21)^t").spell({1, 0, 1}), S("1421"));
    EXPECT_FALSE(Pattern("2(31)^{s+1}(41)^{r-1}").spell({0, 0, 0}).has_value());
}
