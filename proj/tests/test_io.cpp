#include "common.hpp"

using namespace d4;

TEST(RepJson, RoundTrip)
{
    for (const auto& r : catalog(3)) {
        QuadRep back = rep_from_json(nlohmann::json::parse(rep_to_json(r).dump()));
        EXPECT_TRUE(back.same_data(r));
        EXPECT_EQ(back.label, r.label);
    }
}

TEST(RepJson, Validation)
{
    auto bad = [](const char* s) { return rep_from_json(nlohmann::json::parse(s)); };
    EXPECT_THROW(bad(R"({"p":4,"dim0":1,"Y":[[],[],[],[]]})"), std::invalid_argument);
    EXPECT_THROW(bad(R"({"p":3,"dim0":2,"Y":[[[1]],[],[],[]]})"), std::invalid_argument);
    EXPECT_THROW(bad(R"({"p":3,"dim0":1,"Y":[[],[],[]]})"), std::invalid_argument);
    EXPECT_THROW(bad(R"({"p":3,"Y":[]})"), std::invalid_argument);
    QuadRep r = bad(R"({"p":3,"dim0":1,"Y":[[[4]],[[-1]],[],[[0]]]})");
    EXPECT_TRUE(r.Y[0].is_full());
    EXPECT_TRUE(r.Y[1].is_full());
    EXPECT_TRUE(r.Y[3].is_zero());
}

TEST(Report, DeterministicAndSorted)
{
    SuiteConfig cfg;
    cfg.primes = {2, 3};
    cfg.random_per_prime = 5;
    cfg.fuzz_triples = 50;
    cfg.roundtrip_terms = 50;
    cfg.dsum_pairs = 10;
    SuiteContext a(cfg), b(cfg);
    auto ra = run_suite("infra", a), rb = run_suite("infra", b);
    EXPECT_EQ(ra.to_json(false).dump(), rb.to_json(false).dump());
    EXPECT_EQ(ra.to_json()["schema"], "1");
    EXPECT_TRUE(ra.ok());
    for (size_t k = 1; k < ra.records.size(); ++k)
        EXPECT_LE(ra.records[k - 1].id, ra.records[k].id);
    EXPECT_THROW(run_suite("unknown", a), std::invalid_argument);
}

TEST(Report, SlicesSuite)
{
    SuiteContext ctx(SuiteConfig{});
    auto r = run_suite("slice-counts", ctx);
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.to_json()["anchors"].empty());
}
