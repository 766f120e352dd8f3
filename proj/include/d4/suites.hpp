#pragma once

#include "d4/io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace d4 {

struct SuiteConfig {
    std::vector<int> primes{2, 3, 5};
    unsigned seed = 1;
    int random_per_prime = 50;
    int random_max_dim = 6;
    CatalogConfig catalog;
    int family_bound = 2;  // (r,s,t) families
    int atomic_bound = 3;  // atomic identities
    int atomic_chain = 6;  // order-insensitivity and inclusion chain
    int iter_bound = 5;    // single-parameter iterations
    int slice_max = 9;
    int canon_max = 8;
    int class_max = 5;     // phi acting on admissible classes
    int gp_report_max = 6;
    int cube_max = 3;
    int fuzz_triples = 1000;
    int roundtrip_terms = 1000;
    int dsum_pairs = 200;

    ojson to_json() const
    {
        ojson j;
        j["primes"] = primes;
        j["seed"] = seed;
        j["random_per_prime"] = random_per_prime;
        j["random_max_dim"] = random_max_dim;
        j["catalog_max_dim"] = catalog.max_dim;
        j["catalog_max_depth"] = catalog.max_depth;
        j["family_bound"] = family_bound;
        j["atomic_bound"] = atomic_bound;
        j["atomic_chain"] = atomic_chain;
        j["iter_bound"] = iter_bound;
        j["slice_max"] = slice_max;
        j["canon_max"] = canon_max;
        j["class_max"] = class_max;
        j["gp_report_max"] = gp_report_max;
        j["cube_max"] = cube_max;
        j["fuzz_triples"] = fuzz_triples;
        j["roundtrip_terms"] = roundtrip_terms;
        j["dsum_pairs"] = dsum_pairs;
        return j;
    }
};

enum class Verdict { Pass, Fail, Info };

inline const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
    }
    return "?";
}

struct CheckRecord {
    std::string id;
    std::string anchor;
    ojson params = ojson::object();
    Verdict verdict = Verdict::Pass;
    std::string note;
    ojson witness;
};

struct SuiteReport {
    std::string suite;
    std::string title;
    SuiteConfig config;
    size_t corpus_indecomposable = 0;
    size_t corpus_random = 0;
    std::vector<CheckRecord> records;
    double wall_seconds = 0;

    size_t count(Verdict v) const
    {
        return static_cast<size_t>(
            std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.verdict == v; }));
    }
    bool ok() const { return count(Verdict::Fail) == 0; }

    void sort_records()
    {
        std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
            if (a.id != b.id)
                return a.id < b.id;
            return a.params.dump() < b.params.dump();
        });
    }

    ojson to_json(bool with_timing = true) const
    {
        ojson j;
        j["schema"] = "1";
        j["suite"] = suite;
        j["title"] = title;
        j["config"] = config.to_json();
        j["corpus"] = {{"indecomposable", corpus_indecomposable},
                       {"random", corpus_random},
                       {"equality", "evaluation agrees on every corpus representation; evidence, not proof"}};
        j["summary"] = {{"pass", count(Verdict::Pass)},
                        {"fail", count(Verdict::Fail)},
                        {"info", count(Verdict::Info)},
                        {"ok", ok()}};
        std::set<std::string> anchors;
        for (const auto& r : records)
            anchors.insert(r.anchor);
        j["anchors"] = anchors;
        ojson recs = ojson::array();
        for (const auto& r : records) {
            ojson x;
            x["id"] = r.id;
            x["anchor"] = r.anchor;
            x["params"] = r.params;
            x["verdict"] = verdict_name(r.verdict);
            if (!r.note.empty())
                x["note"] = r.note;
            if (!r.witness.is_null())
                x["witness"] = r.witness;
            recs.push_back(x);
        }
        j["records"] = recs;
        if (with_timing)
            j["wall_seconds"] = wall_seconds;
        return j;
    }
};

/* Shared, lazily built corpus; one context serves every suite of a run. */
class SuiteContext {
public:
    explicit SuiteContext(SuiteConfig cfg) : cfg_(std::move(cfg)) {}

    const SuiteConfig& config() const { return cfg_; }

    const Corpus& corpus()
    {
        if (!corpus_)
            corpus_ = make_corpus(cfg_.primes, cfg_.seed, cfg_.random_per_prime, cfg_.random_max_dim, cfg_.catalog);
        return *corpus_;
    }

    const std::vector<QuadRep>& catalog_reps() { return corpus().indecomposable; }

    const std::vector<QuadRep>& reps()
    {
        if (all_.empty()) {
            const auto& c = corpus();
            all_ = c.indecomposable;
            all_.insert(all_.end(), c.random.begin(), c.random.end());
        }
        return all_;
    }

    const std::vector<CoxeterStep>& steps()
    {
        if (steps_.empty())
            for (const auto& r : reps())
                steps_.push_back(coxeter_plus(r));
        return steps_;
    }

    std::mt19937_64 rng(unsigned salt) const { return std::mt19937_64(cfg_.seed * 7919ull + salt); }

private:
    SuiteConfig cfg_;
    std::optional<Corpus> corpus_;
    std::vector<QuadRep> all_;
    std::vector<CoxeterStep> steps_;
};

namespace detail {

inline std::string clip(std::string s, size_t cap = 4000)
{
    if (s.size() > cap)
        s = s.substr(0, cap) + " ...[" + std::to_string(s.size()) + " chars]";
    return s;
}

inline ojson term_witness(const std::vector<Term>& terms, const QuadRep& rep)
{
    ojson w;
    ojson ts = ojson::array();
    ojson ims = ojson::array();
    for (const auto& t : terms) {
        ts.push_back(clip(print(t)));
        ims.push_back(subspace_to_json(eval(t, rep)));
    }
    w["terms"] = ts;
    w["prime"] = rep.p;
    w["rep"] = rep_to_json(rep);
    w["images"] = ims;
    return w;
}

inline ojson mat_json(const Mat& m)
{
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows; ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols; ++c)
            row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

/* All orderings (i,j,k,l) of 1..4. */
inline std::vector<std::array<int, 4>> perms4()
{
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> p{1, 2, 3, 4};
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::pair<int, int> other_two(int i, int j)
{
    int k = 0, l = 0;
    for (int x = 1; x <= 4; ++x)
        if (x != i && x != j)
            (k == 0 ? k : l) = x;
    return {k, l};
}

inline ojson exps_json(const Exps& e) { return {{"r", e.r}, {"s", e.s}, {"t", e.t}}; }

}

class Recorder {
public:
    explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}

    void check(std::string id, std::string anchor, ojson params, bool ok, std::string note = {},
               ojson witness = nullptr)
    {
        out_.push_back({std::move(id), std::move(anchor), std::move(params), ok ? Verdict::Pass : Verdict::Fail,
                        std::move(note), ok ? ojson() : std::move(witness)});
    }

    void info(std::string id, std::string anchor, ojson params, std::string note, ojson witness = nullptr)
    {
        out_.push_back(
            {std::move(id), std::move(anchor), std::move(params), Verdict::Info, std::move(note), std::move(witness)});
    }

    bool same(const std::string& id, const std::string& anchor, ojson params, const Term& a, const Term& b,
              const std::vector<QuadRep>& reps)
    {
        const QuadRep* w = semantic_witness(a, b, reps);
        check(id, anchor, std::move(params), w == nullptr, {}, w ? detail::term_witness({a, b}, *w) : ojson());
        return w == nullptr;
    }

    bool below(const std::string& id, const std::string& anchor, ojson params, const Term& a, const Term& b,
               const std::vector<QuadRep>& reps)
    {
        for (const auto& r : reps)
            if (!leq(eval(a, r), eval(b, r))) {
                check(id, anchor, std::move(params), false, "left side not contained in right side",
                      detail::term_witness({a, b}, r));
                return false;
            }
        check(id, anchor, std::move(params), true);
        return true;
    }

    /* Same as `same` but reported, not asserted. */
    bool report_same(const std::string& id, const std::string& anchor, ojson params, const Term& a, const Term& b,
                     const std::vector<QuadRep>& reps)
    {
        const QuadRep* w = semantic_witness(a, b, reps);
        info(id, anchor, std::move(params), w ? "differ" : "coincide", w ? detail::term_witness({a, b}, *w) : ojson());
        return w == nullptr;
    }

private:
    std::vector<CheckRecord>& out_;
};

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace suites {

/*
 * Internal points of a slice: classes whose words drop, after removing the
 * first letter, into three different classes of the previous slice.
 */
inline std::vector<std::set<Seq>> internal_points(int n)
{
    std::vector<std::set<Seq>> out;
    std::set<Seq> seen;
    for (const auto& s : all_sequences(n, 1)) {
        if (seen.count(s))
            continue;
        auto cls = class_closure(s);
        seen.insert(cls.begin(), cls.end());
        std::set<CanonForm> tails;
        for (const auto& w : cls)
            tails.insert(canonicalize(Seq(w.begin() + 1, w.end())));
        if (tails.size() >= 3)
            out.push_back(cls);
    }
    return out;
}

inline void slice_counts(SuiteContext& ctx, Recorder& rec)
{
    const auto& cfg = ctx.config();
    for (int n = 1; n <= cfg.slice_max; ++n) {
        size_t got = slice_enumerate(n).size();
        size_t want = static_cast<size_t>(n * (n + 1) / 2);
        rec.check("slice.count", "1/2 n(n+1) different admissible", {{"n", n}}, got == want,
                  "found " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    for (int n = 4; n <= std::min(cfg.slice_max, 7); ++n)
        rec.info("slice.internal-count", "The pyramid has internal points", {{"n", n}},
                 std::to_string(internal_points(n).size()) + " internal points");

    auto names = [](const std::set<Seq>& c) {
        std::set<std::string> out;
        for (const auto& s : c)
            out.insert(to_string(s));
        return out;
    };

    auto s4 = internal_points(4);
    std::set<std::string> s4_want{"1421", "1321", "1341", "1241", "1431", "1231"};
    bool s4_ok = s4.size() == 1 && names(s4[0]) == s4_want;
    ojson s4_w{{"internal", ojson::array()}};
    for (const auto& c : s4)
        s4_w["internal"].push_back(names(c));
    rec.check("slice.s4-internal", "14(21) = 13(21) = 13(41) = 12(41) = 14(31) = 12(31)", {{"n", 4}}, s4_ok,
              std::to_string(s4.size()) + " internal points", s4_w);

    const std::vector<std::pair<std::string, std::string>> listed{
        {"23121", "24121"}, {"32131", "34131"}, {"42141", "43141"}};
    auto s5 = internal_points(5);
    bool s5_ok = s5.size() == listed.size();
    std::string problem;
    for (const auto& [a, b] : listed) {
        Seq x = seq_from_string(a), y = seq_from_string(b);
        auto hit = std::find_if(s5.begin(), s5.end(), [&](const auto& c) { return c.count(x) && c.count(y); });
        if (hit == s5.end()) {
            s5_ok = false;
            problem += a + " = " + b + " is not an internal point; ";
        }
    }
    ojson s5_w{{"internal", ojson::array()}};
    for (const auto& c : s5)
        s5_w["internal"].push_back(names(c));
    rec.check("slice.s5-internal", "2(31)(21) = 2(41)(21), 3(21)(31) = 3(41)(31), 4(21)(41) = 4(31)(41)", {{"n", 5}},
              s5_ok, problem.empty() ? std::to_string(s5.size()) + " internal points" : problem, s5_w);
}

struct SeqRelation {
    std::string id;
    std::string anchor;
    std::vector<std::string> sides;
    std::function<bool(const Exps&)> bound;
    ojson extra = ojson::object();
};

inline std::vector<SeqRelation> stated_relations()
{
    auto any = [](const Exps&) { return true; };
    std::vector<SeqRelation> v = {
        {"A.01", "(31)^r(32)^s(31)^t = (32)^s(31)^{r+t}", {"(31)^r(32)^s(31)^t", "(32)^s(31)^{r+t}"}, any},
        {"A.02", "(31)^r(21)^s(31)^t = (31)^{r+t}(21)^s", {"(31)^r(21)^s(31)^t", "(31)^{r+t}(21)^s"}, any},
        {"A.03", "(42)^r(41)^s = (41)^r(31)^s, s >= 1", {"(42)^r(41)^s", "(41)^r(31)^s"},
         [](const Exps& e) { return e.s >= 1; }},
        {"A.04", "2(41)^r(31)^s = 2(31)^{s+1}(41)^{r-1}, r >= 1", {"2(41)^r(31)^s", "2(31)^{s+1}(41)^{r-1}"},
         [](const Exps& e) { return e.r >= 1; }},
        {"A.05", "(43)^r(42)^s(41)^t = (41)^r(21)^s(31)^t", {"(43)^r(42)^s(41)^t", "(41)^r(21)^s(31)^t"}, any},
        {"A.07", "(41)^r(21)^t(31)^s = (41)^r(31)^s(21)^t", {"(41)^r(21)^t(31)^s", "(41)^r(31)^s(21)^t"}, any},
        {"A.08", "(13)^s(21)^r = (12)^r(31)^s", {"(13)^s(21)^r", "(12)^r(31)^s"}, any},
        {"A.09", "12(41)^r(31)^s(21)^t = (14)^r(31)^{s+1}(21)^t = (14)^r(21)^{t+1}(31)^s",
         {"12(41)^r(31)^s(21)^t", "(14)^r(31)^{s+1}(21)^t", "(14)^r(21)^{t+1}(31)^s"}, any},
        {"A.10", "12(14)^r(31)^s(21)^t = (14)^r(31)^s(21)^{t+1}", {"12(14)^r(31)^s(21)^t", "(14)^r(31)^s(21)^{t+1}"},
         any},
        {"A.11", "13(14)^r(31)^s(21)^t = (14)^r(31)^{s+2}(21)^{t-1}",
         {"13(14)^r(31)^s(21)^t", "(14)^r(31)^{s+2}(21)^{t-1}"}, any},
        {"A.12", "32(14)^r(31)^s(21)^t = (31)^s(21)^{t+1}(41)^r = 34(14)^r(31)^s(21)^t",
         {"32(14)^r(31)^s(21)^t", "(31)^s(21)^{t+1}(41)^r", "34(14)^r(31)^s(21)^t"}, any},
        {"A.13", "42(14)^r(31)^s(21)^t = (41)^s(21)^{t+1}(31)^r = 43(14)^r(31)^s(21)^t",
         {"42(14)^r(31)^s(21)^t", "(41)^s(21)^{t+1}(31)^r", "43(14)^r(31)^s(21)^t"}, any},
        {"A.14", "23(14)^r(31)^s(21)^t = (21)^{t+1}(31)^s(41)^r = 24(14)^r(31)^s(21)^t",
         {"23(14)^r(31)^s(21)^t", "(21)^{t+1}(31)^s(41)^r", "24(14)^r(31)^s(21)^t"}, any},
        {"A.15", "2(41)^r(31)^s(21)^t = 2(14)^r(31)^{s+1}(21)^{t-1}, t >= 1, s > 1",
         {"2(41)^r(31)^s(21)^t", "2(14)^r(31)^{s+1}(21)^{t-1}"},
         [](const Exps& e) { return e.t >= 1 && e.s > 1; }},
        {"B.01", "2(13)^s1 = 2(42)^s1", {"2(13)^s1", "2(42)^s1"}, any},
        {"B.02", "2(13)^s(14)^r1 = 2(42)^s(32)^r1", {"2(13)^s(14)^r1", "2(42)^s(32)^r1"}, any},
        {"B.03", "1(41)^r(31)^s(21)^t = (14)^r(13)^s(12)^t1 = (12)^t(13)^s(14)^r1",
         {"1(41)^r(31)^s(21)^t", "(14)^r(13)^s(12)^t1", "(12)^t(13)^s(14)^r1"}, any},
        {"B.04", "1(41)^r(31)^s(21)^t = (12)^t(42)^s(32)^r1", {"1(41)^r(31)^s(21)^t", "(12)^t(42)^s(32)^r1"}, any},
        {"B.05", "3(41)^s2 = (32)^s12", {"3(41)^s2", "(32)^s12"}, any},
        {"B.06", "3(41)^s(21)^t(31)^r = 3(41)^s(31)^t(21)^r = (32)^s(42)^r(12)^t1",
         {"3(41)^s(21)^t(31)^r", "3(41)^s(31)^t(21)^r", "(32)^s(42)^r(12)^t1"}, any},
        {"B.07", "2(42)^r(32)^s(12)^t1 = (21)^{t+1}(41)^s(31)^r", {"2(42)^r(32)^s(12)^t1", "(21)^{t+1}(41)^s(31)^r"},
         any},
        {"B.08", "3(42)^s(12)^t(32)^r1 = (31)^s(41)^r(21)^{t+1}", {"3(42)^s(12)^t(32)^r1", "(31)^s(41)^r(21)^{t+1}"},
         any},
        {"B.09", "1(42)^r(32)^s(12)^t1 = (13)^r(41)^{s+1}(21)^t", {"1(42)^r(32)^s(12)^t1", "(13)^r(41)^{s+1}(21)^t"},
         any},
        {"B.10", "(23)^s(42)^r(12)^t1 = 2(41)^s(31)^{r-1}(21)^{t+1}",
         {"(23)^s(42)^r(12)^t1", "2(41)^s(31)^{r-1}(21)^{t+1}"}, any},
    };
    // 1(i1)^r(j1)^s = 1(j1)^s(i1)^r for every ordered pair in {2,3,4}
    for (int i = 2; i <= 4; ++i)
        for (int j = 2; j <= 4; ++j) {
            if (i == j)
                continue;
            std::string a = "(" + std::to_string(i) + "1)", b = "(" + std::to_string(j) + "1)";
            v.push_back({"A.06", "1(i1)^r(j1)^s = 1(j1)^s(i1)^r", {"1" + a + "^r" + b + "^s", "1" + b + "^s" + a + "^r"},
                         any, ojson{{"i", i}, {"j", j}}});
        }
    return v;
}

/* Readings that hold where the printed ones do not; reported only. */
inline std::vector<SeqRelation> corrected_relations()
{
    auto any = [](const Exps&) { return true; };
    return {
        {"A.03", "(42)^r(41)^s = (41)^s(31)^r", {"(42)^r(41)^s", "(41)^s(31)^r"}, [](const Exps& e) { return e.s >= 1; }},
        {"A.05", "(43)^r(42)^s(41)^t = (41)^t(21)^r(31)^s", {"(43)^r(42)^s(41)^t", "(41)^t(21)^r(31)^s"}, any},
        {"B.06", "3(41)^s(21)^t(31)^r = 3(41)^s(31)^r(21)^t = (32)^s(42)^r(12)^t1",
         {"3(41)^s(21)^t(31)^r", "3(41)^s(31)^r(21)^t", "(32)^s(42)^r(12)^t1"}, any},
    };
}

inline void seq_relations(SuiteContext& ctx, Recorder& rec)
{
    const int b = ctx.config().family_bound;
    auto run = [&](const std::vector<SeqRelation>& rels, bool stated) {
        for (const auto& R : rels) {
            int holds = 0, total = 0;
            for (int r = 0; r <= b; ++r)
                for (int s = 0; s <= b; ++s)
                    for (int t = 0; t <= b; ++t) {
                        Exps e{r, s, t};
                        if (!R.bound(e))
                            continue;
                        std::vector<Seq> words;
                        bool spelled = true;
                        for (const auto& side : R.sides) {
                            auto w = Pattern(side).spell(e);
                            if (!w || w->empty() || !is_admissible(*w)) {
                                spelled = false;
                                break;
                            }
                            words.push_back(*w);
                        }
                        if (!spelled)
                            continue;  // a negative exponent: not an instance
                        ojson params = R.extra;
                        params["r"] = r;
                        params["s"] = s;
                        params["t"] = t;
                        ojson names = ojson::array();
                        for (const auto& w : words)
                            names.push_back(to_string(w));
                        bool same_frame = true;
                        for (const auto& w : words)
                            if (w.size() != words[0].size() || w.front() != words[0].front() ||
                                w.back() != words[0].back())
                                same_frame = false;
                        bool eq = true;
                        for (size_t k = 1; k < words.size(); ++k)
                            eq = eq && same_class(words[0], words[k]);
                        if (!stated) {
                            if (same_frame || eq) {
                                ++total;
                                holds += eq;
                            }
                            continue;
                        }
                        if (!same_frame && !eq) {
                            rec.info("seq-rel." + R.id, R.anchor, params,
                                     "sides differ in length or end letters, so no class contains both",
                                     ojson{{"words", names}});
                            continue;
                        }
                        rec.check("seq-rel." + R.id, R.anchor, params, eq, {}, ojson{{"words", names}});
                    }
            if (!stated) {
                ojson params = R.extra;
                params["bound"] = b;
                rec.info("seq-rel." + R.id + ".corrected", R.anchor, params,
                         std::to_string(holds) + " of " + std::to_string(total) + " comparable instances hold");
            }
        }
    };
    run(stated_relations(), true);
    run(corrected_relations(), false);
}

inline void canonical_well_defined(SuiteContext& ctx, Recorder& rec)
{
    const auto& cfg = ctx.config();
    for (int n = 1; n <= cfg.canon_max; ++n)
        for (int start = 1; start <= 4; ++start) {
            std::set<Seq> seen;
            std::map<CanonForm, std::string> owner;
            std::string problem;
            int classes = 0;
            for (const auto& s : all_sequences(n, start)) {
                if (seen.count(s))
                    continue;
                auto cls = class_closure(s);
                seen.insert(cls.begin(), cls.end());
                ++classes;
                CanonForm c = canonicalize(s);
                for (const auto& w : cls)
                    if (!(canonicalize(w) == c) && problem.empty())
                        problem = to_string(w) + " and " + to_string(s) + " share a class but not a canonical form";
                if (!cls.count(spell(c)) && problem.empty())
                    problem = "spelling of " + to_string(c) + " leaves the class of " + to_string(s);
                auto [it, fresh] = owner.emplace(c, to_string(s));
                if (!fresh && problem.empty())
                    problem = "classes of " + it->second + " and " + to_string(s) + " share " + to_string(c);
            }
            rec.check("canon.class-invariant", "ikj = ilj", {{"n", n}, {"start", start}}, problem.empty(),
                      problem.empty() ? std::to_string(classes) + " classes" : problem);
        }

    const int b = cfg.family_bound;
    for (auto T : all_types)
        for (int j = 1; j <= 4; ++j) {
            auto cell = type_action(T, j);
            ojson params{{"type", type_name(T)}, {"j", j}};
            if (!cell) {
                rec.check("canon.prepend-dash", "phi_i of Gelfand-Ponomarev add indices to the end", params,
                          j == type_end(T), "a '-' cell must be the end letter");
                continue;
            }
            std::string problem;
            int n = 0;
            for (int r = 0; r <= b; ++r)
                for (int s = 0; s <= b; ++s)
                    for (int t = 0; t <= b; ++t) {
                        Exps e{r, s, t};
                        if (!exps_valid(T, e))
                            continue;
                        CanonForm c{T, e, 1, type_length(T, e)};
                        CanonForm d = prepend(j, c);
                        ++n;
                        if ((d.type != *cell || d.start != 1) && problem.empty())
                            problem = to_string(c) + " -> " + to_string(d);
                    }
            rec.check("canon.prepend", "phi_i of Gelfand-Ponomarev add indices to the end", params, problem.empty(),
                      problem.empty() ? std::to_string(n) + " instances land in " + type_name(*cell) : problem);
        }
}

inline void atomic_props(SuiteContext& ctx, Recorder& rec)
{
    const auto& cfg = ctx.config();
    const auto& reps = ctx.reps();
    auto e = [](int i) { return gen(i); };
    auto A = [](int i, int j, int n) { return atomic(i, j, n); };

    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k)
            for (int l = k + 1; l <= 4; ++l) {
                if (k == j || l == j)
                    continue;
                for (int n = 0; n <= cfg.atomic_chain; ++n)
                    rec.same("atomic.order", "e_j a_n^{kl} = e_j a_n^{lk}", {{"j", j}, {"k", k}, {"l", l}, {"n", n}},
                             e(j) * A(k, l, n), e(j) * A(l, k, n), reps);
            }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j)
                continue;
            for (int n = 1; n <= cfg.atomic_chain; ++n)
                rec.below("atomic.chain", "a^{ij}_n <= a^{ij}_{n-1}", {{"i", i}, {"j", j}, {"n", n}}, A(i, j, n),
                          A(i, j, n - 1), reps);
        }

    const int B = cfg.atomic_bound;
    for (const auto& P : detail::perms4()) {
        const int i = P[0], j = P[1], k = P[2], l = P[3];
        ojson ix{{"i", i}, {"j", j}, {"k", k}, {"l", l}};
        for (int s = 1; s <= B; ++s)
            for (int t = 0; t <= B; ++t) {
                ojson p = ix;
                p["s"] = s;
                p["t"] = t;
                Term lhs = e(j) + e(i) * A(j, k, t + 1) * A(l, k, s - 1);
                rec.same("atomic.equalize", "e_j + e_i a^{jk}_{t+1} a^{lk}_{s-1} = e_j + e_k a^{ij}_t a^{il}_s", p, lhs,
                         e(j) + e(k) * A(i, j, t) * A(i, l, s), reps);
                rec.report_same("atomic.equalize.swapped", "e_j + e_i a^{jk}_{t+1} a^{lk}_{s-1} = e_j + e_k a^{ij}_s a^{il}_t",
                                p, lhs, e(j) + e(k) * A(i, j, s) * A(i, l, t), reps);
            }
        for (int r = 0; r <= B; ++r)
            for (int s = 1; s <= B; ++s)
                for (int t = 0; t <= B; ++t) {
                    ojson p = ix;
                    p["r"] = r;
                    p["s"] = s;
                    p["t"] = t;
                    Term x = e(i) * (e(i) * A(j, l, t) + A(k, j, r + 1) * A(k, l, s - 1));
                    Term y = e(i) * (A(j, l, t) + e(i) * A(k, j, r + 1) * A(k, l, s - 1));
                    Term z = e(i) * (A(j, l, t) + e(k) * A(i, j, r) * A(i, l, s));
                    rec.same("atomic.sym2.first", "e_i(e_i a^{jl}_t + a^{kj}_{r+1} a^{kl}_{s-1}) = e_i(a^{jl}_t + e_i a^{kj}_{r+1} a^{kl}_{s-1})",
                             p, x, y, reps);
                    rec.same("atomic.sym2.second", "e_i(e_i a^{jl}_t + a^{kj}_{r+1} a^{kl}_{s-1}) = e_i(a^{jl}_t + e_k a^{ij}_r a^{il}_s)",
                             p, x, z, reps);
                    if (r >= 1)
                        rec.same("atomic.sym3", "r -> r-2, s -> s+2 does not change e_i(e_i a^{jl}_t + a^{kj}_{r+1}a^{kl}_{s-1})",
                                 p, x, e(i) * (e(i) * A(j, l, t) + A(k, j, r - 1) * A(k, l, s + 1)), reps);
                }
        for (int r = 1; r <= B; ++r)
            for (int s = 1; s <= B; ++s) {
                ojson p = ix;
                p["r"] = r;
                p["s"] = s;
                rec.same("atomic.sym4", "e_i a^{kj}_{r+1} a^{kl}_{s-1} = e_i a^{kj}_{r-1} a^{kl}_{s+1}", p,
                         e(i) * A(k, j, r + 1) * A(k, l, s - 1), e(i) * A(k, j, r - 1) * A(k, l, s + 1), reps);
            }
    }
}

inline void gp_coincidence(SuiteContext& ctx, Recorder& rec)
{
    const auto& reps = ctx.reps();
    for (const char* a : {"21", "121", "321", "2341"}) {
        Seq s = seq_from_string(a);
        rec.same("gp.e", "e_alpha = e~_alpha", {{"alpha", a}}, e_alpha(s), gp_e(s), reps);
    }
    for (const char* a : {"21", "121", "321"}) {
        Seq s = seq_from_string(a);
        rec.same("gp.f", "f_{alpha0} = f~_{alpha0}", {{"alpha", a}}, f_alpha0(s), gp_f(s), reps);
    }
    for (int n = 1; n <= ctx.config().gp_report_max; ++n)
        for (int start = 1; start <= 4; ++start)
            for (const auto& c : slice_at(n, start)) {
                Seq s = spell(c);
                ojson p{{"seq", to_string(s)}, {"class", to_string(c)}};
                rec.report_same("gp.report.e", "coincide in D^4/theta", p, e_alpha(c), gp_e(s), reps);
                rec.report_same("gp.report.f", "coincide in D^4/theta", p, f_alpha0(c), gp_f(s), reps);
            }
}

inline void phi_fundamental(SuiteContext& ctx, Recorder& rec)
{
    struct Fail {
        const QuadRep* rep;
        Mat m;
    };
    std::map<std::pair<std::string, ojson>, std::optional<Fail>> agg;
    std::map<std::pair<std::string, ojson>, int> seen;
    auto note = [&](const std::string& id, const ojson& p, const QuadRep& r, const Mat& m) {
        auto key = std::make_pair(id, p);
        ++seen[key];
        auto& slot = agg[key];
        if (!m.is_zero() && !slot)
            slot = Fail{&r, m};
    };
    for (const auto& rep : ctx.catalog_reps()) {
        ReprTower tw = tower(rep, 3);
        for (size_t lv = 0; lv < tw.steps.size(); ++lv) {
            const auto& st = tw.steps[lv];
            Mat s = st.phi[0];
            for (int i = 1; i < 4; ++i)
                s = add(s, st.phi[i]);
            note("phi.sum", {{"prime", rep.p}, {"level", lv}}, rep, s);
        }
        for (size_t lv = 0; lv + 1 < tw.steps.size(); ++lv) {
            ReprTower sub{{tw.steps.begin() + static_cast<long>(lv), tw.steps.end()}};
            for (int i = 1; i <= 4; ++i)
                note("phi.square", {{"prime", rep.p}, {"level", lv}, {"i", i}}, rep, phi_compose(sub, {i, i}));
        }
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                if (i == j)
                    continue;
                auto [k, l] = detail::other_two(i, j);
                note("phi.fundamental", {{"prime", rep.p}, {"i", i}, {"j", j}},
                     rep, add(phi_compose(tw, {i, k, j}), phi_compose(tw, {i, l, j})));
            }
    }
    const std::map<std::string, std::string> anchors{
        {"phi.sum", "phi_1 + phi_2 + phi_3 + phi_4 = 0"},
        {"phi.square", "phi_i^2 = 0"},
        {"phi.fundamental", "phi_i phi_k phi_j + phi_i phi_l phi_j = 0"}};
    for (const auto& [key, fail] : agg) {
        ojson w;
        if (fail)
            w = {{"prime", fail->rep->p}, {"rep", rep_to_json(*fail->rep)}, {"matrix", detail::mat_json(fail->m)}};
        rec.check(key.first, anchors.at(key.first), key.second, !fail,
                  std::to_string(seen[key]) + " catalog representations", w);
    }
}

inline void psi_basic(SuiteContext& ctx, Recorder& rec)
{
    const auto& reps = ctx.reps();
    const auto& steps = ctx.steps();
    auto e = [](int i) { return gen(i); };
    auto A = [](int i, int j, int n) { return atomic(i, j, n); };

    // Run `pred` on every step; one record with the first failing representation as witness.
    auto over_steps = [&](const std::string& id, const std::string& anchor, ojson params,
                          const std::function<bool(const CoxeterStep&)>& pred, std::vector<Term> shown = {}) {
        for (size_t k = 0; k < steps.size(); ++k)
            if (!pred(steps[k])) {
                ojson w = shown.empty() ? ojson{{"prime", reps[k].p}, {"rep", rep_to_json(reps[k])}}
                                        : detail::term_witness(shown, reps[k]);
                rec.check(id, anchor, std::move(params), false, {}, w);
                return;
            }
        rec.check(id, anchor, std::move(params), true);
    };
    auto rp = [](const CoxeterStep& st, const Term& t) { return eval(t, st.plus); };
    auto rb = [](const CoxeterStep& st, const Term& t) { return eval(t, st.base); };

    for (int i = 1; i <= 4; ++i)
        over_steps("coxeter.dim", "dim X_0^1 = sum dim Y_i - dim(sum Y_i)", {{"i", i}}, [&](const CoxeterStep& st) {
            int sdim = 0;
            for (const auto& y : st.base.Y)
                sdim += y.dim();
            Subspace tot = eval(gen(1) + gen(2) + gen(3) + gen(4), st.base);
            return st.plus.dim0 == sdim - tot.dim() && st.plus.Y[i - 1] == eval(gen(i), st.plus);
        });

    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j)
                continue;
            auto [k, l] = detail::other_two(i, j);
            ojson ix{{"i", i}, {"j", j}};
            over_steps("coxeter.G-meet", "G'_i G'_j = G_k + G_l", ix, [&](const CoxeterStep& st) {
                return intersect(st.Gc(i), st.Gc(j)) == sum(st.G(k), st.G(l));
            });
            over_steps("psi.basic.1", "psi_i(e_i) = X_0^1", ix,
                       [&](const CoxeterStep& st) { return psi(i, e(i), st) == st.X01(); });
            over_steps("psi.basic.2", "psi_i(e_j) = nu^0(e_i(e_k + e_l))", ix, [&](const CoxeterStep& st) {
                return psi(i, e(j), st) == nu0(st)(e(i) * (e(k) + e(l)));
            });
            over_steps("psi.basic.3", "psi_i(I) = nu^0(e_i(e_j + e_k + e_l))", ix, [&](const CoxeterStep& st) {
                return psi(i, top(), st) == nu0(st)(e(i) * (e(j) + e(k) + e(l)));
            });
            over_steps("psi.basic.4", "psi_i(e_k e_l) = psi_j(e_k e_l) = nu^0(e_i e_j)", ix, [&](const CoxeterStep& st) {
                Subspace want = nu0(st)(e(i) * e(j));
                return psi(i, e(k) * e(l), st) == want && psi(j, e(k) * e(l), st) == want;
            });
            over_steps("phi.basic.1", "phi_i rho_{X+}(e_i) = 0", ix,
                       [&](const CoxeterStep& st) { return st.phi_image(i, rp(st, e(i))).is_zero(); });
            over_steps("phi.basic.2", "phi_i rho_{X+}(e_j) = rho_X(e_i(e_k + e_l))", ix, [&](const CoxeterStep& st) {
                return st.phi_image(i, rp(st, e(j))) == rb(st, e(i) * (e(k) + e(l)));
            });
            over_steps("phi.basic.3", "phi_i rho_{X+}(I) = rho_X(e_i(e_j + e_k + e_l))", ix,
                       [&](const CoxeterStep& st) {
                           return st.phi_image(i, rp(st, top())) == rb(st, e(i) * (e(j) + e(k) + e(l)));
                       });
            over_steps("phi.basic.4", "phi_i rho_{X+}(e_k e_l) = rho_X(e_i e_j)", ix, [&](const CoxeterStep& st) {
                return st.phi_image(i, rp(st, e(k) * e(l))) == rb(st, e(i) * e(j));
            });
            over_steps("nu.inclusion", "nu^1(e_i) <= nu^0(e_i)", ix, [&](const CoxeterStep& st) {
                return leq(nu1(st)(e(i)), nu0(st)(e(i)));
            });
            for (int n = 0; n <= 4; ++n) {
                ojson p = ix;
                p["n"] = n;
                auto h1 = [&](const CoxeterStep& st) { return psi(i, A(i, j, n), st) == nu0(st)(e(i) * A(k, l, n)); };
                auto h2 = [&](const CoxeterStep& st) {
                    return psi(j, A(i, j, n), st) == nu0(st)(e(j) * (e(k) + e(l)));
                };
                if (n >= 1) {
                    over_steps("psi.atomic.1", "psi_i(a^{ij}_n) = nu^0(e_i a^{kl}_n)", p, h1);
                    over_steps("psi.atomic.2", "psi_j(a^{ij}_n) = nu^0(e_j(e_k + e_l))", p, h2);
                } else {
                    bool a = std::all_of(steps.begin(), steps.end(), h1);
                    bool b = std::all_of(steps.begin(), steps.end(), h2);
                    rec.info("psi.atomic.n0", "psi_i(a^{ij}_n) = nu^0(e_i a^{kl}_n)", p,
                             std::string("a_0 = I; heading 1 ") + (a ? "holds" : "fails") + ", heading 2 " +
                                 (b ? "holds" : "fails"));
                }
                over_steps("psi.atomic.3", "psi_j(e_i a^{kl}_n) = nu^0(e_j a^{kl}_{n+1})", p, [&](const CoxeterStep& st) {
                    return psi(j, e(i) * A(k, l, n), st) == nu0(st)(e(j) * A(k, l, n + 1));
                });
            }
        }

    auto rng = ctx.rng(7);
    std::vector<Term> rnd;
    for (int k = 0; k < 24; ++k)
        rnd.push_back(random_term(rng, 3));
    for (int x = 0; x < 12; ++x) {
        const Term& a = rnd[x];
        const Term& b = rnd[x + 12];
        for (int i = 1; i <= 4; ++i) {
            auto [jj, kk] = detail::other_two(i, i == 4 ? 1 : 4);
            int ll = i == 4 ? 1 : 4;
            Term ejkl = e(jj) * e(kk) * e(ll);
            ojson p{{"pair", x}, {"i", i}};
            over_steps("psi.additive", "psi_i(a) + psi_i(b) = psi_i(a + b)", p, [&](const CoxeterStep& st) {
                return sum(psi(i, a, st), psi(i, b, st)) == psi(i, a + b, st);
            }, {a, b});
            over_steps("psi.quasimult.1", "psi_i(a)psi_i(b) = psi_i((a + e_i)(b + e_j e_k e_l))", p,
                       [&](const CoxeterStep& st) {
                           return intersect(psi(i, a, st), psi(i, b, st)) == psi(i, (a + e(i)) * (b + ejkl), st);
                       }, {a, b});
            over_steps("psi.quasimult.2", "psi_i(a)psi_i(b) = psi_i(a(b + e_i + e_j e_k e_l))", p,
                       [&](const CoxeterStep& st) {
                           return intersect(psi(i, a, st), psi(i, b, st)) == psi(i, a * (b + e(i) + ejkl), st);
                       }, {a, b});
            for (int j = 1; j <= 4; ++j) {
                if (j == i)
                    continue;
                for (int n = 0; n <= 4; ++n) {
                    ojson q = p;
                    q["j"] = j;
                    q["n"] = n;
                    Term an = A(i, j, n);
                    over_steps("psi.atomic-mult", "psi_i(b a_n^{ij}) = psi_i(b) psi_i(a_n^{ij})", q,
                               [&](const CoxeterStep& st) {
                                   return psi(i, a * an, st) == intersect(psi(i, a, st), psi(i, an, st));
                               }, {a, an});
                    over_steps("phi.homomorphic", "a^{ij}_n are phi_i-homomorphic", q, [&](const CoxeterStep& st) {
                        return st.phi_image(i, rp(st, an * b)) ==
                               intersect(st.phi_image(i, rp(st, an)), st.phi_image(i, rp(st, b)));
                    }, {an, b});
                }
            }
        }
    }
}

inline void adm_classes(SuiteContext& ctx, Recorder& rec)
{
    const auto& reps = ctx.reps();
    const auto& steps = ctx.steps();
    for (int n = 1; n <= ctx.config().class_max; ++n)
        for (int start = 1; start <= 4; ++start)
            for (const auto& c : slice_at(n, start)) {
                Seq a = spell(c);
                for (int i = 1; i <= 4; ++i) {
                    if (i == a.front())
                        continue;
                    Seq ia = a;
                    ia.insert(ia.begin(), i);
                    ojson p{{"alpha", to_string(a)}, {"i", i}};
                    for (const char* z : {"e", "f"}) {
                        bool is_e = z[0] == 'e';
                        Term za = is_e ? e_alpha(c) : f_alpha0(c);
                        Term zia = is_e ? e_alpha(ia) : f_alpha0(ia);
                        ojson q = p;
                        q["z"] = z;
                        std::optional<size_t> bad;
                        for (size_t k = 0; k < steps.size() && !bad; ++k)
                            if (!(steps[k].phi_image(i, eval(za, steps[k].plus)) == eval(zia, steps[k].base)))
                                bad = k;
                        ojson w;
                        if (bad)
                            w = detail::term_witness({za, zia}, reps[*bad]);
                        rec.check("classes.phi", "phi_i rho_{X+}(z_alpha) = rho_X(z_{i alpha})", q, !bad, {}, w);
                    }
                }
            }
}

inline void herrmann_core(SuiteContext& ctx, Recorder& rec)
{
    const auto& cfg = ctx.config();
    const auto& reps = ctx.reps();
    auto e = [](int i) { return gen(i); };
    auto A = [](int i, int j, int n) { return atomic(i, j, n); };

    auto rng = ctx.rng(11);
    std::vector<Term> terms{e(1), e(2), e(3), e(4)};
    for (int k = 0; k < 200; ++k)
        terms.push_back(random_term(rng, 3));
    for (int a = 2; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
            EndoSpec ga(1, a), gb(1, b);
            for (size_t x = 0; x < terms.size(); ++x)
                rec.same("gamma.commute", "endomorphisms gamma_ij commute",
                         {{"first", ga.name()}, {"second", gb.name()}, {"term", x}}, gamma(ga, gamma(gb, terms[x])),
                         gamma(gb, gamma(ga, terms[x])), reps);
        }

    for (int j = 2; j <= 4; ++j) {
        auto [k, l] = detail::other_two(1, j);
        for (int r = 0; r <= cfg.iter_bound; ++r) {
            ojson p{{"j", j}, {"k", k}, {"l", l}, {"r", r}};
            rec.same("gamma.almost-atomic.1", "gamma_{1j}(e_1 a^{kl}_r) = e_1 a^{kl}_{r+1}", p,
                     gamma(EndoSpec(1, j), e(1) * A(k, l, r)), e(1) * A(k, l, r + 1), reps);
            rec.same("gamma.almost-atomic.2", "gamma_{1k}(e_1 a^{kl}_r) = e_1 a^{jl}_1 a^{kl}_r", p,
                     gamma(EndoSpec(1, k), e(1) * A(k, l, r)), e(1) * A(j, l, 1) * A(k, l, r), reps);
            p["k"] = l;
            p["l"] = k;
            rec.same("gamma.almost-atomic.2", "gamma_{1k}(e_1 a^{kl}_r) = e_1 a^{jl}_1 a^{kl}_r", p,
                     gamma(EndoSpec(1, l), e(1) * A(l, k, r)), e(1) * A(j, k, 1) * A(l, k, r), reps);
        }
    }

    const int b = cfg.family_bound;
    for (auto T : all_types)
        for (int r = 0; r <= b; ++r)
            for (int s = 0; s <= b; ++s)
                for (int t = 0; t <= b; ++t) {
                    Exps ex{r, s, t};
                    if (!exps_valid(T, ex))
                        continue;
                    Seq base = *leading_pattern(T).spell(ex);
                    for (int k = 1; k <= 4; ++k) {
                        Seq ak = relabel(base, k);
                        for (int i = 1; i <= 4; ++i) {
                            if (i == k)
                                continue;
                            Seq aki = ak;
                            aki.push_back(i);
                            ojson p{{"type", type_name(T)}, {"r", r}, {"s", s}, {"t", t}, {"k", k}, {"i", i},
                                    {"alpha_k", to_string(ak)}};
                            rec.same("gamma.sequence.e", "gamma_{ik}(e_{alpha k}) = e_{alpha k i}", p,
                                     gamma(EndoSpec(i, k), e_alpha(ak)), e_alpha(aki), reps);
                            rec.same("gamma.sequence.f", "gamma_{ik}(f_{alpha k 0}) = f_{alpha k i 0}", p,
                                     gamma(EndoSpec(i, k), f_alpha0(ak)), f_alpha0(aki), reps);
                        }
                    }
                }

    Term f10 = f_alpha0(Seq{1});
    for (int n = 0; n <= cfg.iter_bound; ++n)
        for (const auto& ex : triples_with_sum(n)) {
            ojson p = detail::exps_json(ex);
            rec.same("herrmann.iterate.e", "gamma^t_12 gamma^s_13 gamma^r_14(e_1) = e_1 a^{34}_t a^{24}_s a^{32}_r", p,
                     gamma_rst(ex.r, ex.s, ex.t, e(1)), e(1) * A(3, 4, ex.t) * A(2, 4, ex.s) * A(3, 2, ex.r), reps);
            if (ex.r >= 1 && n <= cfg.iter_bound - 1)
                rec.same("herrmann.iterate.f",
                         "gamma^t_12 gamma^s_13 gamma^r_14(f_10) = e_1 a^{34}_t a^{24}_s a^{32}_r (e_1 a^{34}_{t+1} + a^{24}_{s+1} a^{32}_{r-1})",
                         p, gamma_rst(ex.r, ex.s, ex.t, f10),
                         e(1) * A(3, 4, ex.t) * A(2, 4, ex.s) * A(3, 2, ex.r) *
                             (e(1) * A(3, 4, ex.t + 1) + A(2, 4, ex.s + 1) * A(3, 2, ex.r - 1)),
                         reps);
        }

    // the displays for ending letters 2, 3, 4: reported as printed and as relabeled
    struct Disp {
        int i;
        std::array<int, 6> a;  // superscripts of the t, s, r factors
    };
    const std::array<Disp, 3> printed{{{2, {3, 4, 1, 4, 1, 3}}, {3, {1, 4, 2, 4, 1, 2}}, {4, {3, 1, 2, 1, 2, 3}}}};
    const std::array<Disp, 3> fixed{{{2, {3, 4, 1, 3, 1, 4}}, {3, {1, 2, 2, 4, 1, 4}}, {4, {1, 2, 1, 3, 2, 3}}}};
    for (int n = 0; n <= cfg.iter_bound; ++n)
        for (const auto& ex : triples_with_sum(n))
            for (int v = 0; v < 3; ++v) {
                ojson p = detail::exps_json(ex);
                p["i"] = printed[v].i;
                Term lhs = gamma_rst(ex.r, ex.s, ex.t, e(printed[v].i));
                auto rhs = [&](const Disp& d) {
                    return e(d.i) * A(d.a[0], d.a[1], ex.t) * A(d.a[2], d.a[3], ex.s) * A(d.a[4], d.a[5], ex.r);
                };
                rec.report_same("herrmann.iterate.e-other.printed", "gamma^t_12 gamma^s_13 gamma^r_14(e_i), i = 2,3,4", p,
                                lhs, rhs(printed[v]), reps);
                rec.report_same("herrmann.iterate.e-other.relabeled", "gamma^t_12 gamma^s_13 gamma^r_14(e_i), i = 2,3,4",
                                p, lhs, rhs(fixed[v]), reps);
            }

    // unified forms for i = 2,3,4 name the exponents of a different Herrmann word
    auto sigma = [](int i, const Exps& x) -> Exps {
        switch (i) {
        case 2: return {x.s, x.r, x.t};
        case 3: return {x.t, x.s, x.r};
        case 4: return {x.s, x.t, x.r};
        }
        return x;
    };
    for (int n = 0; n <= cfg.family_bound + 1; ++n)
        for (const auto& ex : triples_with_sum(n))
            for (int i = 1; i <= 4; ++i) {
                Exps y = sigma(i, ex);
                ojson p = detail::exps_json(ex);
                p["i"] = i;
                rec.same("unified.e", "admissible elements obtained by means of Herrmann's endomorphisms", p,
                         unified_e(i, ex.r, ex.s, ex.t), e_alpha(herrmann_sequence(i, y.r, y.s, y.t)), reps);
                if (ex.r >= 1)
                    rec.same("unified.f", "admissible elements obtained by means of Herrmann's endomorphisms", p,
                             unified_f(i, ex.r, ex.s, ex.t), f_alpha0(herrmann_sequence(i, y.r, y.s, y.t)), reps);
            }

    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= 4; ++i)
            rec.same("herrmann.R-step.e", "R e_i^v(n) = e_i^v(n+1)", {{"i", i}, {"n", n}}, r_endo(inv_cumulative_e(i, n)),
                     inv_cumulative_e(i, n + 1), reps);
        rec.same("herrmann.R-step.f", "R f_0^v(n) = f_0^v(n+1)", {{"n", n}}, r_endo(inv_cumulative_f0(n)),
                 inv_cumulative_f0(n + 1), reps);
        std::vector<Term> a, bb;
        for (int i = 1; i <= 4; ++i) {
            a.push_back(cum_e(i, n));
            bb.push_back(inv_cumulative_e(i, n));
        }
        rec.same("cumulative.sum-of-all.e", "e_1(n) + ... + e_4(n) = e_1^v(n) + ... + e_4^v(n)", {{"n", n}}, join(a),
                 join(bb), reps);
        rec.same("cumulative.sum-of-all.f", "f_0(n) = f_0^v(n)", {{"n", n}}, cum_f0(n), inv_cumulative_f0(n), reps);
        rec.check("cumulative.summands", "number of elements in every sum is 1/2 (n+1)(n+2)", {{"n", n}},
                  triples_with_sum(n).size() == static_cast<size_t>((n + 1) * (n + 2) / 2),
                  "triples with r+s+t = n; e_i^v(n) itself joins the triples with sum n-1");
    }
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= 4; ++i) {
            std::vector<Term> parts;
            for (int j = 1; j <= 4; ++j)
                if (j != i)
                    parts.push_back(gamma(EndoSpec(i, j), cum_e(j, n)));
            rec.same("cumulative.step", "e_i(n+1) = gamma_ij(e_j(n)) + gamma_ik(e_k(n)) + gamma_il(e_l(n))",
                     {{"i", i}, {"n", n}}, cum_e(i, n + 1), join(parts), reps);
        }
}

inline void perfect_cube(SuiteContext& ctx, Recorder& rec)
{
    const auto& reps = ctx.reps();
    const int N = ctx.config().cube_max;
    std::vector<std::vector<CubeRow>> cubes;
    for (int n = 1; n <= N; ++n) {
        cubes.push_back(cube(n));
        for (size_t k = 0; k < cubes.back().size(); ++k) {
            const auto& row = cubes.back()[k];
            ojson p{{"n", n}, {"row", k + 1}, {"label", row.label}};
            rec.same("cube.gp-cumulative", "Perfect elements in B+(n)", p, row.gp, row.cumulative, reps);
            rec.same("cube.gp-herrmann", "Perfect elements in B+(n)", p, row.gp, row.herrmann, reps);
        }
        std::array<Term, 5> h;
        for (int i = 1; i <= 4; ++i)
            h[i] = h_poly(i, n);
        for (const auto& P : detail::perms4()) {
            const int i = P[0], j = P[1], k = P[2], l = P[3];
            ojson p{{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"l", l}};
            if (k < l)
                rec.same("cube.sum-h.triple", "h_i h_j h_k + h_i h_j h_l = h_i h_j", p,
                         h[i] * h[j] * h[k] + h[i] * h[j] * h[l], h[i] * h[j], reps);
            if (j < k && l == 10 - i - j - k)
                rec.same("cube.sum-h.pair", "h_i h_j + h_i h_k = h_i", p, h[i] * h[j] + h[i] * h[k], h[i], reps);
        }
        rec.same("cube.gp-conjecture", "h^min(n) = f_0(n+1) (Gelfand-Ponomarev conjecture)", {{"n", n}},
                 h[1] * h[2] * h[3] * h[4], cum_f0(n + 1), reps);
    }
    rec.same("cube.min-B1", "h^min(1) = f_0(2)", {{"n", 1}},
             h_poly(1, 1) * h_poly(2, 1) * h_poly(3, 1) * h_poly(4, 1), cum_f0(2), reps);
    for (int n = 1; n + 1 <= N && n <= 2; ++n)
        for (size_t x = 0; x < cubes[n].size(); ++x)
            for (size_t y = 0; y < cubes[n - 1].size(); ++y)
                rec.below("cube.order", "v^+(n+1) <= v^+(n)",
                          {{"n", n}, {"upper_row", x + 1}, {"lower_row", y + 1}}, cubes[n][x].gp,
                          cubes[n - 1][y].gp, reps);
}

inline void perfectness(SuiteContext& ctx, Recorder& rec)
{
    const auto& cat = ctx.catalog_reps();
    for (int n = 1; n <= ctx.config().cube_max; ++n) {
        auto rows = cube(n);
        for (size_t k = 0; k < rows.size(); ++k) {
            const auto& row = rows[k];
            const std::array<std::pair<const char*, const Term*>, 3> cols{
                {{"gp", &row.gp}, {"herrmann", &row.herrmann}, {"cumulative", &row.cumulative}}};
            for (const auto& [name, t] : cols) {
                auto pr = perfect_check(*t, cat);
                ojson w;
                if (!pr.ok())
                    w = {{"violations", pr.violations}};
                rec.check("perfect.cube", "image is either zero, or the whole space",
                          {{"n", n}, {"row", k + 1}, {"label", row.label}, {"column", name}}, pr.ok(),
                          std::to_string(pr.checked) + " indecomposable representations", w);
            }
        }
    }
}

inline void infra(SuiteContext& ctx, Recorder& rec)
{
    const auto& cfg = ctx.config();
    for (int p : cfg.primes) {
        auto rng = ctx.rng(100 + static_cast<unsigned>(p));
        std::uniform_int_distribution<int> val(0, p - 1), dim(1, 7);
        auto rand_mat = [&](int rows, int cols) {
            Mat m(p, rows, cols);
            for (auto& x : m.a)
                x = static_cast<Elem>(val(rng));
            return m;
        };
        auto rand_sub = [&](int n) {
            std::uniform_int_distribution<int> r(0, n);
            return Subspace(rand_mat(r(rng), n));
        };

        std::string bad;
        for (int k = 0; k < 200 && bad.empty(); ++k) {
            Mat m = rand_mat(dim(rng), dim(rng));
            Mat r1 = rref(m);
            if (!(rref(r1) == r1) || rank(m) != rank(r1))
                bad = "rref not idempotent";
        }
        rec.check("infra.rref", "row echelon form is idempotent", {{"prime", p}}, bad.empty(), bad);

        std::string mod_bad, dim_bad;
        for (int k = 0; k < cfg.fuzz_triples; ++k) {
            int n = dim(rng);
            Subspace a = rand_sub(n), b = rand_sub(n), c = rand_sub(n);
            c = sum(c, a);
            if (mod_bad.empty() && !(sum(a, intersect(b, c)) == intersect(sum(a, b), c)))
                mod_bad = "a <= c but a + bc != (a + b)c at triple " + std::to_string(k);
            if (dim_bad.empty() && sum(a, b).dim() + intersect(a, b).dim() != a.dim() + b.dim())
                dim_bad = "dim formula fails at triple " + std::to_string(k);
        }
        rec.check("infra.modular-law", "a <= c implies a + bc = (a + b)c",
                  {{"prime", p}, {"triples", cfg.fuzz_triples}}, mod_bad.empty(), mod_bad);
        rec.check("infra.dim-formula", "dim(a+b) + dim(ab) = dim a + dim b", {{"prime", p}, {"triples", cfg.fuzz_triples}},
                  dim_bad.empty(), dim_bad);

        int pairs = 0;
        ojson dsum_w;
        auto trng = ctx.rng(200 + static_cast<unsigned>(p));
        for (int k = 0; k < cfg.dsum_pairs && dsum_w.is_null(); ++k) {
            Term t = random_term(trng, 4);
            QuadRep x = random_rep(p, 4, trng), y = random_rep(p, 4, trng);
            ++pairs;
            if (!(eval(t, direct_sum(x, y)) == direct_sum(eval(t, x), eval(t, y))))
                dsum_w = {{"term", print(t)}, {"left", rep_to_json(x)}, {"right", rep_to_json(y)}};
        }
        rec.check("infra.direct-sum", "eval(t, X + Y) = eval(t, X) + eval(t, Y)",
                  {{"prime", p}, {"pairs", cfg.dsum_pairs}}, dsum_w.is_null(), std::to_string(pairs) + " pairs",
                  dsum_w);
    }

    auto rng = ctx.rng(300);
    std::string rt_bad;
    for (int k = 0; k < cfg.roundtrip_terms && rt_bad.empty(); ++k) {
        Term t = random_term(rng, 1 + k % 5);
        std::string s = print(t);
        if (!(parse(s) == t) || print(parse(s)) != s)
            rt_bad = s;
    }
    rec.check("infra.roundtrip", "terms serialized as S-expressions", {{"terms", cfg.roundtrip_terms}}, rt_bad.empty(),
              {}, rt_bad.empty() ? ojson() : ojson{{"term", rt_bad}});
}

}

struct SuiteInfo {
    std::string name;
    std::string title;
    double budget_seconds;
    std::function<void(SuiteContext&, Recorder&)> run;
};

inline const std::vector<SuiteInfo>& suite_registry()
{
    static const std::vector<SuiteInfo> reg = {
        {"slice-counts", "slice sizes and internal points of S(4), S(5)", 30, suites::slice_counts},
        {"seq-relations", "relations between admissible sequences", 60, suites::seq_relations},
        {"canonical-well-defined", "canonical forms and the prepend table", 120, suites::canonical_well_defined},
        {"atomic-props", "atomic elements: order, chain, equalization", 60, suites::atomic_props},
        {"gp-coincidence", "table polynomials against Gelfand-Ponomarev", 60, suites::gp_coincidence},
        {"phi-fundamental", "elementary maps on Coxeter towers", 30, suites::phi_fundamental},
        {"psi-basic", "joint maps psi_i and elementary maps phi_i", 60, suites::psi_basic},
        {"adm-classes", "phi_i carries z_alpha to z_{i alpha}", 180, suites::adm_classes},
        {"herrmann-core", "Herrmann endomorphisms on admissible elements", 180, suites::herrmann_core},
        {"perfect-cube", "the Boolean cube B+(n)", 300, suites::perfect_cube},
        {"perfectness", "cube elements are perfect on indecomposables", 120, suites::perfectness},
        {"infra", "linear algebra and term plumbing", 60, suites::infra},
    };
    return reg;
}

inline const SuiteInfo& find_suite(const std::string& name)
{
    for (const auto& s : suite_registry())
        if (s.name == name)
            return s;
    std::string known;
    for (const auto& s : suite_registry())
        known += (known.empty() ? "" : ", ") + s.name;
    throw std::invalid_argument("unknown suite '" + name + "' (known: " + known + ")");
}

inline SuiteReport run_suite(const std::string& name, SuiteContext& ctx)
{
    const SuiteInfo& info = find_suite(name);
    SuiteReport rep;
    rep.suite = info.name;
    rep.title = info.title;
    rep.config = ctx.config();
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec(rep.records);
    info.run(ctx, rec);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.corpus_indecomposable = ctx.corpus().indecomposable.size();
    rep.corpus_random = ctx.corpus().random.size();
    rep.sort_records();
    return rep;
}

}
