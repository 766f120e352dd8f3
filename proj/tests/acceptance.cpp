// One PASS/FAIL line per acceptance criterion.  With no argument every
// criterion runs; otherwise only the named suites.  D4_REPORT_DIR, when set,
// receives the JSON report of each suite.

#include "d4/suites.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace d4;

int main(int argc, char** argv)
{
    std::vector<std::string> names;
    for (int k = 1; k < argc; ++k)
        names.emplace_back(argv[k]);
    if (names.empty())
        for (const auto& s : suite_registry())
            names.push_back(s.name);

    SuiteContext ctx{SuiteConfig{}};
    const char* dir = std::getenv("D4_REPORT_DIR");
    int failed = 0;
    for (const auto& name : names) {
        const SuiteInfo* info;
        try {
            info = &find_suite(name);
        } catch (const std::exception& e) {
            std::cout << "FAIL " << name << ": " << e.what() << "\n";
            ++failed;
            continue;
        }
        SuiteReport rep = run_suite(name, ctx);
        bool in_time = rep.wall_seconds < info->budget_seconds;
        bool ok = rep.ok() && in_time;
        std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << rep.count(Verdict::Pass) << " pass, "
                  << rep.count(Verdict::Fail) << " fail, " << rep.count(Verdict::Info) << " reported; "
                  << std::fixed << std::setprecision(1) << rep.wall_seconds << " s of " << info->budget_seconds
                  << " s" << (in_time ? "" : " (over budget)") << "\n";
        std::map<std::string, int> by_id;
        for (const auto& r : rep.records)
            if (r.verdict == Verdict::Fail)
                ++by_id[r.id];
        for (const auto& [id, n] : by_id)
            std::cout << "    failing: " << id << " x" << n << "\n";
        if (dir) {
            std::ofstream f(std::string(dir) + "/" + name + ".json");
            f << rep.to_json().dump(2) << "\n";
        }
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
