#pragma once

#include "d4/suites.hpp"

#include <gtest/gtest.h>

namespace d4test {

inline const std::vector<d4::QuadRep>& reps()
{
    static const std::vector<d4::QuadRep> all = [] {
        auto c = d4::make_corpus({2, 3, 5}, 1, 20, 5);
        std::vector<d4::QuadRep> v = c.indecomposable;
        v.insert(v.end(), c.random.begin(), c.random.end());
        return v;
    }();
    return all;
}

inline bool same(const d4::Term& a, const d4::Term& b) { return d4::semantically_equal(a, b, reps()); }

inline d4::Term T(const char* s) { return d4::parse(s); }

}
