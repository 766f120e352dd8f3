#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace d4 {

/* Index sequence written i_n ... i_1: front() is the end, back() is the start. */
using Seq = std::vector<int>;

inline std::string to_string(const Seq& s)
{
    std::string out;
    for (int i : s)
        out += static_cast<char>('0' + i);
    return out;
}

inline Seq seq_from_string(std::string_view text)
{
    Seq s;
    for (size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c < '1' || c > '4')
            throw std::invalid_argument("bad index '" + std::string(1, c) + "' at position " + std::to_string(k));
        s.push_back(c - '0');
    }
    if (s.empty())
        throw std::invalid_argument("empty sequence");
    return s;
}

inline bool is_admissible(const Seq& s)
{
    if (s.empty())
        return false;
    for (int i : s)
        if (i < 1 || i > 4)
            return false;
    for (size_t k = 1; k < s.size(); ++k)
        if (s[k] == s[k - 1])
            return false;
    return true;
}

inline int fourth_index(int a, int b, int c) { return 10 - a - b - c; }

/* One application of ikj = ilj anywhere in s. */
inline std::set<Seq> rewrite_neighbors(const Seq& s)
{
    std::set<Seq> out;
    for (size_t m = 1; m + 1 < s.size(); ++m) {
        int a = s[m - 1], b = s[m], c = s[m + 1];
        if (a == c)
            continue;
        Seq t = s;
        t[m] = fourth_index(a, b, c);
        out.insert(std::move(t));
    }
    return out;
}

inline std::set<Seq> class_closure(const Seq& s)
{
    if (!is_admissible(s))
        throw std::invalid_argument("not admissible: " + to_string(s));
    std::set<Seq> seen{s};
    std::deque<Seq> todo{s};
    while (!todo.empty()) {
        Seq u = std::move(todo.front());
        todo.pop_front();
        for (auto& v : rewrite_neighbors(u))
            if (seen.insert(v).second)
                todo.push_back(v);
    }
    return seen;
}

inline bool same_class(const Seq& a, const Seq& b)
{
    if (a.size() != b.size() || a.front() != b.front() || a.back() != b.back())
        return false;
    if (!is_admissible(a) || !is_admissible(b))
        return false;
    // BFS from a, stopping as soon as b shows up
    std::set<Seq> seen{a};
    std::deque<Seq> todo{a};
    while (!todo.empty()) {
        if (seen.count(b))
            return true;
        Seq u = std::move(todo.front());
        todo.pop_front();
        for (auto& v : rewrite_neighbors(u)) {
            if (v == b)
                return true;
            if (seen.insert(v).second)
                todo.push_back(v);
        }
    }
    return seen.count(b) > 0;
}

// ---------------------------------------------------------------------------
// Spelling patterns such as "2(41)^r(31)^{s+1}(21)^{t-1}"
// ---------------------------------------------------------------------------

struct Exps {
    int r = 0, s = 0, t = 0;
    auto operator<=>(const Exps&) const = default;
};

/* c0 + cr*r + cs*s + ct*t */
struct LinExp {
    int c0 = 0, cr = 0, cs = 0, ct = 0;
    int at(const Exps& e) const { return c0 + cr * e.r + cs * e.s + ct * e.t; }
};

struct PatItem {
    Seq block;
    std::optional<LinExp> power;  // none: literal
};

class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::string_view text) : text_(text)
    {
        size_t i = 0;
        auto fail = [&](const std::string& m) {
            throw std::invalid_argument("pattern '" + std::string(text) + "' at " + std::to_string(i) + ": " + m);
        };
        while (i < text.size()) {
            char c = text[i];
            if (c == ' ') {
                ++i;
                continue;
            }
            if (c >= '1' && c <= '4') {
                items_.push_back({{c - '0'}, std::nullopt});
                ++i;
                continue;
            }
            if (c != '(')
                fail("unexpected character");
            ++i;
            Seq block;
            while (i < text.size() && text[i] >= '1' && text[i] <= '4')
                block.push_back(text[i++] - '0');
            if (i >= text.size() || text[i] != ')' || block.empty())
                fail("bad block");
            ++i;
            if (i >= text.size() || text[i] != '^')
                fail("expected '^'");
            ++i;
            std::string_view ex;
            if (i < text.size() && text[i] == '{') {
                size_t close = text.find('}', i);
                if (close == std::string_view::npos)
                    fail("unclosed '{'");
                ex = text.substr(i + 1, close - i - 1);
                i = close + 1;
            } else if (i < text.size()) {
                ex = text.substr(i, 1);
                ++i;
            }
            items_.push_back({block, parse_lin(ex)});
        }
    }

    /* nullopt when some exponent is negative */
    std::optional<Seq> spell(const Exps& e) const
    {
        Seq out;
        for (const auto& it : items_) {
            int k = it.power ? it.power->at(e) : 1;
            if (k < 0)
                return std::nullopt;
            for (int j = 0; j < k; ++j)
                out.insert(out.end(), it.block.begin(), it.block.end());
        }
        return out;
    }

    const std::string& text() const { return text_; }

    static LinExp parse_lin(std::string_view ex)
    {
        LinExp l;
        int sign = 1;
        size_t i = 0;
        if (ex.empty())
            throw std::invalid_argument("empty exponent");
        while (i < ex.size()) {
            char c = ex[i];
            if (c == '+') {
                sign = 1;
                ++i;
            } else if (c == '-') {
                sign = -1;
                ++i;
            } else if (c == 'r' || c == 's' || c == 't') {
                (c == 'r' ? l.cr : c == 's' ? l.cs : l.ct) += sign;
                ++i;
            } else if (c >= '0' && c <= '9') {
                int v = 0;
                while (i < ex.size() && ex[i] >= '0' && ex[i] <= '9')
                    v = v * 10 + (ex[i++] - '0');
                if (i < ex.size() && (ex[i] == 'r' || ex[i] == 's' || ex[i] == 't')) {
                    char c2 = ex[i++];
                    (c2 == 'r' ? l.cr : c2 == 's' ? l.cs : l.ct) += sign * v;
                } else {
                    l.c0 += sign * v;
                }
            } else {
                throw std::invalid_argument("bad exponent '" + std::string(ex) + "'");
            }
        }
        return l;
    }

private:
    std::string text_;
    std::vector<PatItem> items_;
};

// ---------------------------------------------------------------------------
// The eight start-at-1 types
// ---------------------------------------------------------------------------

enum class SeqType { F21, F31, F41, G11, G21, G31, G41, H11 };

inline constexpr std::array<SeqType, 8> all_types = {SeqType::F21, SeqType::F31, SeqType::F41, SeqType::G11,
                                                     SeqType::G21, SeqType::G31, SeqType::G41, SeqType::H11};

inline const char* type_name(SeqType t)
{
    static const char* names[] = {"F21", "F31", "F41", "G11", "G21", "G31", "G41", "H11"};
    return names[static_cast<int>(t)];
}

inline SeqType type_from_name(std::string_view n)
{
    for (auto t : all_types)
        if (n == type_name(t))
            return t;
    throw std::invalid_argument("unknown type '" + std::string(n) + "'");
}

inline char type_class(SeqType t) { return type_name(t)[0]; }
inline int type_end(SeqType t) { return type_name(t)[1] - '0'; }

/* The leading spelling of each row; exponents are read against it. */
inline const Pattern& leading_pattern(SeqType t)
{
    static const std::array<Pattern, 8> pats = {
        Pattern("(21)^t(41)^r(31)^s"), Pattern("(31)^s(41)^r(21)^t"), Pattern("(41)^r(31)^s(21)^t"),
        Pattern("1(41)^r(31)^s(21)^t"), Pattern("2(41)^r(31)^s(21)^t"), Pattern("3(41)^r(21)^t(31)^s"),
        Pattern("4(21)^t(31)^s(41)^r"), Pattern("(14)^r(31)^s(21)^t"),
    };
    return pats[static_cast<int>(t)];
}

/* Other spellings displayed in the same row of the sequence table. */
inline std::vector<Pattern> alternate_patterns(SeqType t)
{
    switch (t) {
    case SeqType::F21: return {Pattern("(21)^t(31)^s(41)^r")};
    case SeqType::F31: return {Pattern("(31)^s(21)^t(41)^r")};
    case SeqType::F41: return {Pattern("(41)^r(21)^t(31)^s")};
    case SeqType::G11: return {Pattern("1(31)^s(41)^r(21)^t"), Pattern("1(21)^t(31)^s(41)^r")};
    case SeqType::G21: return {Pattern("2(31)^{s+1}(41)^{r-1}(21)^t"), Pattern("2(14)^r(31)^{s+1}(21)^{t-1}")};
    case SeqType::G31: return {Pattern("3(21)^{t+1}(41)^{r-1}(31)^s"), Pattern("3(14)^r(21)^{t+1}(31)^{s-1}")};
    case SeqType::G41: return {Pattern("4(31)^{s+1}(21)^{t-1}(41)^r"), Pattern("4(12)^t(31)^{s+1}(41)^{r-1}")};
    case SeqType::H11:
        return {Pattern("(14)^r(21)^{t+1}(31)^{s-1}"), Pattern("(13)^s(41)^r(21)^t"),
                Pattern("(13)^s(21)^{t+1}(41)^{r-1}"), Pattern("(12)^{t+1}(41)^r(31)^{s-1}"),
                Pattern("(12)^{t+1}(31)^{s-1}(41)^r")};
    }
    return {};
}

/* Third spellings of rows G31 and G41 exactly as printed. */
inline std::vector<Pattern> verbatim_g_patterns(SeqType t)
{
    if (t == SeqType::G31)
        return {Pattern("3(14)^r(21)^{s+1}(31)^{t-1}")};
    if (t == SeqType::G41)
        return {Pattern("4(12)^r(31)^{s+1}(41)^{t-1}")};
    return {};
}

inline int type_length(SeqType t, const Exps& e)
{
    int k = 2 * (e.r + e.s + e.t);
    return type_class(t) == 'G' ? k + 1 : k;
}

/* Transition for prepending j in start-at-1 labels; nullopt for "-". */
inline std::optional<SeqType> type_action(SeqType t, int j)
{
    using S = SeqType;
    static const std::optional<S> table[8][4] = {
        {S::G11, std::nullopt, S::G31, S::G41}, {S::G11, S::G21, std::nullopt, S::G41},
        {S::G11, S::G21, S::G31, std::nullopt}, {std::nullopt, S::F21, S::F31, S::F41},
        {S::H11, std::nullopt, S::F31, S::F41}, {S::H11, S::F21, std::nullopt, S::F41},
        {S::H11, S::F21, S::F31, std::nullopt}, {std::nullopt, S::G21, S::G31, S::G41},
    };
    return table[static_cast<int>(t)][j - 1];
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/* Transposition (1 a) as a map on indices; identity when a == 1. */
inline int swap_1(int a, int i)
{
    if (i == 1)
        return a;
    if (i == a)
        return 1;
    return i;
}

inline Seq relabel(const Seq& s, int a)
{
    Seq out = s;
    for (int& i : out)
        i = swap_1(a, i);
    return out;
}

struct CanonForm {
    SeqType type = SeqType::G11;
    Exps e;
    int start = 1;
    int length = 1;

    char class_tag() const { return type_class(type); }
    /* end index in original labels */
    int end() const { return swap_1(start, type_end(type)); }
    /* perm[i] is the image of table index i */
    std::array<int, 5> perm() const { return {0, swap_1(start, 1), swap_1(start, 2), swap_1(start, 3), swap_1(start, 4)}; }

    auto operator<=>(const CanonForm&) const = default;
};

inline std::string to_string(const CanonForm& c)
{
    std::string out = type_name(c.type);
    out += " r=" + std::to_string(c.e.r) + " s=" + std::to_string(c.e.s) + " t=" + std::to_string(c.e.t);
    if (c.start != 1)
        out += " start=" + std::to_string(c.start);
    return out;
}

/* Leading spelling validity per row. */
inline bool exps_valid(SeqType t, const Exps& e)
{
    switch (t) {
    case SeqType::F21: return e.t >= 1;
    case SeqType::F31: return e.s >= 1;
    case SeqType::F41: return e.r >= 1;
    case SeqType::G11: return true;
    case SeqType::G21: return e.r + e.s >= 1;
    case SeqType::G31: return e.r + e.t >= 1;
    case SeqType::G41: return e.t + e.s >= 1;
    case SeqType::H11: return e.r >= 1 && e.s + e.t >= 1;
    }
    return false;
}

/* Sequence of a canonical form, in original labels. */
inline Seq spell(const CanonForm& c)
{
    if (!exps_valid(c.type, c.e))
        throw std::invalid_argument("exponents out of range for " + std::string(type_name(c.type)));
    auto s = leading_pattern(c.type).spell(c.e);
    return relabel(*s, c.start);
}

/* Triples with r+s+t = k, r descending then s ascending. */
inline std::vector<Exps> exps_in_order(int k)
{
    std::vector<Exps> out;
    for (int r = k; r >= 0; --r)
        for (int s = 0; r + s <= k; ++s)
            out.push_back({r, s, k - r - s});
    return out;
}

inline SeqType type_of_relabeled(const Seq& s)
{
    int end = s.front();
    bool odd = s.size() % 2 == 1;
    if (odd)
        return end == 1 ? SeqType::G11 : (end == 2 ? SeqType::G21 : end == 3 ? SeqType::G31 : SeqType::G41);
    if (end == 1)
        return SeqType::H11;
    return end == 2 ? SeqType::F21 : end == 3 ? SeqType::F31 : SeqType::F41;
}

/**
 * @brief Classify the class of s into a table row with exponents.
 *
 * Exponents are not unique inside a class; the first triple in
 * exps_in_order whose leading spelling lies in the class is taken.
 */
inline CanonForm canonicalize(const Seq& s)
{
    if (!is_admissible(s))
        throw std::invalid_argument("not admissible: " + to_string(s));
    CanonForm c;
    c.start = s.back();
    c.length = static_cast<int>(s.size());
    Seq u = relabel(s, c.start);
    c.type = type_of_relabeled(u);
    int k = type_class(c.type) == 'G' ? (c.length - 1) / 2 : c.length / 2;
    auto cls = class_closure(u);
    for (const auto& e : exps_in_order(k)) {
        if (!exps_valid(c.type, e))
            continue;
        auto w = leading_pattern(c.type).spell(e);
        if (w && cls.count(*w)) {
            c.e = e;
            return c;
        }
    }
    throw std::logic_error("no table row matches class of " + to_string(s));
}

/* Canonical form of i followed by the sequence of c. */
inline CanonForm prepend(int i, const CanonForm& c)
{
    if (i < 1 || i > 4)
        throw std::invalid_argument("index out of range");
    if (i == c.end())
        throw std::invalid_argument("prepend " + std::to_string(i) + " to a sequence ending at " + std::to_string(i) +
                                    " is undefined");
    Seq s = spell(c);
    s.insert(s.begin(), i);
    return canonicalize(s);
}

/* All classes of length n starting at 1, by brute force over 3^(n-1) words. */
inline std::vector<CanonForm> slice_enumerate(int n)
{
    if (n < 1)
        throw std::invalid_argument("slice length must be positive");
    std::set<Seq> seen;
    std::vector<CanonForm> out;
    Seq s(n, 0);
    s[n - 1] = 1;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos < 0) {
            if (seen.count(s))
                return;
            auto cls = class_closure(s);
            seen.insert(cls.begin(), cls.end());
            out.push_back(canonicalize(s));
            return;
        }
        for (int i = 1; i <= 4; ++i) {
            if (i == s[pos + 1])
                continue;
            s[pos] = i;
            self(self, pos - 1);
        }
    };
    rec(rec, n - 2);
    std::sort(out.begin(), out.end());
    return out;
}

/* Every admissible word of length n with the given start. */
inline std::vector<Seq> all_sequences(int n, int start)
{
    std::vector<Seq> out;
    Seq s(n, 0);
    s[n - 1] = start;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos < 0) {
            out.push_back(s);
            return;
        }
        for (int i = 1; i <= 4; ++i) {
            if (i == s[pos + 1])
                continue;
            s[pos] = i;
            self(self, pos - 1);
        }
    };
    rec(rec, n - 2);
    return out;
}

}
