#pragma once

#include "d4/adm_seq.hpp"
#include "d4/term.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace d4 {

/** @brief a_n^{ij} = e_i + e_j a_{n-1}^{kl}, a_0 = I, with k < l. */
inline Term atomic(int i, int j, int n)
{
    if (i < 1 || i > 4 || j < 1 || j > 4)
        throw std::invalid_argument("atomic: index out of range");
    if (i == j)
        throw std::invalid_argument("atomic: indices must differ");
    if (n < 0)
        throw std::invalid_argument("atomic: negative lower index");
    if (n == 0)
        return top();
    int k = 0, l = 0;
    for (int x = 1; x <= 4; ++x) {
        if (x == i || x == j)
            continue;
        (k == 0 ? k : l) = x;
    }
    return gen(i) + gen(j) * atomic(k, l, n - 1);
}

// ---------------------------------------------------------------------------
// Polynomial spellings: "E (e2 a34_{2t} + a41_{2r+1} a31_{2s-1})"
//   eN        generator
//   aXY_{..}  atomic element with a linear lower index
//   E         the e-polynomial of the same row (f column only)
//   ( + )     join; juxtaposition is meet
// ---------------------------------------------------------------------------

class PolyPattern {
public:
    PolyPattern() = default;
    explicit PolyPattern(std::string_view text) : text_(text)
    {
        size_t i = 0;
        root_ = sum(text, i);
        skip(text, i);
        if (i != text.size())
            fail(text, i, "trailing input");
    }

    /* nullopt when a lower index is negative; perm maps table indices to actual ones */
    std::optional<Term> eval(const Exps& e, const std::array<int, 5>& perm, const std::optional<Term>& E = {}) const
    {
        return eval_node(*root_, e, perm, E);
    }

    std::optional<Term> eval(const Exps& e) const { return eval(e, {0, 1, 2, 3, 4}); }

    const std::string& text() const { return text_; }

private:
    struct Node {
        char op;  // 'e', 'a', 'E', '*', '+'
        int i = 0, j = 0;
        LinExp idx;
        std::vector<std::shared_ptr<Node>> kids;
    };
    using P = std::shared_ptr<Node>;

    [[noreturn]] static void fail(std::string_view t, size_t i, const std::string& m)
    {
        throw std::invalid_argument("polynomial pattern '" + std::string(t) + "' at " + std::to_string(i) + ": " + m);
    }

    static void skip(std::string_view t, size_t& i)
    {
        while (i < t.size() && t[i] == ' ')
            ++i;
    }

    static int digit(std::string_view t, size_t& i)
    {
        if (i >= t.size() || t[i] < '1' || t[i] > '4')
            fail(t, i, "expected index 1..4");
        return t[i++] - '0';
    }

    static P sum(std::string_view t, size_t& i)
    {
        auto n = std::make_shared<Node>();
        n->op = '+';
        n->kids.push_back(product(t, i));
        skip(t, i);
        while (i < t.size() && t[i] == '+') {
            ++i;
            n->kids.push_back(product(t, i));
            skip(t, i);
        }
        return n->kids.size() == 1 ? n->kids[0] : n;
    }

    static P product(std::string_view t, size_t& i)
    {
        auto n = std::make_shared<Node>();
        n->op = '*';
        for (;;) {
            skip(t, i);
            if (i >= t.size() || t[i] == '+' || t[i] == ')')
                break;
            n->kids.push_back(factor(t, i));
        }
        if (n->kids.empty())
            fail(t, i, "empty product");
        return n->kids.size() == 1 ? n->kids[0] : n;
    }

    static P factor(std::string_view t, size_t& i)
    {
        auto n = std::make_shared<Node>();
        char c = t[i];
        if (c == 'E') {
            ++i;
            n->op = 'E';
            return n;
        }
        if (c == 'e') {
            ++i;
            n->op = 'e';
            n->i = digit(t, i);
            return n;
        }
        if (c == 'a') {
            ++i;
            n->op = 'a';
            n->i = digit(t, i);
            n->j = digit(t, i);
            if (i >= t.size() || t[i] != '_')
                fail(t, i, "expected '_'");
            ++i;
            std::string_view ex;
            if (i < t.size() && t[i] == '{') {
                size_t close = t.find('}', i);
                if (close == std::string_view::npos)
                    fail(t, i, "unclosed '{'");
                ex = t.substr(i + 1, close - i - 1);
                i = close + 1;
            } else {
                size_t b = i;
                while (i < t.size() && t[i] != ' ' && t[i] != ')' && t[i] != '+')
                    ++i;
                ex = t.substr(b, i - b);
            }
            n->idx = Pattern::parse_lin(ex);
            return n;
        }
        if (c == '(') {
            ++i;
            P inner = sum(t, i);
            skip(t, i);
            if (i >= t.size() || t[i] != ')')
                fail(t, i, "expected ')'");
            ++i;
            return inner;
        }
        fail(t, i, std::string("unexpected character '") + c + "'");
    }

    static std::optional<Term> eval_node(const Node& n, const Exps& e, const std::array<int, 5>& perm,
                                         const std::optional<Term>& E)
    {
        switch (n.op) {
        case 'E':
            if (!E)
                throw std::invalid_argument("pattern uses E but no e-polynomial was given");
            return E;
        case 'e': return gen(perm[n.i]);
        case 'a': {
            int k = n.idx.at(e);
            if (k < 0)
                return std::nullopt;
            return atomic(perm[n.i], perm[n.j], k);
        }
        default: {
            std::vector<Term> parts;
            for (const auto& c : n.kids) {
                auto v = eval_node(*c, e, perm, E);
                if (!v)
                    return std::nullopt;
                parts.push_back(*v);
            }
            return n.op == '*' ? meet(parts) : join(parts);
        }
        }
    }

    std::string text_;
    P root_;
};

// ---------------------------------------------------------------------------
// Table of admissible polynomials, start-at-1 rows
// ---------------------------------------------------------------------------

inline const std::vector<PolyPattern>& e_patterns(SeqType t)
{
    static const std::array<std::vector<PolyPattern>, 8> rows = [] {
        std::array<std::vector<PolyPattern>, 8> r;
        auto set = [&](SeqType t, std::initializer_list<const char*> xs) {
            for (auto x : xs)
                r[static_cast<int>(t)].emplace_back(x);
        };
        set(SeqType::F21, {"e2 a31_{2s} a41_{2r} a34_{2t-1}"});
        set(SeqType::F31, {"e3 a21_{2t} a41_{2r} a24_{2s-1}"});
        set(SeqType::F41, {"e4 a21_{2t} a31_{2s} a32_{2r-1}"});
        set(SeqType::G11, {"e1 a24_{2s} a34_{2t} a32_{2r}"});
        set(SeqType::G21, {"e2 a34_{2t} a31_{2s+1} a14_{2r-1}", "e2 a34_{2t} a31_{2s-1} a14_{2r+1}"});
        set(SeqType::G31, {"e3 a24_{2s} a21_{2t+1} a14_{2r-1}", "e3 a24_{2s} a21_{2t-1} a14_{2r+1}"});
        set(SeqType::G41, {"e4 a32_{2r} a31_{2s+1} a12_{2t-1}", "e4 a32_{2r} a31_{2s-1} a12_{2t+1}"});
        set(SeqType::H11, {"e1 a23_{2r+1} a24_{2s-1} a34_{2t-1}", "e1 a23_{2r-1} a24_{2s-1} a34_{2t+1}",
                           "e1 a23_{2r-1} a24_{2s+1} a34_{2t-1}"});
        return r;
    }();
    return rows[static_cast<int>(t)];
}

inline const std::vector<PolyPattern>& f_patterns(SeqType t)
{
    static const std::array<std::vector<PolyPattern>, 8> rows = [] {
        std::array<std::vector<PolyPattern>, 8> r;
        auto set = [&](SeqType t, std::initializer_list<const char*> xs) {
            for (auto x : xs)
                r[static_cast<int>(t)].emplace_back(x);
        };
        set(SeqType::F21, {"E (e2 a34_{2t} + a41_{2r+1} a31_{2s-1})", "E (a43_{2t} + e1 a24_{2r} a23_{2s})"});
        set(SeqType::F31, {"E (e3 a42_{2s} + a41_{2r+1} a21_{2t-1})", "E (a42_{2s} + e1 a34_{2r} a32_{2t})"});
        set(SeqType::F41, {"E (e4 a32_{2r} + a31_{2s+1} a21_{2t-1})", "E (a32_{2r} + e1 a43_{2s} a42_{2t})"});
        set(SeqType::G11, {"E (e1 a32_{2r+1} + a24_{2s+1} a34_{2t-1})", "E (a32_{2r+1} + e4 a21_{2s} a31_{2t})"});
        set(SeqType::G21, {"E (e2 a14_{2r} + a31_{2s+2} a34_{2t-1})", "E (a14_{2r} + e3 a21_{2s+1} a24_{2t})"});
        set(SeqType::G31, {"E (e3 a14_{2r} + a21_{2t+2} a24_{2s-1})", "E (a14_{2r} + e2 a31_{2t+1} a34_{2s})"});
        set(SeqType::G41, {"E (e4 a12_{2t} + a31_{2s} a32_{2r+1})", "E (a12_{2t} + e3 a41_{2s+1} a42_{2r})"});
        set(SeqType::H11, {"E (e1 a23_{2r} + a24_{2s} a34_{2t})", "E (e1 a24_{2s} + a34_{2t} a23_{2r})",
                           "E (e1 a34_{2t} + a23_{2r} a24_{2s})"});
        return r;
    }();
    return rows[static_cast<int>(t)];
}

/*
 * Order in which e-spellings are tried.  The H11 cells are printed one
 * line off from the sequence spellings they belong to; the cell matching
 * (14)^r(31)^s(21)^t with the same r,s,t is the second one.
 */
inline std::vector<size_t> e_spelling_order(SeqType t)
{
    if (t == SeqType::H11)
        return {1, 2, 0};
    std::vector<size_t> v(e_patterns(t).size());
    for (size_t k = 0; k < v.size(); ++k)
        v[k] = k;
    return v;
}

namespace detail {
inline Term first_spelling(const std::vector<PolyPattern>& ps, const std::vector<size_t>& order, const CanonForm& c,
                           const std::optional<Term>& E, const char* what)
{
    for (size_t k : order)
        if (auto v = ps[k].eval(c.e, c.perm(), E))
            return *v;
    throw std::invalid_argument(std::string(what) + ": every spelling of " + type_name(c.type) +
                                " has a negative lower index at " + to_string(c));
}
}

/* Polynomial of one particular spelling; nullopt if its indices go negative. */
inline std::optional<Term> e_alpha_spelling(const CanonForm& c, size_t k)
{
    const auto& ps = e_patterns(c.type);
    if (k >= ps.size())
        throw std::out_of_range("spelling index");
    return ps[k].eval(c.e, c.perm());
}

/** @brief e_alpha from its Table row; the first spelling (in e_spelling_order) with non-negative indices is used. */
inline Term e_alpha(const CanonForm& c)
{
    if (!exps_valid(c.type, c.e))
        throw std::invalid_argument("e_alpha: exponents out of range for " + to_string(c));
    return detail::first_spelling(e_patterns(c.type), e_spelling_order(c.type), c, std::nullopt, "e_alpha");
}

inline Term e_alpha(const Seq& s) { return e_alpha(canonicalize(s)); }

inline std::optional<Term> f_alpha0_spelling(const CanonForm& c, size_t k)
{
    const auto& ps = f_patterns(c.type);
    if (k >= ps.size())
        throw std::out_of_range("spelling index");
    return ps[k].eval(c.e, c.perm(), e_alpha(c));
}

inline Term f_alpha0(const CanonForm& c)
{
    if (!exps_valid(c.type, c.e))
        throw std::invalid_argument("f_alpha0: exponents out of range for " + to_string(c));
    const auto& ps = f_patterns(c.type);
    std::vector<size_t> order(ps.size());
    for (size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    return detail::first_spelling(ps, order, c, e_alpha(c), "f_alpha0");
}

inline Term f_alpha0(const Seq& s) { return f_alpha0(canonicalize(s)); }

// ---------------------------------------------------------------------------
// Unified forms, indexed by the end of the sequence
// ---------------------------------------------------------------------------

inline Term unified_e(int i, int r, int s, int t)
{
    if (r < 0 || s < 0 || t < 0)
        throw std::invalid_argument("unified_e: negative index");
    switch (i) {
    case 1: return gen(1) * atomic(3, 2, r) * atomic(2, 4, s) * atomic(3, 4, t);
    case 2: return gen(2) * atomic(3, 1, r) * atomic(1, 4, s) * atomic(3, 4, t);
    case 3: return gen(3) * atomic(1, 2, r) * atomic(2, 4, s) * atomic(1, 4, t);
    case 4: return gen(4) * atomic(1, 2, r) * atomic(2, 3, s) * atomic(1, 3, t);
    }
    throw std::invalid_argument("unified_e: index out of range");
}

/* e_i a_t^{jk} a_s^{kl} a_r^{lj} (e_i a_{t+1}^{jk} + a_{s+1}^{kl} a_{r-1}^{jl}); i = 1 uses (3,4,2). */
inline Term unified_f(int i, int r, int s, int t)
{
    if (r < 1)
        throw std::invalid_argument("unified_f: r must be at least 1 (lower index r-1)");
    if (s < 0 || t < 0)
        throw std::invalid_argument("unified_f: negative index");
    static const int jkl[5][3] = {{0, 0, 0}, {3, 4, 2}, {3, 4, 1}, {1, 4, 2}, {1, 3, 2}};
    if (i < 1 || i > 4)
        throw std::invalid_argument("unified_f: index out of range");
    int j = jkl[i][0], k = jkl[i][1], l = jkl[i][2];
    Term ea = gen(i) * atomic(j, k, t) * atomic(k, l, s) * atomic(l, j, r);
    return ea * (gen(i) * atomic(j, k, t + 1) + atomic(k, l, s + 1) * atomic(j, l, r - 1));
}

/* Rows of the signature table (sequences ending at 1), parity bits (r,s,t). */
struct SignatureRow {
    const char* name;
    int r, s, t;
    PolyPattern e, f;
};

inline const std::vector<SignatureRow>& signature_rows()
{
    static const std::vector<SignatureRow> rows = {
        {"F12", 0, 0, 1, PolyPattern("e1 a32_{2r} a42_{2s} a34_{2t-1}"), PolyPattern("E (e1 a34_{2t} + a42_{2s+1} a32_{2r-1})")},
        {"F13", 0, 1, 0, PolyPattern("e1 a32_{2r} a42_{2s-1} a34_{2t}"), PolyPattern("E (e1 a34_{2t+1} + a42_{2s} a32_{2r-1})")},
        {"F14", 1, 0, 0, PolyPattern("e1 a32_{2r-1} a42_{2s} a34_{2t}"), PolyPattern("E (e1 a34_{2t+1} + a42_{2s+1} a32_{2r-2})")},
        {"G11", 0, 0, 0, PolyPattern("e1 a32_{2r} a42_{2s} a34_{2t}"), PolyPattern("E (e1 a34_{2t+1} + a42_{2s+1} a32_{2r-1})")},
        {"G12", 1, 1, 0, PolyPattern("e1 a32_{2r+1} a42_{2s-1} a34_{2t}"), PolyPattern("E (e1 a34_{2t+1} + a42_{2s} a32_{2r})")},
        {"G13", 1, 0, 1, PolyPattern("e1 a32_{2r-1} a42_{2s} a34_{2t+1}"), PolyPattern("E (e1 a34_{2t} + a42_{2s+1} a32_{2r-2})")},
        {"G14", 0, 1, 1, PolyPattern("e1 a32_{2r} a42_{2s-1} a34_{2t+1}"), PolyPattern("E (e1 a34_{2t+2} + a42_{2s} a32_{2r-1})")},
        {"H11", 1, 1, 1, PolyPattern("e1 a32_{2r-1} a42_{2s+1} a34_{2t-1}"), PolyPattern("E (e1 a34_{2t} + a42_{2s+2} a32_{2r-2})")},
    };
    return rows;
}

inline const SignatureRow& signature_of(int r, int s, int t)
{
    for (const auto& row : signature_rows())
        if (row.r == r % 2 && row.s == s % 2 && row.t == t % 2)
            return row;
    throw std::logic_error("no signature row");
}

// ---------------------------------------------------------------------------
// Gelfand-Ponomarev recursive forms
// ---------------------------------------------------------------------------

namespace detail {

struct GpCache {
    std::mutex mu;
    std::map<Seq, Term> e;
};

inline GpCache& gp_cache()
{
    static GpCache c;
    return c;
}

/* All beta = (k_m .. k_1) with k_q outside forbid[q-1] and adjacent letters distinct. */
inline void gp_index_set(const std::vector<std::vector<int>>& forbid, std::vector<Seq>& out)
{
    size_t m = forbid.size();
    Seq beta(m, 0);
    // beta is stored front = k_m, back = k_1
    auto rec = [&](auto&& self, size_t q) -> void {
        if (q == m) {
            out.push_back(beta);
            return;
        }
        size_t pos = m - 1 - q;
        for (int k = 1; k <= 4; ++k) {
            if (std::find(forbid[q].begin(), forbid[q].end(), k) != forbid[q].end())
                continue;
            if (q > 0 && beta[pos + 1] == k)
                continue;
            beta[pos] = k;
            self(self, q + 1);
        }
    };
    rec(rec, 0);
}

}

/** @brief e~_alpha via the index set Gamma_e; base e~_i = e_i. */
inline Term gp_e(const Seq& a)
{
    if (!is_admissible(a))
        throw std::invalid_argument("gp_e: not admissible: " + to_string(a));
    if (a.size() == 1)
        return gen(a[0]);
    {
        auto& c = detail::gp_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.e.find(a);
        if (it != c.e.end())
            return it->second;
    }
    // i_m = a[n-m]; k_q must avoid {i_{q+1}, i_q}
    size_t n = a.size();
    std::vector<std::vector<int>> forbid(n - 1);
    for (size_t q = 1; q < n; ++q)
        forbid[q - 1] = {a[n - 1 - q], a[n - q]};
    std::vector<Seq> betas;
    detail::gp_index_set(forbid, betas);
    std::vector<Term> parts;
    for (const auto& b : betas)
        parts.push_back(gp_e(b));
    Term v = gen(a[0]) * join(parts);
    auto& c = detail::gp_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.e.emplace(a, v);
    return v;
}

/* f~_{alpha 0}: beta has the length of alpha and k_1 only avoids i_1. */
inline Term gp_f(const Seq& a)
{
    if (!is_admissible(a))
        throw std::invalid_argument("gp_f: not admissible: " + to_string(a));
    size_t n = a.size();
    std::vector<std::vector<int>> forbid(n);
    forbid[0] = {a[n - 1]};
    for (size_t q = 2; q <= n; ++q)
        forbid[q - 1] = {a[n - q], a[n - q + 1]};
    std::vector<Seq> betas;
    detail::gp_index_set(forbid, betas);
    std::vector<Term> parts;
    for (const auto& b : betas)
        parts.push_back(gp_e(b));
    return gen(a[0]) * join(parts);
}

// ---------------------------------------------------------------------------
// Cumulative elements
// ---------------------------------------------------------------------------

/* Classes of length n starting at t. */
inline std::vector<CanonForm> slice_at(int n, int t)
{
    auto cs = slice_enumerate(n);
    for (auto& c : cs)
        c.start = t;
    return cs;
}

/** @brief e_t(n): join of e_alpha over the classes of length n starting at t. */
inline Term cumulative_e(int t, int n)
{
    if (n < 1)
        throw std::invalid_argument("cumulative_e: n must be positive");
    std::vector<Term> parts;
    for (const auto& c : slice_at(n, t))
        parts.push_back(e_alpha(c));
    return join(parts);
}

/** @brief f_0(n): join of f_alpha0 over classes of length n-1, any start; f_0(1) = I. */
inline Term cumulative_f0(int n)
{
    if (n < 1)
        throw std::invalid_argument("cumulative_f0: n must be positive");
    if (n == 1)
        return top();
    std::vector<Term> parts;
    for (int t = 1; t <= 4; ++t)
        for (const auto& c : slice_at(n - 1, t))
            parts.push_back(f_alpha0(c));
    return join(parts);
}

inline std::vector<Exps> triples_with_sum(int k)
{
    std::vector<Exps> out;
    for (int r = 0; r <= k; ++r)
        for (int s = 0; r + s <= k; ++s)
            out.push_back({r, s, k - r - s});
    return out;
}

/** @brief e_i^v(n): join of unified_e(i,r,s,t) over r+s+t = n-1. */
inline Term inv_cumulative_e(int i, int n)
{
    if (n < 1)
        throw std::invalid_argument("inv_cumulative_e: n must be positive");
    std::vector<Term> parts;
    for (const auto& e : triples_with_sum(n - 1))
        parts.push_back(unified_e(i, e.r, e.s, e.t));
    return join(parts);
}

}
