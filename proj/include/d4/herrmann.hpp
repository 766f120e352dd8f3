#pragma once

#include "d4/adm_poly.hpp"
#include "d4/term.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace d4 {

/* gamma_ij depends only on the partition {{i,j},{k,l}}; named by the partner of 1. */
struct EndoSpec {
    int partner = 2;  // 2, 3 or 4

    EndoSpec() = default;
    EndoSpec(int i, int j)
    {
        if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
            throw std::invalid_argument("EndoSpec: need two distinct indices in 1..4");
        if (i == 1)
            partner = j;
        else if (j == 1)
            partner = i;
        else
            partner = 10 - 1 - i - j;
    }

    /* the partner of index c in the partition */
    int mate(int c) const
    {
        if (c == 1)
            return partner;
        if (c == partner)
            return 1;
        return 10 - 1 - partner - c;
    }

    std::string name() const { return "1" + std::to_string(partner); }
    auto operator<=>(const EndoSpec&) const = default;
};

inline EndoSpec parse_endo(std::string_view s)
{
    if (s.size() != 2 || s[0] < '1' || s[0] > '4' || s[1] < '1' || s[1] > '4')
        throw std::invalid_argument("endomorphism spec must be two indices, e.g. 12");
    return EndoSpec(s[0] - '0', s[1] - '0');
}

/** @brief q_ij = (e_i + e_j)(e_k + e_l). */
inline Term q(const EndoSpec& e)
{
    int j = e.partner;
    int a = 0, b = 0;
    for (int x = 2; x <= 4; ++x) {
        if (x == j)
            continue;
        (a == 0 ? a : b) = x;
    }
    return (gen(1) + gen(j)) * (gen(a) + gen(b));
}

/** @brief e_k -> e_k q, I -> q, 0 -> 0. */
inline Term gamma(const EndoSpec& e, const Term& t)
{
    Term qq = q(e);
    return substitute(t, {gen(1) * qq, gen(2) * qq, gen(3) * qq, gen(4) * qq}, qq);
}

inline Term gamma_pow(const EndoSpec& e, int n, Term t)
{
    for (int k = 0; k < n; ++k)
        t = gamma(e, t);
    return t;
}

/* gamma_12^t gamma_13^s gamma_14^r (x); gamma_14 acts first */
inline Term gamma_rst(int r, int s, int t, const Term& x)
{
    return gamma_pow(EndoSpec(1, 2), t, gamma_pow(EndoSpec(1, 3), s, gamma_pow(EndoSpec(1, 4), r, x)));
}

/** @brief R = gamma_12 + gamma_13 + gamma_14. */
inline Term r_endo(const Term& t)
{
    return gamma(EndoSpec(1, 2), t) + gamma(EndoSpec(1, 3), t) + gamma(EndoSpec(1, 4), t);
}

/* Sequence reached from the word `start` by r steps of (14), then s of (13), then t of (12),
   each step appending the partner of the current start. */
inline Seq herrmann_sequence(int i, int r, int s, int t)
{
    Seq a{i};
    auto step = [&](int partner, int n) {
        EndoSpec e(1, partner);
        for (int k = 0; k < n; ++k)
            a.push_back(e.mate(a.back()));
    };
    step(4, r);
    step(3, s);
    step(2, t);
    return a;
}

// ---------------------------------------------------------------------------
// Herrmann's polynomials
// ---------------------------------------------------------------------------

inline Term t1_poly()
{
    Term e1 = gen(1), e2 = gen(2), e3 = gen(3), e4 = gen(4);
    return (e1 + e2 + e3) * (e1 + e2 + e4) * (e1 + e3 + e4) * (e2 + e3 + e4);
}

inline Term s_poly(int n)
{
    if (n < 0)
        throw std::invalid_argument("s_poly: negative n");
    if (n == 0)
        return top();
    Term s = gen(1) + gen(2) + gen(3) + gen(4);
    for (int k = 1; k < n; ++k)
        s = r_endo(s);
    return s;
}

inline Term t_poly(int n)
{
    if (n < 0)
        throw std::invalid_argument("t_poly: negative n");
    if (n == 0)
        return top();
    Term t = t1_poly();
    for (int k = 1; k < n; ++k)
        t = r_endo(t);
    return t;
}

inline Term p_poly(int i, int n)
{
    if (i < 1 || i > 4)
        throw std::invalid_argument("p_poly: index out of range");
    if (n < 0)
        throw std::invalid_argument("p_poly: negative n");
    if (n == 0)
        return top();
    std::array<Term, 5> cur;
    Term t1 = t1_poly();
    for (int j = 1; j <= 4; ++j)
        cur[j] = gen(j) + t1;
    for (int k = 1; k < n; ++k) {
        std::array<Term, 5> nxt;
        for (int a = 1; a <= 4; ++a) {
            std::vector<Term> parts;
            for (int b = 1; b <= 4; ++b)
                if (b != a)
                    parts.push_back(gamma(EndoSpec(a, b), cur[b]));
            nxt[a] = join(parts);
        }
        cur = nxt;
    }
    return cur[i];
}

namespace detail {
struct CumCache {
    std::mutex mu;
    std::map<std::pair<int, int>, Term> e;
    std::map<int, Term> f;
};
inline CumCache& cum_cache()
{
    static CumCache c;
    return c;
}
}

/* Memoized cumulative elements; the slice enumeration is the expensive part. */
inline Term cum_e(int t, int n)
{
    auto& c = detail::cum_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.e.find({t, n});
        if (it != c.e.end())
            return it->second;
    }
    Term v = cumulative_e(t, n);
    std::lock_guard<std::mutex> lock(c.mu);
    c.e.emplace(std::make_pair(t, n), v);
    return v;
}

inline Term cum_f0(int n)
{
    auto& c = detail::cum_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.f.find(n);
        if (it != c.f.end())
            return it->second;
    }
    Term v = cumulative_f0(n);
    std::lock_guard<std::mutex> lock(c.mu);
    c.f.emplace(n, v);
    return v;
}

/** @brief h_t(n) = sum of e_j(n) over j != t. */
inline Term h_poly(int t, int n)
{
    if (t < 1 || t > 4)
        throw std::invalid_argument("h_poly: index out of range");
    if (n < 1)
        throw std::invalid_argument("h_poly: n must be positive");
    std::vector<Term> parts;
    for (int j = 1; j <= 4; ++j)
        if (j != t)
            parts.push_back(cum_e(j, n));
    return join(parts);
}

/**
 * @brief f_0^v(n): gamma-iterates of the f_{i0} with r+s+t = n-2; f_0^v(1) = I.
 *
 * Built from gamma_12^t gamma_13^s gamma_14^r(f_{i0}) rather than the
 * printed sum, whose lower indices do not add up to the sequence length.
 */
inline Term inv_cumulative_f0(int n)
{
    if (n < 1)
        throw std::invalid_argument("inv_cumulative_f0: n must be positive");
    if (n == 1)
        return top();
    std::vector<Term> parts;
    for (int i = 1; i <= 4; ++i) {
        Term fi = f_alpha0(Seq{i});
        for (const auto& e : triples_with_sum(n - 2))
            parts.push_back(gamma_rst(e.r, e.s, e.t, fi));
    }
    return join(parts);
}

// ---------------------------------------------------------------------------
// The Boolean cube B+(n)
// ---------------------------------------------------------------------------

struct CubeRow {
    std::string label;
    Term gp;
    Term herrmann;
    Term cumulative;
};

/* Rows in the order of the table of perfect elements. */
inline std::vector<CubeRow> cube(int n)
{
    if (n < 1)
        throw std::invalid_argument("cube: n must be positive");
    std::array<Term, 5> h, e, p;
    for (int i = 1; i <= 4; ++i) {
        h[i] = h_poly(i, n);
        e[i] = cum_e(i, n);
        p[i] = p_poly(i, n);
    }
    Term f = cum_f0(n + 1);
    std::vector<CubeRow> rows;
    auto hname = [](std::initializer_list<int> ix) {
        std::string s;
        for (int i : ix)
            s += "h" + std::to_string(i);
        return s;
    };
    rows.push_back({"h1+h2+h3+h4", h[1] + h[2] + h[3] + h[4], s_poly(n), e[1] + e[2] + e[3] + e[4]});
    for (int i = 1; i <= 4; ++i) {
        std::vector<Term> ps, es;
        for (int j = 1; j <= 4; ++j)
            if (j != i) {
                ps.push_back(p[j]);
                es.push_back(e[j]);
            }
        rows.push_back({hname({i}), h[i], join(ps), join(es)});
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            int k = 0, l = 0;
            for (int x = 1; x <= 4; ++x)
                if (x != i && x != j)
                    (k == 0 ? k : l) = x;
            rows.push_back({hname({i, j}), h[i] * h[j], p[k] + p[l], e[k] + e[l] + f});
        }
    for (int l = 4; l >= 1; --l) {
        std::vector<int> ix;
        for (int x = 1; x <= 4; ++x)
            if (x != l)
                ix.push_back(x);
        rows.push_back({hname({ix[0], ix[1], ix[2]}), h[ix[0]] * h[ix[1]] * h[ix[2]], p[l], e[l] + f});
    }
    rows.push_back({"h1h2h3h4", h[1] * h[2] * h[3] * h[4], t_poly(n), f});
    return rows;
}

}
