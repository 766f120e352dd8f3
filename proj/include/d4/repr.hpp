#pragma once

#include "d4/gf.hpp"
#include "d4/term.hpp"

#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace d4 {

/** @brief Four subspaces Y_1..Y_4 of X_0 = GF(p)^dim0. */
struct QuadRep {
    int p = 2;
    int dim0 = 0;
    std::array<Subspace, 4> Y;
    std::string label;

    void check() const
    {
        for (const auto& y : Y)
            if (y.p() != p || y.ambient() != dim0)
                throw std::invalid_argument("QuadRep: subspace does not live in X_0");
    }

    bool same_data(const QuadRep& o) const { return p == o.p && dim0 == o.dim0 && Y == o.Y; }
};

/* Images of generators plus the images of I and 0; a lattice valuation. */
struct Valuation {
    std::array<Subspace, 4> gens;
    Subspace top;
    Subspace bottom;

    Subspace operator()(const Term& t) const
    {
        struct L {
            const Valuation& v;
            Subspace top() const { return v.top; }
            Subspace bottom() const { return v.bottom; }
            Subspace gen(int i) const { return v.gens[i - 1]; }
            Subspace meet(const Subspace& a, const Subspace& b) const { return intersect(a, b); }
            Subspace join(const Subspace& a, const Subspace& b) const { return sum(a, b); }
        } lat{*this};
        return fold(t, lat);
    }
};

inline Valuation valuation(const QuadRep& r)
{
    return {r.Y, Subspace::full(r.p, r.dim0), Subspace::zero(r.p, r.dim0)};
}

/** @brief rho_X(t): the subspace a term cuts out in X_0. */
inline Subspace eval(const Term& t, const QuadRep& r) { return valuation(r)(t); }

inline QuadRep make_rep(int p, int dim0, const std::array<std::vector<std::vector<int>>, 4>& rows,
                        std::string label = {})
{
    QuadRep r;
    r.p = p;
    r.dim0 = dim0;
    r.label = std::move(label);
    for (int i = 0; i < 4; ++i)
        r.Y[i] = rows[i].empty() ? Subspace::zero(p, dim0) : Subspace(Mat::from_rows(p, dim0, rows[i]));
    return r;
}

/* Block-diagonal sum of two subspaces in GF(p)^(n1+n2). */
inline Subspace direct_sum(const Subspace& a, const Subspace& b)
{
    if (a.p() != b.p())
        throw std::invalid_argument("direct_sum: prime mismatch");
    int n = a.ambient() + b.ambient();
    Mat m(a.p(), a.dim() + b.dim(), n);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.ambient(); ++c)
            m.at(r, c) = a.basis().at(r, c);
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < b.ambient(); ++c)
            m.at(a.dim() + r, a.ambient() + c) = b.basis().at(r, c);
    return Subspace(m);
}

inline QuadRep direct_sum(const QuadRep& x, const QuadRep& y)
{
    QuadRep r;
    r.p = x.p;
    r.dim0 = x.dim0 + y.dim0;
    for (int i = 0; i < 4; ++i)
        r.Y[i] = direct_sum(x.Y[i], y.Y[i]);
    r.label = x.label + "+" + y.label;
    return r;
}

// ---------------------------------------------------------------------------
// Coxeter functor
// ---------------------------------------------------------------------------

/**
 * @brief One application of Phi+.
 *
 * R = Y_1 + ... + Y_4 (external), coordinates are the concatenated
 * rref bases of the Y_i.  X_0^1 is the kernel of the summation map,
 * with its rref basis as coordinates for the new representation.
 */
struct CoxeterStep {
    QuadRep base;
    QuadRep plus;
    std::array<Mat, 4> phi;      // X_0^1 -> X_0, acting on columns
    Mat kbasis;                  // rows: basis of X_0^1 inside R
    std::array<int, 5> offset{}; // block i occupies [offset[i-1], offset[i])
    int dimR = 0;

    Subspace X01() const { return Subspace(kbasis); }

    Subspace G(int i) const
    {
        Mat m(base.p, offset[i] - offset[i - 1], dimR);
        for (int r = 0; r < m.rows; ++r)
            m.at(r, offset[i - 1] + r) = 1;
        return Subspace(m);
    }

    Subspace Gc(int i) const
    {
        Mat m(base.p, dimR - (offset[i] - offset[i - 1]), dimR);
        int r = 0;
        for (int c = 0; c < dimR; ++c)
            if (c < offset[i - 1] || c >= offset[i])
                m.at(r++, c) = 1;
        return Subspace(m);
    }

    /* phi_i applied to a subspace of X_0^1 */
    Subspace phi_image(int i, const Subspace& s) const { return apply_map(phi[i - 1], s); }
};

inline CoxeterStep coxeter_plus(const QuadRep& r)
{
    r.check();
    const int p = r.p;
    CoxeterStep st;
    st.base = r;
    st.offset[0] = 0;
    for (int i = 0; i < 4; ++i)
        st.offset[i + 1] = st.offset[i] + r.Y[i].dim();
    st.dimR = st.offset[4];

    // summation map R -> X_0: column c is the basis vector behind coordinate c
    Mat S(p, r.dim0, st.dimR);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < r.Y[i].dim(); ++k)
            for (int x = 0; x < r.dim0; ++x)
                S.at(x, st.offset[i] + k) = r.Y[i].basis().at(k, x);
    Subspace K = kernel(S);
    st.kbasis = K.basis();
    const int m = K.dim();

    st.plus.p = p;
    st.plus.dim0 = m;
    for (int i = 0; i < 4; ++i) {
        const int w = r.Y[i].dim();
        // K_i: coordinates of block i, m x w
        Mat Ki(p, m, w);
        for (int a = 0; a < m; ++a)
            for (int k = 0; k < w; ++k)
                Ki.at(a, k) = st.kbasis.at(a, st.offset[i] + k);
        // Y_i^1 = {x : x K_i = 0}
        st.plus.Y[i] = m == 0 ? Subspace::zero(p, 0) : kernel(transpose(Ki));
        // phi_i = B_i^T K_i^T
        st.phi[i] = m == 0 || w == 0 ? Mat(p, r.dim0, m) : mul(transpose(r.Y[i].basis()), transpose(Ki));
    }
    return st;
}

/** @brief Iterated Phi+; step k+1 starts from step k's plus. */
struct ReprTower {
    std::vector<CoxeterStep> steps;
};

inline ReprTower tower(const QuadRep& r, int depth)
{
    ReprTower t;
    QuadRep cur = r;
    for (int d = 0; d < depth; ++d) {
        t.steps.push_back(coxeter_plus(cur));
        cur = t.steps.back().plus;
    }
    return t;
}

/* phi_{i1} phi_{i2} ... : the first index acts at level 0 (into the original X_0). */
inline Mat phi_compose(const ReprTower& tw, const std::vector<int>& idx)
{
    if (idx.empty())
        throw std::invalid_argument("phi_compose: empty index list");
    if (idx.size() > tw.steps.size())
        throw std::invalid_argument("phi_compose: tower depth " + std::to_string(tw.steps.size()) + " < " +
                                    std::to_string(idx.size()));
    Mat m = tw.steps[0].phi[idx[0] - 1];
    for (size_t k = 1; k < idx.size(); ++k)
        m = mul(m, tw.steps[k].phi[idx[k] - 1]);
    return m;
}

// ---------------------------------------------------------------------------
// Associated representations nu^0, nu^1 in L(R) and joint maps psi_i
// ---------------------------------------------------------------------------

inline Valuation nu0(const CoxeterStep& st)
{
    Subspace x = st.X01();
    Valuation v{{}, Subspace::full(st.base.p, st.dimR), x};
    for (int i = 1; i <= 4; ++i)
        v.gens[i - 1] = sum(x, st.G(i));
    return v;
}

inline Valuation nu1(const CoxeterStep& st)
{
    Subspace x = st.X01();
    Valuation v{{}, x, Subspace::zero(st.base.p, st.dimR)};
    for (int i = 1; i <= 4; ++i)
        v.gens[i - 1] = intersect(x, st.Gc(i));
    return v;
}

/* X_0^1 + G_i (G'_i + nu^1(a)) */
inline Subspace psi(int i, const Term& a, const CoxeterStep& st)
{
    Subspace n1 = nu1(st)(a);
    return sum(st.X01(), intersect(st.G(i), sum(st.Gc(i), n1)));
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

inline std::vector<QuadRep> one_dim_reps(int p)
{
    std::vector<QuadRep> out;
    for (int mask = 0; mask < 16; ++mask) {
        std::array<std::vector<std::vector<int>>, 4> rows;
        std::string label = "k;";
        for (int i = 0; i < 4; ++i) {
            if (mask >> i & 1)
                rows[i] = {{1}};
            label += mask >> i & 1 ? '1' : '0';
        }
        out.push_back(make_rep(p, 1, rows, label));
    }
    return out;
}

inline std::vector<QuadRep> four_lines_reps(int p)
{
    std::vector<QuadRep> out;
    for (int lam = 2; lam < p; ++lam)
        out.push_back(make_rep(p, 2, {{{{1, 0}}, {{0, 1}}, {{1, 1}}, {{1, lam}}}}, "lines;" + std::to_string(lam)));
    return out;
}

struct CatalogConfig {
    int max_dim = 12;
    int max_depth = 8;
};

/**
 * @brief Indecomposables by construction: one-dimensionals, four-lines,
 * and their Phi+ iterates with dim X_0 <= max_dim.  Exact duplicates dropped.
 */
inline std::vector<QuadRep> catalog(int p, const CatalogConfig& cfg = {})
{
    std::vector<QuadRep> seeds = one_dim_reps(p);
    for (auto& r : four_lines_reps(p))
        seeds.push_back(r);
    std::vector<QuadRep> out;
    auto known = [&](const QuadRep& r) {
        for (const auto& q : out)
            if (q.same_data(r))
                return true;
        return false;
    };
    for (const auto& s : seeds) {
        QuadRep cur = s;
        for (int d = 0; d <= cfg.max_depth; ++d) {
            if (cur.dim0 == 0 || cur.dim0 > cfg.max_dim)
                break;
            if (!known(cur))
                out.push_back(cur);
            cur = coxeter_plus(cur).plus;
            cur.label = s.label + "/+" + std::to_string(d + 1);
        }
    }
    return out;
}

/* Random reps, not necessarily indecomposable. */
template <class Rng>
QuadRep random_rep(int p, int max_dim, Rng& rng)
{
    std::uniform_int_distribution<int> dd(1, max_dim);
    std::uniform_int_distribution<int> val(0, p - 1);
    QuadRep r;
    r.p = p;
    r.dim0 = dd(rng);
    for (int i = 0; i < 4; ++i) {
        std::uniform_int_distribution<int> nr(0, r.dim0);
        Mat m(p, nr(rng), r.dim0);
        for (auto& x : m.a)
            x = static_cast<Elem>(val(rng));
        r.Y[i] = Subspace(m);
    }
    r.label = "random";
    return r;
}

/** @brief Evaluation corpus: the catalog over each prime plus seeded random reps. */
struct Corpus {
    std::vector<QuadRep> indecomposable;
    std::vector<QuadRep> random;

    template <class F>
    void for_each(F&& f) const
    {
        for (const auto& r : indecomposable)
            f(r);
        for (const auto& r : random)
            f(r);
    }
    size_t size() const { return indecomposable.size() + random.size(); }
};

inline Corpus make_corpus(const std::vector<int>& primes, unsigned seed, int random_per_prime = 50,
                          int random_max_dim = 6, const CatalogConfig& cfg = {})
{
    Corpus c;
    for (int p : primes) {
        if (!is_supported_prime(p))
            throw std::invalid_argument("unsupported prime " + std::to_string(p));
        for (auto& r : catalog(p, cfg))
            c.indecomposable.push_back(std::move(r));
        std::mt19937 rng(seed * 1000003u + static_cast<unsigned>(p));
        for (int k = 0; k < random_per_prime; ++k)
            c.random.push_back(random_rep(p, random_max_dim, rng));
    }
    return c;
}

/* First rep where the two terms differ, or nullptr. */
inline const QuadRep* semantic_witness(const Term& a, const Term& b, const std::vector<QuadRep>& reps)
{
    if (a == b)
        return nullptr;
    for (const auto& r : reps)
        if (!(eval(a, r) == eval(b, r)))
            return &r;
    return nullptr;
}

inline bool semantically_equal(const Term& a, const Term& b, const std::vector<QuadRep>& reps)
{
    return semantic_witness(a, b, reps) == nullptr;
}

inline bool semantically_leq(const Term& a, const Term& b, const std::vector<QuadRep>& reps)
{
    for (const auto& r : reps)
        if (!leq(eval(a, r), eval(b, r)))
            return false;
    return true;
}

struct PerfectReport {
    int checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/** @brief Every rep must send t to 0 or to the whole X_0. */
inline PerfectReport perfect_check(const Term& t, const std::vector<QuadRep>& reps)
{
    PerfectReport rep;
    for (const auto& r : reps) {
        Subspace s = eval(t, r);
        ++rep.checked;
        if (!s.is_zero() && !s.is_full())
            rep.violations.push_back(r.label + " p=" + std::to_string(r.p) + " dim " + std::to_string(s.dim()) +
                                     "/" + std::to_string(r.dim0));
    }
    return rep;
}

}
