#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace d4 {

using Elem = std::uint8_t;

// entries are bytes, so keep p below 2^8
inline bool is_supported_prime(int p)
{
    if (p < 2 || p > 251)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline int mod_inv(int a, int p)
{
    // p is tiny, brute force is fine
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1)
            return x;
    throw std::domain_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

/** @brief Dense matrix over GF(p), row-major. Maps act on column vectors. */
struct Mat {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0)
    {
        if (!is_supported_prime(p_))
            throw std::invalid_argument("unsupported prime " + std::to_string(p_));
    }

    Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    const Elem* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }
    Elem* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }

    static Mat identity(int p, int n)
    {
        Mat m(p, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(int p, int cols, const std::vector<std::vector<int>>& rs)
    {
        Mat m(p, static_cast<int>(rs.size()), cols);
        for (int r = 0; r < m.rows; ++r) {
            if (static_cast<int>(rs[r].size()) != cols)
                throw std::invalid_argument("row length mismatch");
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = static_cast<Elem>(((rs[r][c] % p) + p) % p);
        }
        return m;
    }

    bool is_zero() const
    {
        for (Elem x : a)
            if (x)
                return false;
        return true;
    }

    bool operator==(const Mat& o) const = default;
};

inline Mat transpose(const Mat& m)
{
    Mat t(m.p, m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            t.at(c, r) = m.at(r, c);
    return t;
}

inline Mat mul(const Mat& x, const Mat& y)
{
    if (x.cols != y.rows || x.p != y.p)
        throw std::invalid_argument("mul: shape mismatch");
    Mat z(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x.at(i, k);
            if (!v)
                continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = static_cast<Elem>((z.at(i, j) + v * y.at(k, j)) % x.p);
        }
    return z;
}

inline Mat add(const Mat& x, const Mat& y)
{
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
        throw std::invalid_argument("add: shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i)
        z.a[i] = static_cast<Elem>((x.a[i] + y.a[i]) % x.p);
    return z;
}

inline Mat vstack(const Mat& x, const Mat& y)
{
    if (x.cols != y.cols || x.p != y.p)
        throw std::invalid_argument("vstack: column mismatch");
    Mat z(x.p, x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), z.a.begin());
    std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
    return z;
}

/* In-place reduction; returns the pivot column of each nonzero row. */
inline std::vector<int> rref_inplace(Mat& m)
{
    const int p = m.p;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(r, j), m.at(piv, j));
        int inv = mod_inv(m.at(r, c), p);
        if (inv != 1)
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = static_cast<Elem>(m.at(r, j) * inv % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || !m.at(i, c))
                continue;
            int f = p - m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = static_cast<Elem>((m.at(i, j) + f * m.at(r, j)) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline Mat rref(Mat m)
{
    rref_inplace(m);
    return m;
}

inline int rank(Mat m) { return static_cast<int>(rref_inplace(m).size()); }

/** @brief Subspace of GF(p)^n held as an rref basis with zero rows dropped. */
class Subspace {
public:
    Subspace() = default;

    /* Row span of m. */
    explicit Subspace(Mat m) : p_(m.p), n_(m.cols)
    {
        auto piv = rref_inplace(m);
        m.rows = static_cast<int>(piv.size());
        m.a.resize(static_cast<size_t>(m.rows) * m.cols);
        basis_ = std::move(m);
    }

    static Subspace zero(int p, int n) { return Subspace(Mat(p, 0, n)); }
    static Subspace full(int p, int n) { return Subspace(Mat::identity(p, n)); }

    int p() const { return p_; }
    int ambient() const { return n_; }
    int dim() const { return basis_.rows; }
    const Mat& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == n_; }

    bool operator==(const Subspace& o) const = default;

    size_t hash() const
    {
        size_t h = std::hash<int>()(n_ * 31 + p_);
        for (Elem x : basis_.a)
            h = h * 131 + x;
        return h;
    }

private:
    int p_ = 2;
    int n_ = 0;
    Mat basis_{2, 0, 0};
};

namespace detail {
inline void check_same(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient() || a.p() != b.p())
        throw std::invalid_argument("subspace ambient mismatch");
}
}

inline Subspace sum(const Subspace& a, const Subspace& b)
{
    detail::check_same(a, b);
    if (a.is_zero() || b.is_full())
        return b;
    if (b.is_zero() || a.is_full())
        return a;
    return Subspace(vstack(a.basis(), b.basis()));
}

/** @brief Null space {v : m v = 0} inside GF(p)^cols. */
inline Subspace kernel(const Mat& m)
{
    Mat r = m;
    auto piv = rref_inplace(r);
    const int p = m.p;
    std::vector<int> is_piv(m.cols, -1);
    for (size_t i = 0; i < piv.size(); ++i)
        is_piv[piv[i]] = static_cast<int>(i);
    int nfree = m.cols - static_cast<int>(piv.size());
    Mat k(p, nfree, m.cols);
    int row = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f] >= 0)
            continue;
        k.at(row, f) = 1;
        for (size_t i = 0; i < piv.size(); ++i)
            k.at(row, piv[i]) = static_cast<Elem>((p - r.at(static_cast<int>(i), f)) % p);
        ++row;
    }
    return Subspace(k);
}

/* Kernel of stacked bases: x A = y B gives the common vectors x A. */
inline Subspace intersect(const Subspace& a, const Subspace& b)
{
    detail::check_same(a, b);
    if (a.is_zero() || b.is_full())
        return a;
    if (b.is_zero() || a.is_full())
        return b;
    const int p = a.p();
    Mat neg_b = b.basis();
    for (auto& x : neg_b.a)
        x = static_cast<Elem>((p - x) % p);
    Subspace rel = kernel(transpose(vstack(a.basis(), neg_b)));
    if (rel.is_zero())
        return Subspace::zero(p, a.ambient());
    Mat xs(p, rel.dim(), a.dim());
    for (int r = 0; r < rel.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            xs.at(r, c) = rel.basis().at(r, c);
    return Subspace(mul(xs, a.basis()));
}

inline bool leq(const Subspace& a, const Subspace& b)
{
    detail::check_same(a, b);
    return sum(a, b).dim() == b.dim();
}

/** @brief Image {m v : v in s}. */
inline Subspace apply_map(const Mat& m, const Subspace& s)
{
    if (m.cols != s.ambient() || m.p != s.p())
        throw std::invalid_argument("apply_map: shape mismatch");
    return Subspace(mul(s.basis(), transpose(m)));
}

}
