#pragma once

#include <algorithm>
#include <cctype>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace d4 {

enum class Kind : std::uint8_t { Bottom = 0, Top = 1, Gen = 2, Meet = 3, Join = 4 };

class Term;

struct Node {
    Kind kind;
    int gen;  // 1..4 for Gen, 0 otherwise
    std::vector<Term> kids;
    size_t hash;
    std::uint64_t id;
};

/**
 * @brief Hash-consed lattice polynomial in e1..e4.
 *
 * Equal normal forms share one node, so == is pointer equality.
 */
class Term {
public:
    Term();

    Kind kind() const { return n_->kind; }
    int gen() const { return n_->gen; }
    const std::vector<Term>& kids() const { return n_->kids; }
    size_t hash() const { return n_->hash; }
    std::uint64_t id() const { return n_->id; }
    const Node* node() const { return n_.get(); }

    bool operator==(const Term& o) const { return n_ == o.n_; }

private:
    friend Term make_node(Kind, int, std::vector<Term>);
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

struct TermHash {
    size_t operator()(const Term& t) const { return t.hash(); }
};

namespace detail {

// Nodes live for the whole process; the table only grows.
struct Interner {
    std::mutex mu;
    std::unordered_multimap<size_t, Term> table;
    std::uint64_t next_id = 0;
};

inline Interner& interner()
{
    static Interner in;
    return in;
}

inline size_t node_hash(Kind k, int g, const std::vector<Term>& kids)
{
    size_t h = static_cast<size_t>(k) * 0x9e3779b97f4a7c15ULL + static_cast<size_t>(g);
    for (const auto& c : kids)
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}

inline Term make_node(Kind k, int g, std::vector<Term> kids)
{
    size_t h = detail::node_hash(k, g, kids);
    auto& in = detail::interner();
    std::lock_guard<std::mutex> lock(in.mu);
    auto [lo, hi] = in.table.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
        const Term& t = it->second;
        if (t.kind() == k && t.gen() == g && t.kids() == kids)
            return t;
    }
    auto n = std::make_shared<const Node>(Node{k, g, std::move(kids), h, in.next_id++});
    Term t{n};
    in.table.emplace(h, t);
    return t;
}

inline Term bottom() { return make_node(Kind::Bottom, 0, {}); }
inline Term top() { return make_node(Kind::Top, 0, {}); }

inline Term::Term() : Term(bottom()) {}

inline Term gen(int i)
{
    if (i < 1 || i > 4)
        throw std::invalid_argument("generator index out of range: " + std::to_string(i));
    return make_node(Kind::Gen, i, {});
}

/* Bottom < Top < Gen(i) < Meet < Join, children compared lexicographically. */
inline int compare(const Term& a, const Term& b)
{
    if (a == b)
        return 0;
    if (a.kind() != b.kind())
        return a.kind() < b.kind() ? -1 : 1;
    if (a.kind() == Kind::Gen)
        return a.gen() < b.gen() ? -1 : (a.gen() > b.gen() ? 1 : 0);
    const auto& x = a.kids();
    const auto& y = b.kids();
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(x[i], y[i]);
        if (c)
            return c;
    }
    return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
}

namespace detail {

inline Term combine(Kind op, const std::vector<Term>& ts)
{
    if (ts.empty())
        throw std::invalid_argument(op == Kind::Meet ? "meet of empty list" : "join of empty list");
    const Kind neutral = op == Kind::Meet ? Kind::Top : Kind::Bottom;
    const Kind absorbing = op == Kind::Meet ? Kind::Bottom : Kind::Top;
    std::vector<Term> flat;
    flat.reserve(ts.size());
    for (const auto& t : ts) {
        if (t.kind() == absorbing)
            return t;
        if (t.kind() == neutral)
            continue;
        if (t.kind() == op)
            flat.insert(flat.end(), t.kids().begin(), t.kids().end());
        else
            flat.push_back(t);
    }
    if (flat.empty())
        return op == Kind::Meet ? top() : bottom();
    std::sort(flat.begin(), flat.end(), [](const Term& a, const Term& b) { return compare(a, b) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1)
        return flat.front();
    return make_node(op, 0, std::move(flat));
}

}

inline Term meet(const std::vector<Term>& ts) { return detail::combine(Kind::Meet, ts); }
inline Term join(const std::vector<Term>& ts) { return detail::combine(Kind::Join, ts); }

inline Term operator*(const Term& a, const Term& b) { return meet({a, b}); }
inline Term operator+(const Term& a, const Term& b) { return join({a, b}); }

/**
 * @brief Bottom-up fold over the DAG, one visit per distinct node.
 *
 * L must provide top(), bottom(), gen(int), meet(V,V), join(V,V).
 */
template <class L>
auto fold(const Term& t, L& lat)
{
    using V = decltype(lat.top());
    std::unordered_map<const Node*, V> memo;
    auto go = [&](auto&& self, const Term& u) -> V {
        auto it = memo.find(u.node());
        if (it != memo.end())
            return it->second;
        V v;
        switch (u.kind()) {
        case Kind::Bottom: v = lat.bottom(); break;
        case Kind::Top: v = lat.top(); break;
        case Kind::Gen: v = lat.gen(u.gen()); break;
        case Kind::Meet:
        case Kind::Join: {
            v = self(self, u.kids()[0]);
            for (size_t i = 1; i < u.kids().size(); ++i) {
                V w = self(self, u.kids()[i]);
                v = u.kind() == Kind::Meet ? lat.meet(v, w) : lat.join(v, w);
            }
            break;
        }
        }
        memo.emplace(u.node(), v);
        return v;
    };
    return go(go, t);
}

/* Simultaneous substitution of generators; Top goes to top_image. */
inline Term substitute(const Term& t, const std::array<Term, 4>& images, const Term& top_image)
{
    struct Sub {
        const std::array<Term, 4>& img;
        const Term& topimg;
        Term top() const { return topimg; }
        Term bottom() const { return d4::bottom(); }
        Term gen(int i) const { return img[i - 1]; }
        Term meet(const Term& a, const Term& b) const { return a * b; }
        Term join(const Term& a, const Term& b) const { return a + b; }
    } sub{images, top_image};
    return fold(t, sub);
}

inline Term substitute(const Term& t, const std::array<Term, 4>& images)
{
    return substitute(t, images, top());
}

inline size_t dag_size(const Term& t)
{
    std::unordered_set<const Node*> seen;
    std::vector<Term> stack{t};
    while (!stack.empty()) {
        Term u = stack.back();
        stack.pop_back();
        if (!seen.insert(u.node()).second)
            continue;
        for (const auto& c : u.kids())
            stack.push_back(c);
    }
    return seen.size();
}

// ---------------------------------------------------------------------------
// S-expressions
// ---------------------------------------------------------------------------

inline void print_to(const Term& t, std::string& out)
{
    switch (t.kind()) {
    case Kind::Bottom: out += '0'; return;
    case Kind::Top: out += 'I'; return;
    case Kind::Gen:
        out += 'e';
        out += static_cast<char>('0' + t.gen());
        return;
    default:
        out += t.kind() == Kind::Meet ? "(*" : "(+";
        for (const auto& c : t.kids()) {
            out += ' ';
            print_to(c, out);
        }
        out += ')';
    }
}

inline std::string print(const Term& t)
{
    std::string s;
    print_to(t, s);
    return s;
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos)
    {
    }
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Term parse_all()
    {
        Term t = term();
        skip();
        if (i_ != s_.size())
            throw ParseError("trailing input", i_);
        return t;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    Term term()
    {
        skip();
        if (i_ >= s_.size())
            throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '0') {
            ++i_;
            return bottom();
        }
        if (c == 'I') {
            ++i_;
            return top();
        }
        if (c == 'e') {
            if (i_ + 1 >= s_.size() || s_[i_ + 1] < '1' || s_[i_ + 1] > '4')
                throw ParseError("expected generator e1..e4", i_);
            int g = s_[i_ + 1] - '0';
            i_ += 2;
            return gen(g);
        }
        if (c == '(') {
            size_t open = i_;
            ++i_;
            skip();
            if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '*'))
                throw ParseError("expected '+' or '*'", i_);
            bool is_meet = s_[i_] == '*';
            ++i_;
            std::vector<Term> kids;
            for (;;) {
                skip();
                if (i_ >= s_.size())
                    throw ParseError("unbalanced '('", open);
                if (s_[i_] == ')')
                    break;
                kids.push_back(term());
            }
            if (kids.size() < 2)
                throw ParseError("operator needs at least two operands", i_);
            ++i_;
            return is_meet ? meet(kids) : join(kids);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    std::string_view s_;
    size_t i_ = 0;
};

}

inline Term parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/* Random term of bounded depth, used by fuzz checks. */
template <class Rng>
Term random_term(Rng& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, 9);
    int k = pick(rng);
    if (depth <= 0 || k < 4) {
        if (k == 0 && depth > 0) {
            std::uniform_int_distribution<int> c(0, 1);
            return c(rng) ? top() : bottom();
        }
        std::uniform_int_distribution<int> g(1, 4);
        return gen(g(rng));
    }
    std::uniform_int_distribution<int> arity(2, 3);
    int n = arity(rng);
    std::vector<Term> kids;
    for (int i = 0; i < n; ++i)
        kids.push_back(random_term(rng, depth - 1));
    return k < 7 ? meet(kids) : join(kids);
}

}
