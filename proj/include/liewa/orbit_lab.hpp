#pragma once

// Finite checks on SL(2,Z) acting on Z^m and on Gamma_{2n+1}: word balls,
// orbit and stabilizer fragments, the orbit partition of a coordinate box,
// and witnesses for non-amenability (a free pair), nilpotency, and
// commutativity of stabilizers.

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "liewa/explicit_groups.hpp"

namespace liewa {

/// Generators S = [[0,-1],[1,0]], T = [[1,1],[0,1]]; inverses written s and t.
inline Sl2Element generator(char letter)
{
    switch (letter) {
    case 'S': return {0, -1, 1, 0};
    case 's': return {0, 1, -1, 0};
    case 'T': return {1, 1, 0, 1};
    case 't': return {1, -1, 0, 1};
    }
    throw Error(ErrorKind::InvalidArgument, std::string("unknown generator '") + letter + "'");
}

inline Sl2Element evaluate_word(const std::string& word)
{
    Sl2Element g = Sl2Element::identity();
    for (char ch : word) g = g * generator(ch);
    return g;
}

/// All elements of SL(2,Z) of word length <= radius in {S, S^-1, T, T^-1},
/// each with a shortest word. Built breadth-first, so elements are ordered by length.
class Ball {
public:
    struct Entry {
        Sl2Element g;
        std::string word;
    };

    static Ball build(std::size_t radius)
    {
        Ball b;
        b.radius_ = radius;
        b.add({Sl2Element::identity(), ""});
        std::size_t frontier = 0;
        for (std::size_t len = 1; len <= radius; ++len) {
            const std::size_t end = b.entries_.size();
            for (std::size_t i = frontier; i < end; ++i)
                for (char ch : {'S', 's', 'T', 't'}) {
                    Entry e{b.entries_[i].g * generator(ch), b.entries_[i].word + ch};
                    if (!b.index_.count(e.g)) b.add(std::move(e));
                }
            frontier = end;
        }
        return b;
    }

    std::size_t radius() const { return radius_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    bool contains(const Sl2Element& g) const { return index_.count(g) != 0; }
    std::optional<std::size_t> word_length(const Sl2Element& g) const
    {
        auto it = index_.find(g);
        if (it == index_.end()) return std::nullopt;
        return entries_[it->second].word.size();
    }

private:
    void add(Entry e)
    {
        index_.emplace(e.g, entries_.size());
        entries_.push_back(std::move(e));
    }
    std::size_t radius_ = 0;
    std::vector<Entry> entries_;
    std::map<Sl2Element, std::size_t> index_;
};

/// An SL(2,Z)-set: Z^m through Z'(A), or Gamma_{2n+1} through (w, m) -> (Z'(A) w, m).
/// Representation matrices of the ball elements are cached.
class LatticeAction {
public:
    using Point = std::variant<IntVector, HeisenbergPoint>;

    static LatticeAction on_zm(std::size_t m, const Ball& ball) { return LatticeAction(m, false, ball); }
    static LatticeAction on_gamma(std::size_t n, const Ball& ball) { return LatticeAction(2 * n, true, ball); }

    bool heisenberg() const { return heisenberg_; }
    std::size_t rep_dim() const { return rep_dim_; }
    const Ball& ball() const { return *ball_; }
    const IntMatrix& matrix(std::size_t ball_index) const { return mats_[ball_index]; }

    IntVector apply(std::size_t ball_index, const IntVector& x) const { return mats_[ball_index] * x; }
    HeisenbergPoint apply(std::size_t ball_index, const HeisenbergPoint& p) const { return {mats_[ball_index] * p.w, p.m}; }

private:
    LatticeAction(std::size_t rep_dim, bool heis, const Ball& ball) : rep_dim_(rep_dim), heisenberg_(heis), ball_(&ball)
    {
        for (const auto& e : ball.entries()) mats_.push_back(rep_matrix(rep_dim, e.g));
    }
    std::size_t rep_dim_;
    bool heisenberg_;
    const Ball* ball_;
    std::vector<IntMatrix> mats_;
};

template <class P>
std::set<P> orbit(const LatticeAction& act, const P& x)
{
    std::set<P> out;
    for (std::size_t i = 0; i < act.ball().size(); ++i) out.insert(act.apply(i, x));
    return out;
}

/// Ball elements fixing x, as indices into the ball.
template <class P>
std::vector<std::size_t> stabilizer_fragment(const LatticeAction& act, const P& x)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < act.ball().size(); ++i)
        if (act.apply(i, x) == x) out.push_back(i);
    return out;
}

struct CommutativityWitness {
    bool commutes = true;
    std::optional<std::pair<Sl2Element, Sl2Element>> failing_pair;
};

inline CommutativityWitness commutativity_witness(const std::vector<Sl2Element>& fragment)
{
    for (std::size_t i = 0; i < fragment.size(); ++i)
        for (std::size_t j = i + 1; j < fragment.size(); ++j)
            if (!(fragment[i] * fragment[j] == fragment[j] * fragment[i]))
                return {false, std::make_pair(fragment[i], fragment[j])};
    return {};
}

inline std::vector<Sl2Element> elements(const Ball& ball, const std::vector<std::size_t>& indices)
{
    std::vector<Sl2Element> out;
    for (auto i : indices) out.push_back(ball.entries()[i].g);
    return out;
}

struct FreePairWitness {
    bool free = true;
    std::size_t words_checked = 0;
    std::optional<std::string> relation; // over letters a, A = a^-1, b, B = b^-1
};

/// Evaluates every nonempty reduced word of length <= max_len in a, b and their
/// inverses; free iff none equals the identity.
inline FreePairWitness free_pair_witness(std::size_t max_len, const Sl2Element& a = {1, 2, 0, 1},
                                         const Sl2Element& b = {1, 0, 2, 1})
{
    const std::array<Sl2Element, 4> gens{a, a.inverse(), b, b.inverse()};
    const std::array<char, 4> letters{'a', 'A', 'b', 'B'};
    FreePairWitness w;
    struct Frame {
        Sl2Element g;
        std::string word;
        int last;
    };
    std::vector<Frame> stack{{Sl2Element::identity(), "", -1}};
    while (!stack.empty()) {
        auto f = std::move(stack.back());
        stack.pop_back();
        if (f.word.size() == max_len) continue;
        for (int k = 0; k < 4; ++k) {
            if (f.last >= 0 && (k ^ 1) == f.last) continue; // x x^-1
            Frame nf{f.g * gens[k], f.word + letters[k], k};
            ++w.words_checked;
            if (nf.g == Sl2Element::identity()) {
                w.free = false;
                if (!w.relation) w.relation = nf.word;
            }
            stack.push_back(std::move(nf));
        }
    }
    return w;
}

struct NilpotencyWitness {
    bool two_step = true;
    std::size_t commutators_checked = 0;
};

/// Pairwise commutators of the standard generators of Gamma_{2n+1} (unit w
/// vectors and the central generator) have zero w-part and commute with every generator.
inline NilpotencyWitness nilpotency_witness(std::size_t n)
{
    HeisenbergLattice h(n);
    std::vector<HeisenbergPoint> gens;
    for (std::size_t j = 0; j < 2 * n; ++j) {
        auto p = HeisenbergPoint::identity(n);
        p.w[j] = 1;
        gens.push_back(p);
    }
    gens.push_back({IntVector(2 * n), 1});
    NilpotencyWitness out;
    for (const auto& p : gens)
        for (const auto& q : gens) {
            auto c = h.commutator(p, q);
            ++out.commutators_checked;
            if (!c.is_central()) out.two_step = false;
            for (const auto& r : gens)
                if (!(h.mul(c, r) == h.mul(r, c))) out.two_step = false;
        }
    return out;
}

/// The box [-r, r]^dim, in lexicographic order.
inline std::vector<IntVector> box_points(std::size_t dim, long r)
{
    std::vector<IntVector> out;
    IntVector cur(dim, Integer(-r));
    if (dim == 0) return {IntVector{}};
    while (true) {
        out.push_back(cur);
        std::size_t k = dim;
        while (k > 0) {
            --k;
            if (cur[k] < r) {
                cur[k] += 1;
                break;
            }
            cur[k] = -r;
            if (k == 0) return out;
        }
    }
}

template <class P>
struct OrbitPartition {
    std::vector<P> base_set;
    /// Classes of box points related by ball elements; each a subset of one true orbit.
    std::vector<std::vector<P>> classes;
    std::vector<P> n0_class;
    bool n0_invariant = true;     // every ball element maps N0 into N0
    bool classes_separated = true; // no class mixes N0 and non-N0 points
    bool disjoint_cover = true;    // classes pairwise disjoint with union = base set
    std::size_t merged_fragments = 0; // fragments of distinct representatives that overlapped
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

template <class P>
OrbitPartition<P> partition(const LatticeAction& act, std::vector<P> base, auto in_n0)
{
    OrbitPartition<P> out;
    std::map<P, std::size_t> where;
    for (std::size_t i = 0; i < base.size(); ++i) where.emplace(base[i], i);
    UnionFind uf(base.size());
    std::vector<bool> is_rep(base.size(), false);
    std::vector<bool> covered(base.size(), false);
    for (std::size_t i = 0; i < base.size(); ++i) {
        const bool n0 = in_n0(base[i]);
        if (n0) out.n0_class.push_back(base[i]);
        const bool fresh = !covered[i];
        if (fresh && !n0) is_rep[i] = true;
        for (std::size_t k = 0; k < act.ball().size(); ++k) {
            auto y = act.apply(k, base[i]);
            if (n0 && !in_n0(y)) out.n0_invariant = false;
            auto it = where.find(y);
            if (it == where.end()) continue;
            if (fresh && !n0 && covered[it->second] && uf.find(it->second) != uf.find(i)) ++out.merged_fragments;
            uf.unite(i, it->second);
            covered[it->second] = true;
        }
        covered[i] = true;
    }
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto root = uf.find(i);
        auto [it, inserted] = class_of_root.emplace(root, out.classes.size());
        if (inserted) out.classes.emplace_back();
        out.classes[it->second].push_back(base[i]);
    }
    std::size_t total = 0;
    for (const auto& c : out.classes) {
        total += c.size();
        const bool first = in_n0(c.front());
        for (const auto& p : c)
            if (in_n0(p) != first) out.classes_separated = false;
    }
    out.disjoint_cover = total == base.size();
    out.base_set = std::move(base);
    return out;
}

} // namespace detail

/// Z^m case, N0 = {0}.
inline OrbitPartition<IntVector> partition_check_zm(const LatticeAction& act, long box)
{
    auto zero = [](const IntVector& v) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    };
    return detail::partition(act, box_points(act.rep_dim(), box), zero);
}

/// Gamma_{2n+1} case, N0 = center: w in [-r, r]^{2n}, m in [-r, r].
inline OrbitPartition<HeisenbergPoint> partition_check_gamma(const LatticeAction& act, long box)
{
    std::vector<HeisenbergPoint> base;
    for (auto& v : box_points(act.rep_dim() + 1, box)) {
        HeisenbergPoint p;
        p.m = v.back();
        v.pop_back();
        p.w = std::move(v);
        base.push_back(std::move(p));
    }
    return detail::partition(act, std::move(base), [](const HeisenbergPoint& p) { return p.is_central(); });
}

} // namespace liewa
