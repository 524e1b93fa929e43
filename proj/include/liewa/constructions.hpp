#pragma once

// Builders for the algebras used throughout: abelian and Heisenberg algebras,
// the small simple algebras, sums, semidirect products with irreducible sl2
// modules, and seeded random semidirect products.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liewa/lie_algebra.hpp"

namespace liewa {

/// Action matrices of e, f, h on an sl2-module.
struct Sl2ModuleAction {
    std::size_t m = 0;
    RatMatrix e, f, h;

    /// [h,e] = 2e, [h,f] = -2f, [e,f] = h as matrix commutators.
    bool satisfies_relations() const
    {
        auto comm = [](const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; };
        return comm(h, e) == e * Rational(2) && comm(h, f) == f * Rational(-2) && comm(e, f) == h;
    }
};

/// Weight basis v_0..v_{m-1}: h v_k = (m-1-2k) v_k, f v_k = v_{k+1}, e v_k = k(m-k) v_{k-1}.
inline Sl2ModuleAction irreducible_sl2_module(std::size_t m)
{
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "module dimension must be >= 1");
    Sl2ModuleAction a{m, RatMatrix(m, m), RatMatrix(m, m), RatMatrix(m, m)};
    const long mm = static_cast<long>(m);
    for (long k = 0; k < mm; ++k) {
        a.h(k, k) = mm - 1 - 2 * k;
        if (k + 1 < mm) a.f(k + 1, k) = 1;
        if (k > 0) a.e(k - 1, k) = k * (mm - k);
    }
    return a;
}

/// The sl2-invariant skew form on an even-dimensional irreducible module, obtained
/// by solving the invariance equations and normalized so that the first nonzero
/// entry of the first row is 1.
inline RatMatrix invariant_symplectic(const Sl2ModuleAction& act)
{
    const std::size_t m = act.m;
    if (m % 2 != 0) throw Error(ErrorKind::NoInvariantForm, "odd-dimensional module carries no invariant skew form");
    auto var = [m](std::size_t i, std::size_t j) { return i * m + j; };
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            RatVector r(m * m);
            r[var(i, j)] += 1;
            r[var(j, i)] += 1;
            rows.push_back(std::move(r));
        }
    // (X^T W + W X)_{ij} = sum_k X_{ki} W_{kj} + W_{ik} X_{kj}
    for (const RatMatrix* x : {&act.e, &act.f, &act.h})
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                RatVector r(m * m);
                for (std::size_t k = 0; k < m; ++k) {
                    r[var(k, j)] += (*x)(k, i);
                    r[var(i, k)] += (*x)(k, j);
                }
                rows.push_back(std::move(r));
            }
    auto ker = kernel(RatMatrix::from_rows(m * m, rows));
    if (ker.cols() == 0) throw Error(ErrorKind::NoInvariantForm, "invariance system has only the zero solution");
    if (ker.cols() != 1) throw Error(ErrorKind::NotUnique, "invariant forms span dimension " + std::to_string(ker.cols()));
    RatMatrix w(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w(i, j) = ker(var(i, j), 0);
    std::size_t first = 0;
    while (first < m && w(0, first) == 0) ++first;
    if (first == m) throw Error(ErrorKind::Internal, "invariant form has a zero first row");
    w *= Rational(1 / w(0, first));
    return w;
}

inline LieAlgebra abelian(std::size_t m)
{
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "abelian(m) needs m >= 1");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("a" + std::to_string(i + 1));
    return LieAlgebra::validate(StructureConstants(m, names));
}

inline LieAlgebra sl2()
{
    StructureConstants c(3, {"h", "e", "f"});
    c.add_term(0, 1, 1, 2);  // [h,e] = 2e
    c.add_term(0, 2, 2, -2); // [h,f] = -2f
    c.add_term(1, 2, 0, 1);  // [e,f] = h
    return LieAlgebra::validate(std::move(c));
}

inline LieAlgebra so3()
{
    StructureConstants c(3, {"x", "y", "z"});
    c.add_term(0, 1, 2, 1);
    c.add_term(1, 2, 0, 1);
    c.add_term(2, 0, 1, 1);
    return LieAlgebra::validate(std::move(c));
}

/// Structure constants of a matrix Lie algebra spanned by the given matrices.
inline LieAlgebra from_matrices(const std::vector<RatMatrix>& mats, std::vector<std::string> names)
{
    const std::size_t k = mats.size();
    const std::size_t n = mats.at(0).rows();
    RatMatrix flat(n * n, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat(i * n + j, c) = mats[c](i, j);
    StructureConstants sc(k, std::move(names));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            RatMatrix comm = mats[a] * mats[b] - mats[b] * mats[a];
            RatVector rhs(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = comm(i, j);
            auto x = solve(flat, rhs);
            if (!x) throw Error(ErrorKind::NotSubalgebra, "matrices do not span a Lie algebra");
            sc.set_bracket(a, b, *x);
        }
    return LieAlgebra::validate(std::move(sc));
}

/// Compact so(n): basis L_ij = E_ij - E_ji for i < j.
inline LieAlgebra so(std::size_t n)
{
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "so(n) needs n >= 2");
    std::vector<RatMatrix> mats;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RatMatrix l(n, n);
            l(i, j) = 1;
            l(j, i) = -1;
            mats.push_back(std::move(l));
            names.push_back("L" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return from_matrices(mats, std::move(names));
}

inline LieAlgebra sl3R()
{
    std::vector<RatMatrix> mats;
    std::vector<std::string> names;
    auto unit = [](std::size_t i, std::size_t j) {
        RatMatrix m(3, 3);
        m(i, j) = 1;
        return m;
    };
    mats.push_back(unit(0, 0) - unit(1, 1));
    mats.push_back(unit(1, 1) - unit(2, 2));
    names = {"h1", "h2"};
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}}) {
        mats.push_back(unit(i, j));
        names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
    return from_matrices(mats, std::move(names));
}

/// g + i g as a real algebra of twice the dimension.
inline LieAlgebra complexify(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<std::string> names = g.basis_names();
    for (const auto& s : g.basis_names()) names.push_back("i" + s);
    StructureConstants c(2 * n, names);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& v = g.constant(a, b, k);
                if (v == 0) continue;
                c.at(a, b, k) = v;
                c.at(a, n + b, n + k) = v;
                c.at(n + a, b, n + k) = v;
                c.at(n + a, n + b, k) = -v;
            }
    return LieAlgebra::validate(std::move(c));
}

inline LieAlgebra sl2C_real() { return complexify(sl2()); }

inline std::vector<std::string> disjoint_names(const std::vector<std::string>& first, std::vector<std::string> second)
{
    for (auto& s : second)
        while (std::find(first.begin(), first.end(), s) != first.end()) s += "'";
    return second;
}

/// g1 + g2 with [g1, g2] = 0; basis of g1 first.
inline LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2)
{
    const std::size_t n1 = g1.dim(), n2 = g2.dim();
    auto names = g1.basis_names();
    auto n2names = disjoint_names(names, g2.basis_names());
    names.insert(names.end(), n2names.begin(), n2names.end());
    StructureConstants c(n1 + n2, names);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) c.at(i, j, k) = g1.constant(i, j, k);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k) c.at(n1 + i, n1 + j, n1 + k) = g2.constant(i, j, k);
    return LieAlgebra::validate(std::move(c));
}

/// r x| s where s-basis vector a acts on r by the matrix action[a]. The basis
/// of r comes first. Each matrix must be a derivation of r and a -> action[a]
/// must respect the brackets of s.
inline LieAlgebra semidirect(const LieAlgebra& r, const LieAlgebra& s, const std::vector<RatMatrix>& action)
{
    const std::size_t nr = r.dim(), ns = s.dim();
    if (action.size() != ns) throw Error(ErrorKind::DimensionMismatch, "one action matrix per s-basis vector");
    for (std::size_t a = 0; a < ns; ++a) {
        const auto& d = action[a];
        if (d.rows() != nr || d.cols() != nr) throw Error(ErrorKind::DimensionMismatch, "action matrix shape");
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = i + 1; j < nr; ++j) {
                auto lhs = d * r.basis_bracket(i, j);
                auto rhs = r.bracket(d.column(i), unit_vector(nr, j)) + r.bracket(unit_vector(nr, i), d.column(j));
                if (lhs != rhs) throw Error(ErrorKind::NotDerivation, "action matrix " + std::to_string(a) + " is not a derivation");
            }
    }
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = a + 1; b < ns; ++b) {
            RatMatrix want(nr, nr);
            for (std::size_t k = 0; k < ns; ++k)
                if (s.constant(a, b, k) != 0) want += action[k] * s.constant(a, b, k);
            if (action[a] * action[b] - action[b] * action[a] != want)
                throw Error(ErrorKind::NotHomomorphism,
                            "action fails on bracket (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    auto names = r.basis_names();
    auto snames = disjoint_names(names, s.basis_names());
    names.insert(names.end(), snames.begin(), snames.end());
    StructureConstants c(nr + ns, names);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t k = 0; k < nr; ++k) c.at(i, j, k) = r.constant(i, j, k);
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b)
            for (std::size_t k = 0; k < ns; ++k) c.at(nr + a, nr + b, nr + k) = s.constant(a, b, k);
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t k = 0; k < nr; ++k) {
                c.at(nr + a, j, k) = action[a](k, j);
                c.at(j, nr + a, k) = -action[a](k, j);
            }
    return LieAlgebra::validate(std::move(c));
}

/// Heisenberg algebra of dimension 2n+1: basis e1..e2n, z with [e_i, e_j] = w(i,j) z
/// for the sl2-invariant form w on the 2n-dimensional irreducible module.
inline LieAlgebra heisenberg(std::size_t dim)
{
    if (dim < 3 || dim % 2 == 0) throw Error(ErrorKind::InvalidArgument, "heisenberg dimension must be odd and >= 3");
    const std::size_t two_n = dim - 1;
    auto w = invariant_symplectic(irreducible_sl2_module(two_n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < two_n; ++i) names.push_back("e" + std::to_string(i + 1));
    names.push_back("z");
    StructureConstants c(dim, names);
    for (std::size_t i = 0; i < two_n; ++i)
        for (std::size_t j = i + 1; j < two_n; ++j)
            if (w(i, j) != 0) c.add_term(i, j, two_n, w(i, j));
    return LieAlgebra::validate(std::move(c));
}

/// R^m x| sl2 with the m-dimensional irreducible module.
inline LieAlgebra v_sl2(std::size_t m)
{
    auto act = irreducible_sl2_module(m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("v" + std::to_string(i));
    auto r = LieAlgebra::validate(StructureConstants(m, names));
    return semidirect(r, sl2(), {act.h, act.e, act.f});
}

/// h_{2n+1} x| sl2: the irreducible 2n-dimensional action on e1..e2n, zero on z.
inline LieAlgebra h_sl2(std::size_t n)
{
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "h_sl2(n) needs n >= 1");
    auto act = irreducible_sl2_module(2 * n);
    auto extend = [n](const RatMatrix& x) {
        RatMatrix y(2 * n + 1, 2 * n + 1);
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j) y(i, j) = x(i, j);
        return y;
    };
    return semidirect(heisenberg(2 * n + 1), sl2(), {extend(act.h), extend(act.e), extend(act.f)});
}

/// so(3) x| R^3 with the standard (vector) representation.
inline LieAlgebra so3_r3()
{
    auto s = so3();
    std::vector<RatMatrix> act;
    for (std::size_t a = 0; a < 3; ++a) act.push_back(s.ad_basis(a));
    auto r = LieAlgebra::validate(StructureConstants(3, {"p1", "p2", "p3"}));
    return semidirect(r, s, act);
}

// ---------------------------------------------------------------------------
// Named builders

/// Recursive builder grammar over tokens:
///   abelian M | heisenberg D | sl2 | so3 | so N | so4 | sl2C_real | sl3R | so3_r3
///   | v_sl2 M | h_sl2 N | direct_sum SPEC SPEC | complexify SPEC
class BuilderParser {
public:
    explicit BuilderParser(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

    LieAlgebra parse_all()
    {
        auto g = parse();
        if (pos_ != tokens_.size()) throw Error(ErrorKind::InvalidArgument, "trailing builder tokens after '" + tokens_[pos_ - 1] + "'");
        return g;
    }

private:
    const std::string& next()
    {
        if (pos_ >= tokens_.size()) throw Error(ErrorKind::InvalidArgument, "builder specification ends early");
        return tokens_[pos_++];
    }
    std::size_t number(std::size_t min)
    {
        const auto& t = next();
        std::size_t v = 0;
        try {
            std::size_t used = 0;
            long long x = std::stoll(t, &used);
            if (used != t.size() || x < 0) throw std::invalid_argument(t);
            v = static_cast<std::size_t>(x);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "expected a nonnegative integer, got '" + t + "'");
        }
        if (v < min) throw Error(ErrorKind::InvalidArgument, "parameter " + t + " below minimum " + std::to_string(min));
        return v;
    }

    LieAlgebra parse()
    {
        const std::string name = next();
        if (name == "abelian") return abelian(number(1));
        if (name == "heisenberg") return heisenberg(number(3));
        if (name == "sl2") return sl2();
        if (name == "so3") return so3();
        if (name == "so") return so(number(2));
        if (name == "so4") return so(4);
        if (name == "sl2C_real") return sl2C_real();
        if (name == "sl3R") return sl3R();
        if (name == "so3_r3") return so3_r3();
        if (name == "v_sl2") return v_sl2(number(1));
        if (name == "h_sl2") return h_sl2(number(1));
        if (name == "direct_sum") {
            auto a = parse();
            auto b = parse();
            return direct_sum(a, b);
        }
        if (name == "complexify") return complexify(parse());
        throw Error(ErrorKind::InvalidArgument, "unknown builder '" + name + "'");
    }

    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

inline LieAlgebra build_named(const std::vector<std::string>& tokens) { return BuilderParser(tokens).parse_all(); }

inline std::vector<std::string> split_words(const std::string& spec)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : spec) {
        if (ch == ' ' || ch == '\t' || ch == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline LieAlgebra build_named(const std::string& spec) { return build_named(split_words(spec)); }

struct NamedAlgebra {
    std::string name;
    LieAlgebra algebra;
};

/// The seven algebras used for the direct-sum product law.
inline std::vector<NamedAlgebra> product_corpus()
{
    std::vector<NamedAlgebra> out;
    for (const char* spec : {"heisenberg 3", "sl2", "so3", "sl3R", "v_sl2 2", "h_sl2 1", "so3_r3"})
        out.push_back({spec, build_named(spec)});
    return out;
}

/// Every named builder at the parameters exercised by the checks.
inline std::vector<NamedAlgebra> builder_corpus()
{
    std::vector<NamedAlgebra> out;
    for (const char* spec :
         {"abelian 3", "heisenberg 3", "heisenberg 5", "sl2", "so3", "so4", "sl2C_real", "sl3R", "v_sl2 1", "v_sl2 2",
          "v_sl2 3", "v_sl2 4", "v_sl2 5", "h_sl2 1", "h_sl2 2", "so3_r3", "direct_sum sl2 heisenberg 3",
          "direct_sum sl2 so3"})
        out.push_back({spec, build_named(spec)});
    return out;
}

/// Integer matrix of determinant +-1 built from random elementary operations and a permutation.
inline RatMatrix random_unimodular(std::size_t n, std::mt19937_64& rng)
{
    RatMatrix p = RatMatrix::identity(n);
    if (n < 2) return p;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (std::size_t step = 0; step < 2 * n; ++step) {
        auto i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Rational c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
    }
    for (std::size_t i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i);
        auto j = pick(rng);
        for (std::size_t k = 0; k < n; ++k) std::swap(p(i, k), p(j, k));
    }
    return p;
}

/// A seeded random semidirect product abelian(k) x| s (s = sl2 or so3, module a
/// sum of irreducibles conjugated by a unimodular matrix), presented in a
/// random unimodular basis of the whole algebra.
inline NamedAlgebra random_semidirect(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 9);
    const bool use_sl2 = coin(rng) < 7;
    std::vector<std::size_t> blocks;
    std::size_t total = 0;
    std::uniform_int_distribution<std::size_t> sl2_block(1, 4);
    std::uniform_int_distribution<int> so3_block(0, 1);
    while (total < 2 || (total < 6 && coin(rng) < 5)) {
        std::size_t b = use_sl2 ? sl2_block(rng) : (so3_block(rng) ? 3 : 1);
        if (total + b > 7) break;
        blocks.push_back(b);
        total += b;
    }
    auto s = use_sl2 ? sl2() : so3();
    std::vector<RatMatrix> act(3, RatMatrix(total, total));
    std::size_t off = 0;
    for (auto b : blocks) {
        std::vector<RatMatrix> local;
        if (use_sl2) {
            auto a = irreducible_sl2_module(b);
            local = {a.h, a.e, a.f};
        } else if (b == 3) {
            local = {s.ad_basis(0), s.ad_basis(1), s.ad_basis(2)};
        } else {
            local = {RatMatrix(1, 1), RatMatrix(1, 1), RatMatrix(1, 1)};
        }
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = 0; j < b; ++j) act[a](off + i, off + j) = local[a](i, j);
        off += b;
    }
    auto q = random_unimodular(total, rng);
    auto q_inv = *inverse(q);
    for (auto& x : act) x = q * x * q_inv;
    auto g = semidirect(abelian(total), s, act);
    auto p = random_unimodular(g.dim(), rng);
    std::string name = "random_semidirect(" + std::to_string(seed) + ":" + (use_sl2 ? "sl2" : "so3") + ";";
    for (std::size_t i = 0; i < blocks.size(); ++i) name += (i ? "+" : "") + std::to_string(blocks[i]);
    name += ")";
    return {name, change_basis(g, p)};
}

} // namespace liewa
