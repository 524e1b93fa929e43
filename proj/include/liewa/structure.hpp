#pragma once

// Structure theory: solvable radical, Levi decomposition, splitting a
// semisimple algebra into simple ideals, and the Cartan dimension.

#include <random>
#include <vector>

#include "liewa/lie_algebra.hpp"

namespace liewa {

/// The solvable radical, computed as the Killing-orthogonal complement of [g, g].
inline Subspace radical(const LieAlgebra& g)
{
    auto d = bracket_space(g, whole(g), whole(g));
    Subspace r = d.dim() == 0 ? whole(g) : Subspace::column_span(kernel(d.basis().transpose() * g.killing_matrix()));
    if (!is_ideal(g, r) || !is_solvable(g, r)) throw Error(ErrorKind::Internal, "computed radical is not a solvable ideal");
    return r;
}

struct LeviDecomposition {
    Subspace radical;
    Subspace levi;
    /// Basis of the Levi subalgebra lifted from the standard complement of the
    /// radical; its structure constants are those of g / radical.
    RatMatrix levi_basis;
};

/// Levi-Malcev construction. A standard-basis complement of the radical R is
/// corrected step by step along the derived series R = R_0 > R_1 > ... > 0 so
/// that its brackets close modulo R_{t+1}; each step is a linear system.
inline LeviDecomposition levi(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    LeviDecomposition out;
    out.radical = radical(g);
    auto comp = complement_basis(whole(g), out.radical);
    const std::size_t m = comp.size();
    if (m == 0) {
        out.levi = Subspace(n);
        out.levi_basis = RatMatrix(n, 0);
        return out;
    }
    if (out.radical.is_zero()) {
        out.levi = whole(g);
        out.levi_basis = RatMatrix::identity(n);
        return out;
    }

    // quotient constants: [x_i, x_j] = sum_k c_ijk x_k  (mod R)
    RatMatrix full(n, n);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < n; ++i) full(i, c) = comp[c][i];
    for (std::size_t c = 0; c < out.radical.dim(); ++c)
        for (std::size_t i = 0; i < n; ++i) full(i, m + c) = out.radical.basis()(i, c);
    auto full_inv = inverse(full);
    if (!full_inv) throw Error(ErrorKind::Internal, "complement of the radical is not a complement");
    std::vector<std::vector<RatVector>> cq(m, std::vector<RatVector>(m, RatVector(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto coords = *full_inv * g.bracket(comp[i], comp[j]);
            for (std::size_t k = 0; k < m; ++k) {
                cq[i][j][k] = coords[k];
                cq[j][i][k] = -coords[k];
            }
        }

    std::vector<RatVector> y = comp;
    auto residual = [&](std::size_t i, std::size_t j) {
        RatVector res = g.bracket(y[i], y[j]);
        for (std::size_t k = 0; k < m; ++k)
            if (cq[i][j][k] != 0) res = res - scaled(y[k], cq[i][j][k]);
        return res;
    };

    auto series = derived_series(g, out.radical);
    for (std::size_t t = 0; t + 1 < series.size(); ++t) {
        const auto& cur = series[t];
        const auto& nxt = series[t + 1];
        auto w = complement_basis(cur, nxt);
        const std::size_t q = w.size();
        RatMatrix wm = RatMatrix::from_columns(n, w);
        RatMatrix proj = annihilator(nxt);
        const std::size_t pr = proj.rows();
        RatMatrix pw = proj * wm;
        std::vector<RatMatrix> p_ad_w(m);
        for (std::size_t i = 0; i < m; ++i) p_ad_w[i] = proj * g.ad(y[i]) * wm;

        // unknown z_i = W lambda_i; require P(res_ij + ad(y_i) z_j - ad(y_j) z_i - sum_k c_ijk z_k) = 0
        const std::size_t pairs = m * (m - 1) / 2;
        RatMatrix a(pairs * pr, m * q);
        RatVector b(pairs * pr);
        std::size_t row = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j, row += pr) {
                auto rhs = proj * residual(i, j);
                for (std::size_t r = 0; r < pr; ++r) {
                    b[row + r] = -rhs[r];
                    for (std::size_t c = 0; c < q; ++c) {
                        a(row + r, j * q + c) += p_ad_w[i](r, c);
                        a(row + r, i * q + c) -= p_ad_w[j](r, c);
                        for (std::size_t k = 0; k < m; ++k)
                            if (cq[i][j][k] != 0) a(row + r, k * q + c) -= cq[i][j][k] * pw(r, c);
                    }
                }
            }
        auto sol = solve(a, b);
        if (!sol) throw Error(ErrorKind::LiftingInconsistent, "Levi lifting system has no solution at step " + std::to_string(t));
        for (std::size_t i = 0; i < m; ++i) {
            RatVector lam(sol->begin() + static_cast<long>(i * q), sol->begin() + static_cast<long>((i + 1) * q));
            y[i] = y[i] + wm * lam;
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!is_zero(residual(i, j))) throw Error(ErrorKind::LiftingInconsistent, "lifted complement is not closed under brackets");
    out.levi_basis = RatMatrix::from_columns(n, y);
    out.levi = Subspace::column_span(out.levi_basis);
    return out;
}

inline bool killing_nondegenerate(const LieAlgebra& s) { return rank(s.killing_matrix()) == s.dim(); }

namespace detail {

inline RatVector random_vector(std::size_t n, std::mt19937_64& rng, int bound = 9)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    RatVector v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

/// Killing-orthogonal complement of an ideal inside a semisimple algebra.
inline Subspace killing_complement(const LieAlgebra& s, const Subspace& ideal)
{
    return Subspace::column_span(kernel(ideal.basis().transpose() * s.killing_matrix()));
}

/// Ideal closure of x that also records, for every accepted vector u_k, the
/// operator M_k (a product of ad matrices) with u_k = M_k x.
struct TracedClosure {
    std::vector<RatVector> vectors;
    std::vector<RatMatrix> operators;
};

inline TracedClosure traced_closure(const LieAlgebra& s, const RatVector& x)
{
    const std::size_t n = s.dim();
    TracedClosure tc;
    IncrementalBasis b(n);
    if (!b.insert(x)) return tc;
    tc.vectors.push_back(x);
    tc.operators.push_back(RatMatrix::identity(n));
    for (std::size_t q = 0; q < tc.vectors.size(); ++q)
        for (std::size_t i = 0; i < n; ++i) {
            auto w = s.ad_basis(i) * tc.vectors[q];
            if (b.insert(w)) {
                tc.vectors.push_back(std::move(w));
                tc.operators.push_back(s.ad_basis(i) * tc.operators[q]);
            }
        }
    return tc;
}

/// The centroid {T : T ad(y) = ad(y) T for all y}. Requires ideal_closure(x) = s;
/// T is then determined by v = T x via T u_k = M_k v.
inline std::vector<RatMatrix> centroid(const LieAlgebra& s, const TracedClosure& tc)
{
    const std::size_t n = s.dim();
    RatMatrix u = RatMatrix::from_columns(n, tc.vectors);
    auto u_inv = inverse(u);
    if (!u_inv) throw Error(ErrorKind::Internal, "closure vectors do not span the algebra");
    IncrementalBasis constraints(n);
    for (std::size_t i = 0; i < n && constraints.size() < n; ++i) {
        const auto& adi = s.ad_basis(i);
        for (std::size_t k = 0; k < n && constraints.size() < n; ++k) {
            auto c = *u_inv * (adi * tc.vectors[k]);
            RatMatrix lhs = adi * tc.operators[k] * Rational(-1);
            for (std::size_t l = 0; l < n; ++l)
                if (c[l] != 0) lhs += tc.operators[l] * c[l];
            for (std::size_t r = 0; r < n; ++r) constraints.insert(lhs.row(r));
        }
    }
    RatMatrix cons = constraints.size() ? RatMatrix::from_rows(n, constraints.rows()) : RatMatrix(0, n);
    auto ker = constraints.size() ? kernel(cons) : RatMatrix::identity(n);
    std::vector<RatMatrix> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        auto v = ker.column(c);
        std::vector<RatVector> images;
        for (const auto& mk : tc.operators) images.push_back(mk * v);
        out.push_back(RatMatrix::from_columns(n, images) * *u_inv);
    }
    return out;
}

inline bool is_scalar(const RatMatrix& t)
{
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            if ((i == j && t(i, j) != t(0, 0)) || (i != j && t(i, j) != 0)) return false;
    return true;
}

struct Split {
    Subspace a, b;
};

/// A proper ideal and its complement, if one can be found from T - lambda kernels.
inline std::optional<Split> eigen_split(const LieAlgebra& s, const RatMatrix& t)
{
    const std::size_t n = s.dim();
    for (const auto& lam : rational_roots(characteristic_polynomial(t))) {
        auto k = Subspace::column_span(kernel(t - RatMatrix::identity(n) * lam));
        if (k.dim() > 0 && k.dim() < n) return Split{k, killing_complement(s, k)};
    }
    return std::nullopt;
}

inline std::optional<Split> find_split(const LieAlgebra& s, std::mt19937_64& rng)
{
    const std::size_t n = s.dim();
    auto proper = [&](const Subspace& j) { return j.dim() > 0 && j.dim() < n; };
    // a sparse seed keeps the closure coordinates small
    auto x = unit_vector(n, std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    auto tc = traced_closure(s, x);
    if (tc.vectors.size() < n) {
        auto j = Subspace::span(n, tc.vectors);
        return Split{j, killing_complement(s, j)};
    }
    auto gamma = centroid(s, tc);
    if (gamma.size() <= 1) return std::nullopt;

    std::vector<RatMatrix> candidates;
    for (const auto& t : gamma)
        if (!is_scalar(t)) candidates.push_back(t);
    if (gamma.size() == 2) {
        // Gamma = span{1, T}: T^2 = alpha T + beta
        const auto& t = candidates.at(0);
        RatMatrix t2 = t * t;
        RatMatrix sys(n * n, 2);
        RatVector rhs(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                sys(i * n + j, 0) = t(i, j);
                sys(i * n + j, 1) = i == j ? 1 : 0;
                rhs[i * n + j] = t2(i, j);
            }
        auto ab = solve(sys, rhs);
        if (!ab) throw Error(ErrorKind::Internal, "centroid is not closed under multiplication");
        Rational disc = (*ab)[0] * (*ab)[0] + 4 * (*ab)[1];
        if (sgn(disc) < 0) return std::nullopt; // complex type: simple
        if (auto sp = eigen_split(s, t)) return sp;
        throw Error(ErrorKind::IrrationalDecomposition, "simple ideals are not defined over the rationals");
    }
    for (const auto& t : candidates)
        if (auto sp = eigen_split(s, t)) return sp;
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a + 1; b < candidates.size(); ++b)
            for (int c : {1, 2, -1})
                if (auto sp = eigen_split(s, candidates[a] + candidates[b] * Rational(c))) return sp;
    for (std::size_t i = 0; i < n; ++i) {
        auto j = ideal_closure(s, Subspace::span(n, {unit_vector(n, i)}));
        if (proper(j)) return Split{j, killing_complement(s, j)};
    }
    throw Error(ErrorKind::IrrationalDecomposition, "could not split a centroid of dimension " + std::to_string(gamma.size()));
}

inline void split_into(const LieAlgebra& s, const RatMatrix& embed, std::mt19937_64& rng, std::vector<Subspace>& out)
{
    auto sp = find_split(s, rng);
    if (!sp) {
        out.push_back(Subspace::column_span(embed));
        return;
    }
    for (const Subspace* part : {&sp->a, &sp->b}) {
        auto sub = restrict_to(s, *part);
        split_into(sub, embed * part->basis(), rng, out);
    }
}

} // namespace detail

inline constexpr std::uint64_t default_seed = 0x5eed1e5aULL;

/// Simple ideals of a semisimple algebra, in its own coordinates, ordered by
/// their canonical bases.
inline std::vector<Subspace> split_semisimple(const LieAlgebra& s, std::uint64_t seed = default_seed)
{
    if (!killing_nondegenerate(s)) throw Error(ErrorKind::NotSemisimple, "Killing form is degenerate");
    std::vector<Subspace> out;
    if (s.dim() == 0) return out;
    std::mt19937_64 rng(seed);
    detail::split_into(s, RatMatrix::identity(s.dim()), rng, out);
    // canonical order: earliest leading coordinate first
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.vectors() > b.vectors(); });
    return out;
}

/// Simple ideals of the subalgebra u of g, returned as subspaces of g.
inline std::vector<Subspace> split_semisimple(const LieAlgebra& g, const Subspace& u, std::uint64_t seed = default_seed)
{
    auto s = restrict_to(g, u);
    std::vector<Subspace> out;
    for (const auto& ideal : split_semisimple(s, seed)) out.push_back(Subspace::column_span(u.basis() * ideal.basis()));
    return out;
}

/// Dimension of the generalized null space of ad(x) for generic x: the minimum
/// over `samples` seeded pseudo-random x.
inline std::size_t cartan_dimension(const LieAlgebra& s, std::uint64_t seed = default_seed, std::size_t samples = 20)
{
    const std::size_t n = s.dim();
    if (n == 0) return 0;
    std::mt19937_64 rng(seed);
    std::size_t best = n;
    for (std::size_t t = 0; t < samples; ++t) {
        // multiplicity of 0 as a root of the characteristic polynomial of ad(x)
        auto chi = characteristic_polynomial(s.ad(detail::random_vector(n, rng)));
        std::size_t zeros = 0;
        while (zeros < n && chi[zeros] == 0) ++zeros;
        best = std::min(best, zeros);
    }
    return best;
}

} // namespace liewa
