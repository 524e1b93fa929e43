#pragma once

// Exact linear algebra over the rationals: row reduction, kernels, linear
// solves, congruence inertia of symmetric forms, characteristic polynomials.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "liewa/matrix.hpp"

namespace liewa {

struct Echelon {
    RatMatrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. In each column the pivot is the nonzero entry of
/// smallest bit height among the unreduced rows.
inline Echelon row_reduce(RatMatrix m)
{
    Echelon e;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Rational factor;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_h = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            auto h = height(m(i, c));
            if (best == rows || h < best_h) {
                best = i;
                best_h = h;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(best, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

inline std::size_t rank(const RatMatrix& m) { return row_reduce(m).rank(); }

/// Basis of the null space, one column per free variable.
inline RatMatrix kernel(const RatMatrix& m)
{
    auto e = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return RatMatrix::from_columns(n, basis);
}

/// One solution of m x = b, or nullopt when b is not in the column space.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto e = row_reduce(std::move(aug));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

inline Rational determinant(RatMatrix m)
{
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    std::size_t dim() const { return positive + negative + zero; }
    bool nondegenerate() const { return zero == 0; }
    bool negative_definite() const { return positive == 0 && zero == 0; }
    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline bool is_symmetric(const RatMatrix& m)
{
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// Inertia of a symmetric form by Lagrange congruence reduction. When every
/// remaining diagonal entry vanishes, e_i is replaced by e_i + e_j for some
/// pair with a nonzero off-diagonal entry.
inline Signature symmetric_signature(RatMatrix a)
{
    if (!is_symmetric(a)) throw Error(ErrorKind::InvalidArgument, "signature of a non-symmetric matrix");
    const std::size_t n = a.rows();
    std::vector<std::size_t> live(n);
    std::iota(live.begin(), live.end(), 0);
    Signature sig;
    while (!live.empty()) {
        // pivot: nonzero diagonal entry of smallest height
        std::size_t pick = n;
        std::size_t pick_h = 0;
        for (auto i : live) {
            if (a(i, i) == 0) continue;
            auto h = height(a(i, i));
            if (pick == n || h < pick_h) {
                pick = i;
                pick_h = h;
            }
        }
        if (pick == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t x = 0; x < live.size() && pi == n; ++x)
                for (std::size_t y = x + 1; y < live.size(); ++y)
                    if (a(live[x], live[y]) != 0) {
                        pi = live[x];
                        pj = live[y];
                        break;
                    }
            if (pi == n) {
                sig.zero += live.size();
                break;
            }
            // congruence by e_pi -> e_pi + e_pj
            for (auto k : live) a(pi, k) += a(pj, k);
            for (auto k : live) a(k, pi) += a(k, pj);
            continue;
        }
        const Rational d = a(pick, pick);
        (sgn(d) > 0 ? sig.positive : sig.negative) += 1;
        live.erase(std::find(live.begin(), live.end(), pick));
        for (auto j : live) {
            if (a(j, pick) == 0) continue;
            Rational f = a(j, pick) / d;
            for (auto k : live) a(j, k) -= f * a(pick, k);
        }
        for (auto j : live) a(j, pick) = a(pick, j) = 0;
    }
    return sig;
}

/// Characteristic polynomial det(x I - m), coefficients from low to high degree
/// (Faddeev-LeVerrier recursion).
inline RatVector characteristic_polynomial(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    RatVector c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);
    auto id = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + id * c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer v, const Integer& limit)
{
    v = abs(v);
    std::vector<Integer> out;
    if (v == 0 || v > limit) return out;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
    }
    return out;
}

inline Rational evaluate(const RatVector& poly, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

} // namespace detail

/// Distinct rational roots of a polynomial (coefficients low to high), by the
/// rational root test. Coefficients larger than `limit` after clearing
/// denominators are not searched; such roots are silently omitted.
inline std::vector<Rational> rational_roots(RatVector poly, const Integer& limit = Integer("1000000000000"))
{
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    std::vector<Rational> roots;
    if (poly.size() <= 1) return roots;
    std::size_t low = 0;
    while (poly[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    RatVector p(poly.begin() + static_cast<long>(low), poly.end());
    if (p.size() <= 1) return roots;
    Integer den_lcm = 1;
    for (const auto& q : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ip;
    for (const auto& q : p) ip.push_back(Integer(q.get_num() * (den_lcm / q.get_den())));
    for (const auto& num : detail::positive_divisors(ip.front(), limit))
        for (const auto& den : detail::positive_divisors(ip.back(), limit))
            for (int s : {1, -1}) {
                Rational cand(Integer(s * num), den);
                cand.canonicalize();
                if (detail::evaluate(p, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Incrementally maintained row-echelon basis; `insert` reports whether the
/// vector was independent of those already present.
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t ambient) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t size() const { return rows_.size(); }

    /// Reduces v against the stored pivots; returns the residue (zero iff v is in the span).
    RatVector reduce(RatVector v) const
    {
        if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector length");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto p = pivots_[r];
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (std::size_t j = p; j < n_; ++j)
                if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
        }
        return v;
    }

    bool contains(const RatVector& v) const { return is_zero(reduce(v)); }

    bool insert(const RatVector& v)
    {
        auto w = reduce(v);
        std::size_t p = 0;
        while (p < n_ && w[p] == 0) ++p;
        if (p == n_) return false;
        Rational inv = 1 / w[p];
        for (auto& x : w) x *= inv;
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

    /// Original vectors are not kept; rows are normalized echelon rows.
    const std::vector<RatVector>& rows() const { return rows_; }

private:
    std::size_t n_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// A linear subspace of Q^n stored with its canonical basis: the nonzero rows of
/// the reduced row echelon form, held as columns. Equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient), basis_(ambient, 0) {}

    static Subspace span(std::size_t ambient, const std::vector<RatVector>& vectors)
    {
        RatMatrix rows = RatMatrix::from_rows(ambient, vectors);
        return from_echelon(ambient, row_reduce(std::move(rows)));
    }
    /// Column span of m.
    static Subspace column_span(const RatMatrix& m) { return from_echelon(m.rows(), row_reduce(m.transpose())); }
    static Subspace whole(std::size_t n) { return column_span(RatMatrix::identity(n)); }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.cols(); }
    bool is_zero() const { return dim() == 0; }
    const RatMatrix& basis() const { return basis_; }
    RatVector vector(std::size_t k) const { return basis_.column(k); }
    std::vector<RatVector> vectors() const
    {
        std::vector<RatVector> out;
        for (std::size_t k = 0; k < dim(); ++k) out.push_back(vector(k));
        return out;
    }

    bool contains(const RatVector& v) const
    {
        if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector length");
        return coordinates(v).has_value();
    }
    bool contains(const Subspace& o) const
    {
        for (std::size_t k = 0; k < o.dim(); ++k)
            if (!contains(o.vector(k))) return false;
        return true;
    }

    /// Coordinates of v in the canonical basis, if v lies in the subspace.
    std::optional<RatVector> coordinates(const RatVector& v) const
    {
        // the canonical basis has an identity block at the pivot positions
        RatVector c(dim());
        for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
        if (basis_ * c != v) return std::nullopt;
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

    friend Subspace operator+(const Subspace& a, const Subspace& b)
    {
        auto vs = a.vectors();
        auto wb = b.vectors();
        vs.insert(vs.end(), wb.begin(), wb.end());
        return span(a.n_, vs);
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b)
    {
        // x = A s = B t  <=>  [A | -B] (s, t) = 0
        RatMatrix m(a.n_, a.dim() + b.dim());
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.basis_(i, j);
            for (std::size_t j = 0; j < b.dim(); ++j) m(i, a.dim() + j) = -b.basis_(i, j);
        }
        auto k = kernel(m);
        std::vector<RatVector> vs;
        for (std::size_t c = 0; c < k.cols(); ++c) {
            RatVector s(a.dim());
            for (std::size_t j = 0; j < a.dim(); ++j) s[j] = k(j, c);
            vs.push_back(a.basis_ * s);
        }
        return span(a.n_, vs);
    }

private:
    static Subspace from_echelon(std::size_t ambient, const Echelon& e)
    {
        Subspace s;
        s.n_ = ambient;
        s.basis_ = RatMatrix(ambient, e.rank());
        for (std::size_t r = 0; r < e.rank(); ++r)
            for (std::size_t i = 0; i < ambient; ++i) s.basis_(i, r) = e.reduced(r, i);
        s.pivots_ = e.pivots;
        return s;
    }

    std::size_t n_ = 0;
    RatMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Annihilator of a subspace: rows spanning the linear forms vanishing on it.
inline RatMatrix annihilator(const Subspace& s)
{
    if (s.dim() == 0) return RatMatrix::identity(s.ambient());
    return kernel(s.basis().transpose()).transpose();
}

/// A complement of `sub` inside `super`, chosen greedily from super's canonical basis.
inline std::vector<RatVector> complement_basis(const Subspace& super, const Subspace& sub)
{
    IncrementalBasis b(super.ambient());
    for (const auto& v : sub.vectors()) b.insert(v);
    std::vector<RatVector> out;
    for (const auto& v : super.vectors())
        if (b.insert(v)) out.push_back(v);
    return out;
}

} // namespace liewa
