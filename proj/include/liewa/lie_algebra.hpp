#pragma once

// Finite-dimensional real Lie algebras given by rational structure constants.

#include <sstream>
#include <string>
#include <vector>

#include "liewa/linalg.hpp"

namespace liewa {

/// Unvalidated structure constants: c(i, j, k) is the coefficient of x_k in [x_i, x_j].
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim, std::vector<std::string> names = {})
        : dim_(dim), names_(std::move(names)), table_(dim * dim * dim)
    {
        if (names_.empty())
            for (std::size_t i = 0; i < dim; ++i) names_.push_back("x" + std::to_string(i));
        if (names_.size() != dim) throw Error(ErrorKind::DimensionMismatch, "basis name count differs from dim");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return table_[(i * dim_ + j) * dim_ + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim_ + j) * dim_ + k]; }

    /// Sets [x_i, x_j] = v and [x_j, x_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, const RatVector& v)
    {
        check_index(i);
        check_index(j);
        if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "bracket vector length");
        for (std::size_t k = 0; k < dim_; ++k) {
            at(i, j, k) = v[k];
            at(j, i, k) = -v[k];
        }
    }
    /// Adds coef * x_k to [x_i, x_j] and keeps the table antisymmetric.
    void add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& coef)
    {
        check_index(i);
        check_index(j);
        check_index(k);
        at(i, j, k) += coef;
        if (i != j) at(j, i, k) -= coef;
    }

private:
    void check_index(std::size_t i) const
    {
        if (i >= dim_) throw Error(ErrorKind::InvalidArgument, "basis index " + std::to_string(i) + " out of range");
    }

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> table_;
};

struct Violation {
    ErrorKind kind; // JacobiViolation or AntisymmetryViolation
    std::size_t i = 0, j = 0, k = 0;
    RatVector defect;
};

/// Thrown by LieAlgebra::validate; lists every violated identity.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> v)
        : Error(v.front().kind, describe(v)), violations_(std::move(v))
    {
    }
    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& vs)
    {
        std::ostringstream os;
        os << vs.size() << " violation(s); first: ";
        const auto& v = vs.front();
        if (v.kind == ErrorKind::JacobiViolation) {
            os << "jacobi_violation(" << v.i << "," << v.j << "," << v.k << ") defect (";
            for (std::size_t t = 0; t < v.defect.size(); ++t) os << (t ? "," : "") << to_string(v.defect[t]);
            os << ")";
        } else {
            os << "antisymmetry_violation(" << v.i << "," << v.j << ")";
        }
        return os.str();
    }
    std::vector<Violation> violations_;
};

/// A validated Lie algebra. Immutable; ad matrices of basis vectors and the
/// Killing matrix are computed once at validation.
class LieAlgebra {
public:
    LieAlgebra() = default;

    static LieAlgebra validate(StructureConstants raw)
    {
        const std::size_t n = raw.dim();
        std::vector<Violation> bad;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                bool ok = true;
                for (std::size_t k = 0; k < n && ok; ++k)
                    ok = (i == j) ? raw.at(i, i, k) == 0 : raw.at(i, j, k) == -raw.at(j, i, k);
                if (!ok) bad.push_back({ErrorKind::AntisymmetryViolation, i, j, 0, {}});
            }
        if (!bad.empty()) throw ValidationError(std::move(bad));

        LieAlgebra g;
        g.c_ = std::move(raw);
        g.ad_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            RatMatrix a(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) a(k, j) = g.c_.at(i, j, k);
            g.ad_.push_back(std::move(a));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]
                    RatVector d = g.bracket(g.basis_bracket(i, j), unit_vector(n, k));
                    d = d + g.bracket(g.basis_bracket(j, k), unit_vector(n, i));
                    d = d + g.bracket(g.basis_bracket(k, i), unit_vector(n, j));
                    if (!is_zero(d)) bad.push_back({ErrorKind::JacobiViolation, i, j, k, std::move(d)});
                }
        if (!bad.empty()) throw ValidationError(std::move(bad));

        g.killing_ = RatMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational t = 0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (g.ad_[i](a, b) != 0 && g.ad_[j](b, a) != 0) t += g.ad_[i](a, b) * g.ad_[j](b, a);
                g.killing_(i, j) = g.killing_(j, i) = t;
            }
        return g;
    }

    std::size_t dim() const { return c_.dim(); }
    const std::vector<std::string>& basis_names() const { return c_.names(); }
    const StructureConstants& constants() const { return c_; }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_.at(i, j, k); }

    RatVector basis_bracket(std::size_t i, std::size_t j) const
    {
        RatVector v(dim());
        for (std::size_t k = 0; k < dim(); ++k) v[k] = c_.at(i, j, k);
        return v;
    }

    RatVector bracket(const RatVector& x, const RatVector& y) const
    {
        check(x);
        check(y);
        RatVector r(dim());
        Rational xy;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (i == j || y[j] == 0) continue;
                xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (c_.at(i, j, k) != 0) r[k] += xy * c_.at(i, j, k);
            }
        }
        return r;
    }

    /// Matrix of y -> [x, y]; column j is [x, x_j].
    RatMatrix ad(const RatVector& x) const
    {
        check(x);
        RatMatrix a(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (x[i] != 0) a += ad_[i] * x[i];
        return a;
    }
    const RatMatrix& ad_basis(std::size_t i) const { return ad_.at(i); }

    Rational killing(const RatVector& x, const RatVector& y) const
    {
        check(x);
        check(y);
        return dot(x, killing_ * y);
    }
    /// Gram matrix of the Killing form in the standard basis.
    const RatMatrix& killing_matrix() const { return killing_; }

private:
    void check(const RatVector& v) const
    {
        if (v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) + " vs dim " + std::to_string(dim()));
    }

    StructureConstants c_;
    std::vector<RatMatrix> ad_;
    RatMatrix killing_;
};

inline Subspace whole(const LieAlgebra& g) { return Subspace::whole(g.dim()); }

/// span{[u, v] : u in U, v in V}
inline Subspace bracket_space(const LieAlgebra& g, const Subspace& u, const Subspace& v)
{
    IncrementalBasis b(g.dim());
    for (std::size_t a = 0; a < u.dim(); ++a) {
        auto ada = g.ad(u.vector(a));
        for (std::size_t c = 0; c < v.dim(); ++c) b.insert(ada * v.vector(c));
    }
    return Subspace::span(g.dim(), b.rows());
}

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& u) { return u.contains(bracket_space(g, u, u)); }
inline bool is_ideal(const LieAlgebra& g, const Subspace& u) { return u.contains(bracket_space(g, whole(g), u)); }

/// D^0 = U, D^{n+1} = [D^n, D^n], stopping at the first repeated term.
inline std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& u)
{
    if (!is_subalgebra(g, u)) throw Error(ErrorKind::NotSubalgebra, "derived series of a non-subalgebra");
    std::vector<Subspace> chain{u};
    while (true) {
        auto next = bracket_space(g, chain.back(), chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
        if (chain.back().is_zero()) break;
    }
    return chain;
}
inline std::vector<Subspace> derived_series(const LieAlgebra& g) { return derived_series(g, whole(g)); }

inline bool is_solvable(const LieAlgebra& g, const Subspace& u) { return derived_series(g, u).back().is_zero(); }
inline bool is_solvable(const LieAlgebra& g) { return is_solvable(g, whole(g)); }

/// C^0 = g, C^{n+1} = [g, C^n], stopping at the first repeated term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g)
{
    std::vector<Subspace> chain{whole(g)};
    while (!chain.back().is_zero()) {
        auto next = bracket_space(g, whole(g), chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

inline bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

/// Length of the lower central series until 0 (abelian nonzero algebras have class 1); 0 for the zero algebra.
inline std::optional<std::size_t> nilpotency_class(const LieAlgebra& g)
{
    auto chain = lower_central_series(g);
    if (!chain.back().is_zero()) return std::nullopt;
    return chain.size() - 1;
}

/// Smallest ideal containing the seed: fixpoint of V -> V + [g, V].
inline Subspace ideal_closure(const LieAlgebra& g, const Subspace& seed)
{
    IncrementalBasis b(g.dim());
    std::vector<RatVector> queue;
    for (const auto& v : seed.vectors())
        if (b.insert(v)) queue.push_back(v);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t i = 0; i < g.dim(); ++i) {
            auto w = g.ad_basis(i) * queue[q];
            if (b.insert(w)) queue.push_back(std::move(w));
        }
    return Subspace::span(g.dim(), b.rows());
}

/// {x : [x, v] = 0 for all v in V}
inline Subspace centralizer(const LieAlgebra& g, const Subspace& v)
{
    const std::size_t n = g.dim();
    if (v.dim() == 0) return whole(g);
    RatMatrix stacked(n * v.dim(), n);
    for (std::size_t b = 0; b < v.dim(); ++b) {
        auto a = g.ad(v.vector(b)); // [v, x] = a x, and [x, v] = -a x
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = a(i, j);
    }
    return Subspace::column_span(kernel(stacked));
}

inline Subspace center(const LieAlgebra& g) { return centralizer(g, whole(g)); }

/// The algebra spanned by the given columns, in those coordinates. The columns
/// must be independent and span a subalgebra.
inline LieAlgebra induced(const LieAlgebra& g, const RatMatrix& basis, std::vector<std::string> names = {})
{
    const std::size_t k = basis.cols();
    if (basis.rows() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "basis rows vs dim");
    if (rank(basis) != k) throw Error(ErrorKind::InvalidArgument, "basis columns are dependent");
    if (names.empty()) {
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t nz = 0, at = 0;
            for (std::size_t i = 0; i < g.dim(); ++i)
                if (basis(i, c) != 0) {
                    ++nz;
                    at = i;
                }
            bool plain = nz == 1 && basis(at, c) == 1;
            names.push_back(plain ? g.basis_names()[at] : "b" + std::to_string(c));
        }
    }
    // Coordinates via a left inverse built from a full-rank row selection.
    auto e = row_reduce(basis.transpose());
    RatMatrix square(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) square(r, c) = basis(e.pivots[r], c);
    auto sq_inv = inverse(square);
    if (!sq_inv) throw Error(ErrorKind::Internal, "pivot selection not invertible");
    StructureConstants sc(k, names);
    std::vector<RatVector> cols;
    for (std::size_t c = 0; c < k; ++c) cols.push_back(basis.column(c));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            auto br = g.bracket(cols[a], cols[b]);
            RatVector sel(k);
            for (std::size_t r = 0; r < k; ++r) sel[r] = br[e.pivots[r]];
            auto coords = *sq_inv * sel;
            if (basis * coords != br) throw Error(ErrorKind::NotSubalgebra, "columns do not span a subalgebra");
            sc.set_bracket(a, b, coords);
        }
    return LieAlgebra::validate(std::move(sc));
}

inline LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& u) { return induced(g, u.basis()); }

/// Same algebra in the basis x'_j = sum_i p(i, j) x_i; p must be invertible.
inline LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& p)
{
    if (p.rows() != g.dim() || p.cols() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "change of basis shape");
    std::vector<std::string> names;
    for (std::size_t c = 0; c < g.dim(); ++c) {
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (p(i, c) != 0) {
                ++nz;
                at = i;
            }
        names.push_back(nz == 1 && p(at, c) == 1 ? g.basis_names()[at] : "y" + std::to_string(c));
    }
    return induced(g, p, names);
}

/// Relabels the basis: new basis vector j is old basis vector perm[j].
inline LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm)
{
    RatMatrix p(g.dim(), g.dim());
    for (std::size_t j = 0; j < perm.size(); ++j) p(perm.at(j), j) = 1;
    return change_basis(g, p);
}

/// Exact equality of structure constants (same basis order and names ignored).
inline bool same_constants(const LieAlgebra& a, const LieAlgebra& b)
{
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.constant(i, j, k) != b.constant(i, j, k)) return false;
    return true;
}

} // namespace liewa
