#pragma once

// SL(2) representations, the Heisenberg lattice group and the semidirect
// products Z^m x| SL(2,Z), Gamma_{2n+1} x| SL(2,Z), all in integer coordinates.
//
// The irreducible representation is used in the conjugated form
// Z'(A) = D Z(A) D^{-1}, D = diag(alpha_j), alpha_j^2 = binom(m-1, j-1), which
// has polynomial entries in a, b, c, d. Heisenberg points are stored as
// w = D u and m = N t with N the product of the alpha_j^2, so lattice
// membership is integrality.

#include <ostream>
#include <vector>

#include "liewa/matrix.hpp"

namespace liewa {

template <class T>
struct Sl2 {
    T a = 1, b = 0, c = 0, d = 1;

    static Sl2 identity() { return {1, 0, 0, 1}; }

    /// Throws unless ad - bc = 1.
    static Sl2 make(T a, T b, T c, T d)
    {
        Sl2 m{std::move(a), std::move(b), std::move(c), std::move(d)};
        if (m.a * m.d - m.b * m.c != 1) throw Error(ErrorKind::InvalidArgument, "determinant is not 1");
        return m;
    }

    Sl2 inverse() const { return {d, -b, -c, a}; }

    friend Sl2 operator*(const Sl2& x, const Sl2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Sl2& x, const Sl2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
    friend bool operator<(const Sl2& x, const Sl2& y)
    {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }
    friend std::ostream& operator<<(std::ostream& os, const Sl2& m)
    {
        return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    }
};

using Sl2Element = Sl2<Integer>;
using Sl2Rational = Sl2<Rational>;

namespace detail {

template <class T>
T power(const T& base, long e)
{
    T r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace detail

/// Z'(A)_{ij} = sum_l binom(j-1,l) binom(m-j, m-i-l) a^{m-i-l} b^l c^{i+l-j} d^{j-l-1}
/// (1-based i, j); only terms with all exponents nonnegative contribute.
template <class T>
Matrix<T> rep_matrix(std::size_t m, const Sl2<T>& g)
{
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "representation dimension must be >= 1");
    const long mm = static_cast<long>(m);
    Matrix<T> z(m, m);
    for (long i = 1; i <= mm; ++i)
        for (long j = 1; j <= mm; ++j) {
            T s = 0;
            for (long l = 0; l <= mm; ++l) {
                const long ea = mm - i - l, eb = l, ec = i + l - j, ed = j - l - 1;
                if (ea < 0 || ec < 0 || ed < 0) continue;
                Integer coef = detail::binomial(j - 1, l) * detail::binomial(mm - j, mm - i - l);
                if (coef == 0) continue;
                s += T(coef) * detail::power(g.a, ea) * detail::power(g.b, eb) * detail::power(g.c, ec) * detail::power(g.d, ed);
            }
            z(i - 1, j - 1) = s;
        }
    return z;
}

/// alpha_j^2 = binom(2n-1, j-1) and N = prod_j alpha_j^2.
struct AlphaData {
    std::size_t n = 0;
    std::vector<Integer> alpha_sq;
    Integer big_n = 1;

    static AlphaData make(std::size_t n)
    {
        if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
        AlphaData a;
        a.n = n;
        for (std::size_t j = 1; j <= 2 * n; ++j) {
            a.alpha_sq.push_back(detail::binomial(static_cast<long>(2 * n - 1), static_cast<long>(j - 1)));
            a.big_n *= a.alpha_sq.back();
        }
        return a;
    }
};

/// J'_{ij} = (N / alpha_j^2) (-1)^j when i + j = 2n + 1 (1-based), else 0.
/// N <u1, J u2> = w1^T J' w2 for w = D u.
inline IntMatrix rescaled_symplectic(std::size_t n)
{
    auto al = AlphaData::make(n);
    const std::size_t two_n = 2 * n;
    IntMatrix j(two_n, two_n);
    for (std::size_t col = 1; col <= two_n; ++col) {
        const std::size_t row = two_n + 1 - col;
        Integer v = al.big_n / al.alpha_sq[col - 1];
        j(row - 1, col - 1) = (col % 2 == 0) ? v : Integer(-v);
    }
    return j;
}

/// A point of Gamma_{2n+1} in rescaled integer coordinates.
struct HeisenbergPoint {
    IntVector w;
    Integer m = 0;

    static HeisenbergPoint identity(std::size_t n) { return {IntVector(2 * n), 0}; }
    std::size_t n() const { return w.size() / 2; }
    bool is_central() const
    {
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }
    friend bool operator==(const HeisenbergPoint&, const HeisenbergPoint&) = default;
    friend bool operator<(const HeisenbergPoint& x, const HeisenbergPoint& y)
    {
        if (x.w != y.w) return x.w < y.w;
        return x.m < y.m;
    }
};

inline Integer pairing(const IntMatrix& jp, const IntVector& w1, const IntVector& w2) { return dot(w1, jp * w2); }

/// Group law of Gamma_{2n+1} for a fixed n, with J' cached.
class HeisenbergLattice {
public:
    explicit HeisenbergLattice(std::size_t n) : n_(n), jp_(rescaled_symplectic(n)) {}

    std::size_t n() const { return n_; }
    const IntMatrix& form() const { return jp_; }

    HeisenbergPoint mul(const HeisenbergPoint& p, const HeisenbergPoint& q) const
    {
        check(p);
        check(q);
        return {p.w + q.w, p.m + q.m + pairing(jp_, p.w, q.w)};
    }
    HeisenbergPoint inverse(const HeisenbergPoint& p) const
    {
        check(p);
        IntVector w = p.w;
        for (auto& x : w) x = -x;
        return {w, -p.m};
    }
    HeisenbergPoint commutator(const HeisenbergPoint& p, const HeisenbergPoint& q) const
    {
        return mul(mul(mul(p, q), inverse(p)), inverse(q));
    }
    /// (w, m) -> (Z'(A) w, m)
    HeisenbergPoint act(const Sl2Element& g, const HeisenbergPoint& p) const { return act(rep_matrix(2 * n_, g), p); }
    HeisenbergPoint act(const IntMatrix& z, const HeisenbergPoint& p) const
    {
        check(p);
        return {z * p.w, p.m};
    }

private:
    void check(const HeisenbergPoint& p) const
    {
        if (p.w.size() != 2 * n_) throw Error(ErrorKind::DimensionMismatch, "Heisenberg point of wrong size");
    }
    std::size_t n_;
    IntMatrix jp_;
};

/// Element (v, A) of Z^m x| SL(2,Z).
struct ZnElement {
    IntVector v;
    Sl2Element g;
    friend bool operator==(const ZnElement&, const ZnElement&) = default;
};

/// Element (p, A) of Gamma_{2n+1} x| SL(2,Z).
struct GammaElement {
    HeisenbergPoint p;
    Sl2Element g;
    friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

/// (v, A)(w, B) = (v + Z'(A) w, AB)
inline ZnElement semidirect_mul(const ZnElement& x, const ZnElement& y)
{
    if (x.v.size() != y.v.size()) throw Error(ErrorKind::DimensionMismatch, "translation parts differ in length");
    return {x.v + rep_matrix(x.v.size(), x.g) * y.v, x.g * y.g};
}

inline ZnElement semidirect_inverse(const ZnElement& x)
{
    auto gi = x.g.inverse();
    IntVector v = rep_matrix(x.v.size(), gi) * x.v;
    for (auto& c : v) c = -c;
    return {v, gi};
}

/// (p, A)(q, B) = (p . act(A, q), AB)
inline GammaElement semidirect_mul(const HeisenbergLattice& h, const GammaElement& x, const GammaElement& y)
{
    return {h.mul(x.p, h.act(x.g, y.p)), x.g * y.g};
}

inline GammaElement semidirect_inverse(const HeisenbergLattice& h, const GammaElement& x)
{
    auto gi = x.g.inverse();
    return {h.act(gi, h.inverse(x.p)), gi};
}

} // namespace liewa
