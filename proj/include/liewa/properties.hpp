#pragma once

// Randomized property suites behind `liewa selftest` and `liewa rep --check`.
// Every suite is deterministic given (trials, seed).

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liewa/constructions.hpp"
#include "liewa/orbit_lab.hpp"
#include "liewa/report.hpp"

namespace liewa {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
    bool ok() const { return failed == 0; }
};

namespace detail {

/// Records one trial outcome; a nonempty message is a failure.
struct Tally {
    SuiteResult r;
    void check(bool ok, const std::function<std::string()>& why)
    {
        if (ok) {
            ++r.passed;
            return;
        }
        if (r.failed++ == 0) r.first_failure = why();
    }
};

inline std::mt19937_64 suite_rng(std::uint64_t seed, std::string_view name)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(std::hash<std::string_view>{}(name))};
    return std::mt19937_64(seq);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline RatMatrix random_rational_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Rational q(uniform(rng, -5, 5), uniform(rng, 1, 5));
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

inline Integer random_integer(std::mt19937_64& rng)
{
    Integer v(std::to_string(rng() >> 1));
    v *= Integer(std::to_string(rng() >> 1));
    return (rng() & 1) ? Integer(-v) : v;
}

inline const Sl2Element& random_element(const Ball& ball, std::mt19937_64& rng)
{
    return ball.entries()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ball.size()) - 1))].g;
}

inline IntVector random_int_vector(std::size_t n, std::mt19937_64& rng, long bound)
{
    IntVector v(n);
    for (auto& x : v) x = uniform(rng, -bound, bound);
    return v;
}

inline HeisenbergPoint random_point(std::size_t n, std::mt19937_64& rng, long bound = 20)
{
    return {random_int_vector(2 * n, rng, bound), Integer(uniform(rng, -bound, bound))};
}

inline bool all_integral(const RatMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline std::string str(const auto& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string str(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

inline const std::vector<NamedAlgebra>& cached_builder_corpus()
{
    static const auto corpus = builder_corpus();
    return corpus;
}

} // namespace detail

// ---- exact linear algebra -------------------------------------------------

inline SuiteResult suite_kernel(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"linalg.kernel"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    for (std::size_t k = 0; k < trials; ++k) {
        auto m = detail::random_rational_matrix(detail::uniform(rng, 1, 6), detail::uniform(rng, 1, 6), rng);
        // force rank deficiency half the time
        if (m.rows() > 1 && (k & 1))
            for (std::size_t j = 0; j < m.cols(); ++j) m(m.rows() - 1, j) = m(0, j) * Rational(2) - m(1 % m.rows(), j);
        auto ker = kernel(m);
        bool ok = ker.cols() + rank(m) == m.cols();
        for (std::size_t j = 0; j < ker.cols(); ++j) ok = ok && is_zero(m * ker.column(j));
        t.check(ok, [&] { return "kernel/rank-nullity failure on\n" + detail::str(m); });
    }
    return t.r;
}

inline SuiteResult suite_signature(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"linalg.signature_congruence"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t n = detail::uniform(rng, 1, 6);
        auto a = detail::random_rational_matrix(n, n, rng);
        auto s = a + a.transpose();
        RatMatrix p = detail::random_rational_matrix(n, n, rng);
        while (determinant(p) == 0) p = detail::random_rational_matrix(n, n, rng);
        t.check(symmetric_signature(p.transpose() * s * p) == symmetric_signature(s),
                [&] { return "signature changed under congruence of\n" + detail::str(s); });
    }
    return t.r;
}

inline SuiteResult suite_rational(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"rational.exact"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    for (std::size_t k = 0; k < trials; ++k) {
        Integer a = detail::random_integer(rng), b = detail::random_integer(rng);
        Integer c = detail::random_integer(rng), d = detail::random_integer(rng);
        if (b == 0 || d == 0) continue;
        Rational p(a, b), q(c, d);
        p.canonicalize();
        q.canonicalize();
        Rational x = (p + q) * Rational(b * d);
        t.check(is_integer(x) && x.get_num() == a * d + c * b, [&] { return "a/b + c/d mismatch for " + to_string(a) + "/" + to_string(b); });
    }
    return t.r;
}

// ---- Lie algebras ----------------------------------------------------------

inline SuiteResult suite_jacobi(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"lie.jacobi"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    for (const auto& [name, g] : detail::cached_builder_corpus())
        for (std::size_t k = 0; k < trials; ++k) {
            auto x = detail::random_vector(g.dim(), rng), y = detail::random_vector(g.dim(), rng), z = detail::random_vector(g.dim(), rng);
            auto res = g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
            t.check(is_zero(res), [&] { return "Jacobi residual nonzero in " + name; });
        }
    return t.r;
}

inline SuiteResult suite_killing_invariance(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"lie.killing_invariance"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    for (const auto& [name, g] : detail::cached_builder_corpus())
        for (std::size_t k = 0; k < trials; ++k) {
            auto x = detail::random_vector(g.dim(), rng), y = detail::random_vector(g.dim(), rng), z = detail::random_vector(g.dim(), rng);
            t.check(g.killing(g.bracket(x, y), z) + g.killing(y, g.bracket(x, z)) == 0,
                    [&] { return "Killing form not ad-invariant in " + name; });
        }
    return t.r;
}

inline SuiteResult suite_derived_series(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"lie.derived_series"}};
    if (trials == 0) return t.r;
    std::vector<NamedAlgebra> solvable;
    for (const auto& a : detail::cached_builder_corpus())
        if (is_solvable(a.algebra)) solvable.push_back(a);
    for (std::size_t k = 0; k < std::min<std::size_t>(trials, 10); ++k) {
        auto a = random_semidirect(seed + k);
        solvable.push_back({a.name + " radical", restrict_to(a.algebra, radical(a.algebra))});
    }
    for (const auto& [name, g] : solvable) {
        auto ds = derived_series(g);
        bool ok = ds.back().is_zero();
        for (std::size_t i = 1; i < ds.size(); ++i) ok = ok && ds[i].dim() < ds[i - 1].dim();
        t.check(ok, [&] { return "derived series of " + name + " does not strictly decrease to 0"; });
    }
    return t.r;
}

inline SuiteResult suite_ideal_closure(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"lie.ideal_closure"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    for (const auto& [name, g] : detail::cached_builder_corpus())
        for (std::size_t k = 0; k < std::min<std::size_t>(trials, 5); ++k) {
            auto i = ideal_closure(g, Subspace::span(g.dim(), {detail::random_vector(g.dim(), rng)}));
            t.check(is_ideal(g, i), [&] { return "ideal closure not an ideal in " + name; });
        }
    return t.r;
}

// ---- structure theory --------------------------------------------------------

inline std::vector<NamedAlgebra> structure_corpus(std::size_t randoms, std::uint64_t seed)
{
    auto out = detail::cached_builder_corpus();
    for (std::size_t k = 0; k < randoms; ++k) out.push_back(random_semidirect(seed + k));
    return out;
}

/// Exact Levi contracts: dims add up, levi closed under bracket, radical a
/// solvable ideal, levi Killing form nondegenerate, radical + levi = g.
inline std::optional<std::string> levi_contract_failure(const LieAlgebra& g)
{
    auto ld = levi(g);
    if (ld.radical.dim() + ld.levi.dim() != g.dim()) return "dim(radical) + dim(levi) != dim(g)";
    if (!(ld.radical + ld.levi == whole(g))) return "radical + levi != g";
    if (!is_subalgebra(g, ld.levi)) return "levi not closed under bracket";
    if (!is_ideal(g, ld.radical)) return "radical not an ideal";
    if (!is_solvable(g, ld.radical)) return "radical not solvable";
    if (!killing_nondegenerate(restrict_to(g, ld.levi))) return "levi Killing form degenerate";
    return std::nullopt;
}

inline SuiteResult suite_levi(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"structure.levi"}};
    if (trials == 0) return t.r;
    for (const auto& [name, g] : structure_corpus(std::min<std::size_t>(trials, 10), seed)) {
        auto fail = levi_contract_failure(g);
        t.check(!fail, [&] { return name + ": " + *fail; });
    }
    return t.r;
}

inline SuiteResult suite_radical_contains(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"structure.radical_contains"}};
    if (trials == 0) return t.r;
    for (const auto& [name, g] : structure_corpus(std::min<std::size_t>(trials, 10), seed)) {
        auto r = radical(g);
        // center, and the ideal generated by the last nonzero term of the lower central series of r
        auto seeds = std::vector<Subspace>{center(g)};
        auto ds = derived_series(g, r);
        if (ds.size() >= 2) seeds.push_back(ideal_closure(g, ds[ds.size() - 2]));
        for (const auto& s : seeds) t.check(r.contains(s), [&] { return name + ": radical misses a solvable ideal"; });
    }
    return t.r;
}

inline SuiteResult suite_split_blocks(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"structure.split_blocks"}};
    if (trials == 0) return t.r;
    for (const auto& [name, g] : structure_corpus(std::min<std::size_t>(trials, 10), seed)) {
        auto ld = levi(g);
        if (ld.levi.is_zero()) continue;
        auto ideals = split_semisimple(g, ld.levi, seed);
        auto s = restrict_to(g, ld.levi);
        // Killing form of s in the concatenated ideal basis must be block diagonal
        std::vector<RatVector> cols;
        std::vector<std::size_t> block;
        for (std::size_t b = 0; b < ideals.size(); ++b)
            for (const auto& v : ideals[b].vectors()) {
                cols.push_back(*ld.levi.coordinates(v));
                block.push_back(b);
            }
        bool ok = cols.size() == s.dim();
        for (std::size_t i = 0; ok && i < cols.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (block[i] != block[j] && s.killing(cols[i], cols[j]) != 0) ok = false;
        t.check(ok, [&] { return name + ": simple ideals not Killing-orthogonal or do not span"; });
    }
    return t.r;
}

inline SuiteResult suite_compact_shortcut(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"structure.compact_shortcut"}};
    if (trials == 0) return t.r;
    for (const auto& spec : {"so3", "so 5"}) {
        auto cat = Catalog::builtin();
        auto rec = identify_real_form(build_named(spec), cat, seed);
        t.check(cat.lookups() == 0 && rec.real_rank == 0, [&] { return std::string(spec) + ": catalog consulted for a compact form"; });
    }
    return t.r;
}

inline SuiteResult suite_catalog_collision(std::size_t trials, std::uint64_t)
{
    detail::Tally t{{"structure.catalog_collision"}};
    if (trials == 0) return t.r;
    auto recs = Catalog::builtin().records();
    recs.push_back(recs.front());
    recs.back().name = "duplicate";
    bool rejected = false;
    try {
        Catalog c(recs);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::CatalogError;
    }
    t.check(rejected, [] { return "colliding catalog keys accepted"; });
    return t.r;
}

// ---- verdict -----------------------------------------------------------------

inline SuiteResult suite_dichotomy(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"verdict.dichotomy"}};
    if (trials == 0) return t.r;
    const auto cat = Catalog::builtin();
    for (const auto& [name, g] : structure_corpus(std::min<std::size_t>(trials, 10), seed)) {
        auto v = decide(g, cat, seed);
        if (v.levi_dim == 0) continue;
        bool low_rank = std::all_of(v.factors.begin(), v.factors.end(), [](const auto& f) { return f.form.real_rank <= 1; });
        if (!v.weakly_amenable && low_rank)
            t.check(dichotomy_case(g, cat, seed) == Dichotomy::CaseB, [&] { return name + ": expected case-B"; });
        else
            t.check(dichotomy_case(g, cat, seed) == v.dichotomy, [&] { return name + ": dichotomy_case disagrees with decide"; });
    }
    return t.r;
}

inline SuiteResult suite_product_law(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"verdict.product_law"}};
    if (trials == 0) return t.r;
    const auto cat = Catalog::builtin();
    auto corpus = product_corpus();
    std::vector<Extended> c;
    for (const auto& a : corpus) c.push_back(decide(a.algebra, cat, seed).constant);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            auto got = decide(direct_sum(corpus[i].algebra, corpus[j].algebra), cat, seed).constant;
            t.check(got == c[i] * c[j], [&] { return corpus[i].name + " + " + corpus[j].name + ": constant " + got.str(); });
        }
    return t.r;
}

inline SuiteResult suite_permutation(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"verdict.permutation_invariance"}};
    auto rng = detail::suite_rng(seed, t.r.name);
    const auto cat = Catalog::builtin();
    const std::size_t per = std::min<std::size_t>(trials, 2);
    for (const auto& [name, g] : detail::cached_builder_corpus()) {
        if (per == 0) break;
        auto base = decide(g, cat, seed);
        for (std::size_t k = 0; k < per; ++k) {
            std::vector<std::size_t> perm(g.dim());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto v = decide(permute_basis(g, perm), cat, seed);
            t.check(v.weakly_amenable == base.weakly_amenable && v.constant == base.constant,
                    [&] { return name + ": verdict changed under basis permutation"; });
        }
    }
    return t.r;
}

// ---- constructions -------------------------------------------------------------

inline SuiteResult suite_builders(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"constructions.validate"}};
    if (trials == 0) return t.r;
    for (const auto& [name, g] : structure_corpus(std::min<std::size_t>(trials, 10), seed)) {
        bool ok = true;
        try {
            LieAlgebra::validate(g.constants());
        } catch (const Error&) {
            ok = false;
        }
        t.check(ok, [&] { return name + " fails validation"; });
    }
    return t.r;
}

inline SuiteResult suite_sl2_modules(std::size_t trials, std::uint64_t)
{
    detail::Tally t{{"constructions.sl2_module"}};
    for (std::size_t m = 1; m <= std::min<std::size_t>(trials, 10); ++m) {
        auto act = irreducible_sl2_module(m);
        bool traces = act.h.trace() == 0 && act.e.trace() == 0 && act.f.trace() == 0;
        auto cas = act.e * act.f + act.f * act.e + act.h * act.h * Rational(1, 2);
        Rational expect(static_cast<long>(m * m) - 1, 2);
        expect.canonicalize();
        t.check(traces && cas == RatMatrix::identity(m) * expect && act.satisfies_relations(),
                [&] { return "module m=" + std::to_string(m) + ": trace or Casimir mismatch"; });
        // H eigenvalues against rep_matrix(m, diag(a, 1/a))
        Rational a(3, 2);
        auto d = rep_matrix(m, Sl2Rational{a, 0, 0, Rational(1 / a)});
        bool diag_ok = true;
        for (std::size_t i = 0; i < m; ++i) {
            long ex = static_cast<long>(m) - 1 - 2 * static_cast<long>(i);
            Rational expect_d = ex >= 0 ? detail::power(a, ex) : detail::power(Rational(1 / a), -ex);
            if (d(i, i) != expect_d || act.h(i, i) != Rational(ex)) diag_ok = false;
        }
        t.check(diag_ok, [&] { return "m=" + std::to_string(m) + ": H eigenvalues disagree with rep_matrix exponents"; });
    }
    return t.r;
}

inline SuiteResult suite_h_sl2_center(std::size_t trials, std::uint64_t)
{
    detail::Tally t{{"constructions.h_sl2_center"}};
    for (std::size_t n = 1; n <= std::min<std::size_t>(trials, 3); ++n) {
        auto g = h_sl2(n);
        const std::size_t z = 2 * n; // central basis vector of the radical
        bool ok = true;
        for (std::size_t s = 2 * n + 1; s < g.dim(); ++s)
            if (!is_zero(g.ad_basis(s).column(z))) ok = false;
        t.check(ok, [&] { return "h_sl2(" + std::to_string(n) + "): action does not fix the center"; });
    }
    return t.r;
}

// ---- explicit groups -----------------------------------------------------------

struct CheckResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

namespace detail {

inline const Ball& ball6()
{
    static const Ball b = Ball::build(6);
    return b;
}

inline CheckResult run_checks(std::size_t trials, const std::function<std::optional<std::string>()>& trial)
{
    CheckResult r;
    for (std::size_t k = 0; k < trials; ++k) {
        ++r.trials;
        if (auto f = trial()) {
            if (r.failures++ == 0) r.first_failure = *f;
        }
    }
    return r;
}

} // namespace detail

/// Z'(AB) = Z'(A) Z'(B), integer entries, det 1.
inline CheckResult check_rep_hom(std::size_t m, std::size_t trials, std::uint64_t seed)
{
    auto rng = detail::suite_rng(seed, "rep.hom");
    return detail::run_checks(trials, [&]() -> std::optional<std::string> {
        const auto& a = detail::random_element(detail::ball6(), rng);
        const auto& b = detail::random_element(detail::ball6(), rng);
        auto za = rep_matrix(m, a), zb = rep_matrix(m, b);
        if (!(rep_matrix(m, a * b) == za * zb)) return "Z'(AB) != Z'(A)Z'(B) for A=" + detail::str(a) + " B=" + detail::str(b);
        if (determinant(to_rational(za)) != 1) return "det Z'(A) != 1 for A=" + detail::str(a);
        return std::nullopt;
    });
}

/// Z'(A)^T J' Z'(A) = J' (m = 2n even).
inline CheckResult check_rep_sympl(std::size_t m, std::size_t trials, std::uint64_t seed)
{
    if (m % 2) throw Error(ErrorKind::InvalidArgument, "sympl check needs even m");
    auto rng = detail::suite_rng(seed, "rep.sympl");
    const auto jp = rescaled_symplectic(m / 2);
    return detail::run_checks(trials, [&]() -> std::optional<std::string> {
        const auto& a = detail::random_element(detail::ball6(), rng);
        auto z = rep_matrix(m, a);
        if (!(z.transpose() * jp * z == jp)) return "Z'(A)^T J' Z'(A) != J' for A=" + detail::str(a);
        return std::nullopt;
    });
}

/// Gamma_{m+1} with m = 2n: products, inverses and the SL(2,Z) action are
/// well defined on integer points, act(A,.) is an automorphism, p p^-1 = e.
inline CheckResult check_lattice(std::size_t m, std::size_t trials, std::uint64_t seed)
{
    if (m % 2) throw Error(ErrorKind::InvalidArgument, "lattice check needs even m");
    auto rng = detail::suite_rng(seed, "rep.lattice");
    HeisenbergLattice h(m / 2);
    return detail::run_checks(trials, [&]() -> std::optional<std::string> {
        auto p = detail::random_point(h.n(), rng), q = detail::random_point(h.n(), rng);
        const auto& a = detail::random_element(detail::ball6(), rng);
        if (!(h.mul(p, h.inverse(p)) == HeisenbergPoint::identity(h.n()))) return std::string("p p^-1 != identity");
        if (!(h.act(a, h.mul(p, q)) == h.mul(h.act(a, p), h.act(a, q)))) return "act(A, .) not an automorphism for A=" + detail::str(a);
        if (pairing(h.form(), p.w, p.w) != 0) return std::string("w^T J' w != 0");
        return std::nullopt;
    });
}

/// Associativity and inverses in Z^m x| SL(2,Z), and for even m in Gamma_{m+1} x| SL(2,Z).
inline CheckResult check_assoc(std::size_t m, std::size_t trials, std::uint64_t seed)
{
    auto rng = detail::suite_rng(seed, "rep.assoc");
    std::optional<HeisenbergLattice> h;
    if (m % 2 == 0) h.emplace(m / 2);
    return detail::run_checks(trials, [&]() -> std::optional<std::string> {
        std::array<ZnElement, 3> x;
        for (auto& e : x) e = {detail::random_int_vector(m, rng, 9), detail::random_element(detail::ball6(), rng)};
        if (!(semidirect_mul(semidirect_mul(x[0], x[1]), x[2]) == semidirect_mul(x[0], semidirect_mul(x[1], x[2]))))
            return std::string("Z^m semidirect product not associative");
        const ZnElement e{IntVector(m), Sl2Element::identity()};
        if (!(semidirect_mul(x[0], semidirect_inverse(x[0])) == e)) return std::string("Z^m inverse failure");
        if (h) {
            std::array<GammaElement, 3> y;
            for (auto& g : y) g = {detail::random_point(h->n(), rng), detail::random_element(detail::ball6(), rng)};
            if (!(semidirect_mul(*h, semidirect_mul(*h, y[0], y[1]), y[2]) == semidirect_mul(*h, y[0], semidirect_mul(*h, y[1], y[2]))))
                return std::string("Gamma semidirect product not associative");
            const GammaElement ge{HeisenbergPoint::identity(h->n()), Sl2Element::identity()};
            if (!(semidirect_mul(*h, y[0], semidirect_inverse(*h, y[0])) == ge)) return std::string("Gamma inverse failure");
        }
        return std::nullopt;
    });
}

inline SuiteResult from_check(std::string name, const CheckResult& c)
{
    return {std::move(name), c.trials - c.failures, c.failures, c.first_failure};
}

inline SuiteResult suite_groups(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"groups.representation"}};
    for (std::size_t m = 1; m <= 8; ++m) {
        auto r = check_rep_hom(m, trials, seed + m);
        t.r.passed += r.trials - r.failures;
        if (r.failures && !t.r.failed) t.r.first_failure = r.first_failure;
        t.r.failed += r.failures;
        if (m % 2 == 0)
            for (const auto& c : {check_rep_sympl(m, trials, seed + m), check_lattice(m, trials, seed + m), check_assoc(m, trials, seed + m)}) {
                t.r.passed += c.trials - c.failures;
                if (c.failures && !t.r.failed) t.r.first_failure = c.first_failure;
                t.r.failed += c.failures;
            }
    }
    if (trials > 0)
        for (std::size_t n = 1; n <= 8; ++n) {
            auto al = AlphaData::make(n);
            bool pal = true;
            for (std::size_t j = 0; j < 2 * n; ++j) pal = pal && al.alpha_sq[j] == al.alpha_sq[2 * n - 1 - j];
            t.check(pal, [&] { return "alpha_sq not palindromic for n=" + std::to_string(n); });
        }
    return t.r;
}

// ---- orbit lab ---------------------------------------------------------------

inline SuiteResult suite_orbits(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"orbit.growth_coherence_equivariance"}};
    if (trials == 0) return t.r;
    auto rng = detail::suite_rng(seed, t.r.name);
    std::vector<Ball> balls;
    for (std::size_t l = 0; l <= 6; ++l) balls.push_back(Ball::build(l));

    std::size_t prev = 0, size2 = 0, size4 = 0;
    for (std::size_t l = 0; l <= 6; ++l) {
        auto act = LatticeAction::on_zm(2, balls[l]);
        auto sz = orbit(act, IntVector{1, 0}).size();
        t.check(sz >= prev, [&] { return "orbit of (1,0) shrank at L=" + std::to_string(l); });
        prev = sz;
        if (l == 2) size2 = sz;
        if (l == 4) size4 = sz;
    }
    t.check(size4 > size2, [] { return "orbit of (1,0) does not grow from L=2 to L=4"; });

    for (std::size_t k = 0; k < std::min<std::size_t>(trials, 20); ++k) {
        const std::size_t m = detail::uniform(rng, 2, 4);
        const std::size_t l = detail::uniform(rng, 1, 4);
        auto x = detail::random_int_vector(m, rng, 3);
        auto lo = LatticeAction::on_zm(m, balls[l]), hi = LatticeAction::on_zm(m, balls[l + 1]);
        std::set<Sl2Element> a, b;
        for (auto i : stabilizer_fragment(lo, x)) a.insert(balls[l].entries()[i].g);
        for (auto i : stabilizer_fragment(hi, x))
            if (balls[l].contains(balls[l + 1].entries()[i].g)) b.insert(balls[l + 1].entries()[i].g);
        t.check(a == b, [&] { return "stabilizer fragment incoherent between L and L+1"; });

        const auto& bb = balls[2].entries()[detail::uniform(rng, 0, static_cast<long>(balls[2].size()) - 1)];
        auto y = rep_matrix(m, bb.g) * x;
        auto lhs = orbit(LatticeAction::on_zm(m, balls[l]), y);
        auto rhs = orbit(LatticeAction::on_zm(m, balls[l + bb.word.size()]), x);
        t.check(std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end()),
                [&] { return "equivariance failed for B=" + bb.word; });
    }
    return t.r;
}

/// Commutativity of stabilizer fragments for every nonzero x in [-box, box]^m.
inline CheckResult stabilizers_commute_zm(std::size_t m, long box, const Ball& ball)
{
    CheckResult r;
    auto act = LatticeAction::on_zm(m, ball);
    for (const auto& x : box_points(m, box)) {
        if (std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; })) continue;
        ++r.trials;
        auto w = commutativity_witness(elements(ball, stabilizer_fragment(act, x)));
        if (!w.commutes && r.failures++ == 0) r.first_failure = "stabilizer of " + detail::str(x) + " not commutative";
    }
    return r;
}

/// Same for every non-central point of the Gamma box.
inline CheckResult stabilizers_commute_gamma(std::size_t n, long box, const Ball& ball)
{
    CheckResult r;
    auto act = LatticeAction::on_gamma(n, ball);
    for (auto& v : box_points(2 * n + 1, box)) {
        HeisenbergPoint p;
        p.m = v.back();
        v.pop_back();
        p.w = std::move(v);
        if (p.is_central()) continue;
        ++r.trials;
        auto w = commutativity_witness(elements(ball, stabilizer_fragment(act, p)));
        if (!w.commutes && r.failures++ == 0) r.first_failure = "stabilizer of a Gamma point not commutative";
    }
    return r;
}

inline SuiteResult suite_stabilizers(std::size_t trials, std::uint64_t)
{
    detail::Tally t{{"orbit.stabilizers_commute"}};
    if (trials == 0) return t.r;
    const auto b5 = Ball::build(5), b4 = Ball::build(4);
    for (std::size_t m : {2, 3, 4}) {
        auto c = stabilizers_commute_zm(m, m == 4 ? 2 : 3, b5);
        t.check(c.ok(), [&] { return c.first_failure; });
    }
    auto c = stabilizers_commute_gamma(1, 3, b4);
    t.check(c.ok(), [&] { return c.first_failure; });
    return t.r;
}

// ---- cli-level round trip ------------------------------------------------------

inline SuiteResult suite_roundtrip(std::size_t trials, std::uint64_t seed)
{
    detail::Tally t{{"cli.roundtrip_determinism"}};
    if (trials == 0) return t.r;
    const auto cat = Catalog::builtin();
    for (const auto& [name, g] : detail::cached_builder_corpus()) {
        auto direct = emit_report(analyze(name, g, cat, seed));
        auto reparsed = emit_report(analyze(name, parse_algebra(emit_algebra(g)), cat, seed));
        auto again = emit_report(analyze(name, g, cat, seed));
        t.check(direct == reparsed && direct == again && parse_report(direct) == analyze(name, g, cat, seed),
                [&] { return name + ": report differs after round trip"; });
    }
    return t.r;
}

using SuiteFn = SuiteResult (*)(std::size_t, std::uint64_t);

inline const std::vector<SuiteFn>& all_suites()
{
    static const std::vector<SuiteFn> s{
        suite_kernel,           suite_signature,       suite_rational,         suite_jacobi,
        suite_killing_invariance, suite_derived_series, suite_ideal_closure,    suite_levi,
        suite_radical_contains, suite_split_blocks,    suite_compact_shortcut, suite_catalog_collision,
        suite_dichotomy,        suite_product_law,     suite_permutation,      suite_builders,
        suite_sl2_modules,      suite_h_sl2_center,    suite_groups,           suite_orbits,
        suite_stabilizers,      suite_roundtrip,
    };
    return s;
}

inline std::vector<SuiteResult> run_selftest(std::size_t trials, std::uint64_t seed)
{
    std::vector<SuiteResult> out;
    for (auto fn : all_suites()) out.push_back(fn(trials, seed));
    return out;
}

} // namespace liewa
