#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace liewa;
using oracle::mat;
using oracle::vec;

namespace {

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

} // namespace

TEST(Builders, AbelianAllZero)
{
    auto g = abelian(3);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(g.ad_basis(i).is_zero());
}

TEST(Builders, Sl2Killing) { EXPECT_EQ(sl2().killing(unit_vector(3, 0), unit_vector(3, 0)), 8); }

TEST(Builders, HeisenbergCenterAndClass)
{
    auto h = heisenberg(3);
    EXPECT_EQ(h.basis_names(), (std::vector<std::string>{"e1", "e2", "z"}));
    EXPECT_EQ(center(h), Subspace::span(3, {vec({0, 0, 1})}));
    EXPECT_EQ(nilpotency_class(h), 2u);
    auto h5 = heisenberg(5);
    EXPECT_EQ(center(h5).dim(), 1u);
    EXPECT_EQ(nilpotency_class(h5), 2u);
}

TEST(Builders, RejectInvalidParameters)
{
    EXPECT_THROW(heisenberg(4), Error);
    EXPECT_THROW(heisenberg(1), Error);
    EXPECT_THROW(h_sl2(0), Error);
    EXPECT_THROW(build_named("nope"), Error);
    EXPECT_THROW(build_named("abelian"), Error);
    EXPECT_THROW(build_named("abelian x"), Error);
    EXPECT_THROW(build_named("sl2 sl2"), Error);
}

TEST(Builders, NamedSpecsMatchDirectCalls)
{
    EXPECT_TRUE(same_constants(build_named("v_sl2 3"), v_sl2(3)));
    EXPECT_TRUE(same_constants(build_named("h_sl2 1"), h_sl2(1)));
    EXPECT_TRUE(same_constants(build_named("direct_sum sl2 heisenberg 3"), direct_sum(sl2(), heisenberg(3))));
    EXPECT_EQ(build_named("direct_sum sl2 so3").dim(), 6u);
    EXPECT_EQ(build_named("h_sl2 1").dim(), 6u);
    EXPECT_EQ(build_named("heisenberg 3").dim(), 3u);
}

TEST(Builders, DirectSumIsBlockDiagonal)
{
    auto g = direct_sum(sl2(), so3());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) EXPECT_TRUE(is_zero(g.basis_bracket(i, j)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                EXPECT_EQ(g.constant(i, j, k), sl2().constant(i, j, k));
                EXPECT_EQ(g.constant(i + 3, j + 3, k + 3), so3().constant(i, j, k));
            }
    // colliding names get a prime
    auto d = direct_sum(sl2(), sl2());
    EXPECT_EQ(d.basis_names()[3], "h'");
}

TEST(Module, TrivialOneDimensional)
{
    auto a = irreducible_sl2_module(1);
    EXPECT_TRUE(a.e.is_zero() && a.f.is_zero() && a.h.is_zero());
}

TEST(Module, TwoDimensional)
{
    auto a = irreducible_sl2_module(2);
    EXPECT_EQ(a.h, mat({{1, 0}, {0, -1}}));
    EXPECT_EQ(a.e, mat({{0, 1}, {0, 0}}));
    EXPECT_EQ(a.f, mat({{0, 0}, {1, 0}}));
    EXPECT_EQ(commutator(a.e, a.f), a.h);
}

TEST(Module, RelationsAndWeights)
{
    for (std::size_t m = 1; m <= 9; ++m) {
        auto a = irreducible_sl2_module(m);
        EXPECT_EQ(commutator(a.h, a.e), a.e * Rational(2));
        EXPECT_EQ(commutator(a.h, a.f), a.f * Rational(-2));
        EXPECT_EQ(commutator(a.e, a.f), a.h);
        for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(a.h(k, k), Rational(static_cast<long>(m) - 1 - 2 * static_cast<long>(k)));
    }
}

TEST(Module, CasimirIsScalar)
{
    for (std::size_t m = 1; m <= 9; ++m) {
        auto a = irreducible_sl2_module(m);
        auto c = a.e * a.f + a.f * a.e + a.h * a.h * Rational(1, 2);
        Rational lambda(static_cast<long>(m * m) - 1, 2);
        lambda.canonicalize();
        EXPECT_EQ(c, RatMatrix::identity(m) * lambda) << "m=" << m;
    }
}

TEST(InvariantForm, TwoDimensional) { EXPECT_EQ(invariant_symplectic(irreducible_sl2_module(2)), mat({{0, 1}, {-1, 0}})); }

TEST(InvariantForm, FourDimensionalAntidiagonalAlternating)
{
    auto w = invariant_symplectic(irreducible_sl2_module(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i + j != 3) EXPECT_EQ(w(i, j), 0);
    EXPECT_EQ(w(0, 3), 1);
    for (std::size_t i = 0; i + 1 < 4; ++i) EXPECT_LT(sgn(w(i, 3 - i)) * sgn(w(i + 1, 2 - i)), 0);
}

TEST(InvariantForm, SkewInvariantNondegenerate)
{
    std::mt19937_64 rng(5);
    for (std::size_t m : {2, 4, 6, 8}) {
        auto a = irreducible_sl2_module(m);
        auto w = invariant_symplectic(a);
        EXPECT_EQ(w.transpose(), w * Rational(-1));
        EXPECT_NE(m <= 6 ? oracle::det(w) : determinant(w), 0);
        for (const auto& x : {a.e, a.f, a.h}) EXPECT_TRUE((x.transpose() * w + w * x).is_zero());
        auto u = detail::random_vector(m, rng);
        EXPECT_EQ(dot(u, w * u), 0);
    }
}

TEST(InvariantForm, OddDimensionHasNone) { EXPECT_THROW(invariant_symplectic(irreducible_sl2_module(3)), Error); }

TEST(Semidirect, TrivialActionIsDirectSum)
{
    auto zero = RatMatrix(3, 3);
    auto g = semidirect(heisenberg(3), sl2(), {zero, zero, zero});
    EXPECT_TRUE(same_constants(g, direct_sum(heisenberg(3), sl2())));
}

TEST(Semidirect, RejectsNonDerivation)
{
    // a nonzero scalar is not a derivation of the Heisenberg algebra
    auto id = RatMatrix::identity(3);
    auto zero = RatMatrix(3, 3);
    try {
        semidirect(heisenberg(3), sl2(), {id, zero, zero});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDerivation);
    }
}

TEST(Semidirect, RejectsNonHomomorphism)
{
    auto a = irreducible_sl2_module(2);
    try {
        semidirect(abelian(2), sl2(), {a.h, a.f, a.e}); // e and f swapped
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHomomorphism);
    }
}

TEST(Semidirect, ModuleFamilies)
{
    auto v2 = v_sl2(2);
    EXPECT_EQ(v2.dim(), 5u);
    EXPECT_EQ(radical(v2), Subspace::span(5, {unit_vector(5, 0), unit_vector(5, 1)}));
    auto h1 = h_sl2(1);
    EXPECT_EQ(h1.dim(), 6u);
    // the sl2 part fixes z
    for (std::size_t s = 3; s < 6; ++s) EXPECT_TRUE(is_zero(h1.basis_bracket(s, 2)));
}

TEST(Corpus, EveryBuilderValidates)
{
    for (const auto& [name, g] : builder_corpus()) EXPECT_NO_THROW(LieAlgebra::validate(g.constants())) << name;
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto r = random_semidirect(s);
        EXPECT_NO_THROW(LieAlgebra::validate(r.algebra.constants())) << r.name;
    }
}

TEST(Corpus, RandomSemidirectIsDeterministic)
{
    auto a = random_semidirect(42), b = random_semidirect(42);
    EXPECT_EQ(a.name, b.name);
    EXPECT_TRUE(same_constants(a.algebra, b.algebra));
}

TEST(CrossModule, WeightsMatchDiagonalRepresentation)
{
    const Rational a(5, 3);
    for (std::size_t m = 1; m <= 8; ++m) {
        auto act = irreducible_sl2_module(m);
        auto z = rep_matrix(m, Sl2Rational{a, 0, 0, Rational(1 / a)});
        for (std::size_t i = 0; i < m; ++i) {
            // H weight w shows up as a^w on the diagonal
            long w = static_cast<long>(act.h(i, i).get_num().get_si());
            Rational expect = 1;
            for (long k = 0; k < std::abs(w); ++k) expect *= w > 0 ? a : Rational(1 / a);
            EXPECT_EQ(z(i, i), expect);
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) EXPECT_EQ(z(i, j), 0);
    }
}
