#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace liewa;
using oracle::vec;

namespace {

StructureConstants sl2_constants()
{
    StructureConstants c(3, {"h", "e", "f"});
    c.add_term(0, 1, 1, 2);
    c.add_term(0, 2, 2, -2);
    c.add_term(1, 2, 0, 1);
    return c;
}

} // namespace

TEST(Validate, AbelianIsValid) { EXPECT_NO_THROW(LieAlgebra::validate(StructureConstants(4))); }

TEST(Validate, Sl2IsValid) { EXPECT_NO_THROW(LieAlgebra::validate(sl2_constants())); }

TEST(Validate, CorruptedSl2ReportsTripleAndDefect)
{
    auto c = sl2_constants();
    c.at(1, 2, 0) = 0; // [e,f] = e instead of h
    c.at(2, 1, 0) = 0;
    c.add_term(1, 2, 1, 1);
    try {
        LieAlgebra::validate(c);
        FAIL() << "expected jacobi_violation";
    } catch (const ValidationError& e) {
        ASSERT_EQ(e.violations().size(), 1u);
        const auto& v = e.violations().front();
        EXPECT_EQ(v.kind, ErrorKind::JacobiViolation);
        EXPECT_EQ(std::tie(v.i, v.j, v.k), std::make_tuple(0u, 1u, 2u));
        // 2[e,f] + [e,h] + 2[f,e] = 2e - 2e - 2e
        EXPECT_EQ(v.defect, vec({0, -2, 0}));
    }
}

TEST(Validate, AntisymmetryViolation)
{
    StructureConstants c(2);
    c.at(0, 1, 0) = 1; // no matching [x1, x0]
    try {
        LieAlgebra::validate(c);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AntisymmetryViolation);
    }
}

TEST(Bracket, HeisenbergAndAntisymmetry)
{
    auto h = heisenberg(3);
    EXPECT_EQ(h.bracket(vec({1, 0, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
    std::mt19937_64 rng(3);
    for (const auto& g : {h, sl2(), so3(), abelian(3)}) {
        auto x = detail::random_vector(g.dim(), rng);
        EXPECT_TRUE(is_zero(g.bracket(x, x)));
    }
    EXPECT_TRUE(is_zero(abelian(3).bracket(vec({1, 2, 3}), vec({4, 5, 6}))));
}

TEST(Ad, ColumnsAreBrackets)
{
    auto g = sl2();
    auto adh = g.ad(vec({1, 0, 0}));
    EXPECT_EQ(adh, oracle::mat({{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
    EXPECT_TRUE(abelian(2).ad(vec({1, 1})).is_zero());
    std::mt19937_64 rng(4);
    auto x = detail::random_vector(3, rng), y = detail::random_vector(3, rng);
    EXPECT_EQ(g.ad(x + y), g.ad(x) + g.ad(y));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g.ad(x).column(j), g.bracket(x, unit_vector(3, j)));
}

TEST(Killing, Sl2Values)
{
    auto g = sl2();
    EXPECT_EQ(g.killing(vec({1, 0, 0}), vec({1, 0, 0})), 8);
    EXPECT_EQ(g.killing(vec({0, 1, 0}), vec({0, 0, 1})), 4);
    EXPECT_EQ(g.killing(vec({1, 0, 0}), vec({0, 1, 0})), 0);
}

TEST(Killing, MatchesStructureConstantOracle)
{
    for (const auto& [name, g] : builder_corpus()) EXPECT_EQ(g.killing_matrix(), oracle::killing(g)) << name;
}

TEST(Killing, AbelianZeroAndSo3NegativeDefinite)
{
    EXPECT_TRUE(abelian(3).killing_matrix().is_zero());
    auto s = oracle::signature(so3().killing_matrix());
    EXPECT_EQ(s, (Signature{0, 3, 0}));
}

TEST(DerivedSeries, Examples)
{
    auto ab = derived_series(abelian(3));
    ASSERT_EQ(ab.size(), 2u);
    EXPECT_TRUE(ab[1].is_zero());

    auto h = heisenberg(3);
    auto ds = derived_series(h);
    ASSERT_EQ(ds.size(), 3u);
    EXPECT_EQ(ds[1], center(h));
    EXPECT_TRUE(is_solvable(h));

    // D^1 = sl2, so the chain stops at its first repeat
    auto s = derived_series(sl2());
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(bracket_space(sl2(), s[0], s[0]), whole(sl2()));
    EXPECT_FALSE(is_solvable(sl2()));
}

TEST(DerivedSeries, RejectsNonSubalgebra)
{
    auto g = sl2();
    EXPECT_THROW(derived_series(g, Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})})), Error);
}

TEST(LowerCentralSeries, NilpotencyClass)
{
    EXPECT_EQ(nilpotency_class(heisenberg(3)), 2u);
    EXPECT_EQ(nilpotency_class(abelian(2)), 1u);
    EXPECT_FALSE(is_nilpotent(sl2()));
    EXPECT_FALSE(nilpotency_class(sl2()));
}

TEST(IdealClosure, Examples)
{
    auto g = sl2();
    EXPECT_EQ(ideal_closure(g, whole(g)), whole(g));
    EXPECT_EQ(ideal_closure(g, Subspace::span(3, {vec({0, 1, 0})})), whole(g));
    auto h = heisenberg(3);
    EXPECT_EQ(ideal_closure(h, center(h)), center(h));
}

TEST(Center, Examples)
{
    EXPECT_EQ(center(heisenberg(3)), Subspace::span(3, {vec({0, 0, 1})}));
    EXPECT_TRUE(center(sl2()).is_zero());
    EXPECT_EQ(center(abelian(3)), Subspace::whole(3));
}

TEST(Centralizer, OfCartanInSl2)
{
    auto g = sl2();
    EXPECT_EQ(centralizer(g, Subspace::span(3, {vec({1, 0, 0})})), Subspace::span(3, {vec({1, 0, 0})}));
}

TEST(BasisChange, PermutationPreservesStructure)
{
    auto g = sl3R();
    std::vector<std::size_t> perm{7, 2, 5, 0, 1, 6, 3, 4};
    auto p = permute_basis(g, perm);
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(p.constant(a, b, c), g.constant(perm[a], perm[b], perm[c]));
}

TEST(BasisChange, ChangeBasisRoundTrip)
{
    std::mt19937_64 rng(8);
    auto g = h_sl2(1);
    auto p = random_unimodular(g.dim(), rng);
    auto q = change_basis(change_basis(g, p), *inverse(p));
    EXPECT_TRUE(same_constants(q, g));
}

TEST(Induced, RejectsNonSubalgebra)
{
    auto g = sl2();
    RatMatrix b(3, 2);
    b(1, 0) = 1;
    b(2, 1) = 1;
    EXPECT_THROW(induced(g, b), Error);
}
