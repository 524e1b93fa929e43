#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace liewa;
using oracle::vec;

namespace {

/// Independent check of a candidate simple-ideal decomposition.
void expect_valid_split(const LieAlgebra& g, const std::vector<Subspace>& ideals)
{
    std::size_t total = 0;
    for (std::size_t a = 0; a < ideals.size(); ++a) {
        total += ideals[a].dim();
        EXPECT_TRUE(is_ideal(g, ideals[a]));
        for (std::size_t b = a + 1; b < ideals.size(); ++b) {
            EXPECT_TRUE(bracket_space(g, ideals[a], ideals[b]).is_zero());
            for (const auto& x : ideals[a].vectors())
                for (const auto& y : ideals[b].vectors()) EXPECT_EQ(g.killing(x, y), 0);
        }
        // minimality: every basis vector generates the whole ideal inside it
        auto inner = restrict_to(g, ideals[a]);
        for (std::size_t k = 0; k < inner.dim(); ++k)
            EXPECT_EQ(ideal_closure(inner, Subspace::span(inner.dim(), {unit_vector(inner.dim(), k)})).dim(), inner.dim());
    }
    EXPECT_EQ(total, g.dim());
}

} // namespace

TEST(Radical, Examples)
{
    EXPECT_TRUE(radical(sl2()).is_zero());
    EXPECT_EQ(radical(abelian(3)), Subspace::whole(3));
    auto g = v_sl2(3);
    auto r = radical(g);
    EXPECT_EQ(r, Subspace::span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)}));
    // oracle: solvable ideal with semisimple quotient (quotient Killing = restriction to a complement here)
    EXPECT_TRUE(is_ideal(g, r));
    EXPECT_TRUE(is_solvable(g, r));
}

TEST(Radical, ContainsCenterAndSolvableIdeals)
{
    for (const auto& [name, g] : builder_corpus()) {
        auto r = radical(g);
        EXPECT_TRUE(r.contains(center(g))) << name;
        auto nil_seed = ideal_closure(g, bracket_space(g, r, r));
        EXPECT_TRUE(r.contains(nil_seed)) << name;
    }
}

TEST(Levi, SemisimpleAndSolvableExtremes)
{
    auto s = levi(sl3R());
    EXPECT_TRUE(s.radical.is_zero());
    EXPECT_EQ(s.levi, Subspace::whole(8));
    auto h = levi(heisenberg(5));
    EXPECT_TRUE(h.levi.is_zero());
    EXPECT_EQ(h.radical, Subspace::whole(5));
}

TEST(Levi, HeisenbergSl2FactorIsSl2R)
{
    auto g = h_sl2(1);
    auto ld = levi(g);
    ASSERT_EQ(ld.levi.dim(), 3u);
    auto s = restrict_to(g, ld.levi);
    // the only 3-dim real Lie algebra with Killing signature (2,1,0) is sl(2,R)
    EXPECT_EQ(oracle::signature(oracle::killing(s)), (Signature{2, 1, 0}));
    EXPECT_EQ(bracket_space(s, whole(s), whole(s)), whole(s));
}

TEST(Levi, ContractsOnCorpusAndRandomBuilds)
{
    for (const auto& [name, g] : structure_corpus(10, default_seed)) {
        auto fail = levi_contract_failure(g);
        EXPECT_FALSE(fail) << name << ": " << fail.value_or("");
    }
}

TEST(Split, SimpleAlgebraIsOneIdeal)
{
    for (const auto& g : {sl2(), so3(), sl3R(), sl2C_real(), so(5)}) {
        auto ideals = split_semisimple(g);
        ASSERT_EQ(ideals.size(), 1u);
        EXPECT_EQ(ideals[0], whole(g));
    }
}

TEST(Split, Sl2PlusSo3)
{
    auto g = direct_sum(sl2(), so3());
    auto ideals = split_semisimple(g);
    ASSERT_EQ(ideals.size(), 2u);
    expect_valid_split(g, ideals);
    std::vector<Signature> sigs;
    for (const auto& i : ideals) sigs.push_back(oracle::signature(oracle::killing(restrict_to(g, i))));
    std::sort(sigs.begin(), sigs.end());
    EXPECT_EQ(sigs, (std::vector<Signature>{{0, 3, 0}, {2, 1, 0}}));
}

TEST(Split, So4IntoTwoThreeDimensionalIdeals)
{
    auto g = build_named("so4");
    auto ideals = split_semisimple(g);
    ASSERT_EQ(ideals.size(), 2u);
    EXPECT_EQ(ideals[0].dim(), 3u);
    EXPECT_EQ(ideals[1].dim(), 3u);
    expect_valid_split(g, ideals);
}

TEST(Split, HiddenProductInRandomBasis)
{
    std::mt19937_64 rng(77);
    auto g = direct_sum(direct_sum(sl2(), so3()), sl2());
    auto mixed = change_basis(g, random_unimodular(g.dim(), rng));
    auto ideals = split_semisimple(mixed);
    ASSERT_EQ(ideals.size(), 3u);
    expect_valid_split(mixed, ideals);
}

TEST(Split, RejectsDegenerateKilling)
{
    try {
        split_semisimple(heisenberg(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSemisimple);
    }
}

TEST(CartanDimension, Examples)
{
    EXPECT_EQ(cartan_dimension(sl2()), 1u);
    EXPECT_EQ(cartan_dimension(so3()), 1u);
    EXPECT_EQ(cartan_dimension(sl2C_real()), 2u);
    EXPECT_EQ(cartan_dimension(sl3R()), 2u);
}

TEST(RealForm, Examples)
{
    auto cat = Catalog::builtin();
    auto so3r = identify_real_form(so3(), cat);
    EXPECT_EQ(so3r.real_rank, 0u);
    EXPECT_EQ(so3r.lambda_wa, Extended(Rational(1)));
    EXPECT_EQ(so3r.name, "compact(3)");
    auto s = identify_real_form(sl2(), cat);
    EXPECT_EQ(s.name, "sl(2,R)");
    EXPECT_EQ(s.real_rank, 1u);
    EXPECT_EQ(s.lambda_wa, Extended(Rational(1)));
    auto t = identify_real_form(sl3R(), cat);
    EXPECT_EQ(t.real_rank, 2u);
    EXPECT_TRUE(t.lambda_wa.is_infinite());
    EXPECT_EQ(identify_real_form(sl2C_real(), cat).name, "sl(2,C)");
}

TEST(RealForm, CompactShortcutSkipsCatalog)
{
    auto cat = Catalog::builtin();
    identify_real_form(so3(), cat);
    identify_real_form(so(5), cat);
    EXPECT_EQ(cat.lookups(), 0u);
    identify_real_form(sl2(), cat);
    EXPECT_EQ(cat.lookups(), 1u);
}

TEST(RealForm, NotSimpleRejected)
{
    try {
        identify_real_form(direct_sum(sl2(), so3()), Catalog::builtin());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSimple);
    }
}

TEST(RealForm, UnrecognizedFormIsHardError)
{
    try {
        identify_real_form(build_named("complexify so 5"), Catalog::builtin());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnrecognizedRealForm);
        EXPECT_NE(std::string(e.what()).find("(20, [10,10,0], 4)"), std::string::npos) << e.what();
    }
}

TEST(Catalog, RejectsCollisionsAndInconsistentRecords)
{
    auto recs = Catalog::builtin().records();
    auto dup = recs;
    dup.push_back(recs[0]);
    dup.back().name = "twin";
    EXPECT_THROW(Catalog{dup}, Error);

    auto bad_sum = recs;
    bad_sum[0].dim = 4;
    EXPECT_THROW(Catalog{bad_sum}, Error);

    auto bad_rank = recs;
    bad_rank[0].real_rank = 0;
    EXPECT_THROW(Catalog{bad_rank}, Error);
}

TEST(Catalog, BuiltinMatchesDataFile)
{
    auto file = parse_catalog(read_file(std::string(LIEWA_DATA_DIR) + "/real_forms.json"));
    EXPECT_EQ(emit_catalog(file), emit_catalog(Catalog::builtin()));
}
