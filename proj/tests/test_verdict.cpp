#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace liewa;

namespace {

struct Expected {
    const char* spec;
    bool wa;
    const char* constant;
    Dichotomy dichotomy;
};

const Expected kTable[] = {
    {"abelian 3", true, "1", Dichotomy::NotApplicable},
    {"heisenberg 3", true, "1", Dichotomy::NotApplicable},
    {"sl2", true, "1", Dichotomy::CaseA},
    {"so3", true, "1", Dichotomy::CaseA},
    {"so4", true, "1", Dichotomy::CaseA},
    {"sl2C_real", true, "1", Dichotomy::CaseA},
    {"sl3R", false, "inf", Dichotomy::CaseA},
    {"v_sl2 1", true, "1", Dichotomy::CaseA},
    {"v_sl2 2", false, "inf", Dichotomy::CaseB},
    {"v_sl2 3", false, "inf", Dichotomy::CaseB},
    {"h_sl2 1", false, "inf", Dichotomy::CaseB},
    {"so3_r3", true, "1", Dichotomy::CaseA},
    {"direct_sum sl2 heisenberg 3", true, "1", Dichotomy::CaseA},
    {"direct_sum sl2 so3", true, "1", Dichotomy::CaseA},
    {"direct_sum sl2 sl3R", false, "inf", Dichotomy::CaseA},
};

} // namespace

TEST(CommutesWithRadical, Examples)
{
    auto g = direct_sum(sl2(), heisenberg(3));
    auto ld = levi(g);
    EXPECT_TRUE(commutes_with_radical(g, ld.levi, ld.radical));
    auto v = v_sl2(2);
    auto lv = levi(v);
    EXPECT_FALSE(commutes_with_radical(v, lv.levi, lv.radical));
    // trivial module: the radical is central
    auto t = v_sl2(1);
    auto lt = levi(t);
    EXPECT_TRUE(commutes_with_radical(t, lt.levi, lt.radical));
}

TEST(Decide, KnownAlgebras)
{
    auto cat = Catalog::builtin();
    for (const auto& e : kTable) {
        auto v = decide(build_named(e.spec), cat);
        EXPECT_EQ(v.weakly_amenable, e.wa) << e.spec;
        EXPECT_EQ(v.constant.str(), e.constant) << e.spec;
        EXPECT_EQ(v.dichotomy, e.dichotomy) << e.spec;
    }
}

TEST(Decide, FactorDetails)
{
    auto cat = Catalog::builtin();
    auto v = decide(build_named("direct_sum sl2 so3"), cat);
    ASSERT_EQ(v.factors.size(), 2u);
    std::vector<std::size_t> ranks;
    for (const auto& f : v.factors) {
        ranks.push_back(f.form.real_rank);
        EXPECT_TRUE(f.admissible);
        EXPECT_EQ(f.ideal.dim(), 3u);
    }
    std::sort(ranks.begin(), ranks.end());
    EXPECT_EQ(ranks, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(v.radical_dim, 0u);
    EXPECT_EQ(v.levi_dim, 6u);

    auto h = decide(h_sl2(1), cat);
    ASSERT_EQ(h.factors.size(), 1u);
    EXPECT_EQ(h.factors[0].form.name, "sl(2,R)");
    EXPECT_FALSE(h.factors[0].commutes_with_radical);
    EXPECT_FALSE(h.factors[0].admissible);
    EXPECT_EQ(h.radical_dim, 3u);
}

TEST(Decide, CompactFactorActingOnRadicalStaysAdmissible)
{
    auto v = decide(build_named("so3_r3"), Catalog::builtin());
    ASSERT_EQ(v.factors.size(), 1u);
    EXPECT_EQ(v.factors[0].form.real_rank, 0u);
    EXPECT_FALSE(v.factors[0].commutes_with_radical);
    EXPECT_TRUE(v.factors[0].admissible);
}

TEST(Decide, UnrecognizedFactorPropagates)
{
    try {
        decide(direct_sum(sl2(), build_named("complexify so 5")), Catalog::builtin());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnrecognizedRealForm);
    }
}

TEST(Dichotomy, AgreesWithDecideAndVerdictSplit)
{
    auto cat = Catalog::builtin();
    for (const auto& [name, g] : builder_corpus()) {
        auto v = decide(g, cat);
        if (v.levi_dim == 0) {
            EXPECT_EQ(v.dichotomy, Dichotomy::NotApplicable) << name;
            continue;
        }
        EXPECT_EQ(v.dichotomy, dichotomy_case(g, cat)) << name;
        // case B always fails weak amenability
        if (v.dichotomy == Dichotomy::CaseB) EXPECT_FALSE(v.weakly_amenable) << name;
        // case A: weakly amenable iff no factor has real rank >= 2
        if (v.dichotomy == Dichotomy::CaseA) {
            bool small = std::all_of(v.factors.begin(), v.factors.end(), [](const FactorReport& f) { return f.form.real_rank <= 1; });
            EXPECT_EQ(v.weakly_amenable, small) << name;
        }
    }
}

TEST(Verdict, ProductLaw)
{
    auto cat = Catalog::builtin();
    auto corpus = product_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            auto a = decide(corpus[i].algebra, cat), b = decide(corpus[j].algebra, cat);
            auto ab = decide(direct_sum(corpus[i].algebra, corpus[j].algebra), cat);
            const auto label = corpus[i].name + " + " + corpus[j].name;
            EXPECT_EQ(ab.weakly_amenable, a.weakly_amenable && b.weakly_amenable) << label;
            EXPECT_EQ(ab.constant, a.constant * b.constant) << label;
            EXPECT_EQ(ab.factors.size(), a.factors.size() + b.factors.size()) << label;
        }
}

TEST(Verdict, InvariantUnderBasisChange)
{
    auto cat = Catalog::builtin();
    std::mt19937_64 rng(31);
    for (const auto& [name, g] : builder_corpus()) {
        auto base = decide(g, cat);
        std::vector<std::size_t> perm(g.dim());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (const auto& h : {permute_basis(g, perm), change_basis(g, random_unimodular(g.dim(), rng))}) {
            auto v = decide(h, cat);
            EXPECT_EQ(v.weakly_amenable, base.weakly_amenable) << name;
            EXPECT_EQ(v.constant, base.constant) << name;
            EXPECT_EQ(v.dichotomy, base.dichotomy) << name;
            EXPECT_EQ(v.radical_dim, base.radical_dim) << name;
        }
    }
}

TEST(Verdict, SeedDoesNotChangeOutcome)
{
    auto cat = Catalog::builtin();
    for (const char* spec : {"h_sl2 1", "direct_sum sl2 so3", "sl3R"}) {
        auto g = build_named(spec);
        auto a = analyze(spec, g, cat, 1), b = analyze(spec, g, cat, 987654321);
        EXPECT_EQ(a, b) << spec;
    }
}
