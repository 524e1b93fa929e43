#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "oracle.hpp"

using namespace liewa;

namespace {

ErrorKind kind_of(const std::string& text)
{
    try {
        parse_algebra(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorKind::Internal;
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

} // namespace

TEST(AlgebraJson, RoundTripsCorpus)
{
    for (const auto& [name, g] : builder_corpus()) {
        auto text = emit_algebra(g);
        auto back = parse_algebra(text);
        EXPECT_TRUE(same_constants(back, g)) << name;
        EXPECT_EQ(back.basis_names(), g.basis_names()) << name;
        EXPECT_EQ(emit_algebra(back), text) << name;
    }
}

TEST(AlgebraJson, ReadsHandWrittenDocument)
{
    auto g = parse_algebra(R"({"dim": 3, "basis": ["x", "y", "z"],
        "brackets": [{"i": 0, "j": 1, "terms": [[2, 1]]}]})");
    EXPECT_TRUE(same_constants(g, heisenberg(3)));
    auto h = parse_algebra(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [[1, "3/2"]]}]})");
    EXPECT_EQ(h.constant(0, 1, 1), Rational(3, 2));
    EXPECT_EQ(h.constant(1, 0, 1), Rational(-3, 2));
}

TEST(AlgebraJson, DataFilesMatchBuilders)
{
    const std::string dir = LIEWA_DATA_DIR;
    EXPECT_TRUE(same_constants(load_algebra(dir + "/sl2.json"), sl2()));
    EXPECT_TRUE(same_constants(load_algebra(dir + "/v_sl2_2.json"), v_sl2(2)));
    EXPECT_TRUE(same_constants(load_algebra(dir + "/heisenberg3.json"), heisenberg(3)));
    EXPECT_TRUE(same_constants(load_algebra(dir + "/h_sl2_1.json"), h_sl2(1)));
}

TEST(AlgebraJson, Rejections)
{
    EXPECT_EQ(kind_of("{"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("[]"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"brackets": []})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": -1, "brackets": []})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "basis": ["a"], "brackets": []})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "terms": []}]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "terms": [[0, 1]]}]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 0, "j": 2, "terms": [[0, 1]]}]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [[5, 1]]}]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [[0, "x"]]}]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [[0]]}]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [[0, 1]]},
                                                 {"i": 0, "j": 1, "terms": [[1, 1]]}]})"),
              ErrorKind::ParseError);
}

TEST(AlgebraJson, JacobiViolationNamesTriple)
{
    // sl2 with [e,f] = e
    const char* text = R"({"dim": 3, "basis": ["h", "e", "f"], "brackets": [
        {"i": 0, "j": 1, "terms": [[1, 2]]},
        {"i": 0, "j": 2, "terms": [[2, -2]]},
        {"i": 1, "j": 2, "terms": [[1, 1]]}]})";
    try {
        parse_algebra(text);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::JacobiViolation);
        ASSERT_FALSE(e.violations().empty());
        const auto& v = e.violations().front();
        EXPECT_EQ(std::tie(v.i, v.j, v.k), std::make_tuple(0u, 1u, 2u));
    }
}

TEST(Files, MissingFileIsParseError)
{
    try {
        load_algebra("/nonexistent/liewa.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
    auto p = temp_path("liewa_io_test.json");
    write_file(p, emit_algebra(so3()));
    EXPECT_TRUE(same_constants(load_algebra(p), so3()));
    std::filesystem::remove(p);
}

TEST(CatalogJson, RoundTripAndErrors)
{
    auto cat = Catalog::builtin();
    auto text = emit_catalog(cat);
    EXPECT_EQ(emit_catalog(parse_catalog(text)), text);
    auto expect_catalog_error = [](const std::string& t) {
        try {
            parse_catalog(t);
            ADD_FAILURE() << t;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::CatalogError) << t;
        }
    };
    expect_catalog_error("{");
    expect_catalog_error("{}");
    expect_catalog_error(R"([{"name": "x"}])");
    const char* rec = R"({"name": "a", "dim": 3, "signature": [2, 1, 0], "cartan_dim": 1, "real_rank": 1, "lambda_wa": "1"})";
    expect_catalog_error(std::string("[") + rec + "," + rec + "]");
    EXPECT_EQ(parse_catalog(std::string("[") + rec + "]").records().size(), 1u);
}

TEST(CatalogJson, EnvironmentOverride)
{
    auto p = temp_path("liewa_catalog_test.json");
    write_file(p, R"([{"name": "only", "dim": 3, "signature": [2, 1, 0], "cartan_dim": 1, "real_rank": 1, "lambda_wa": "5/2"}])");
    ::setenv("LIEWA_CATALOG", p.c_str(), 1);
    auto cat = default_catalog();
    ASSERT_EQ(cat.records().size(), 1u);
    auto v = decide(sl2(), cat);
    EXPECT_EQ(v.constant.str(), "5/2");
    EXPECT_THROW(decide(sl3R(), cat), Error);

    ::setenv("LIEWA_CATALOG", "/nonexistent/catalog.json", 1);
    EXPECT_THROW(default_catalog(), Error);
    ::unsetenv("LIEWA_CATALOG");
    EXPECT_EQ(default_catalog().records().size(), Catalog::builtin().records().size());
    std::filesystem::remove(p);
}

TEST(ReportJson, RoundTripAndSchema)
{
    auto cat = Catalog::builtin();
    for (const auto& [name, g] : builder_corpus()) {
        auto r = analyze(name, g, cat);
        auto text = emit_report(r);
        EXPECT_EQ(parse_report(text), r) << name;
        auto doc = nlohmann::json::parse(text);
        EXPECT_EQ(doc.at("schema_version"), 1);
        EXPECT_EQ(doc.at("verdict"), r.verdict());
    }
    EXPECT_THROW(parse_report(R"({"schema_version": 2})"), Error);
    EXPECT_THROW(parse_report("nope"), Error);
}

TEST(ReportText, MentionsVerdictAndObstruction)
{
    auto r = analyze("h_sl2 1", h_sl2(1), Catalog::builtin());
    auto text = render_text(r);
    EXPECT_NE(text.find("not weakly amenable"), std::string::npos);
    EXPECT_NE(text.find("obstruction"), std::string::npos);
    EXPECT_NE(text.find("case-B"), std::string::npos);
    EXPECT_NE(text.find("constant:     inf"), std::string::npos);
}
