#pragma once

// JSON documents: structure-constant files and the real-form catalog.
//
// Algebra file:
//   {"dim": 3, "basis": ["h","e","f"],
//    "brackets": [{"i": 0, "j": 1, "terms": [[1, "2"]]}, ...]}
// Indices are 0-based with i < j; coefficients are "p/q" or "p" strings.
//
// Catalog file:
//   [{"name": "sl(2,R)", "dim": 3, "signature": [2,1,0], "cartan_dim": 1,
//     "real_rank": 1, "lambda_wa": "1"}, ...]

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "liewa/real_forms.hpp"

namespace liewa {

using json = nlohmann::json;

inline json to_json(const LieAlgebra& g)
{
    json brackets = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            json terms = json::array();
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (g.constant(i, j, k) != 0) terms.push_back(json::array({k, to_string(g.constant(i, j, k))}));
            if (!terms.empty()) brackets.push_back({{"i", i}, {"j", j}, {"terms", terms}});
        }
    return {{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

inline std::string emit_algebra(const LieAlgebra& g) { return to_json(g).dump(2) + "\n"; }

namespace detail {

inline std::size_t get_index(const json& j, const char* what, std::size_t dim)
{
    if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= dim)
        throw Error(ErrorKind::ParseError, std::string(what) + " = " + std::to_string(v) + " out of range [0," + std::to_string(dim) + ")");
    return static_cast<std::size_t>(v);
}

inline Rational get_rational(const json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw Error(ErrorKind::ParseError, "coefficient must be a \"p/q\" string or an integer");
}

} // namespace detail

/// Parses and validates an algebra document. Malformed input raises ParseError;
/// identity violations raise ValidationError.
inline LieAlgebra parse_algebra(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "document must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
        throw Error(ErrorKind::ParseError, "missing or invalid 'dim'");
    const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
    std::vector<std::string> names;
    if (doc.contains("basis")) {
        if (!doc["basis"].is_array()) throw Error(ErrorKind::ParseError, "'basis' must be an array of strings");
        for (const auto& n : doc["basis"]) {
            if (!n.is_string()) throw Error(ErrorKind::ParseError, "'basis' must be an array of strings");
            names.push_back(n.get<std::string>());
        }
        if (names.size() != dim) throw Error(ErrorKind::ParseError, "'basis' has " + std::to_string(names.size()) + " names, dim is " + std::to_string(dim));
    }
    StructureConstants sc(dim, names);
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) throw Error(ErrorKind::ParseError, "'brackets' must be an array");
        std::vector<bool> seen(dim * dim, false);
        std::size_t entry = 0;
        for (const auto& b : doc["brackets"]) {
            const std::string where = "brackets[" + std::to_string(entry++) + "]";
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("terms"))
                throw Error(ErrorKind::ParseError, where + " needs fields i, j, terms");
            auto i = detail::get_index(b["i"], (where + ".i").c_str(), dim);
            auto j = detail::get_index(b["j"], (where + ".j").c_str(), dim);
            if (i >= j) throw Error(ErrorKind::ParseError, where + ": requires i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
            if (seen[i * dim + j]) throw Error(ErrorKind::ParseError, where + ": duplicate pair");
            seen[i * dim + j] = true;
            if (!b["terms"].is_array()) throw Error(ErrorKind::ParseError, where + ".terms must be an array");
            for (const auto& t : b["terms"]) {
                if (!t.is_array() || t.size() != 2) throw Error(ErrorKind::ParseError, where + ": each term is [k, \"p/q\"]");
                auto k = detail::get_index(t[0], (where + ".k").c_str(), dim);
                sc.add_term(i, j, k, detail::get_rational(t[1]));
            }
        }
    }
    return LieAlgebra::validate(std::move(sc));
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

inline LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

inline json to_json(const RealFormRecord& r)
{
    return {{"name", r.name},
            {"dim", r.dim},
            {"signature", {r.signature.positive, r.signature.negative, r.signature.zero}},
            {"cartan_dim", r.cartan_dim},
            {"real_rank", r.real_rank},
            {"lambda_wa", r.lambda_wa.str()}};
}

inline std::string emit_catalog(const Catalog& c)
{
    json arr = json::array();
    for (const auto& r : c.records()) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

inline Catalog parse_catalog(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::CatalogError, std::string("malformed catalog: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorKind::CatalogError, "catalog must be an array of records");
    std::vector<RealFormRecord> recs;
    try {
        for (const auto& r : doc) {
            RealFormRecord rec;
            rec.name = r.at("name").get<std::string>();
            rec.dim = r.at("dim").get<std::size_t>();
            const auto& s = r.at("signature");
            if (!s.is_array() || s.size() != 3) throw Error(ErrorKind::CatalogError, "signature must be [p, n, z]");
            rec.signature = {s[0].get<std::size_t>(), s[1].get<std::size_t>(), s[2].get<std::size_t>()};
            rec.cartan_dim = r.at("cartan_dim").get<std::size_t>();
            rec.real_rank = r.at("real_rank").get<std::size_t>();
            rec.lambda_wa = Extended::parse(r.at("lambda_wa").get<std::string>());
            recs.push_back(std::move(rec));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::CatalogError, std::string("bad catalog record: ") + e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::CatalogError) throw;
        throw Error(ErrorKind::CatalogError, e.what());
    }
    return Catalog(std::move(recs));
}

/// The catalog named by LIEWA_CATALOG, or the built-in one.
inline Catalog default_catalog()
{
    if (const char* path = std::getenv("LIEWA_CATALOG"); path && *path) {
        std::string text;
        try {
            text = read_file(path);
        } catch (const Error&) {
            throw Error(ErrorKind::CatalogError, std::string("cannot open catalog '") + path + "'");
        }
        return parse_catalog(text);
    }
    return Catalog::builtin();
}

} // namespace liewa
