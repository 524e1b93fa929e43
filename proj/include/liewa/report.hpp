#pragma once

// AnalysisReport: the serializable view of a Verdict (schema_version 1).

#include <sstream>
#include <string>
#include <vector>

#include "liewa/io.hpp"
#include "liewa/verdict.hpp"

namespace liewa {

struct FactorSummary {
    std::string name;
    std::size_t dim = 0;
    Signature signature;
    std::size_t real_rank = 0;
    bool commutes_with_radical = false;
    bool admissible = false;
    std::string lambda;
    friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

struct AnalysisReport {
    static constexpr int schema_version = 1;
    std::string input_name;
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
    std::size_t levi_dim = 0;
    std::vector<FactorSummary> factors;
    bool weakly_amenable = true;
    std::string constant;
    std::string dichotomy;

    std::string verdict() const { return weakly_amenable ? "weakly amenable" : "not weakly amenable"; }
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline AnalysisReport make_report(std::string input_name, const LieAlgebra& g, const Verdict& v)
{
    AnalysisReport r;
    r.input_name = std::move(input_name);
    r.dim = g.dim();
    r.radical_dim = v.radical_dim;
    r.levi_dim = v.levi_dim;
    r.weakly_amenable = v.weakly_amenable;
    r.constant = v.constant.str();
    r.dichotomy = to_string(v.dichotomy);
    for (const auto& f : v.factors)
        r.factors.push_back({f.form.name, f.form.dim, f.form.signature, f.form.real_rank, f.commutes_with_radical,
                             f.admissible, f.form.lambda_wa.str()});
    return r;
}

inline AnalysisReport analyze(std::string input_name, const LieAlgebra& g, const Catalog& catalog,
                              std::uint64_t seed = default_seed)
{
    return make_report(std::move(input_name), g, decide(g, catalog, seed));
}

inline json to_json(const AnalysisReport& r)
{
    json factors = json::array();
    for (const auto& f : r.factors)
        factors.push_back({{"name", f.name},
                           {"dim", f.dim},
                           {"signature", {f.signature.positive, f.signature.negative, f.signature.zero}},
                           {"real_rank", f.real_rank},
                           {"commutes_with_radical", f.commutes_with_radical},
                           {"admissible", f.admissible},
                           {"lambda", f.lambda}});
    return {{"schema_version", AnalysisReport::schema_version},
            {"input_name", r.input_name},
            {"dim", r.dim},
            {"radical_dim", r.radical_dim},
            {"levi_dim", r.levi_dim},
            {"factors", factors},
            {"verdict", r.verdict()},
            {"constant", r.constant},
            {"dichotomy", r.dichotomy}};
}

inline std::string emit_report(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

inline AnalysisReport parse_report(const std::string& text)
{
    try {
        auto doc = json::parse(text);
        if (doc.at("schema_version").get<int>() != AnalysisReport::schema_version)
            throw Error(ErrorKind::ParseError, "unsupported schema_version");
        AnalysisReport r;
        r.input_name = doc.at("input_name").get<std::string>();
        r.dim = doc.at("dim").get<std::size_t>();
        r.radical_dim = doc.at("radical_dim").get<std::size_t>();
        r.levi_dim = doc.at("levi_dim").get<std::size_t>();
        const auto verdict = doc.at("verdict").get<std::string>();
        if (verdict != "weakly amenable" && verdict != "not weakly amenable")
            throw Error(ErrorKind::ParseError, "unknown verdict '" + verdict + "'");
        r.weakly_amenable = verdict == "weakly amenable";
        r.constant = doc.at("constant").get<std::string>();
        r.dichotomy = doc.at("dichotomy").get<std::string>();
        for (const auto& f : doc.at("factors")) {
            const auto& s = f.at("signature");
            r.factors.push_back({f.at("name").get<std::string>(), f.at("dim").get<std::size_t>(),
                                 {s.at(0).get<std::size_t>(), s.at(1).get<std::size_t>(), s.at(2).get<std::size_t>()},
                                 f.at("real_rank").get<std::size_t>(), f.at("commutes_with_radical").get<bool>(),
                                 f.at("admissible").get<bool>(), f.at("lambda").get<std::string>()});
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
    }
}

inline std::string render_text(const AnalysisReport& r)
{
    std::ostringstream os;
    os << "algebra:      " << r.input_name << " (dim " << r.dim << ")\n"
       << "radical:      dim " << r.radical_dim << "\n"
       << "levi factor:  dim " << r.levi_dim << "\n";
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const auto& f = r.factors[i];
        os << "  factor " << i << ": " << f.name << ", dim " << f.dim << ", signature (" << f.signature.positive << ","
           << f.signature.negative << "," << f.signature.zero << "), real rank " << f.real_rank
           << ", [s,r]" << (f.commutes_with_radical ? " = 0" : " != 0") << ", lambda " << f.lambda
           << (f.admissible ? "" : "  (obstruction)") << "\n";
    }
    os << "dichotomy:    " << r.dichotomy << "\n"
       << "verdict:      " << r.verdict() << "\n"
       << "constant:     " << r.constant << "\n";
    return os.str();
}

} // namespace liewa
