#pragma once

// Weak amenability of the simply connected group with a given Lie algebra:
// every simple Levi factor must have real rank 0, or real rank 1 and commute
// with the radical. The constant is then the product of the factor constants.

#include <string>
#include <vector>

#include "liewa/real_forms.hpp"

namespace liewa {

enum class Dichotomy { CaseA, CaseB, NotApplicable };

inline const char* to_string(Dichotomy d)
{
    switch (d) {
    case Dichotomy::CaseA: return "case-A";
    case Dichotomy::CaseB: return "case-B";
    case Dichotomy::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct FactorReport {
    std::size_t index = 0;
    Subspace ideal; // in coordinates of g
    RealFormRecord form;
    bool commutes_with_radical = false;
    bool admissible = false;
};

struct Verdict {
    bool weakly_amenable = true;
    Extended constant;
    std::vector<FactorReport> factors;
    /// NotApplicable when the Levi factor is zero.
    Dichotomy dichotomy = Dichotomy::NotApplicable;
    std::size_t radical_dim = 0;
    std::size_t levi_dim = 0;
};

/// [s_i, r] = 0, checked on all basis pairs.
inline bool commutes_with_radical(const LieAlgebra& g, const Subspace& s_i, const Subspace& r)
{
    for (std::size_t a = 0; a < s_i.dim(); ++a) {
        auto ad = g.ad(s_i.vector(a));
        for (std::size_t b = 0; b < r.dim(); ++b)
            if (!is_zero(ad * r.vector(b))) return false;
    }
    return true;
}

inline Verdict decide(const LieAlgebra& g, const Catalog& catalog, std::uint64_t seed = default_seed)
{
    Verdict v;
    auto ld = levi(g);
    v.radical_dim = ld.radical.dim();
    v.levi_dim = ld.levi.dim();
    if (ld.levi.is_zero()) return v;

    bool noncompact_commute = true;
    std::size_t idx = 0;
    for (const auto& ideal : split_semisimple(g, ld.levi, seed)) {
        FactorReport f;
        f.index = idx++;
        f.ideal = ideal;
        f.form = identify_simple(restrict_to(g, ideal), catalog, seed);
        f.commutes_with_radical = commutes_with_radical(g, ideal, ld.radical);
        f.admissible = f.form.real_rank == 0 || (f.form.real_rank == 1 && f.commutes_with_radical);
        if (f.form.real_rank >= 1 && !f.commutes_with_radical) noncompact_commute = false;
        v.weakly_amenable = v.weakly_amenable && f.admissible;
        v.constant *= f.form.lambda_wa;
        v.factors.push_back(std::move(f));
    }
    if (!v.weakly_amenable) v.constant = Extended::infinity();
    v.dichotomy = noncompact_commute ? Dichotomy::CaseA : Dichotomy::CaseB;
    return v;
}

/// Case A iff every noncompact simple factor commutes with the radical.
inline Dichotomy dichotomy_case(const LieAlgebra& g, const Catalog& catalog, std::uint64_t seed = default_seed)
{
    auto ld = levi(g);
    for (const auto& ideal : split_semisimple(g, ld.levi, seed)) {
        auto form = identify_simple(restrict_to(g, ideal), catalog, seed);
        if (form.real_rank >= 1 && !commutes_with_radical(g, ideal, ld.radical)) return Dichotomy::CaseB;
    }
    return Dichotomy::CaseA;
}

} // namespace liewa
