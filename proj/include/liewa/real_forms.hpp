#pragma once

// Real-form identification of simple algebras by (dim, Killing signature,
// Cartan dimension), with a user-extensible catalog of noncompact forms.

#include <atomic>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "liewa/structure.hpp"

namespace liewa {

struct RealFormRecord {
    std::string name;
    std::size_t dim = 0;
    Signature signature;
    std::size_t cartan_dim = 0;
    std::size_t real_rank = 0;
    Extended lambda_wa;
};

struct RealFormKey {
    std::size_t dim;
    Signature signature;
    std::size_t cartan_dim;
    friend auto operator<=>(const RealFormKey&, const RealFormKey&) = default;
};

inline std::string describe(const RealFormKey& k)
{
    return "(" + std::to_string(k.dim) + ", [" + std::to_string(k.signature.positive) + "," +
           std::to_string(k.signature.negative) + "," + std::to_string(k.signature.zero) + "], " +
           std::to_string(k.cartan_dim) + ")";
}

class Catalog {
public:
    /// Rejects key collisions and records whose real rank contradicts compactness.
    explicit Catalog(std::vector<RealFormRecord> records) : records_(std::move(records))
    {
        for (std::size_t i = 0; i < records_.size(); ++i) {
            const auto& r = records_[i];
            if (r.signature.dim() != r.dim)
                throw Error(ErrorKind::CatalogError, "record '" + r.name + "': signature does not sum to dim");
            if ((r.real_rank == 0) != (r.signature.positive == 0))
                throw Error(ErrorKind::CatalogError, "record '" + r.name + "': real rank 0 must coincide with a negative definite form");
            RealFormKey key{r.dim, r.signature, r.cartan_dim};
            auto [it, inserted] = index_.emplace(key, i);
            if (!inserted)
                throw Error(ErrorKind::CatalogError,
                            "records '" + records_[it->second].name + "' and '" + r.name + "' share key " + describe(key));
        }
    }

    /// Noncompact simple forms used by the verdict engine. Lambda values for the
    /// rank-one forms are taken from the literature (1 for so(n,1) and su(n,1)).
    static Catalog builtin()
    {
        auto rec = [](std::string name, std::size_t dim, Signature sig, std::size_t cartan, std::size_t rank, Extended lam) {
            return RealFormRecord{std::move(name), dim, sig, cartan, rank, std::move(lam)};
        };
        return Catalog({
            rec("sl(2,R)", 3, {2, 1, 0}, 1, 1, Rational(1)),
            rec("sl(2,C)", 6, {3, 3, 0}, 2, 1, Rational(1)),
            rec("su(2,1)", 8, {4, 4, 0}, 2, 1, Rational(1)),
            rec("sl(3,R)", 8, {5, 3, 0}, 2, 2, Extended::infinity()),
            rec("so(4,1)", 10, {4, 6, 0}, 2, 1, Rational(1)),
            rec("sp(2,R)", 10, {6, 4, 0}, 2, 2, Extended::infinity()),
        });
    }

    const std::vector<RealFormRecord>& records() const { return records_; }

    const RealFormRecord* find(const RealFormKey& key) const
    {
        lookups_.fetch_add(1, std::memory_order_relaxed);
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &records_[it->second];
    }

    /// Number of find() calls so far.
    std::size_t lookups() const { return lookups_.load(std::memory_order_relaxed); }

private:
    std::vector<RealFormRecord> records_;
    std::map<RealFormKey, std::size_t> index_;
    mutable std::atomic<std::size_t> lookups_{0};
};

/// Identification of an algebra already known to be simple.
inline RealFormRecord identify_simple(const LieAlgebra& s, const Catalog& catalog, std::uint64_t seed = default_seed)
{
    auto sig = symmetric_signature(s.killing_matrix());
    if (!sig.nondegenerate()) throw Error(ErrorKind::NotSemisimple, "Killing form is degenerate");
    if (sig.negative_definite())
        return {"compact(" + std::to_string(s.dim()) + ")", s.dim(), sig, cartan_dimension(s, seed), 0, Rational(1)};
    RealFormKey key{s.dim(), sig, cartan_dimension(s, seed)};
    if (const auto* rec = catalog.find(key)) return *rec;
    throw Error(ErrorKind::UnrecognizedRealForm, "unrecognized_real_form" + describe(key));
}

/// Verifies that s is simple, then identifies it.
inline RealFormRecord identify_real_form(const LieAlgebra& s, const Catalog& catalog, std::uint64_t seed = default_seed)
{
    if (split_semisimple(s, seed).size() != 1) throw Error(ErrorKind::NotSimple, "algebra has more than one simple ideal");
    return identify_simple(s, catalog, seed);
}

} // namespace liewa
