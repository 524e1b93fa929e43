// Runs the verdict engine over the builder corpus and prints one line per algebra.

#include <cstdio>

#include "liewa/liewa.hpp"

int main()
{
    const auto catalog = liewa::Catalog::builtin();
    for (const auto& [name, g] : liewa::builder_corpus()) {
        auto v = liewa::decide(g, catalog);
        std::printf("%-28s dim %2zu  radical %2zu  levi %2zu  %-8s %-20s constant %s\n", name.c_str(), g.dim(), v.radical_dim,
                    v.levi_dim, liewa::to_string(v.dichotomy), v.weakly_amenable ? "weakly amenable" : "not weakly amenable",
                    v.constant.str().c_str());
    }
}
