#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubic/cubic_form.hpp"

namespace cubic {

struct ExpectedVerdicts {
    bool is_ekp = false;
    bool cone = false;
    std::optional<int> singular_dim;  // projective dimension of Sing V(f)
    std::string notes;
};

struct CatalogEntry {
    std::string name;
    CubicForm form;
    int n;
    ExpectedVerdicts expected;
    std::optional<Vec> unit_point;     // point with f = 1, when one is shipped
    std::optional<Vec> singular_seed;  // exact point on the cone over Sing V(f)
};

// Hermitian 3x3 cubic norm over the level-k composition algebra, as a
// form in 3 + 3·2^k variables ordered (alpha, beta, gamma, a.., b.., c..):
// N = a b g - a·|a|^2 - b·|b|^2 - g·|c|^2 + 2 re((a·b)·c).
CatalogEntry herm3_norm(int level);

// The four Herm3 norms plus the boundary and counterexample entries.
std::vector<CatalogEntry> builtin_catalog();

const CatalogEntry* catalog_find(const std::vector<CatalogEntry>& cat, const std::string& name);

}  // namespace cubic
