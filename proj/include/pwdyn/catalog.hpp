#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwdyn/periodic.hpp"
#include "pwdyn/pwl_map.hpp"

namespace pwdyn {

struct ExpectedProperties {
    double entropy = 0.0;                     // Markov entropy
    TypeKind type_kind = TypeKind::none;
    std::size_t type_value = 0;
    std::optional<std::size_t> horseshoe_iterate;  // first n with a horseshoe for f^n, if any
};

struct CatalogEntry {
    std::string name;
    std::string description;
    PWLMap map;
    std::optional<ExpectedProperties> expected;
};

/// Built-in maps. `sqrt_tent` is g(x) = 1-x on [0,1/2], 3/2-2x on [1/2,3/4],
/// 2x-3/2 on [3/4,1]: it swaps the two halves, its square is the tent map on
/// [1/2,1] and the upside-down tent on [0,1/2], and [0,1/4], [1/4,1/2] form a
/// horseshoe for g². Only a picture of the original exists, so these
/// coordinates are one realization of those properties.
const std::vector<CatalogEntry>& catalog();

/// Throws std::invalid_argument for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

struct SelfTestResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;
};

/// Recomputes every expected record (entropy within 1e-9, type verdict at
/// p_max, first horseshoe iterate up to `horseshoe_max`).
std::vector<SelfTestResult> catalog_self_test(std::size_t p_max = 8, std::size_t horseshoe_max = 4);

}  // namespace pwdyn
