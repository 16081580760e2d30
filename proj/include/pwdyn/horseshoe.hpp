#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pwdyn/pwl_map.hpp"

namespace pwdyn {

/// Two closed non degenerate intervals J, K with disjoint interiors whose
/// images under f^iterate both contain hull(J ∪ K).
struct HorseshoeCertificate {
    std::size_t iterate = 1;
    ClosedInterval j;
    ClosedInterval k;
    ClosedInterval image_j;
    ClosedInterval image_k;
};

/// Exact check of the horseshoe condition for `iterate_map` itself.
bool is_horseshoe(const PWLMap& iterate_map, const ClosedInterval& j, const ClosedInterval& k);

/// Exact check for f^n. False on any failed condition, including J or K
/// outside the domain.
bool verify_horseshoe(const PWLMap& map, std::size_t n, const ClosedInterval& j, const ClosedInterval& k,
                      const CompositionLimits& limits = {});

/// Searches f^n for a horseshoe. Lap pairs (L1, L2) of f^n whose images both
/// contain hull(L1 ∪ L2) are tried first, shrunk to the leftmost minimal
/// subintervals mapping onto that hull. Failing that, adjacent pairs
/// J=[a,c], K=[c,d] are tried with a, d drawn from the domain endpoints,
/// nodes, node values and fixed points of f^n. A nullopt means "not found
/// up to this iterate", not non-existence. Throws ResourceError past the cap.
std::optional<HorseshoeCertificate> find_horseshoe(const PWLMap& map, std::size_t n,
                                                   const CompositionLimits& limits = {});

/// Same search on an already computed iterate; `iterate` is only recorded.
std::optional<HorseshoeCertificate> find_horseshoe_in(const PWLMap& iterate_map, std::size_t iterate);

struct NestedLevel {
    ClosedInterval interval;
    std::optional<HorseshoeCertificate> certificate;  // for f² restricted to the level
};

struct NestedStructureReport {
    std::vector<NestedLevel> levels;

    /// Every level carries an f² certificate.
    bool structure_found() const;
};

/// Greedy descent through nested invariant intervals: starting from the whole
/// domain, each next level is the shortest proper invariant subinterval of
/// the current one. Stops after `depth` levels or when nothing smaller is
/// invariant.
NestedStructureReport nested_structure_probe(const PWLMap& map, std::size_t depth,
                                             const CompositionLimits& limits = {});

}  // namespace pwdyn
