#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "pwdyn/pwl_map.hpp"

namespace pwdyn {

/// Solutions of f(x) = x: isolated points plus whole subintervals where the
/// graph runs along the diagonal.
struct FixedPointSet {
    std::vector<Rational> points;       // sorted, isolated solutions
    std::vector<ClosedInterval> ranges;  // sorted, maximal diagonal segments

    bool empty() const { return points.empty() && ranges.empty(); }
};

FixedPointSet fixed_points(const PWLMap& map);

/// All solutions of f^p(x) = x (any period dividing p).
FixedPointSet periodic_solutions(const PWLMap& map, std::size_t p, const CompositionLimits& limits = {});

/// Cycle of minimal period points.size(), listed from its smallest point.
struct PeriodicOrbit {
    std::vector<Rational> points;

    std::size_t period() const { return points.size(); }
};

struct PeriodicPoints {
    std::size_t p = 0;
    std::vector<PeriodicOrbit> orbits;    // minimal period exactly p, ordered by smallest point
    std::vector<ClosedInterval> ranges;  // diagonal segments of f^p, not enumerated
};

/// Smallest d >= 1 with f^d(x) = x, trying only divisors of p. Returns 0 when
/// no divisor of p closes the orbit.
std::size_t minimal_period(const PWLMap& map, const Rational& x, std::size_t p);

PeriodicPoints periodic_points(const PWLMap& map, std::size_t p, const CompositionLimits& limits = {});

struct PeriodSet {
    std::set<std::size_t> periods;
    std::size_t requested_bound = 0;
    std::size_t achieved_bound = 0;  // < requested_bound when the node cap stopped the search

    bool complete() const { return achieved_bound == requested_bound; }
};

/// Minimal periods <= p_max realized by some point. Periods carried by
/// diagonal segments count when the segment is not already fixed by a
/// smaller divisor iterate.
PeriodSet period_set(const PWLMap& map, std::size_t p_max, const CompositionLimits& limits = {});

enum class TypeKind { finite, at_most_powers_of_two, none };

struct TypeVerdict {
    std::set<std::size_t> detected_periods;
    std::size_t search_bound = 0;
    TypeKind kind = TypeKind::none;
    /// finite: the Sharkovskii-minimal detected period;
    /// at_most_powers_of_two: the largest detected power of two.
    std::size_t value = 0;

    std::string str() const;
};

TypeVerdict sharkovskii_type_estimate(const PWLMap& map, std::size_t p_max, const CompositionLimits& limits = {});

}  // namespace pwdyn
