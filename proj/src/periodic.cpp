#include "pwdyn/periodic.hpp"

#include <algorithm>
#include <map>

#include "pwdyn/sharkovskii.hpp"

namespace pwdyn {

namespace {

bool inside_any(const std::vector<ClosedInterval>& ranges, const Rational& x) {
    return std::any_of(ranges.begin(), ranges.end(), [&](const ClosedInterval& r) { return r.contains(x); });
}

// True when the union of `cover` contains all of `target`.
bool covers(std::vector<ClosedInterval> cover, const ClosedInterval& target) {
    std::sort(cover.begin(), cover.end(),
              [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo() < b.lo(); });
    Rational reached = target.lo();
    for (const ClosedInterval& c : cover) {
        if (c.hi() < reached) {
            continue;
        }
        if (c.lo() > reached) {
            return false;
        }
        reached = c.hi();
        if (reached >= target.hi()) {
            return true;
        }
    }
    return reached >= target.hi();
}

std::vector<std::size_t> proper_divisors(std::size_t p) {
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

}  // namespace

FixedPointSet fixed_points(const PWLMap& map) {
    FixedPointSet out;
    const auto& nodes = map.nodes();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const Node& a = nodes[i];
        const Node& b = nodes[i + 1];
        if (a.y == a.x && b.y == b.x) {
            if (!out.ranges.empty() && out.ranges.back().hi() == a.x) {
                out.ranges.back() = ClosedInterval(out.ranges.back().lo(), b.x);
            } else {
                out.ranges.emplace_back(a.x, b.x);
            }
            continue;
        }
        const Rational s = map.slope(i);
        if (s == Rational(1)) {
            continue;  // parallel to the diagonal, off it
        }
        Rational x = (a.y - s * a.x) / (Rational(1) - s);
        if (a.x <= x && x <= b.x) {
            out.points.push_back(std::move(x));
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    std::erase_if(out.points, [&](const Rational& x) { return inside_any(out.ranges, x); });
    return out;
}

FixedPointSet periodic_solutions(const PWLMap& map, std::size_t p, const CompositionLimits& limits) {
    return fixed_points(power(map, p, limits));
}

std::size_t minimal_period(const PWLMap& map, const Rational& x, std::size_t p) {
    Rational y = x;
    for (std::size_t d = 1; d <= p; ++d) {
        y = map(y);
        if (y == x) {
            return p % d == 0 ? d : 0;
        }
    }
    return 0;
}

PeriodicPoints periodic_points(const PWLMap& map, std::size_t p, const CompositionLimits& limits) {
    if (p == 0) {
        throw std::invalid_argument("period must be positive");
    }
    const FixedPointSet sols = periodic_solutions(map, p, limits);
    PeriodicPoints out;
    out.p = p;
    out.ranges = sols.ranges;

    std::map<Rational, PeriodicOrbit> by_smallest;
    for (const Rational& x : sols.points) {
        if (minimal_period(map, x, p) != p) {
            continue;
        }
        std::vector<Rational> cycle{x};
        for (std::size_t k = 1; k < p; ++k) {
            cycle.push_back(map(cycle.back()));
        }
        auto smallest = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), smallest, cycle.end());
        Rational key = cycle.front();
        by_smallest.try_emplace(std::move(key), PeriodicOrbit{std::move(cycle)});
    }
    for (auto& [key, orbit] : by_smallest) {
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

PeriodSet period_set(const PWLMap& map, std::size_t p_max, const CompositionLimits& limits) {
    PeriodSet out;
    out.requested_bound = p_max;
    // diagonal segments of f^d, kept for the coverage test of larger p
    std::map<std::size_t, std::vector<ClosedInterval>> ranges_of;
    PWLMap iterate = map;
    for (std::size_t p = 1; p <= p_max; ++p) {
        if (p > 1) {
            try {
                iterate = compose(map, iterate, limits);
            } catch (const ResourceError&) {
                break;
            }
        }
        const FixedPointSet sols = fixed_points(iterate);
        ranges_of[p] = sols.ranges;
        bool found = std::any_of(sols.points.begin(), sols.points.end(),
                                 [&](const Rational& x) { return minimal_period(map, x, p) == p; });
        if (!found) {
            std::vector<ClosedInterval> smaller;
            for (std::size_t d : proper_divisors(p)) {
                smaller.insert(smaller.end(), ranges_of[d].begin(), ranges_of[d].end());
            }
            found = std::any_of(sols.ranges.begin(), sols.ranges.end(),
                                [&](const ClosedInterval& r) { return !covers(smaller, r); });
        }
        if (found) {
            out.periods.insert(p);
        }
        out.achieved_bound = p;
    }
    return out;
}

std::string TypeVerdict::str() const {
    switch (kind) {
        case TypeKind::finite:
            return "Finite(" + std::to_string(value) + ")";
        case TypeKind::at_most_powers_of_two: {
            unsigned k = 0;
            for (std::size_t v = value; v > 1; v /= 2) {
                ++k;
            }
            return "AtMostPowersOfTwo(2^" + std::to_string(k) + ")";
        }
        case TypeKind::none:
            return "None";
    }
    return "?";
}

TypeVerdict sharkovskii_type_estimate(const PWLMap& map, std::size_t p_max, const CompositionLimits& limits) {
    const PeriodSet ps = period_set(map, p_max, limits);
    TypeVerdict v;
    v.detected_periods = ps.periods;
    v.search_bound = ps.achieved_bound;
    if (ps.periods.empty()) {
        return v;
    }
    const std::size_t first = *std::min_element(ps.periods.begin(), ps.periods.end(), [](auto a, auto b) {
        return sharkovskii_compare(a, b) == SharkovskiiOrder::before;
    });
    if (SharkovskiiKey(first).is_power_of_two()) {
        v.kind = TypeKind::at_most_powers_of_two;
        v.value = *ps.periods.rbegin();
    } else {
        v.kind = TypeKind::finite;
        v.value = first;
    }
    return v;
}

}  // namespace pwdyn
