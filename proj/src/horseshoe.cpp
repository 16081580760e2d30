#include "pwdyn/horseshoe.hpp"

#include <algorithm>

#include "pwdyn/chaos.hpp"
#include "pwdyn/periodic.hpp"

namespace pwdyn {

namespace {

constexpr int kMaxShrinkRounds = 64;

// Abscissa inside a strictly monotone lap where h takes the value v.
Rational preimage_in_lap(const PWLMap& h, const Lap& lap, const Rational& v) {
    const auto& nodes = h.nodes();
    for (std::size_t i = lap.first_piece; i <= lap.last_piece; ++i) {
        const Node& a = nodes[i];
        const Node& b = nodes[i + 1];
        if (min(a.y, b.y) <= v && v <= max(a.y, b.y)) {
            if (v == a.y) {
                return a.x;
            }
            if (v == b.y) {
                return b.x;
            }
            return a.x + (v - a.y) * (b.x - a.x) / (b.y - a.y);
        }
    }
    throw std::logic_error("value outside the lap image");
}

ClosedInterval preimage_interval(const PWLMap& h, const Lap& lap, const ClosedInterval& target) {
    Rational p = preimage_in_lap(h, lap, target.lo());
    Rational q = preimage_in_lap(h, lap, target.hi());
    if (q < p) {
        std::swap(p, q);
    }
    return {p, q};
}

// converged_only: reject pairs whose shrink did not reach hull(J ∪ K) within the round budget.
std::optional<HorseshoeCertificate> search_lap_pairs(const PWLMap& h, std::size_t iterate, bool converged_only) {
    const std::vector<Lap> ls = laps(h);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].direction == Direction::constant) {
            continue;
        }
        const ClosedInterval img1 = interval_image(h, ls[i].interval);
        for (std::size_t k = i + 1; k < ls.size(); ++k) {
            if (ls[k].direction == Direction::constant) {
                continue;
            }
            ClosedInterval target(ls[i].interval.lo(), ls[k].interval.hi());
            if (!img1.contains(target) || !interval_image(h, ls[k].interval).contains(target)) {
                continue;
            }
            ClosedInterval j = preimage_interval(h, ls[i], target);
            ClosedInterval kk = preimage_interval(h, ls[k], target);
            // Shrinking the target to hull(J ∪ K) keeps the covering property;
            // repeat until the hull is reproduced exactly.
            bool converged = false;
            for (int round = 0; round < kMaxShrinkRounds; ++round) {
                const ClosedInterval hull = j.hull(kk);
                if (hull == target) {
                    converged = true;
                    break;
                }
                target = hull;
                j = preimage_interval(h, ls[i], target);
                kk = preimage_interval(h, ls[k], target);
            }
            if ((converged_only && !converged) || !is_horseshoe(h, j, kk)) {
                continue;
            }
            return HorseshoeCertificate{iterate, j, kk, interval_image(h, j), interval_image(h, kk)};
        }
    }
    return std::nullopt;
}

// Smallest x >= start with h(x) <= level (below = true) or h(x) >= level.
std::optional<Rational> first_hit(const PWLMap& h, const Rational& start, const Rational& level, bool below) {
    auto hit = [&](const Rational& v) { return below ? v <= level : v >= level; };
    const auto& nodes = h.nodes();
    Rational left = start;
    Rational vl = h(start);
    for (std::size_t i = h.piece_index(start); i + 1 < nodes.size(); ++i) {
        if (hit(vl)) {
            return left;
        }
        const Node& b = nodes[i + 1];
        if (hit(b.y)) {
            return left + (level - vl) * (b.x - left) / (b.y - vl);
        }
        left = b.x;
        vl = b.y;
    }
    if (hit(vl)) {
        return left;
    }
    return std::nullopt;
}

std::vector<Rational> candidate_points(const PWLMap& h) {
    std::vector<Rational> c;
    for (const Node& n : h.nodes()) {
        c.push_back(n.x);
        c.push_back(n.y);
    }
    const FixedPointSet fp = fixed_points(h);
    c.insert(c.end(), fp.points.begin(), fp.points.end());
    for (const ClosedInterval& r : fp.ranges) {
        c.push_back(r.lo());
        c.push_back(r.hi());
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

std::optional<HorseshoeCertificate> search_candidates(const PWLMap& h, std::size_t iterate) {
    const std::vector<Rational> cands = candidate_points(h);
    for (std::size_t ia = 0; ia < cands.size(); ++ia) {
        const Rational& a = cands[ia];
        const auto low = first_hit(h, a, a, true);
        if (!low) {
            continue;
        }
        for (std::size_t id = ia + 1; id < cands.size(); ++id) {
            const Rational& d = cands[id];
            if (d <= *low) {
                continue;
            }
            const auto high = first_hit(h, a, d, false);
            if (!high) {
                break;  // larger d only moves the hit further right
            }
            const Rational& c = max(*low, *high);
            if (c >= d) {
                continue;
            }
            const ClosedInterval k(c, d);
            const ClosedInterval img_k = interval_image(h, k);
            if (img_k.lo() <= a && img_k.hi() >= d) {
                const ClosedInterval j(a, c);
                if (is_horseshoe(h, j, k)) {
                    return HorseshoeCertificate{iterate, j, k, interval_image(h, j), img_k};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_horseshoe(const PWLMap& h, const ClosedInterval& j, const ClosedInterval& k) {
    const ClosedInterval dom = h.domain();
    if (!dom.contains(j) || !dom.contains(k)) {
        return false;
    }
    if (j.degenerate() || k.degenerate() || !j.interiors_disjoint(k)) {
        return false;
    }
    const ClosedInterval hull = j.hull(k);
    return interval_image(h, j).contains(hull) && interval_image(h, k).contains(hull);
}

bool verify_horseshoe(const PWLMap& map, std::size_t n, const ClosedInterval& j, const ClosedInterval& k,
                      const CompositionLimits& limits) {
    if (!map.domain().contains(j) || !map.domain().contains(k)) {
        return false;
    }
    return is_horseshoe(power(map, n, limits), j, k);
}

std::optional<HorseshoeCertificate> find_horseshoe_in(const PWLMap& iterate_map, std::size_t iterate) {
    if (auto cert = search_lap_pairs(iterate_map, iterate, true)) {
        return cert;
    }
    if (auto cert = search_candidates(iterate_map, iterate)) {
        return cert;
    }
    return search_lap_pairs(iterate_map, iterate, false);
}

std::optional<HorseshoeCertificate> find_horseshoe(const PWLMap& map, std::size_t n,
                                                   const CompositionLimits& limits) {
    return find_horseshoe_in(power(map, n, limits), n);
}

bool NestedStructureReport::structure_found() const {
    return !levels.empty() &&
           std::all_of(levels.begin(), levels.end(), [](const NestedLevel& l) { return l.certificate.has_value(); });
}

NestedStructureReport nested_structure_probe(const PWLMap& map, std::size_t depth,
                                             const CompositionLimits& limits) {
    NestedStructureReport report;
    if (depth == 0) {
        return report;
    }
    PWLMap current = map;
    while (true) {
        std::optional<HorseshoeCertificate> cert;
        try {
            cert = find_horseshoe(current, 2, limits);
        } catch (const ResourceError&) {
            cert.reset();
        }
        const ClosedInterval level = current.domain();
        report.levels.push_back({level, cert});
        if (report.levels.size() >= depth) {
            break;
        }
        std::optional<ClosedInterval> next;
        for (const ClosedInterval& cand : invariant_intervals(current, {})) {
            if (cand != level) {
                next = cand;  // sorted by length, so the first proper one is the shortest
                break;
            }
        }
        if (!next) {
            break;
        }
        current = current.restricted(*next);
    }
    return report;
}

}  // namespace pwdyn
