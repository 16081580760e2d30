#include "pwdyn/pwl_map.hpp"

#include <algorithm>
#include <string>

namespace pwdyn {

namespace {

int direction_sign(const Node& a, const Node& b) {
    return (b.y - a.y).sign();
}

Direction to_direction(int sign) {
    if (sign > 0) {
        return Direction::increasing;
    }
    return sign < 0 ? Direction::decreasing : Direction::constant;
}

// Value at x on the segment a-b, a.x <= x <= b.x.
Rational interpolate(const Node& a, const Node& b, const Rational& x) {
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

// Abscissa on the segment a-b where the value equals v (a.y != b.y).
Rational preimage_on_segment(const Node& a, const Node& b, const Rational& v) {
    return a.x + (v - a.y) * (b.x - a.x) / (b.y - a.y);
}

std::vector<Node> drop_collinear(const std::vector<Node>& nodes) {
    std::vector<Node> out;
    out.reserve(nodes.size());
    out.push_back(nodes.front());
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        const Node& prev = out.back();
        const Node& cur = nodes[i];
        const Node& next = nodes[i + 1];
        if ((cur.y - prev.y) * (next.x - cur.x) != (next.y - cur.y) * (cur.x - prev.x)) {
            out.push_back(cur);
        }
    }
    out.push_back(nodes.back());
    return out;
}

}  // namespace

PWLMap::PWLMap(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) {
        throw MapError("a map needs at least two nodes");
    }
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (!(nodes_[i - 1].x < nodes_[i].x)) {
            throw MapError("node abscissas must be strictly increasing (node " + std::to_string(i) + ")");
        }
    }
    const Rational& lo = nodes_.front().x;
    const Rational& hi = nodes_.back().x;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].y < lo || nodes_[i].y > hi) {
            throw MapError("node " + std::to_string(i) + " value " + nodes_[i].y.str() +
                           " escapes the domain [" + lo.str() + ", " + hi.str() + "]");
        }
    }
}

PWLMap PWLMap::identity(const Rational& lo, const Rational& hi) {
    return PWLMap({{lo, lo}, {hi, hi}});
}

Rational PWLMap::slope(std::size_t piece) const {
    const Node& a = nodes_.at(piece);
    const Node& b = nodes_.at(piece + 1);
    return (b.y - a.y) / (b.x - a.x);
}

std::size_t PWLMap::piece_index(const Rational& x) const {
    if (x < lo() || x > hi()) {
        throw DomainError("point " + x.str() + " outside the domain [" + lo().str() + ", " + hi().str() + "]");
    }
    // first node with abscissa >= x
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x,
                               [](const Node& n, const Rational& v) { return n.x < v; });
    const auto idx = static_cast<std::size_t>(it - nodes_.begin());
    return idx == 0 ? 0 : idx - 1;
}

Rational PWLMap::operator()(const Rational& x) const {
    const std::size_t i = piece_index(x);
    if (x == nodes_[i].x) {
        return nodes_[i].y;
    }
    if (x == nodes_[i + 1].x) {
        return nodes_[i + 1].y;
    }
    return interpolate(nodes_[i], nodes_[i + 1], x);
}

PWLMap PWLMap::simplified() const {
    return PWLMap(drop_collinear(nodes_));
}

PWLMap PWLMap::restricted(const ClosedInterval& sub) const {
    if (!domain().contains(sub) || sub.degenerate()) {
        throw DomainError("restriction target must be a non degenerate subinterval of the domain");
    }
    if (!sub.contains(interval_image(*this, sub))) {
        throw DomainError("interval is not invariant; cannot restrict");
    }
    std::vector<Node> out;
    out.push_back({sub.lo(), (*this)(sub.lo())});
    for (const Node& n : nodes_) {
        if (sub.lo() < n.x && n.x < sub.hi()) {
            out.push_back(n);
        }
    }
    out.push_back({sub.hi(), (*this)(sub.hi())});
    return PWLMap(std::move(out));
}

Rational eval(const PWLMap& map, const Rational& x) {
    return map(x);
}

PWLMap compose(const PWLMap& outer, const PWLMap& inner, const CompositionLimits& limits) {
    for (const Node& n : inner.nodes()) {
        if (n.y < outer.lo() || n.y > outer.hi()) {
            throw DomainError("inner map range leaves the outer domain at value " + n.y.str());
        }
    }
    const auto& on = outer.nodes();
    const auto& in = inner.nodes();
    std::vector<Node> out;
    out.reserve(in.size() * 2);

    auto push = [&](Node node) {
        if (out.size() >= limits.max_nodes) {
            throw ResourceError("composition exceeds the node cap of " + std::to_string(limits.max_nodes), 0);
        }
        out.push_back(std::move(node));
    };
    auto by_x = [](const Node& n, const Rational& v) { return n.x < v; };

    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
        const Node& a = in[i];
        const Node& b = in[i + 1];
        push({a.x, outer(a.y)});
        if (a.y == b.y) {
            continue;
        }
        const Rational& vlo = min(a.y, b.y);
        const Rational& vhi = max(a.y, b.y);
        // outer abscissas strictly inside (vlo, vhi)
        auto first = std::upper_bound(on.begin(), on.end(), vlo,
                                      [](const Rational& v, const Node& n) { return v < n.x; });
        auto last = std::lower_bound(on.begin(), on.end(), vhi, by_x);
        if (a.y < b.y) {
            for (auto it = first; it != last; ++it) {
                push({preimage_on_segment(a, b, it->x), it->y});
            }
        } else {
            for (auto it = last; it != first;) {
                --it;
                push({preimage_on_segment(a, b, it->x), it->y});
            }
        }
    }
    push({in.back().x, outer(in.back().y)});
    return PWLMap(drop_collinear(out));
}

PWLMap power(const PWLMap& map, std::size_t n, const CompositionLimits& limits) {
    if (n == 0) {
        throw std::invalid_argument("power requires n >= 1");
    }
    PWLMap result = map;
    for (std::size_t k = 2; k <= n; ++k) {
        try {
            result = compose(map, result, limits);
        } catch (const ResourceError& e) {
            throw ResourceError("iterate " + std::to_string(k) + " exceeds the node cap of " +
                                    std::to_string(limits.max_nodes),
                                k - 1);
        }
    }
    return result;
}

ClosedInterval interval_image(const PWLMap& map, const ClosedInterval& j) {
    if (!map.domain().contains(j)) {
        throw DomainError("interval outside the domain");
    }
    Rational lo = map(j.lo());
    Rational hi = lo;
    auto take = [&](const Rational& v) {
        if (v < lo) {
            lo = v;
        }
        if (hi < v) {
            hi = v;
        }
    };
    take(map(j.hi()));
    for (const Node& n : map.nodes()) {
        if (j.lo() < n.x && n.x < j.hi()) {
            take(n.y);
        }
    }
    return {lo, hi};
}

std::vector<Lap> laps(const PWLMap& map) {
    const auto& nodes = map.nodes();
    std::vector<Lap> out;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const Direction d = to_direction(direction_sign(nodes[i], nodes[i + 1]));
        if (!out.empty() && out.back().direction == d) {
            Lap& last = out.back();
            last.interval = ClosedInterval(last.interval.lo(), nodes[i + 1].x);
            last.last_piece = i;
        } else {
            out.push_back({ClosedInterval(nodes[i].x, nodes[i + 1].x), d, i, i});
        }
    }
    return out;
}

const char* to_string(Direction d) {
    switch (d) {
        case Direction::increasing:
            return "increasing";
        case Direction::decreasing:
            return "decreasing";
        case Direction::constant:
            return "constant";
    }
    return "?";
}

}  // namespace pwdyn
