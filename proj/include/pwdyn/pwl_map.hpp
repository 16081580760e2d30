#pragma once

#include <cstddef>
#include <vector>

#include "pwdyn/errors.hpp"
#include "pwdyn/interval.hpp"
#include "pwdyn/rational.hpp"

namespace pwdyn {

struct Node {
    Rational x;
    Rational y;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Continuous piecewise-linear self-map of a closed interval, given by its
/// interpolation nodes. Nodes are strictly increasing in x and every value
/// lies in the domain [x_0, x_k]; violations throw MapError at construction.
class PWLMap {
public:
    explicit PWLMap(std::vector<Node> nodes);

    static PWLMap identity(const Rational& lo, const Rational& hi);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t piece_count() const noexcept { return nodes_.size() - 1; }

    ClosedInterval domain() const { return {nodes_.front().x, nodes_.back().x}; }
    const Rational& lo() const { return nodes_.front().x; }
    const Rational& hi() const { return nodes_.back().x; }

    Rational slope(std::size_t piece) const;

    /// Index of the piece containing x (the left piece at interior nodes).
    std::size_t piece_index(const Rational& x) const;

    Rational operator()(const Rational& x) const;

    /// Same function with collinear interior nodes dropped.
    PWLMap simplified() const;

    /// Restriction to an invariant subinterval; throws DomainError when the
    /// subinterval is not mapped into itself.
    PWLMap restricted(const ClosedInterval& sub) const;

    friend bool operator==(const PWLMap&, const PWLMap&) = default;

private:
    std::vector<Node> nodes_;
};

enum class Direction { increasing, decreasing, constant };

/// Maximal monotone piece of a map.
struct Lap {
    ClosedInterval interval;
    Direction direction;
    std::size_t first_piece;  // index of the first linear piece in the lap
    std::size_t last_piece;   // inclusive

    friend bool operator==(const Lap&, const Lap&) = default;
};

struct CompositionLimits {
    std::size_t max_nodes = std::size_t{1} << 20;
};

/// Exact value of the interpolant; DomainError outside the domain.
Rational eval(const PWLMap& map, const Rational& x);

/// outer ∘ inner. The result has collinear nodes removed. Throws
/// ResourceError when the node list would exceed `limits.max_nodes` and
/// DomainError when inner's range leaves outer's domain.
PWLMap compose(const PWLMap& outer, const PWLMap& inner, const CompositionLimits& limits = {});

/// n-fold iterate, n >= 1. The ResourceError carries the largest iterate built.
PWLMap power(const PWLMap& map, std::size_t n, const CompositionLimits& limits = {});

/// Exact image of a subinterval of the domain.
ClosedInterval interval_image(const PWLMap& map, const ClosedInterval& j);

/// Maximal monotone pieces, left to right. Adjacent increasing (or
/// decreasing) pieces merge; constant pieces never merge with a monotone
/// neighbour.
std::vector<Lap> laps(const PWLMap& map);

const char* to_string(Direction d);

}  // namespace pwdyn
