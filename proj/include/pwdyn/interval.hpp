#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>

#include "pwdyn/rational.hpp"

namespace pwdyn {

/// Closed interval [lo, hi] with lo <= hi. Single points are allowed
/// (degenerate intervals).
class ClosedInterval {
public:
    ClosedInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) {
            throw std::invalid_argument("interval with hi < lo: [" + lo_.str() + ", " + hi_.str() + "]");
        }
    }

    static ClosedInterval point(const Rational& x) { return {x, x}; }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }

    Rational length() const { return hi_ - lo_; }
    bool degenerate() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const ClosedInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

    /// True when the open interiors do not meet (shared endpoints are fine).
    bool interiors_disjoint(const ClosedInterval& other) const {
        return hi_ <= other.lo_ || other.hi_ <= lo_;
    }

    ClosedInterval hull(const ClosedInterval& other) const {
        return {min(lo_, other.lo_), max(hi_, other.hi_)};
    }

    std::optional<ClosedInterval> intersect(const ClosedInterval& other) const {
        const Rational& l = max(lo_, other.lo_);
        const Rational& h = min(hi_, other.hi_);
        if (h < l) {
            return std::nullopt;
        }
        return ClosedInterval(l, h);
    }

    /// Gap between the two sets; zero when they touch or overlap.
    Rational distance(const ClosedInterval& other) const {
        if (other.lo_ > hi_) {
            return other.lo_ - hi_;
        }
        if (lo_ > other.hi_) {
            return lo_ - other.hi_;
        }
        return Rational(0);
    }

    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

inline std::ostream& operator<<(std::ostream& os, const ClosedInterval& j) {
    return os << '[' << j.lo() << ", " << j.hi() << ']';
}

}  // namespace pwdyn
