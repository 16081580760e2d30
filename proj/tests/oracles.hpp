#pragma once

// Reference computations used only by the tests. None of them goes through
// compose/power, so they check the library rather than restate it.

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "pwdyn/pwl_map.hpp"

namespace oracle {

using pwdyn::Node;
using pwdyn::PWLMap;
using pwdyn::Rational;

inline PWLMap make(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Node> nodes;
    for (const auto& [x, y] : pts) {
        nodes.push_back({x, y});
    }
    return PWLMap(std::move(nodes));
}

inline PWLMap tent() { return make({{0, 0}, {Rational(1, 2), 1}, {1, 0}}); }
inline PWLMap g() { return make({{0, 1}, {Rational(1, 2), Rational(1, 2)}, {Rational(3, 4), 0}, {1, Rational(1, 2)}}); }
inline PWLMap identity() { return make({{0, 0}, {1, 1}}); }
inline PWLMap half() { return make({{0, 0}, {1, Rational(1, 2)}}); }
inline PWLMap flip() { return make({{0, 1}, {1, 0}}); }

// Linear interpolation straight from the node list.
inline Rational interp(const PWLMap& f, const Rational& x) {
    const auto& n = f.nodes();
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
        if (n[i].x <= x && x <= n[i + 1].x) {
            return n[i].y + (x - n[i].x) * (n[i + 1].y - n[i].y) / (n[i + 1].x - n[i].x);
        }
    }
    throw std::domain_error("outside");
}

inline Rational iterate(const PWLMap& f, Rational x, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        x = interp(f, x);
    }
    return x;
}

// k/2^bits for k = 0..2^bits, scaled onto the domain.
inline std::vector<Rational> dyadic_grid(const PWLMap& f, unsigned bits) {
    std::vector<Rational> out;
    const long steps = 1L << bits;
    for (long k = 0; k <= steps; ++k) {
        out.push_back(f.lo() + (f.hi() - f.lo()) * Rational(k, steps));
    }
    return out;
}

// Number of maximal monotone runs of f^n sampled on a grid that contains all
// nodes of f^n; a flat run is one lap.
inline std::size_t lap_count_on_grid(const PWLMap& f, std::size_t n, unsigned bits) {
    const auto grid = dyadic_grid(f, bits);
    std::vector<Rational> v;
    for (const auto& x : grid) {
        v.push_back(iterate(f, x, n));
    }
    std::size_t laps = 0;
    int prev = 2;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const int dir = v[i + 1] > v[i] ? 1 : (v[i + 1] < v[i] ? -1 : 0);
        if (dir != prev) {
            ++laps;
        }
        prev = dir;
    }
    return laps;
}

// Isolated solutions of f^p(x) = x by itinerary enumeration: for every
// sequence of pieces, compose the affine maps and solve, then keep the root
// only if its actual orbit follows that itinerary.
inline std::set<Rational> periodic_solutions(const PWLMap& f, std::size_t p) {
    const auto& n = f.nodes();
    const std::size_t pieces = n.size() - 1;
    std::vector<Rational> slope(pieces);
    std::vector<Rational> icpt(pieces);
    for (std::size_t i = 0; i < pieces; ++i) {
        slope[i] = (n[i + 1].y - n[i].y) / (n[i + 1].x - n[i].x);
        icpt[i] = n[i].y - slope[i] * n[i].x;
    }
    std::set<Rational> out;
    std::vector<std::size_t> it(p, 0);
    while (true) {
        Rational a = 1;
        Rational b = 0;
        for (std::size_t k = 0; k < p; ++k) {
            a = slope[it[k]] * a;
            b = slope[it[k]] * b + icpt[it[k]];
        }
        if (a != Rational(1)) {
            const Rational x = b / (Rational(1) - a);
            Rational y = x;
            bool ok = true;
            for (std::size_t k = 0; k < p && ok; ++k) {
                const std::size_t i = it[k];
                ok = n[i].x <= y && y <= n[i + 1].x;
                y = slope[i] * y + icpt[i];
            }
            if (ok && y == x) {
                out.insert(x);
            }
        }
        std::size_t k = 0;
        while (k < p && ++it[k] == pieces) {
            it[k++] = 0;
        }
        if (k == p) {
            break;
        }
    }
    return out;
}

inline std::size_t minimal_period(const PWLMap& f, const Rational& x, std::size_t limit) {
    Rational y = x;
    for (std::size_t d = 1; d <= limit; ++d) {
        y = interp(f, y);
        if (y == x) {
            return d;
        }
    }
    return 0;
}

// Sharkovskii order restricted to 1..64, written out by hand.
inline std::vector<std::uint64_t> sharkovskii_listing_64() {
    return {3,  5,  7,  9,  11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 33, 35, 37, 39, 41, 43, 45,
            47, 49, 51, 53, 55, 57, 59, 61, 63, 6,  10, 14, 18, 22, 26, 30, 34, 38, 42, 46, 50, 54,
            58, 62, 12, 20, 28, 36, 44, 52, 60, 24, 40, 56, 48, 64, 32, 16, 8,  4,  2,  1};
}

// Spectral radius by plain floating power iteration on A + I.
inline double spectral_radius(const std::vector<std::vector<std::uint8_t>>& a, int iterations = 20000) {
    const std::size_t m = a.size();
    std::vector<double> x(m, 1.0);
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<double> y(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = x[i];
            for (std::size_t j = 0; j < m; ++j) {
                y[i] += a[i][j] * x[j];
            }
        }
        double norm = 0.0;
        for (double v : y) {
            norm = std::max(norm, v);
        }
        lambda = norm;
        for (double& v : y) {
            v /= norm;
        }
        x = y;
    }
    return lambda - 1.0;
}

// splitmix-style generator for property tests.
struct Gen {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
    // Random rational in [0, 1] with denominator dividing `den`.
    Rational unit(long den) { return Rational(below(den + 1), den); }
};

// Random map on [0, 1]: `pieces` pieces with abscissas and values on a 1/den grid.
inline PWLMap random_map(Gen& gen, std::size_t pieces, long den) {
    std::set<long> xs{0, den};
    while (xs.size() < pieces + 1) {
        xs.insert(gen.below(den + 1));
    }
    std::vector<Node> nodes;
    for (long x : xs) {
        nodes.push_back({Rational(x, den), gen.unit(den)});
    }
    return PWLMap(std::move(nodes));
}

}  // namespace oracle
