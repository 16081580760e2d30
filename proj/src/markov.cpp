#include "pwdyn/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "pwdyn/horseshoe.hpp"

namespace pwdyn {

namespace {

struct BlockBracket {
    mpq_class lower;
    mpq_class upper;
    std::size_t iterations = 0;
    bool converged = true;
};

BlockBracket bracket_block(const IncidenceMatrix& a, const std::vector<std::size_t>& block, const mpq_class& tol,
                           std::size_t max_iterations) {
    const std::size_t s = block.size();
    if (s == 1) {
        const mpq_class r(a[block[0]][block[0]]);
        return {r, r, 0, true};
    }
    std::vector<mpz_class> x(s, 1);
    std::vector<mpz_class> y(s);
    BlockBracket out;
    for (std::size_t it = 0;; ++it) {
        for (std::size_t i = 0; i < s; ++i) {
            y[i] = 0;
            for (std::size_t k = 0; k < s; ++k) {
                if (a[block[i]][block[k]] != 0) {
                    y[i] += x[k];
                }
            }
        }
        // x stays strictly positive: it starts at 1 and (B + I) keeps the diagonal
        mpq_class lo(y[0], x[0]);
        lo.canonicalize();
        mpq_class hi = lo;
        for (std::size_t i = 1; i < s; ++i) {
            mpq_class r(y[i], x[i]);
            r.canonicalize();
            if (r < lo) {
                lo = r;
            }
            if (r > hi) {
                hi = r;
            }
        }
        out.lower = lo;
        out.upper = hi;
        out.iterations = it;
        if (hi - lo <= tol) {
            return out;
        }
        if (it >= max_iterations) {
            out.converged = false;
            return out;
        }
        mpz_class g = 0;
        for (std::size_t i = 0; i < s; ++i) {
            x[i] += y[i];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x[i].get_mpz_t());
        }
        if (g > 1) {
            for (auto& v : x) {
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            }
        }
    }
}

void check_square(const IncidenceMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw std::invalid_argument("matrix must be square");
        }
    }
}

}  // namespace

std::optional<MarkovData> markov_partition(const PWLMap& map, std::size_t max_steps) {
    std::set<Rational> cuts;
    for (const Node& n : map.nodes()) {
        cuts.insert(n.x);
    }
    const std::vector<Rational> starts(cuts.begin(), cuts.end());
    for (const Rational& start : starts) {
        Rational y = map(start);
        std::size_t steps = 1;
        while (!cuts.contains(y)) {
            if (steps >= max_steps) {
                return std::nullopt;
            }
            cuts.insert(y);
            y = map(y);
            ++steps;
        }
    }

    MarkovData data;
    data.cuts.assign(cuts.begin(), cuts.end());
    const std::size_t m = data.cells();
    data.matrix.assign(m, std::vector<std::uint8_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const ClosedInterval img = interval_image(map, data.cell(i));
        if (!cuts.contains(img.lo()) || !cuts.contains(img.hi())) {
            return std::nullopt;
        }
        for (std::size_t j = 0; j < m; ++j) {
            data.matrix[i][j] = img.contains(data.cell(j)) ? 1 : 0;
        }
    }
    return data;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const IncidenceMatrix& a) {
    check_square(a);
    const std::size_t n = a.size();
    // Kosaraju: finishing order on the graph, then sweep the transpose.
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        seen[root] = true;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            while (next < n && (a[v][next] == 0 || seen[next])) {
                ++next;
            }
            if (next == n) {
                order.push_back(v);
                stack.pop_back();
            } else {
                const std::size_t w = next++;
                seen[w] = true;
                stack.emplace_back(w, 0);
            }
        }
    }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool> assigned(n, false);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (assigned[*it]) {
            continue;
        }
        std::vector<std::size_t> comp;
        std::vector<std::size_t> todo{*it};
        assigned[*it] = true;
        while (!todo.empty()) {
            const std::size_t v = todo.back();
            todo.pop_back();
            comp.push_back(v);
            for (std::size_t u = 0; u < n; ++u) {
                if (a[u][v] != 0 && !assigned[u]) {
                    assigned[u] = true;
                    todo.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool is_irreducible(const IncidenceMatrix& matrix) {
    return !matrix.empty() && strongly_connected_components(matrix).size() == 1;
}

PerronResult perron_bracket(const IncidenceMatrix& matrix, double tol, std::size_t max_iterations) {
    check_square(matrix);
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    PerronResult out;
    if (matrix.empty()) {
        return out;
    }
    const mpq_class qtol(tol);
    mpq_class lower = 0;
    mpq_class upper = 0;
    for (const auto& block : strongly_connected_components(matrix)) {
        const BlockBracket b = bracket_block(matrix, block, qtol, max_iterations);
        lower = std::max(lower, b.lower);
        upper = std::max(upper, b.upper);
        out.iterations = std::max(out.iterations, b.iterations);
        out.converged = out.converged && b.converged;
    }
    const mpq_class mid = (lower + upper) / 2;
    out.lower = lower.get_d();
    out.upper = upper.get_d();
    out.value = mid.get_d();
    return out;
}

double perron_root(const IncidenceMatrix& matrix, double tol) {
    return perron_bracket(matrix, tol).value;
}

const char* to_string(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::perron:
            return "perron";
        case EntropyMethod::lapcount:
            return "lapcount";
        case EntropyMethod::horseshoe_bound:
            return "horseshoe_bound";
    }
    return "?";
}

std::optional<EntropyEstimate> entropy_markov(const PWLMap& map, std::size_t max_steps, double tol) {
    const auto data = markov_partition(map, max_steps);
    if (!data) {
        return std::nullopt;
    }
    const PerronResult root = perron_bracket(data->matrix, tol);
    EntropyEstimate e;
    e.method = EntropyMethod::perron;
    e.iterate_used = 1;
    e.value = root.value <= 1.0 ? 0.0 : std::log(root.value);
    e.error_bound_note = "Perron root bracketed in [" + std::to_string(root.lower) + ", " +
                         std::to_string(root.upper) + "] over " + std::to_string(data->cells()) + " Markov cells";
    return e;
}

EntropyEstimate entropy_lapcount(const PWLMap& map, std::size_t n_max, const CompositionLimits& limits) {
    if (n_max == 0) {
        throw std::invalid_argument("n_max must be positive");
    }
    EntropyEstimate e;
    e.method = EntropyMethod::lapcount;
    PWLMap iterate = map;
    e.lap_counts.push_back(laps(iterate).size());
    for (std::size_t n = 2; n <= n_max; ++n) {
        try {
            iterate = compose(map, iterate, limits);
        } catch (const ResourceError&) {
            throw ResourceError("lap count of iterate " + std::to_string(n) + " exceeds the node cap; reached n = " +
                                    std::to_string(n - 1),
                                n - 1);
        }
        e.lap_counts.push_back(laps(iterate).size());
    }
    e.iterate_used = n_max;
    e.value = std::log(static_cast<double>(e.lap_counts.back())) / static_cast<double>(n_max);
    e.error_bound_note = "raw (1/n) log lap(f^n) at n = " + std::to_string(n_max) +
                         "; upper-biased by at most (log C)/n for a constant C";
    return e;
}

EntropyEstimate entropy_lower_bound_horseshoe(const PWLMap& map, std::size_t n_max, const CompositionLimits& limits) {
    EntropyEstimate e;
    e.method = EntropyMethod::horseshoe_bound;
    e.error_bound_note = "no horseshoe found for iterates up to " + std::to_string(n_max);
    PWLMap iterate = map;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > 1) {
            try {
                iterate = compose(map, iterate, limits);
            } catch (const ResourceError&) {
                e.error_bound_note += " (node cap reached at n = " + std::to_string(n) + ")";
                break;
            }
        }
        if (find_horseshoe_in(iterate, n)) {
            e.value = std::numbers::ln2 / static_cast<double>(n);
            e.iterate_used = n;
            e.error_bound_note = "f^" + std::to_string(n) + " has a horseshoe, so h_top >= log(2)/" + std::to_string(n);
            break;
        }
    }
    return e;
}

}  // namespace pwdyn
