#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwdyn/pwl_map.hpp"

namespace pwdyn {

using IncidenceMatrix = std::vector<std::vector<std::uint8_t>>;

/// Forward-invariant partition c_0 < ... < c_m and its 0/1 transition
/// matrix: matrix[i][j] = 1 iff f([c_i, c_{i+1}]) ⊇ [c_j, c_{j+1}].
struct MarkovData {
    std::vector<Rational> cuts;
    IncidenceMatrix matrix;

    std::size_t cells() const { return cuts.size() - 1; }
    ClosedInterval cell(std::size_t i) const { return {cuts[i], cuts[i + 1]}; }
};

/// Closes the forward orbits of all node abscissas with exact arithmetic.
/// nullopt when some orbit is still open after `max_steps` steps or the cells
/// fail the covering check.
std::optional<MarkovData> markov_partition(const PWLMap& map, std::size_t max_steps = 512);

struct PerronResult {
    double value = 0.0;
    double lower = 0.0;  // Collatz-Wielandt bounds for the dominant block
    double upper = 0.0;
    std::size_t iterations = 0;
    bool converged = true;
};

/// Spectral radius of a nonnegative 0/1 matrix. Each strongly connected
/// block is iterated with (B + I) on exact integer vectors until the
/// Collatz-Wielandt bounds min/max (Bx)_i/x_i are within `tol`.
PerronResult perron_bracket(const IncidenceMatrix& matrix, double tol = 1e-12, std::size_t max_iterations = 100000);

double perron_root(const IncidenceMatrix& matrix, double tol = 1e-12);

/// Strongly connected directed graph on the cells.
bool is_irreducible(const IncidenceMatrix& matrix);

/// Strongly connected components, each sorted, in order of smallest member.
std::vector<std::vector<std::size_t>> strongly_connected_components(const IncidenceMatrix& matrix);

enum class EntropyMethod { perron, lapcount, horseshoe_bound };

const char* to_string(EntropyMethod m);

struct EntropyEstimate {
    double value = 0.0;  // natural log
    EntropyMethod method = EntropyMethod::perron;
    std::size_t iterate_used = 0;
    std::string error_bound_note;
    std::vector<std::size_t> lap_counts;  // lapcount only: lap(f^n), n = 1..iterate_used
};

/// log of the Perron root of the Markov matrix, 0 when the root is <= 1.
std::optional<EntropyEstimate> entropy_markov(const PWLMap& map, std::size_t max_steps = 512, double tol = 1e-12);

/// (1/n) log lap(f^n) at n = n_max, with the whole lap sequence. Throws
/// ResourceError (carrying the largest n built) past the node cap.
EntropyEstimate entropy_lapcount(const PWLMap& map, std::size_t n_max, const CompositionLimits& limits = {});

/// (log 2)/n for the first n <= n_max where f^n has a horseshoe, else 0.
/// Iterates beyond the node cap are skipped.
EntropyEstimate entropy_lower_bound_horseshoe(const PWLMap& map, std::size_t n_max,
                                              const CompositionLimits& limits = {});

}  // namespace pwdyn
