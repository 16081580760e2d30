#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwdyn/pwl_map.hpp"

namespace pwdyn {

/// Finite-horizon stand-ins for limsup > delta and liminf = 0: after
/// `burn_in` steps, the largest separation must exceed `delta` and the
/// smallest must drop below `eps_close`, within `horizon` steps.
struct LYParams {
    double delta = 0.1;
    double eps_close = 1e-4;
    std::size_t horizon = 10000;
    std::size_t burn_in = 100;

    /// Throws std::invalid_argument unless 0 < eps_close < delta and horizon > burn_in.
    void validate() const;
};

enum class Classification { dense_chaos_evidence, no_evidence };

const char* to_string(Classification c);

struct ChaosVerdict {
    double ly_fraction = 0.0;
    std::size_t pairs_tested = 0;
    LYParams params;
    Classification classification = Classification::no_evidence;
    std::string caveat;
};

/// Double-precision image of a PWL map. Each image has its low mantissa
/// bits refilled from a hash of the argument, so orbits of maps with dyadic
/// data do not collapse onto a fixed point after ~53 steps. The map stays a
/// deterministic function of its argument.
class FloatMap {
public:
    explicit FloatMap(const PWLMap& map);

    double operator()(double x) const;

    double lo() const { return xs_.front(); }
    double hi() const { return xs_.back(); }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

struct PairRecord {
    double x = 0.0;
    double y = 0.0;
    double max_sep = 0.0;
    double min_sep = 0.0;
    bool is_ly = false;
};

/// Separations over [burn_in, horizon] for one pair.
PairRecord ly_pair_stats(const FloatMap& map, double x, double y, const LYParams& params);

bool ly_pair_classify(const PWLMap& map, double x, double y, const LYParams& params);

struct SampleOptions {
    std::size_t n_pairs = 10000;
    std::uint64_t seed = 42;
    double threshold = 0.95;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Uniform random pairs from a per-index seeded stream; the result does not
/// depend on the thread count. `records`, when given, receives one entry per pair.
ChaosVerdict ly_density_sample(const PWLMap& map, const LYParams& params, const SampleOptions& options,
                               std::vector<PairRecord>* records = nullptr);

/// The i-th sample pair for a seed; exposed for reproducibility checks.
std::pair<double, double> sample_pair(std::uint64_t seed, std::uint64_t index, double lo, double hi);

/// Checks, for every ordered pair of dyadic grid cells (J1, J2) at
/// resolution 2^-grid_k of the domain, that max_n |f^n(J1)| > delta and
/// min_n dist(f^n(J1), f^n(J2)) <= eps over n = 0..horizon, with exact
/// interval images. ly_fraction is the passing share; the verdict is
/// evidence only when every pair passes.
ChaosVerdict snoha_interval_criterion(const PWLMap& map, unsigned grid_k, const Rational& delta, const Rational& eps,
                                      std::size_t horizon);

/// Non degenerate [a, b] with f([a, b]) ⊆ [a, b], a and b drawn from node
/// abscissas, node values, fixed points and `extra_candidates`; sorted by
/// length, then left endpoint.
std::vector<ClosedInterval> invariant_intervals(const PWLMap& map, const std::vector<Rational>& extra_candidates);

/// |f^i(K)| for i = 0..n.
std::vector<Rational> image_diameter_sequence(const PWLMap& map, const ClosedInterval& k, std::size_t n);

}  // namespace pwdyn
