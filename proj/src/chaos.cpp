#include "pwdyn/chaos.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pwdyn/periodic.hpp"

namespace pwdyn {

namespace {

constexpr std::uint64_t kDitherMask = (std::uint64_t{1} << 12) - 1;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix64(state);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

void LYParams::validate() const {
    if (!(delta > 0.0) || !(eps_close > 0.0) || !(eps_close < delta)) {
        throw std::invalid_argument("Li-Yorke parameters need 0 < eps_close < delta");
    }
    if (horizon <= burn_in) {
        throw std::invalid_argument("Li-Yorke parameters need horizon > burn_in");
    }
}

const char* to_string(Classification c) {
    return c == Classification::dense_chaos_evidence ? "dense_chaos_evidence" : "no_evidence";
}

FloatMap::FloatMap(const PWLMap& map) {
    for (const Node& n : map.nodes()) {
        xs_.push_back(n.x.to_double());
        ys_.push_back(n.y.to_double());
    }
}

double FloatMap::operator()(double x) const {
    auto it = std::upper_bound(xs_.begin() + 1, xs_.end() - 1, x);
    const auto i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
    double y = ys_[i] + t * (ys_[i + 1] - ys_[i]);
    const std::uint64_t fresh = mix64(std::bit_cast<std::uint64_t>(x));
    y = std::bit_cast<double>((std::bit_cast<std::uint64_t>(y) & ~kDitherMask) | (fresh & kDitherMask));
    if (std::fpclassify(y) == FP_SUBNORMAL) {
        y = 0.0;  // dithering would otherwise keep orbits near 0 in slow subnormal arithmetic
    }
    return std::clamp(y, xs_.front(), xs_.back());
}

PairRecord ly_pair_stats(const FloatMap& map, double x, double y, const LYParams& params) {
    PairRecord rec{x, y, 0.0, INFINITY, false};
    for (std::size_t n = 0; n <= params.horizon; ++n) {
        if (n >= params.burn_in) {
            const double sep = std::fabs(x - y);
            rec.max_sep = std::max(rec.max_sep, sep);
            rec.min_sep = std::min(rec.min_sep, sep);
        }
        if (n == params.horizon) {
            break;
        }
        x = map(x);
        y = map(y);
    }
    rec.is_ly = rec.max_sep > params.delta && rec.min_sep < params.eps_close;
    return rec;
}

bool ly_pair_classify(const PWLMap& map, double x, double y, const LYParams& params) {
    params.validate();
    return ly_pair_stats(FloatMap(map), x, y, params).is_ly;
}

std::pair<double, double> sample_pair(std::uint64_t seed, std::uint64_t index, double lo, double hi) {
    SplitMix64 gen{mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL)};
    const double u = gen.unit();
    const double v = gen.unit();
    return {lo + u * (hi - lo), lo + v * (hi - lo)};
}

ChaosVerdict ly_density_sample(const PWLMap& map, const LYParams& params, const SampleOptions& options,
                               std::vector<PairRecord>* records) {
    params.validate();
    if (options.n_pairs == 0) {
        throw std::invalid_argument("n_pairs must be positive");
    }
    const FloatMap fmap(map);
    std::vector<PairRecord> out(options.n_pairs);
    unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, options.n_pairs));

    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < options.n_pairs; i += workers) {
            const auto [x, y] = sample_pair(options.seed, i, fmap.lo(), fmap.hi());
            out[i] = ly_pair_stats(fmap, x, y, params);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        work(0);
    }

    const auto hits = static_cast<std::size_t>(
        std::count_if(out.begin(), out.end(), [](const PairRecord& r) { return r.is_ly; }));
    ChaosVerdict v;
    v.pairs_tested = options.n_pairs;
    v.ly_fraction = static_cast<double>(hits) / static_cast<double>(options.n_pairs);
    v.params = params;
    v.classification = v.ly_fraction >= options.threshold ? Classification::dense_chaos_evidence
                                                          : Classification::no_evidence;
    v.caveat = "finite-horizon surrogate: limsup replaced by a max and liminf by a min over steps " +
               std::to_string(params.burn_in) + ".." + std::to_string(params.horizon) +
               "; sampled in double precision; evidence only";
    if (records != nullptr) {
        *records = std::move(out);
    }
    return v;
}

ChaosVerdict snoha_interval_criterion(const PWLMap& map, unsigned grid_k, const Rational& delta, const Rational& eps,
                                      std::size_t horizon) {
    if (grid_k == 0 || grid_k > 20) {
        throw std::invalid_argument("grid_k must be in 1..20");
    }
    const std::size_t cells = std::size_t{1} << grid_k;
    const Rational width = map.domain().length() / Rational(static_cast<long>(cells));

    std::vector<std::vector<ClosedInterval>> images(cells);
    std::vector<Rational> max_len(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const Rational lo = map.lo() + width * Rational(static_cast<long>(i));
        ClosedInterval j(lo, lo + width);
        images[i].reserve(horizon + 1);
        max_len[i] = j.length();
        images[i].push_back(j);
        for (std::size_t n = 1; n <= horizon; ++n) {
            j = interval_image(map, j);
            max_len[i] = max(max_len[i], j.length());
            images[i].push_back(j);
        }
    }

    std::size_t passed = 0;
    for (std::size_t a = 0; a < cells; ++a) {
        if (!(max_len[a] > delta)) {
            continue;
        }
        for (std::size_t b = 0; b < cells; ++b) {
            for (std::size_t n = 0; n <= horizon; ++n) {
                if (images[a][n].distance(images[b][n]) <= eps) {
                    ++passed;
                    break;
                }
            }
        }
    }

    ChaosVerdict v;
    v.pairs_tested = cells * cells;
    v.ly_fraction = static_cast<double>(passed) / static_cast<double>(v.pairs_tested);
    v.params.delta = delta.to_double();
    v.params.eps_close = eps.to_double();
    v.params.horizon = horizon;
    v.params.burn_in = 0;
    v.classification = passed == v.pairs_tested ? Classification::dense_chaos_evidence : Classification::no_evidence;
    v.caveat = "exact interval images over n = 0.." + std::to_string(horizon) + " on a 2^-" + std::to_string(grid_k) +
               " grid; evidence for generic delta-chaos, not a proof";
    return v;
}

std::vector<ClosedInterval> invariant_intervals(const PWLMap& map, const std::vector<Rational>& extra_candidates) {
    std::vector<Rational> cands;
    for (const Node& n : map.nodes()) {
        cands.push_back(n.x);
        cands.push_back(n.y);
    }
    const FixedPointSet fp = fixed_points(map);
    cands.insert(cands.end(), fp.points.begin(), fp.points.end());
    for (const ClosedInterval& r : fp.ranges) {
        cands.push_back(r.lo());
        cands.push_back(r.hi());
    }
    const ClosedInterval dom = map.domain();
    for (const Rational& x : extra_candidates) {
        if (dom.contains(x)) {
            cands.push_back(x);
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<ClosedInterval> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t k = i + 1; k < cands.size(); ++k) {
            ClosedInterval j(cands[i], cands[k]);
            if (j.contains(interval_image(map, j))) {
                out.push_back(std::move(j));
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        const Rational la = a.length();
        const Rational lb = b.length();
        return la < lb || (la == lb && a.lo() < b.lo());
    });
    return out;
}

std::vector<Rational> image_diameter_sequence(const PWLMap& map, const ClosedInterval& k, std::size_t n) {
    if (!map.domain().contains(k)) {
        throw DomainError("interval outside the domain");
    }
    std::vector<Rational> out;
    out.reserve(n + 1);
    ClosedInterval j = k;
    out.push_back(j.length());
    for (std::size_t i = 1; i <= n; ++i) {
        j = interval_image(map, j);
        out.push_back(j.length());
    }
    return out;
}

}  // namespace pwdyn
