#include "rulerwrap/experiments.hpp"

#include <limits>
#include <stdexcept>
#include <thread>

#include "rulerwrap/wrap_algorithms.hpp"

namespace rulerwrap {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept {
    return splitmix64(master ^ splitmix64(trial));
}

LengthSource::LengthSource(std::uint64_t seed, Length lo, Length hi)
    : engine_(seed), lo_(lo), span_(hi - lo + 1) {
    if (lo == 0 || lo > hi) {
        throw DomainError("length range must satisfy 1 <= lo <= hi");
    }
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    limit_ = span_ == 0 ? max : max - (max % span_ + 1) % span_;
}

Length LengthSource::next() {
    if (span_ == 0) return engine_();
    for (;;) {
        const std::uint64_t r = engine_();
        if (r <= limit_) {
            return lo_ + r % span_;
        }
    }
}

Ruler random_ruler(std::size_t n, Length lo, Length hi, std::uint64_t seed) {
    LengthSource src(seed, lo, hi);
    std::vector<Length> lengths(n);
    for (auto& v : lengths) v = src.next();
    return Ruler(std::move(lengths));
}

void ExperimentConfig::validate() const {
    if (n == 0) throw DomainError("experiment: n must be at least 1");
    if (runs == 0) throw DomainError("experiment: runs must be at least 1");
    if (lo == 0 || lo > hi) throw DomainError("experiment: need 1 <= lo <= hi");
    for (const auto c : checkpoints) {
        if (c > n) {
            throw DomainError("experiment: checkpoint " + std::to_string(c) + " exceeds n = " +
                              std::to_string(n));
        }
    }
}

std::vector<std::size_t> default_checkpoints(std::size_t n) {
    std::vector<std::size_t> out;
    for (const std::size_t c : ExperimentConfig{}.checkpoints) {
        if (c <= n) out.push_back(c);
    }
    return out;
}

namespace {

std::string format_one_decimal(std::uint64_t sum, std::size_t count) {
    // round(sum / count, 1) half-up, in exact integer arithmetic.
    const unsigned __int128 tenths =
        (static_cast<unsigned __int128>(sum) * 20 + count) / (2 * static_cast<unsigned __int128>(count));
    const auto whole = static_cast<std::uint64_t>(tenths / 10);
    const auto frac = static_cast<unsigned>(tenths % 10);
    return std::to_string(whole) + "." + std::to_string(frac);
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, jobs));
}

// Runs body(trial, local) for every trial over worker threads, each with its
// own accumulator, then folds the accumulators with merge. Accumulation is
// integer-only so the result does not depend on the split.
template <class Acc, class Body, class Merge>
Acc parallel_trials(std::size_t runs, unsigned threads, Acc init, Body body, Merge merge) {
    const unsigned workers = resolve_threads(threads, runs);
    std::vector<Acc> locals(workers, init);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < runs; t += workers) body(t, locals[w]);
            });
        }
    }
    Acc total = init;
    for (auto& l : locals) merge(total, l);
    return total;
}

}  // namespace

double CheckpointAverage::value() const noexcept {
    return runs == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(runs);
}

std::string CheckpointAverage::one_decimal() const { return format_one_decimal(sum, runs); }

double TrialStats::mean_max_occupancy() const noexcept {
    return runs_completed == 0
               ? 0.0
               : static_cast<double>(occupancy_sum) / static_cast<double>(runs_completed);
}

const CheckpointAverage& TrialStats::at(std::size_t hinge) const {
    for (const auto& a : avg_y) {
        if (a.hinge == hinge) return a;
    }
    throw std::out_of_range("hinge " + std::to_string(hinge) + " is not a checkpoint");
}

TrialStats run_random_trials(const ExperimentConfig& cfg) {
    cfg.validate();

    struct Acc {
        std::vector<std::uint64_t> sums;
        std::uint64_t occupancy = 0;
    };
    const auto& cps = cfg.checkpoints;
    // hinge -> index into sums (several entries may share a hinge).
    std::vector<std::vector<std::size_t>> at_hinge(cfg.n + 1);
    for (std::size_t k = 0; k < cps.size(); ++k) at_hinge[cps[k]].push_back(k);

    const Acc totals = parallel_trials(
        cfg.runs, cfg.threads, Acc{std::vector<std::uint64_t>(cps.size(), 0), 0},
        [&](std::size_t t, Acc& acc) {
            LengthSource src(trial_seed(cfg.seed, t), cfg.lo, cfg.hi);
            LinearWrapper w(cfg.n);
            // y_0 = 0 contributes nothing.
            for (std::size_t i = 1; i <= cfg.n; ++i) {
                const ArcPair p = w.push(src.next());
                for (const auto k : at_hinge[i]) acc.sums[k] += p.y;
            }
            acc.occupancy += w.stats().max_occupancy;
        },
        [](Acc& into, const Acc& from) {
            for (std::size_t k = 0; k < into.sums.size(); ++k) into.sums[k] += from.sums[k];
            into.occupancy += from.occupancy;
        });

    TrialStats stats;
    stats.runs_completed = cfg.runs;
    stats.occupancy_sum = totals.occupancy;
    for (std::size_t k = 0; k < cps.size(); ++k) {
        stats.avg_y.push_back(CheckpointAverage{cps[k], totals.sums[k], cfg.runs});
    }
    return stats;
}

double OccupancyRow::mean() const noexcept {
    return runs == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(runs);
}

std::string OccupancyRow::one_decimal() const { return format_one_decimal(sum, runs); }

std::vector<OccupancyRow> occupancy_growth(const std::vector<std::size_t>& ns, std::size_t runs,
                                           Length lo, Length hi, std::uint64_t seed,
                                           unsigned threads) {
    std::vector<OccupancyRow> rows;
    for (const std::size_t n : ns) {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.runs = runs;
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.seed = seed;
        cfg.checkpoints.clear();
        cfg.threads = threads;
        const TrialStats s = run_random_trials(cfg);
        rows.push_back(OccupancyRow{n, s.occupancy_sum, s.runs_completed});
    }
    return rows;
}

std::string to_csv(const TrialStats& stats) {
    std::string out = "checkpoint,avg_y\n";
    for (const auto& a : stats.avg_y) {
        out += std::to_string(a.hinge) + "," + a.one_decimal() + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<OccupancyRow>& rows) {
    std::string out = "n,mean_max_occupancy\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + r.one_decimal() + "\n";
    }
    return out;
}

}  // namespace rulerwrap
