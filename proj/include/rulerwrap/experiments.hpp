#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rulerwrap/core_types.hpp"

namespace rulerwrap {

// Instance generator, version 1. Trial t of master seed s uses
// std::mt19937_64 seeded with splitmix64(s ^ splitmix64(t)); lengths are drawn
// by rejection sampling on the raw 64-bit output so the stream is identical on
// every standard library.
inline constexpr const char* generator_name = "mt19937_64+splitmix64/v1";

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept;

class LengthSource {
public:
    LengthSource(std::uint64_t seed, Length lo, Length hi);
    Length next();

private:
    std::mt19937_64 engine_;
    Length lo_;
    std::uint64_t span_;   // hi - lo + 1, or 0 for the full 64-bit range
    std::uint64_t limit_;  // largest accepted raw draw
};

Ruler random_ruler(std::size_t n, Length lo, Length hi, std::uint64_t seed);

struct ExperimentConfig {
    std::size_t n = 10000;
    std::size_t runs = 200;
    Length lo = 1;
    Length hi = 100;
    std::uint64_t seed = 1;
    std::vector<std::size_t> checkpoints{0, 1, 10, 100, 1000, 10000};
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws DomainError when an invariant is violated.
    void validate() const;
};

/// Checkpoints from the default set that do not exceed n.
std::vector<std::size_t> default_checkpoints(std::size_t n);

struct CheckpointAverage {
    std::size_t hinge = 0;
    std::uint64_t sum = 0;   // sum of y over all runs
    std::size_t runs = 0;

    double value() const noexcept;
    /// Mean rounded half-up to one decimal, e.g. "547.6".
    std::string one_decimal() const;
};

struct TrialStats {
    std::vector<CheckpointAverage> avg_y;
    std::uint64_t occupancy_sum = 0;
    std::size_t runs_completed = 0;

    double mean_max_occupancy() const noexcept;
    /// avg_y entry for a hinge; throws std::out_of_range if not a checkpoint.
    const CheckpointAverage& at(std::size_t hinge) const;

    friend bool operator==(const TrialStats& a, const TrialStats& b) {
        return a.occupancy_sum == b.occupancy_sum && a.runs_completed == b.runs_completed &&
               a.avg_y.size() == b.avg_y.size() &&
               std::equal(a.avg_y.begin(), a.avg_y.end(), b.avg_y.begin(),
                          [](const CheckpointAverage& x, const CheckpointAverage& y) {
                              return x.hinge == y.hinge && x.sum == y.sum && x.runs == y.runs;
                          });
    }
};

TrialStats run_random_trials(const ExperimentConfig& cfg);

struct OccupancyRow {
    std::size_t n = 0;
    std::uint64_t sum = 0;
    std::size_t runs = 0;

    double mean() const noexcept;
    std::string one_decimal() const;
};

std::vector<OccupancyRow> occupancy_growth(const std::vector<std::size_t>& ns, std::size_t runs,
                                           Length lo, Length hi, std::uint64_t seed,
                                           unsigned threads = 0);

/// "checkpoint,avg_y" CSV with LF endings.
std::string to_csv(const TrialStats& stats);
/// "n,mean_max_occupancy" CSV with LF endings.
std::string to_csv(const std::vector<OccupancyRow>& rows);

}  // namespace rulerwrap
