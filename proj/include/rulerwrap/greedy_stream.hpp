#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rulerwrap/core_types.hpp"

namespace rulerwrap {

/// "Fold whenever possible" in constant space: remembers only the total of
/// the last closed part and the running total of the open one.
class GreedyStream {
public:
    /// Feeds one segment. Returns true if it closed a part.
    bool push(Length value);

    struct Result {
        Length length = 0;
        std::size_t folds = 0;
        friend bool operator==(const Result&, const Result&) = default;
    };

    /// End of stream. The restricted variant merges a short final flap into
    /// the last closed part. Throws EmptyInput if nothing was pushed.
    Result finish(Variant variant) const;

    Length prev() const noexcept { return prev_; }
    Length cur() const noexcept { return cur_; }
    std::size_t closes() const noexcept { return closes_; }
    std::size_t count() const noexcept { return count_; }

private:
    Length prev_ = 0;
    Length cur_ = 0;
    std::size_t closes_ = 0;
    std::size_t count_ = 0;
};

GreedyStream::Result greedy_wrap(std::span<const Length> lengths, Variant variant);

/// Non-streaming twin of greedy_wrap that also records where it folded, for
/// validation against plan_from_folds.
WrapPlan greedy_plan(const Ruler& ruler, Variant variant);

/// For i = 1..blocks: 2, 1, then 2i copies of 3. Size 2m + m(m+1).
Ruler adversarial_family(std::size_t blocks);

struct RatioReport {
    std::vector<double> ratios;  // greedy / exact per instance
    double mean = 0.0;
    double max = 0.0;
};

RatioReport ratio_experiment(std::span<const Ruler> instances, Variant variant);

/// count uniform random rulers of n segments with lengths in [lo, hi], one
/// per derived trial seed.
RatioReport random_ratio_experiment(std::size_t count, std::size_t n, Length lo, Length hi,
                                    std::uint64_t seed, Variant variant);

}  // namespace rulerwrap
