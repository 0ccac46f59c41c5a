#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rulerwrap/core_types.hpp"

namespace rulerwrap {

/// A live pair together with the array slot it occupies.
struct SlotEntry {
    std::size_t slot = 0;
    ArcPair pair;
    friend bool operator==(const SlotEntry&, const SlotEntry&) = default;
};

/// Snapshot of the pair array after processing hinge `step`.
struct TraceStep {
    std::size_t step = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    std::vector<SlotEntry> live;
    std::vector<ArcPair> left_discards;   // head advanced past these
    std::vector<ArcPair> right_discards;  // popped from the tail
};

struct LinearRunStats {
    std::size_t head_advances = 0;
    std::size_t tail_discards = 0;
    std::size_t max_occupancy = 0;
};

/// Online core of the linear-time algorithm.
///
/// Pairs live in a fixed array of capacity + 1 slots indexed by head and tail.
/// Each pushed segment length advances
/// head past pairs whose successor's arc already ends by the new hinge, takes
/// y from the pair at head, pops tail pairs whose arcs end no earlier than the
/// new one, and stores the new pair after tail. Both comparisons are
/// non-strict.
class LinearWrapper {
public:
    /// capacity is the maximum number of segments that will be pushed.
    explicit LinearWrapper(std::size_t capacity);

    /// Processes the next segment and returns the new hinge's pair. The
    /// returned pair's pred is the hinge chosen for it.
    ArcPair push(Length length);

    /// Same as push, additionally appending the discarded pairs to the given
    /// vectors.
    ArcPair push(Length length, std::vector<ArcPair>& left_discards,
                 std::vector<ArcPair>& right_discards);

    std::size_t hinges_processed() const noexcept { return next_hinge_ - 1; }
    std::size_t head() const noexcept { return head_; }
    std::size_t tail() const noexcept { return tail_; }
    std::size_t occupancy() const noexcept { return tail_ - head_ + 1; }
    const LinearRunStats& stats() const noexcept { return stats_; }
    const ArcPair& back() const noexcept { return slots_[tail_]; }
    Length position() const noexcept { return slots_[tail_].x; }

    /// Live pairs in slot order (head..tail); strictly increasing in x and
    /// in x + y.
    std::vector<SlotEntry> live() const;

private:
    template <class OnLeft, class OnRight>
    ArcPair push_impl(Length length, OnLeft&& on_left, OnRight&& on_right);

    std::vector<ArcPair> slots_;
    std::size_t head_ = 0;
    std::size_t tail_ = 0;
    std::size_t next_hinge_ = 1;
    LinearRunStats stats_;
};

struct LinearOptions {
    bool trace = false;
    /// Records the full pred side array and attaches a WrapPlan to the answer.
    bool plan = false;
};

struct LinearRun {
    WrapAnswer answer;
    LinearRunStats stats;
    std::optional<std::vector<TraceStep>> trace;
    /// pred[i] for hinges 0..n (pred[0] == 0); empty unless options.plan.
    std::vector<Hinge> pred;
};

/// Quadratic dynamic program: one ArcPair per hinge 0..n, nothing discarded.
std::vector<ArcPair> wrap_quadratic(const Ruler& ruler);

/// Answer derived from the quadratic pairs: restricted is y_n; unrestricted
/// scans every hinge.
WrapAnswer quadratic_answer(const Ruler& ruler, Variant variant, bool with_plan = false);

/// Binary-search variant over a sorted pair array (tail discards only).
WrapAnswer wrap_nlogn(const Ruler& ruler, Variant variant, bool with_plan = false);

LinearRun wrap_linear(const Ruler& ruler, Variant variant, LinearOptions options = {});

struct FinalChoice {
    Hinge hinge = 0;
    Length length = 0;
    friend bool operator==(const FinalChoice&, const FinalChoice&) = default;
};

/// Picks the last fold minimizing max(y_h, x_n - x_h); ties go to the larger
/// x_h. pairs must be non-empty and sorted by x.
FinalChoice unrestricted_final_scan(std::span<const ArcPair> pairs, Length x_n);

/// Follows pred from last_fold back to hinge 0 and returns the interior
/// hinges (1..n-1) on the chain in increasing order. pred has n + 1 entries.
std::vector<Hinge> reconstruct_folds(std::span<const Hinge> pred, Hinge last_fold);

}  // namespace rulerwrap
