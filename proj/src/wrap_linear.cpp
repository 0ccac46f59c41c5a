#include <algorithm>
#include <stdexcept>

#include "rulerwrap/wrap_algorithms.hpp"
#include "wrap_common.hpp"

namespace rulerwrap {

LinearWrapper::LinearWrapper(std::size_t capacity) : slots_(capacity + 1) {
    slots_[0] = ArcPair{0, 0, 0, std::nullopt};
    stats_.max_occupancy = 1;
}

template <class OnLeft, class OnRight>
ArcPair LinearWrapper::push_impl(Length length, OnLeft&& on_left, OnRight&& on_right) {
    if (next_hinge_ >= slots_.size()) {
        throw std::length_error("LinearWrapper capacity exceeded");
    }
    if (length == 0) {
        throw NonPositiveValue(next_hinge_ - 1);
    }
    const Length x = slots_[tail_].x + length;

    while (head_ != tail_ && slots_[head_ + 1].arc_end() <= x) {
        on_left(slots_[head_]);
        ++head_;
        ++stats_.head_advances;
    }

    const ArcPair& chosen = slots_[head_];
    const Length y = x - chosen.x;
    const Hinge pred = chosen.hinge;

    // The pair at head ends by x < x + y, so this loop stops at head at the
    // latest.
    while (slots_[tail_].arc_end() >= x + y) {
        on_right(slots_[tail_]);
        --tail_;
        ++stats_.tail_discards;
    }

    ++tail_;
    slots_[tail_] = ArcPair{next_hinge_++, x, y, pred};
    stats_.max_occupancy = std::max(stats_.max_occupancy, occupancy());
    return slots_[tail_];
}

ArcPair LinearWrapper::push(Length length) {
    return push_impl(length, [](const ArcPair&) {}, [](const ArcPair&) {});
}

ArcPair LinearWrapper::push(Length length, std::vector<ArcPair>& left_discards,
                            std::vector<ArcPair>& right_discards) {
    return push_impl(
        length, [&](const ArcPair& p) { left_discards.push_back(p); },
        [&](const ArcPair& p) { right_discards.push_back(p); });
}

std::vector<SlotEntry> LinearWrapper::live() const {
    std::vector<SlotEntry> out;
    out.reserve(occupancy());
    for (std::size_t s = head_; s <= tail_; ++s) {
        out.push_back(SlotEntry{s, slots_[s]});
    }
    return out;
}

namespace {

TraceStep snapshot(const LinearWrapper& w, std::size_t step) {
    TraceStep t;
    t.step = step;
    t.head = w.head();
    t.tail = w.tail();
    t.live = w.live();
    return t;
}

}  // namespace

LinearRun wrap_linear(const Ruler& ruler, Variant variant, LinearOptions options) {
    const std::size_t n = ruler.size();
    LinearWrapper wrapper(n);
    LinearRun run;

    if (options.plan) {
        run.pred.assign(n + 1, 0);
    }
    if (options.trace) {
        run.trace.emplace();
        run.trace->reserve(n + 1);
        run.trace->push_back(snapshot(wrapper, 0));
    }

    for (const Length len : ruler.lengths()) {
        ArcPair p;
        if (options.trace) {
            std::vector<ArcPair> left, right;
            p = wrapper.push(len, left, right);
            TraceStep t = snapshot(wrapper, p.hinge);
            t.left_discards = std::move(left);
            t.right_discards = std::move(right);
            run.trace->push_back(std::move(t));
        } else {
            p = wrapper.push(len);
        }
        if (options.plan) {
            run.pred[p.hinge] = *p.pred;
        }
    }

    run.stats = wrapper.stats();
    const Length x_n = wrapper.position();
    if (variant == Variant::Restricted) {
        run.answer.length = wrapper.back().y;
        run.answer.last_fold = n;
    } else {
        std::vector<ArcPair> survivors;
        survivors.reserve(wrapper.occupancy());
        for (const auto& e : wrapper.live()) survivors.push_back(e.pair);
        const FinalChoice c = unrestricted_final_scan(survivors, x_n);
        run.answer.length = c.length;
        run.answer.last_fold = c.hinge;
    }
    if (options.plan) {
        detail::attach_plan(ruler, run.pred, variant, run.answer);
    }
    return run;
}

}  // namespace rulerwrap
