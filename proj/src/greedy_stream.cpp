#include "rulerwrap/greedy_stream.hpp"

#include <algorithm>

#include "rulerwrap/experiments.hpp"
#include "rulerwrap/wrap_algorithms.hpp"

namespace rulerwrap {

bool GreedyStream::push(Length value) {
    if (value == 0) {
        throw NonPositiveValue(count_);
    }
    ++count_;
    cur_ += value;
    if (cur_ >= prev_) {
        prev_ = cur_;
        cur_ = 0;
        ++closes_;
        return true;
    }
    return false;
}

GreedyStream::Result GreedyStream::finish(Variant variant) const {
    if (count_ == 0) {
        throw EmptyInput();
    }
    // A close on the very last value ends at hinge n and is not a fold.
    if (cur_ == 0) {
        return Result{prev_, closes_ - 1};
    }
    if (variant == Variant::Unrestricted) {
        return Result{std::max(prev_, cur_), closes_};
    }
    // cur_ < prev_ here: merge the flap into the last closed part.
    return Result{prev_ + cur_, closes_ - 1};
}

GreedyStream::Result greedy_wrap(std::span<const Length> lengths, Variant variant) {
    GreedyStream g;
    for (const Length v : lengths) g.push(v);
    return g.finish(variant);
}

WrapPlan greedy_plan(const Ruler& ruler, Variant variant) {
    GreedyStream g;
    std::vector<Hinge> folds;
    Hinge hinge = 0;
    for (const Length v : ruler.lengths()) {
        ++hinge;
        if (g.push(v)) folds.push_back(hinge);
    }
    const auto result = g.finish(variant);
    // Drop the close at hinge n, and the last fold when a short restricted flap
    // was merged.
    if (!folds.empty() && folds.back() == ruler.size()) folds.pop_back();
    if (folds.size() > result.folds) folds.pop_back();
    WrapPlan plan = plan_from_folds(ruler, folds, variant);
    return plan;
}

Ruler adversarial_family(std::size_t blocks) {
    if (blocks == 0) {
        throw DomainError("adversarial_family needs at least one block");
    }
    std::vector<Length> out;
    out.reserve(2 * blocks + blocks * (blocks + 1));
    for (std::size_t i = 1; i <= blocks; ++i) {
        out.push_back(2);
        out.push_back(1);
        out.insert(out.end(), 2 * i, 3);
    }
    return Ruler(std::move(out));
}

RatioReport ratio_experiment(std::span<const Ruler> instances, Variant variant) {
    RatioReport report;
    report.ratios.reserve(instances.size());
    double sum = 0.0;
    for (const Ruler& r : instances) {
        const Length greedy = greedy_wrap(r.lengths(), variant).length;
        const Length exact = wrap_linear(r, variant).answer.length;
        const double ratio = static_cast<double>(greedy) / static_cast<double>(exact);
        report.ratios.push_back(ratio);
        sum += ratio;
        report.max = std::max(report.max, ratio);
    }
    if (!report.ratios.empty()) report.mean = sum / static_cast<double>(report.ratios.size());
    return report;
}

RatioReport random_ratio_experiment(std::size_t count, std::size_t n, Length lo, Length hi,
                                    std::uint64_t seed, Variant variant) {
    std::vector<Ruler> instances;
    instances.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        instances.push_back(random_ruler(n, lo, hi, trial_seed(seed, t)));
    }
    return ratio_experiment(instances, variant);
}

}  // namespace rulerwrap
