#include "rulerwrap/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace rulerwrap::oracle {

TooLarge::TooLarge(std::size_t n)
    : std::length_error("oracle refuses n = " + std::to_string(n) + " (limit " +
                        std::to_string(max_segments) + ")") {}

void for_each_feasible(const Ruler& ruler, Variant variant,
                       const std::function<void(const WrapPlan&)>& visit) {
    const std::size_t n = ruler.size();
    if (n > max_segments) {
        throw TooLarge(n);
    }
    const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
    std::vector<Hinge> folds;
    folds.reserve(n);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        folds.clear();
        for (Hinge h = 1; h < n; ++h) {
            if (mask & (std::uint32_t{1} << (h - 1))) folds.push_back(h);
        }
        if (auto plan = try_plan_from_folds(ruler, folds, variant)) {
            visit(*plan);
        }
    }
}

std::vector<WrapPlan> enumerate_feasible(const Ruler& ruler, Variant variant) {
    std::vector<WrapPlan> out;
    for_each_feasible(ruler, variant, [&](const WrapPlan& p) { out.push_back(p); });
    return out;
}

WrapAnswer min_length(const Ruler& ruler, Variant variant) {
    std::optional<WrapPlan> best;
    for_each_feasible(ruler, variant, [&](const WrapPlan& p) {
        if (!best || p.length < best->length) best = p;
    });
    // The empty fold set is always feasible, so best is set.
    WrapAnswer answer;
    answer.length = best->length;
    // Restricted answers are reported against hinge n, as the DP routines do.
    if (variant == Variant::Restricted) {
        answer.last_fold = ruler.size();
    } else {
        answer.last_fold = best->folds.empty() ? 0 : best->folds.back();
    }
    answer.plan = std::move(best);
    return answer;
}

std::size_t max_parts(const Ruler& ruler) {
    std::size_t best = 0;
    for_each_feasible(ruler, Variant::Restricted, [&](const WrapPlan& p) {
        best = std::max(best, p.part_totals.size());
    });
    return best;
}

}  // namespace rulerwrap::oracle
