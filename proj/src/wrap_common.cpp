#include "wrap_common.hpp"

#include <algorithm>
#include <stdexcept>

#include "rulerwrap/wrap_algorithms.hpp"

namespace rulerwrap {

FinalChoice unrestricted_final_scan(std::span<const ArcPair> pairs, Length x_n) {
    if (pairs.empty()) {
        throw std::invalid_argument("unrestricted_final_scan: no pairs");
    }
    FinalChoice best{pairs.front().hinge, std::max(pairs.front().y, x_n - pairs.front().x)};
    for (const ArcPair& p : pairs.subspan(1)) {
        const Length v = std::max(p.y, x_n - p.x);
        // Sorted by x, so <= keeps the larger x on ties.
        if (v <= best.length) {
            best = FinalChoice{p.hinge, v};
        }
    }
    return best;
}

std::vector<Hinge> reconstruct_folds(std::span<const Hinge> pred, Hinge last_fold) {
    if (pred.empty() || last_fold >= pred.size()) {
        throw std::invalid_argument("reconstruct_folds: hinge outside pred array");
    }
    const Hinge n = pred.size() - 1;
    std::vector<Hinge> folds;
    Hinge h = last_fold;
    while (h != 0) {
        if (h != n) folds.push_back(h);
        const Hinge p = pred[h];
        if (p >= h) {
            throw std::invalid_argument("reconstruct_folds: pred chain does not decrease");
        }
        h = p;
    }
    std::reverse(folds.begin(), folds.end());
    return folds;
}

namespace detail {

void attach_plan(const Ruler& ruler, std::span<const Hinge> pred, Variant variant,
                 WrapAnswer& answer) {
    const auto folds = reconstruct_folds(pred, answer.last_fold);
    WrapPlan plan = plan_from_folds(ruler, folds, variant);
    if (plan.length != answer.length) {
        throw std::logic_error("reconstructed plan length " + std::to_string(plan.length) +
                               " differs from answer " + std::to_string(answer.length));
    }
    answer.plan = std::move(plan);
}

}  // namespace detail
}  // namespace rulerwrap
