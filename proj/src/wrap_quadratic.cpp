#include <algorithm>

#include "rulerwrap/wrap_algorithms.hpp"
#include "wrap_common.hpp"

namespace rulerwrap {

std::vector<ArcPair> wrap_quadratic(const Ruler& ruler) {
    const auto x = prefix_positions(ruler);
    const std::size_t n = ruler.size();
    std::vector<ArcPair> pairs(n + 1);
    pairs[0] = ArcPair{0, 0, 0, std::nullopt};
    for (Hinge i = 1; i <= n; ++i) {
        // y_i = x_i - max{x_h : h < i, x_h + y_h <= x_i}; hinge 0 always qualifies.
        Hinge h = i - 1;
        while (pairs[h].arc_end() > x[i]) {
            --h;
        }
        pairs[i] = ArcPair{i, x[i], x[i] - x[h], h};
    }
    return pairs;
}

WrapAnswer quadratic_answer(const Ruler& ruler, Variant variant, bool with_plan) {
    const auto pairs = wrap_quadratic(ruler);
    const std::size_t n = ruler.size();
    WrapAnswer answer;
    if (variant == Variant::Restricted) {
        answer.length = pairs[n].y;
        answer.last_fold = n;
    } else {
        const FinalChoice c = unrestricted_final_scan(pairs, pairs[n].x);
        answer.length = c.length;
        answer.last_fold = c.hinge;
    }
    if (with_plan) {
        std::vector<Hinge> pred(n + 1, 0);
        for (Hinge i = 1; i <= n; ++i) pred[i] = *pairs[i].pred;
        detail::attach_plan(ruler, pred, variant, answer);
    }
    return answer;
}

}  // namespace rulerwrap
