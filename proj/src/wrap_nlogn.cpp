#include <algorithm>

#include "rulerwrap/wrap_algorithms.hpp"
#include "wrap_common.hpp"

namespace rulerwrap {

WrapAnswer wrap_nlogn(const Ruler& ruler, Variant variant, bool with_plan) {
    const std::size_t n = ruler.size();
    // Non-empty prefix P[0..k], kept sorted by x and by x + y.
    std::vector<ArcPair> pairs;
    pairs.reserve(n + 1);
    pairs.push_back(ArcPair{0, 0, 0, std::nullopt});
    std::vector<Hinge> pred;
    if (with_plan) pred.assign(n + 1, 0);

    Length x = 0;
    Hinge i = 0;
    for (const Length len : ruler.lengths()) {
        ++i;
        x += len;
        // Rightmost pair with x_h + y_h <= x; P[0] always qualifies.
        const auto it = std::partition_point(pairs.begin(), pairs.end(),
                                             [x](const ArcPair& p) { return p.arc_end() <= x; });
        const ArcPair& h = *std::prev(it);
        const Length y = x - h.x;
        const Hinge chosen = h.hinge;
        while (pairs.back().arc_end() >= x + y) {
            pairs.pop_back();
        }
        pairs.push_back(ArcPair{i, x, y, chosen});
        if (with_plan) pred[i] = chosen;
    }

    WrapAnswer answer;
    if (variant == Variant::Restricted) {
        answer.length = pairs.back().y;
        answer.last_fold = n;
    } else {
        const FinalChoice c = unrestricted_final_scan(pairs, x);
        answer.length = c.length;
        answer.last_fold = c.hinge;
    }
    if (with_plan) {
        detail::attach_plan(ruler, pred, variant, answer);
    }
    return answer;
}

}  // namespace rulerwrap
