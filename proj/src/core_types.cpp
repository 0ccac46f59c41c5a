#include "rulerwrap/core_types.hpp"

#include <algorithm>

namespace rulerwrap {

Ruler::Ruler(std::vector<Length> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) {
        throw EmptyInput();
    }
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        const Length v = lengths_[i];
        if (v == 0) {
            throw NonPositiveValue(i);
        }
        if (v > max_total - total_) {
            throw LengthOverflow();
        }
        total_ += v;
        max_length_ = std::max(max_length_, v);
    }
}

Ruler Ruler::scaled(Length c) const {
    if (c == 0) {
        throw NonPositiveValue(0);
    }
    if (total_ > max_total / c) {
        throw LengthOverflow();
    }
    std::vector<Length> out(lengths_);
    for (auto& v : out) {
        v *= c;
    }
    return Ruler(std::move(out));
}

std::string to_string(Variant v) {
    return v == Variant::Restricted ? "restricted" : "unrestricted";
}

std::optional<Variant> parse_variant(std::string_view text) {
    if (text == "restricted") return Variant::Restricted;
    if (text == "unrestricted") return Variant::Unrestricted;
    return std::nullopt;
}

std::vector<Length> prefix_positions(const Ruler& ruler) {
    std::vector<Length> x(ruler.size() + 1, 0);
    const auto lengths = ruler.lengths();
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        x[i + 1] = x[i] + lengths[i];
    }
    return x;
}

std::optional<WrapPlan> try_plan_from_folds(const Ruler& ruler, std::span<const Hinge> folds,
                                            Variant variant) {
    const std::size_t n = ruler.size();
    const auto lengths = ruler.lengths();

    WrapPlan plan;
    plan.variant = variant;
    plan.folds.assign(folds.begin(), folds.end());
    plan.part_totals.reserve(folds.size() + 1);

    Hinge prev = 0;
    for (const Hinge f : folds) {
        if (f < 1 || f >= n) {
            throw std::invalid_argument("fold hinge " + std::to_string(f) +
                                        " outside 1.." + std::to_string(n - 1));
        }
        if (f <= prev) {
            throw std::invalid_argument("fold hinges must be strictly increasing");
        }
        Length t = 0;
        for (Hinge s = prev; s < f; ++s) t += lengths[s];
        plan.part_totals.push_back(t);
        prev = f;
    }
    Length last = 0;
    for (Hinge s = prev; s < n; ++s) last += lengths[s];
    plan.part_totals.push_back(last);

    const auto& t = plan.part_totals;
    const std::size_t k = folds.size();
    // t_0 <= ... <= t_{k-1}; the final flap t_k is checked only when restricted.
    for (std::size_t j = 0; j + 1 < k; ++j) {
        if (t[j] > t[j + 1]) return std::nullopt;
    }
    if (k == 0) {
        plan.length = t[0];
    } else if (variant == Variant::Restricted) {
        if (t[k - 1] > t[k]) return std::nullopt;
        plan.length = t[k];
    } else {
        plan.length = std::max(t[k - 1], t[k]);
    }
    return plan;
}

WrapPlan plan_from_folds(const Ruler& ruler, std::span<const Hinge> folds, Variant variant) {
    auto plan = try_plan_from_folds(ruler, folds, variant);
    if (!plan) {
        std::string msg = "infeasible fold plan: part totals are not non-decreasing (";
        msg += to_string(variant);
        msg += ")";
        throw InfeasiblePlan(msg);
    }
    return std::move(*plan);
}

}  // namespace rulerwrap
