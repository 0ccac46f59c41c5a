#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rulerwrap/core_types.hpp"

namespace rulerwrap {

/// Brute force over every fold subset; verification only.
namespace oracle {

inline constexpr std::size_t max_segments = 20;

class TooLarge : public std::length_error {
public:
    explicit TooLarge(std::size_t n);
};

/// Calls visit for every feasible plan, in increasing order of the fold
/// indicator word (bit h-1 set means hinge h is folded).
void for_each_feasible(const Ruler& ruler, Variant variant,
                       const std::function<void(const WrapPlan&)>& visit);

std::vector<WrapPlan> enumerate_feasible(const Ruler& ruler, Variant variant);

/// Minimum over enumerate_feasible; the first minimum in enumeration order is
/// the witness.
WrapAnswer min_length(const Ruler& ruler, Variant variant);

/// Largest part count over all restricted-feasible plans.
std::size_t max_parts(const Ruler& ruler);

}  // namespace oracle
}  // namespace rulerwrap
