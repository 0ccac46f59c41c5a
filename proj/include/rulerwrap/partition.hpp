#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rulerwrap/core_types.hpp"

namespace rulerwrap {

struct PartitionResult {
    std::vector<std::size_t> boundaries;  // cut positions: part j ends before index boundaries[j]
    std::vector<std::vector<Length>> parts;
    std::vector<Length> totals;
    std::size_t count = 0;
};

/// Splits seq into the maximum number of contiguous parts whose totals are
/// non-decreasing, in linear time. The cuts are the fold chain of the
/// restricted minimum wrapping, so the last total is also that minimum.
PartitionResult max_parts_partition(std::span<const Length> seq);
PartitionResult max_parts_partition(const Ruler& ruler);

}  // namespace rulerwrap
