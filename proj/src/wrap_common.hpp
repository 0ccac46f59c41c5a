#pragma once

#include <span>

#include "rulerwrap/core_types.hpp"

namespace rulerwrap::detail {

/// Reconstructs the fold chain ending at answer.last_fold, validates it and
/// stores it in answer.plan. Throws std::logic_error if the validated length
/// disagrees with answer.length.
void attach_plan(const Ruler& ruler, std::span<const Hinge> pred, Variant variant,
                 WrapAnswer& answer);

}  // namespace rulerwrap::detail
