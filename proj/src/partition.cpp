#include "rulerwrap/partition.hpp"

#include "rulerwrap/wrap_algorithms.hpp"

namespace rulerwrap {

PartitionResult max_parts_partition(std::span<const Length> seq) {
    return max_parts_partition(Ruler(std::vector<Length>(seq.begin(), seq.end())));
}

PartitionResult max_parts_partition(const Ruler& ruler) {
    const LinearRun run = wrap_linear(ruler, Variant::Restricted, LinearOptions{.plan = true});
    const WrapPlan& plan = *run.answer.plan;

    PartitionResult out;
    out.boundaries = plan.folds;
    out.totals = plan.part_totals;
    out.count = plan.part_totals.size();

    const auto lengths = ruler.lengths();
    std::size_t begin = 0;
    for (std::size_t j = 0; j <= out.boundaries.size(); ++j) {
        const std::size_t end = j < out.boundaries.size() ? out.boundaries[j] : lengths.size();
        out.parts.emplace_back(lengths.begin() + begin, lengths.begin() + end);
        begin = end;
    }
    return out;
}

}  // namespace rulerwrap
