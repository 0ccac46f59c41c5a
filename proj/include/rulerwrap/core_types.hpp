#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rulerwrap {

using Length = std::uint64_t;
using Hinge = std::size_t;

// Error hierarchy. Input-domain violations derive from DomainError so callers
// can catch them as one family.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyInput : public DomainError {
public:
    EmptyInput() : DomainError("empty input: at least one segment is required") {}
};

class NonPositiveValue : public DomainError {
public:
    explicit NonPositiveValue(std::size_t index)
        : DomainError("non-positive segment length at index " + std::to_string(index)),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class LengthOverflow : public DomainError {
public:
    LengthOverflow() : DomainError("total ruler length exceeds the supported 63-bit range") {}
};

class InfeasiblePlan : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A carpenter's ruler: a non-empty sequence of positive integer segment lengths.
///
/// The total is capped at 2^63 - 1 so that every arc end x + y (with y <= x)
/// stays representable in 64 bits.
class Ruler {
public:
    static constexpr Length max_total = (Length{1} << 63) - 1;

    explicit Ruler(std::vector<Length> lengths);
    Ruler(std::initializer_list<Length> lengths) : Ruler(std::vector<Length>(lengths)) {}

    std::size_t size() const noexcept { return lengths_.size(); }
    Length total() const noexcept { return total_; }
    Length max_length() const noexcept { return max_length_; }
    /// Length of segment i, 1-based as in the hinge numbering (segment i sits
    /// between hinges i-1 and i).
    Length segment(std::size_t i) const { return lengths_.at(i - 1); }
    std::span<const Length> lengths() const noexcept { return lengths_; }

    /// Multiplies every length by c (c >= 1); throws LengthOverflow on overflow.
    Ruler scaled(Length c) const;

    friend bool operator==(const Ruler&, const Ruler&) = default;

private:
    std::vector<Length> lengths_;
    Length total_ = 0;
    Length max_length_ = 0;
};

/// One hinge's arc: position x, wrapping length y, and the hinge folded just
/// before it in an optimal wrapping of the prefix.
struct ArcPair {
    Hinge hinge = 0;
    Length x = 0;
    Length y = 0;
    std::optional<Hinge> pred;

    Length arc_end() const noexcept { return x + y; }
    friend bool operator==(const ArcPair&, const ArcPair&) = default;
};

enum class Variant { Restricted, Unrestricted };

std::string to_string(Variant v);
/// Accepts "restricted" / "unrestricted".
std::optional<Variant> parse_variant(std::string_view text);

struct WrapPlan {
    Variant variant = Variant::Restricted;
    std::vector<Hinge> folds;          // strictly increasing, each in 1..n-1
    std::vector<Length> part_totals;   // folds.size() + 1 entries
    Length length = 0;

    friend bool operator==(const WrapPlan&, const WrapPlan&) = default;
};

struct WrapAnswer {
    Length length = 0;
    Hinge last_fold = 0;
    std::optional<WrapPlan> plan;

    friend bool operator==(const WrapAnswer&, const WrapAnswer&) = default;
};

/// x_0..x_n: x_0 = 0 and x_i = x_{i-1} + L[i].
std::vector<Length> prefix_positions(const Ruler& ruler);

/// Validates a fold set against the non-decreasing-totals rule. Returns
/// nullopt when infeasible, throws std::invalid_argument when the fold list
/// itself is malformed (not strictly increasing or outside 1..n-1).
std::optional<WrapPlan> try_plan_from_folds(const Ruler& ruler, std::span<const Hinge> folds,
                                            Variant variant);

/// Same as try_plan_from_folds but throws InfeasiblePlan instead of
/// returning nullopt.
WrapPlan plan_from_folds(const Ruler& ruler, std::span<const Hinge> folds, Variant variant);

}  // namespace rulerwrap
