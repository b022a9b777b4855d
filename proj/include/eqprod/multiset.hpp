#pragma once

#include "eqprod/checked.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace eqprod {

using Part = std::uint64_t;

/// The (sum, product, length) signature of a partition.
struct Triple {
    std::uint64_t s = 0;
    u128 p = 1;
    std::uint64_t n = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

/// A multiset of positive integers held in canonical (nondecreasing) order.
/// Two multisets are equal iff their canonical sequences are equal.
class PartitionMultiset {
public:
    /// Sorts a copy of `raw`. Throws EmptyInput or NonPositivePart.
    static PartitionMultiset canonicalize(std::span<const std::int64_t> raw);
    static PartitionMultiset canonicalize(std::initializer_list<std::int64_t> raw);

    /// Takes ownership of parts that may be in any order; all must be >= 1.
    static PartitionMultiset from_parts(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    Part operator[](std::size_t i) const { return parts_[i]; }

    /// Returns a new multiset with the extra parts merged in.
    PartitionMultiset with_parts(std::span<const Part> extra) const;

    /// True when no value occurs twice.
    bool has_distinct_parts() const noexcept;

    friend auto operator<=>(const PartitionMultiset&, const PartitionMultiset&) = default;
    friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;

private:
    explicit PartitionMultiset(std::vector<Part> sorted) : parts_(std::move(sorted)) {}

    std::vector<Part> parts_;
};

/// (sum, product, count). Throws ProductOverflow when the product or sum
/// leaves the representable range.
Triple signature(const PartitionMultiset& x);

std::string to_string(const PartitionMultiset& x);

} // namespace eqprod
