#pragma once

#include "eqprod/multiset.hpp"
#include "eqprod/parallel.hpp"

#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <span>
#include <vector>

namespace eqprod {

/// r >= 1 distinct partitions that share one signature.
struct Family {
    Triple triple;
    std::vector<PartitionMultiset> members;

    /// Validates (equal signatures, pairwise distinct, nonempty) and sorts
    /// the members. Throws UnequalSignatures or InvalidArgument.
    static Family make(std::vector<PartitionMultiset> members);

    friend bool operator==(const Family&, const Family&) = default;
};

/// Lazily generated n-partitions of s with every part >= min_part, in
/// lexicographic order of their nondecreasing sequences.
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<Part>;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() = default;

        reference operator*() const { return parts_; }
        pointer operator->() const { return &parts_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b)
        {
            return a.done_ == b.done_ && (a.done_ || a.parts_ == b.parts_);
        }

    private:
        friend class PartitionRange;
        iterator(std::uint64_t s, std::uint64_t n, std::uint64_t min_part);

        std::uint64_t s_ = 0;
        std::vector<Part> parts_;
        bool done_ = true;
    };

    PartitionRange(std::uint64_t s, std::uint64_t n, std::uint64_t min_part = 1)
        : s_(s), n_(n), min_part_(min_part)
    {
    }

    iterator begin() const { return iterator(s_, n_, min_part_); }
    iterator end() const { return iterator(); }

private:
    std::uint64_t s_, n_, min_part_;
};

inline PartitionRange enumerate_partitions(std::uint64_t s, std::uint64_t n, std::uint64_t min_part = 1)
{
    return PartitionRange(s, n, min_part);
}

using PartitionVisitor = std::function<void(std::span<const Part> parts, u128 product)>;

/// Recursive enumeration with a running product, same order as
/// enumerate_partitions. Throws ProductOverflow.
void for_each_partition(std::uint64_t s, std::uint64_t n, std::uint64_t min_part,
                        const PartitionVisitor& visit);

std::uint64_t count_partitions(std::uint64_t s, std::uint64_t n, std::uint64_t min_part = 1);

using ProductGroups = std::map<u128, std::vector<PartitionMultiset>>;

/// All n-partitions of s keyed by product; each list in lexicographic order.
ProductGroups group_by_product(std::uint64_t s, std::uint64_t n, Parallelism par = {});

/// Every maximal equal-product family with at least r members, by product.
std::vector<Family> equal_product_families(std::uint64_t s, std::uint64_t n, std::uint64_t r,
                                           Parallelism par = {});

/// One family of r members per qualifying product whose r*n parts are
/// pairwise distinct integers.
std::vector<Family> disjoint_families(std::uint64_t s, std::uint64_t n, std::uint64_t r,
                                      Parallelism par = {});

/// Size of the largest equal-product family among n-partitions of s (0 when
/// there are no n-partitions at all).
std::size_t max_family_size(std::uint64_t s, std::uint64_t n, Parallelism par = {});

} // namespace eqprod
