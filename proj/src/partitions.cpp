#include "eqprod/partitions.hpp"

#include "eqprod/error.hpp"

#include <algorithm>

namespace eqprod {

Family Family::make(std::vector<PartitionMultiset> members)
{
    if (members.empty())
        throw Error(ErrorCode::InvalidArgument, "a family needs at least one member");
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw Error(ErrorCode::InvalidArgument, "family members must be distinct");
    Family fam{signature(members.front()), std::move(members)};
    for (const auto& m : fam.members) {
        if (signature(m) != fam.triple)
            throw Error(ErrorCode::UnequalSignatures,
                        to_string(m) + " does not have signature " + to_string(fam.triple));
    }
    return fam;
}

PartitionRange::iterator::iterator(std::uint64_t s, std::uint64_t n, std::uint64_t min_part)
    : s_(s)
{
    if (n == 0 || min_part == 0 || n > s / min_part)
        return;
    parts_.assign(n, min_part);
    parts_.back() = s - (n - 1) * min_part;
    done_ = false;
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    const std::size_t n = parts_.size();
    if (done_ || n < 2) {
        done_ = true;
        parts_.clear();
        return *this;
    }
    // Bump the rightmost position i that can grow, flatten i..n-2 to the new
    // value and let the last part absorb the remainder.
    std::uint64_t suffix = parts_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        suffix += parts_[i];
        const std::uint64_t prefix = s_ - suffix;
        const std::uint64_t v = parts_[i] + 1;
        const std::uint64_t span = n - 1 - i;
        if (span * v + v <= suffix) {
            std::fill(parts_.begin() + static_cast<std::ptrdiff_t>(i), parts_.end() - 1, v);
            parts_.back() = s_ - prefix - span * v;
            return *this;
        }
    }
    done_ = true;
    parts_.clear();
    return *this;
}

namespace {

struct Walker {
    std::uint64_t n;
    std::vector<Part> buf;
    const PartitionVisitor& visit;

    void run(std::size_t depth, std::uint64_t remaining, std::uint64_t min_part, u128 product)
    {
        const std::uint64_t left = n - depth;
        if (left == 1) {
            buf[depth] = remaining;
            visit(buf, mul_or_throw(product, remaining));
            return;
        }
        for (std::uint64_t v = min_part; v * left <= remaining; ++v) {
            buf[depth] = v;
            run(depth + 1, remaining - v, v, mul_or_throw(product, v));
        }
    }
};

// Smallest-part values that start at least one n-partition of s.
std::vector<std::uint64_t> first_parts(std::uint64_t s, std::uint64_t n, std::uint64_t min_part)
{
    std::vector<std::uint64_t> out;
    if (n == 0 || min_part == 0)
        return out;
    for (std::uint64_t v = min_part; v * n <= s; ++v)
        out.push_back(v);
    return out;
}

// Enumerates the branch whose smallest part is exactly `first`.
void visit_branch(std::uint64_t s, std::uint64_t n, std::uint64_t first, const PartitionVisitor& visit)
{
    Walker w{n, std::vector<Part>(n), visit};
    if (n == 1) {
        w.buf[0] = s;
        visit(w.buf, s);
        return;
    }
    w.buf[0] = first;
    w.run(1, s - first, first, first);
}

} // namespace

void for_each_partition(std::uint64_t s, std::uint64_t n, std::uint64_t min_part,
                        const PartitionVisitor& visit)
{
    if (n == 1) {
        if (s >= min_part && min_part >= 1)
            visit_branch(s, 1, s, visit);
        return;
    }
    for (std::uint64_t v : first_parts(s, n, min_part))
        visit_branch(s, n, v, visit);
}

std::uint64_t count_partitions(std::uint64_t s, std::uint64_t n, std::uint64_t min_part)
{
    // dp over (remaining, parts, minimum) would be faster; counts here stay small.
    std::uint64_t count = 0;
    for_each_partition(s, n, min_part, [&](std::span<const Part>, u128) { ++count; });
    return count;
}

namespace {

std::vector<std::uint64_t> branch_keys(std::uint64_t s, std::uint64_t n)
{
    if (n == 1)
        return s >= 1 ? std::vector<std::uint64_t>{s} : std::vector<std::uint64_t>{};
    return first_parts(s, n, 1);
}

} // namespace

ProductGroups group_by_product(std::uint64_t s, std::uint64_t n, Parallelism par)
{
    const auto keys = branch_keys(s, n);
    auto partial = parallel_map(keys.size(), par, [&](std::size_t i) {
        ProductGroups groups;
        visit_branch(s, n, keys[i], [&](std::span<const Part> parts, u128 product) {
            groups[product].push_back(
                PartitionMultiset::from_parts(std::vector<Part>(parts.begin(), parts.end())));
        });
        return groups;
    });
    // Branches are in increasing smallest part, so appending keeps each list
    // in lexicographic order.
    ProductGroups merged;
    for (auto& groups : partial) {
        for (auto& [product, list] : groups) {
            auto& dest = merged[product];
            dest.insert(dest.end(), std::make_move_iterator(list.begin()),
                        std::make_move_iterator(list.end()));
        }
    }
    return merged;
}

std::vector<Family> equal_product_families(std::uint64_t s, std::uint64_t n, std::uint64_t r,
                                           Parallelism par)
{
    if (r < 2)
        throw Error(ErrorCode::InvalidArgument, "family size r must be at least 2");
    std::vector<Family> out;
    for (auto& [product, list] : group_by_product(s, n, par)) {
        if (list.size() >= r)
            out.push_back(Family::make(std::move(list)));
    }
    return out;
}

namespace {

bool disjoint(const PartitionMultiset& a, const PartitionMultiset& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

// Lexicographically first r-subset of pairwise disjoint candidates.
bool pick_disjoint(const std::vector<PartitionMultiset>& cand, std::size_t start, std::size_t r,
                   std::vector<std::size_t>& chosen)
{
    if (chosen.size() == r)
        return true;
    for (std::size_t i = start; i + (r - chosen.size()) <= cand.size(); ++i) {
        bool ok = std::all_of(chosen.begin(), chosen.end(),
                              [&](std::size_t c) { return disjoint(cand[c], cand[i]); });
        if (!ok)
            continue;
        chosen.push_back(i);
        if (pick_disjoint(cand, i + 1, r, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::vector<Family> disjoint_families(std::uint64_t s, std::uint64_t n, std::uint64_t r, Parallelism par)
{
    if (r < 2)
        throw Error(ErrorCode::InvalidArgument, "family size r must be at least 2");
    std::vector<Family> out;
    // r*n distinct positive integers sum to at least rn(rn+1)/2, and the r
    // members together sum to r*s.
    const std::uint64_t total = r * n;
    if (total * (total + 1) / 2 > r * s)
        return out;
    for (auto& [product, list] : group_by_product(s, n, par)) {
        if (list.size() < r)
            continue;
        std::vector<PartitionMultiset> cand;
        for (auto& m : list) {
            if (m.has_distinct_parts())
                cand.push_back(std::move(m));
        }
        std::vector<std::size_t> chosen;
        if (!pick_disjoint(cand, 0, r, chosen))
            continue;
        std::vector<PartitionMultiset> members;
        for (std::size_t c : chosen)
            members.push_back(cand[c]);
        out.push_back(Family::make(std::move(members)));
    }
    return out;
}

std::size_t max_family_size(std::uint64_t s, std::uint64_t n, Parallelism par)
{
    const auto keys = branch_keys(s, n);
    auto partial = parallel_map(keys.size(), par, [&](std::size_t i) {
        std::vector<u128> products;
        visit_branch(s, n, keys[i], [&](std::span<const Part>, u128 product) { products.push_back(product); });
        return products;
    });
    std::vector<u128> all;
    for (auto& p : partial)
        all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    std::size_t best = 0;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i])
            ++j;
        best = std::max(best, j - i);
        i = j;
    }
    return best;
}

} // namespace eqprod
