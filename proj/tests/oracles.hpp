#pragma once

// Brute-force reference implementations used only by tests. They avoid the
// library's enumeration and grouping code paths entirely.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint64_t>;

// Every partition of s (any length), generated largest part first by
// recursion on the maximum allowed part, then returned ascending.
inline void all_partitions_rec(std::uint64_t rest, std::uint64_t max_part, Parts& cur, std::vector<Parts>& out)
{
    if (rest == 0) {
        Parts asc(cur.rbegin(), cur.rend());
        out.push_back(asc);
        return;
    }
    for (std::uint64_t v = std::min(rest, max_part); v >= 1; --v) {
        cur.push_back(v);
        all_partitions_rec(rest - v, v, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Parts> partitions_of_length(std::uint64_t s, std::uint64_t n)
{
    std::vector<Parts> all, out;
    Parts cur;
    all_partitions_rec(s, s, cur, all);
    for (auto& p : all) {
        if (p.size() == n)
            out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline unsigned __int128 product(const Parts& p)
{
    unsigned __int128 v = 1;
    for (auto x : p)
        v *= x;
    return v;
}

struct Group {
    unsigned __int128 product;
    std::vector<Parts> members;
};

// Families with >= r members found by pairwise product comparison.
inline std::vector<Group> families(std::uint64_t s, std::uint64_t n, std::size_t r)
{
    const auto parts = partitions_of_length(s, n);
    std::vector<bool> used(parts.size(), false);
    std::vector<Group> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (used[i])
            continue;
        Group g{product(parts[i]), {parts[i]}};
        for (std::size_t k = i + 1; k < parts.size(); ++k) {
            if (!used[k] && product(parts[k]) == g.product) {
                used[k] = true;
                g.members.push_back(parts[k]);
            }
        }
        if (g.members.size() >= r)
            out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) { return a.product < b.product; });
    return out;
}

// Number of (p, n) pairs for which some pair of n-partitions of s collide.
inline std::size_t admissible_pairs(std::uint64_t s)
{
    std::vector<Parts> all;
    Parts cur;
    all_partitions_rec(s, s, cur, all);
    std::map<std::pair<std::size_t, unsigned __int128>, std::size_t> seen;
    for (const auto& p : all)
        ++seen[{p.size(), product(p)}];
    std::size_t count = 0;
    for (const auto& [key, c] : seen)
        count += c >= 2;
    return count;
}

// f(s) as stated in closed form.
inline std::uint64_t f_closed_form(std::uint64_t s)
{
    static const std::uint64_t middle[] = {1, 2, 4, 4, 6, 7, 7};
    if (s <= 11)
        return 0;
    if (s <= 18)
        return middle[s - 12];
    return s - 10;
}

} // namespace oracle
