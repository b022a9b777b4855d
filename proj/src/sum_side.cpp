#include "eqprod/sum_side.hpp"

#include "eqprod/error.hpp"

#include <algorithm>
#include <optional>

namespace eqprod {

namespace {

void require_safe_sum(std::uint64_t s)
{
    if (s > kMaxSafeSum)
        throw Error(ErrorCode::ProductOverflow,
                    "s = " + std::to_string(s) + " exceeds the 128-bit safe bound " + std::to_string(kMaxSafeSum));
}

bool in_excluded_tail(std::uint64_t s, std::uint64_t n)
{
    return n + 7 >= s;
}

} // namespace

bool is_admissible(std::uint64_t s, u128 p, std::uint64_t n)
{
    if (s == 0 || n == 0 || p == 0)
        return false;
    std::size_t hits = 0;
    for_each_partition(s, n, 1, [&](std::span<const Part>, u128 product) {
        if (product == p)
            ++hits;
    });
    return hits >= 2;
}

AdmissibilityReport compute_report(std::uint64_t s, ReportOptions opts)
{
    require_safe_sum(s);
    AdmissibilityReport report;
    report.s = s;
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t n = 1; n <= s; ++n) {
        if (opts.shortcuts && (n <= 2 || in_excluded_tail(s, n)))
            continue;
        candidates.push_back(n);
    }
    auto found = parallel_map(candidates.size(), {}, [&](std::size_t i) -> std::optional<Family> {
        auto fams = equal_product_families(s, candidates[i], 2, opts.par);
        if (fams.empty())
            return std::nullopt;
        return fams.front();
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!found[i])
            continue;
        report.F.push_back(candidates[i]);
        report.witnesses.emplace(candidates[i], std::move(*found[i]));
    }
    report.f = report.F.size();
    return report;
}

bool excluded_n_check(std::uint64_t s, bool shortcuts)
{
    require_safe_sum(s);
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= s; ++n) {
        if (n <= 2 || in_excluded_tail(s, n))
            ns.push_back(n);
    }
    for (std::uint64_t n : ns) {
        if (shortcuts && n <= 2)
            continue; // {s} is the only 1-partition; r(s-r) = r'(s-r') forces r' in {r, s-r}.
        if (max_family_size(s, n) >= 2)
            return false;
    }
    return true;
}

Family extend_family(const Family& fam, std::uint64_t s_extra, std::uint64_t n_extra)
{
    if (n_extra == 0 || n_extra > s_extra)
        throw Error(ErrorCode::InvalidExtension,
                    "need 1 <= n' <= s', got n' = " + std::to_string(n_extra) + ", s' = " + std::to_string(s_extra));
    std::vector<Part> extra(n_extra - 1, 1);
    extra.push_back(s_extra - (n_extra - 1));
    std::vector<PartitionMultiset> members;
    members.reserve(fam.members.size());
    for (const auto& m : fam.members)
        members.push_back(m.with_parts(extra));
    return Family::make(std::move(members));
}

std::vector<std::uint64_t> wizard_bus_numbers(std::uint64_t limit, Parallelism par)
{
    require_safe_sum(limit);
    auto unique = parallel_map(limit, par, [&](std::size_t idx) {
        const std::uint64_t s = idx + 1;
        // n = 1, 2 and n >= s-7 never collide, so only 3 <= n <= s-8 is scanned.
        std::size_t pairs = 0;
        for (std::uint64_t n = 3; n + 8 <= s && pairs < 2; ++n) {
            for (const auto& [product, list] : group_by_product(s, n)) {
                if (list.size() >= 2 && ++pairs >= 2)
                    break;
            }
        }
        return pairs == 1;
    });
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s <= limit; ++s) {
        if (unique[s - 1])
            out.push_back(s);
    }
    return out;
}

} // namespace eqprod
