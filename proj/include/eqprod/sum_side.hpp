#pragma once

#include "eqprod/partitions.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace eqprod {

/// Largest s for which every partition product is guaranteed to fit in 128
/// bits (3^80 < 2^128).
inline constexpr std::uint64_t kMaxSafeSum = 240;

/// F(s), f(s) = |F(s)| and one witness family per n in F(s).
struct AdmissibilityReport {
    std::uint64_t s = 0;
    std::vector<std::uint64_t> F;
    std::uint64_t f = 0;
    std::map<std::uint64_t, Family> witnesses;
};

struct ReportOptions {
    /// Skip n in {1, 2, s-7, ..., s}, which never admit a collision. When
    /// false every n in [1, s] is enumerated.
    bool shortcuts = true;
    Parallelism par{};
};

/// True iff at least two distinct n-partitions of s have product p.
bool is_admissible(std::uint64_t s, u128 p, std::uint64_t n);

/// Throws ProductOverflow for s > kMaxSafeSum.
AdmissibilityReport compute_report(std::uint64_t s, ReportOptions opts = {});

/// Checks that no n in {1, 2, s-7, ..., s} admits two n-partitions of s with
/// a common product. With `shortcuts`, n = 1 and n = 2 are decided by the
/// algebraic argument instead of enumeration.
bool excluded_n_check(std::uint64_t s, bool shortcuts = false);

/// Appends n'-1 ones and one part s'-(n'-1) to every member; the result has
/// signature (s+s', p*(s'-n'+1), n+n'). Throws InvalidExtension if n' > s'
/// or n' == 0.
Family extend_family(const Family& fam, std::uint64_t s_extra, std::uint64_t n_extra);

/// Every s <= limit with exactly one admissible (p, n) pair.
std::vector<std::uint64_t> wizard_bus_numbers(std::uint64_t limit, Parallelism par = {});

} // namespace eqprod
