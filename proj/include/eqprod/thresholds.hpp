#pragma once

#include "eqprod/partitions.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqprod {

struct ThresholdOptions {
    /// Upward scans for s_r^0 stop here.
    std::uint64_t cap = 120;
    /// n = 3 has no tail construction, so s_r^* is scanned downward from this
    /// ceiling and only certified up to it.
    std::uint64_t scan_ceiling = 200;
    Parallelism par{};
};

struct ThresholdRecord {
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::optional<std::uint64_t> s0;
    std::optional<std::uint64_t> sstar;
    /// A family of >= r members at s0.
    std::optional<Family> witness;
    /// Set when sstar was only certified up to the scan ceiling.
    std::optional<std::uint64_t> certified_to;

    friend bool operator==(const ThresholdRecord&, const ThresholdRecord&) = default;
};

/// Memoizes the largest equal-product family size per (s, n); every
/// threshold query reduces to it. Thread-safe.
class ThresholdEngine {
public:
    explicit ThresholdEngine(ThresholdOptions opts = {}) : opts_(opts) {}

    const ThresholdOptions& options() const noexcept { return opts_; }

    std::size_t family_size(std::uint64_t s, std::uint64_t n);

    bool has_r_family(std::uint64_t s, std::uint64_t n, std::uint64_t r);

    /// Smallest s <= cap admitting an r-member family of n-partitions;
    /// nullopt when the cap is reached (nonexistence is never claimed).
    std::optional<std::uint64_t> s_r_0(std::uint64_t n, std::uint64_t r);

    /// Smallest s such that every s' >= s admits an r-member family. For
    /// n >= 4 the tail above s_r^0(n-1) is guaranteed by appending one part
    /// to an (n-1)-family, so only s below it is scanned. For n = 3 the scan
    /// starts at the ceiling and `certified_to` is set.
    /// Throws SearchBudgetExceeded when s_r^0(n-1) is not found below cap.
    std::uint64_t s_r_star(std::uint64_t n, std::uint64_t r, std::optional<std::uint64_t>* certified_to = nullptr);

    /// s0 and a witness for (n, r); sstar is left empty.
    ThresholdRecord s0_record(std::uint64_t n, std::uint64_t r);
    /// Both s0 and sstar for (n, r).
    ThresholdRecord full_record(std::uint64_t n, std::uint64_t r);

private:
    ThresholdOptions opts_;
    std::mutex mutex_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> sizes_;
};

bool has_r_family(std::uint64_t s, std::uint64_t n, std::uint64_t r);
std::optional<std::uint64_t> s_r_0(std::uint64_t n, std::uint64_t r, std::uint64_t cap = 120);
std::uint64_t s_r_star(std::uint64_t n, std::uint64_t r, ThresholdOptions opts = {});

/// s_n^0(n) for n = 3..n_max (r = n). Requires 3 <= n_max <= 20.
std::vector<ThresholdRecord> table_s_n0(std::uint64_t n_max, ThresholdEngine& engine);
/// s_{n-1}^*(n) for n = 3..n_max (r = n-1), with s0 filled in as well.
/// Requires 3 <= n_max <= 21.
std::vector<ThresholdRecord> table_s_star(std::uint64_t n_max, ThresholdEngine& engine);

struct ConjectureRow {
    std::string conjecture; // "1", "2a", "2b", "2c"
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::uint64_t lhs = 0; // s_r^*(n)
    std::uint64_t rhs = 0; // right-hand side of the conjectured identity
    bool hold = false;
};

/// Conjecture 1:  s_{n-1}^*(n) = s_{n-1}^0(n-1) + 1 for n >= 6.
/// Conjecture 2:  s_r^*(n) = s_r^*(n-1) + 1 with (a) r = n-2, n >= 9;
///                (b) r = n-1, n >= 7; (c) r = n, n >= 10.
std::vector<ConjectureRow> check_conjectures(std::uint64_t n_max, ThresholdEngine& engine);

/// Finite-range scan for the disjoint-family threshold: the smallest s such
/// that every s' in [s, ceiling] admits r pairwise disjoint n-partitions with
/// a common product. Returns ceiling + 1 when the ceiling itself fails.
std::uint64_t disjoint_threshold_scan(std::uint64_t n, std::uint64_t r, std::uint64_t ceiling, Parallelism par = {});

// Serialization of threshold tables.
std::string to_csv(const std::vector<ThresholdRecord>& records);
/// OEIS b-file: "n value" per line, using sstar when present, else s0.
std::string to_bfile(const std::vector<ThresholdRecord>& records);

} // namespace eqprod
