#include "eqprod/thresholds.hpp"

#include "eqprod/error.hpp"

#include <algorithm>
#include <sstream>

namespace eqprod {

std::size_t ThresholdEngine::family_size(std::uint64_t s, std::uint64_t n)
{
    const auto key = std::make_pair(s, n);
    {
        std::lock_guard lock(mutex_);
        if (auto it = sizes_.find(key); it != sizes_.end())
            return it->second;
    }
    const std::size_t size = (n == 0 || n > s) ? 0 : max_family_size(s, n, opts_.par);
    std::lock_guard lock(mutex_);
    sizes_.emplace(key, size);
    return size;
}

bool ThresholdEngine::has_r_family(std::uint64_t s, std::uint64_t n, std::uint64_t r)
{
    if (r < 2)
        throw Error(ErrorCode::InvalidArgument, "r must be at least 2");
    return family_size(s, n) >= r;
}

std::optional<std::uint64_t> ThresholdEngine::s_r_0(std::uint64_t n, std::uint64_t r)
{
    if (n < 3 || r < 2)
        throw Error(ErrorCode::InvalidArgument, "s_r^0(n) needs n >= 3 and r >= 2");
    for (std::uint64_t s = n; s <= opts_.cap; ++s) {
        if (has_r_family(s, n, r))
            return s;
    }
    return std::nullopt;
}

std::uint64_t ThresholdEngine::s_r_star(std::uint64_t n, std::uint64_t r, std::optional<std::uint64_t>* certified_to)
{
    if (n < 3 || r < 2)
        throw Error(ErrorCode::InvalidArgument, "s_r^*(n) needs n >= 3 and r >= 2");
    std::uint64_t top;
    if (n == 3) {
        top = opts_.scan_ceiling;
        if (certified_to)
            *certified_to = opts_.scan_ceiling;
    } else {
        const auto below = s_r_0(n - 1, r);
        if (!below)
            throw Error(ErrorCode::SearchBudgetExceeded, "s_" + std::to_string(r) + "^0(" + std::to_string(n - 1) +
                                                             ") not found up to cap " + std::to_string(opts_.cap));
        // Every s' > s_r^0(n-1) is covered by appending s' - s_r^0(n-1).
        top = *below;
        if (certified_to)
            certified_to->reset();
    }
    for (std::uint64_t s = top; s >= 1; --s) {
        if (!has_r_family(s, n, r))
            return s + 1;
    }
    return 1;
}

ThresholdRecord ThresholdEngine::s0_record(std::uint64_t n, std::uint64_t r)
{
    ThresholdRecord rec;
    rec.n = n;
    rec.r = r;
    rec.s0 = s_r_0(n, r);
    if (rec.s0) {
        auto fams = equal_product_families(*rec.s0, n, r, opts_.par);
        if (!fams.empty())
            rec.witness = std::move(fams.front());
    }
    return rec;
}

ThresholdRecord ThresholdEngine::full_record(std::uint64_t n, std::uint64_t r)
{
    ThresholdRecord rec = s0_record(n, r);
    rec.sstar = s_r_star(n, r, &rec.certified_to);
    return rec;
}

bool has_r_family(std::uint64_t s, std::uint64_t n, std::uint64_t r)
{
    if (r < 2)
        throw Error(ErrorCode::InvalidArgument, "r must be at least 2");
    return n >= 1 && n <= s && max_family_size(s, n) >= r;
}

std::optional<std::uint64_t> s_r_0(std::uint64_t n, std::uint64_t r, std::uint64_t cap)
{
    ThresholdEngine engine(ThresholdOptions{.cap = cap});
    return engine.s_r_0(n, r);
}

std::uint64_t s_r_star(std::uint64_t n, std::uint64_t r, ThresholdOptions opts)
{
    ThresholdEngine engine(opts);
    return engine.s_r_star(n, r);
}

std::vector<ThresholdRecord> table_s_n0(std::uint64_t n_max, ThresholdEngine& engine)
{
    if (n_max < 3 || n_max > 20)
        throw Error(ErrorCode::InvalidArgument, "table s0 needs 3 <= n_max <= 20");
    std::vector<ThresholdRecord> out;
    for (std::uint64_t n = 3; n <= n_max; ++n)
        out.push_back(engine.s0_record(n, n));
    return out;
}

std::vector<ThresholdRecord> table_s_star(std::uint64_t n_max, ThresholdEngine& engine)
{
    if (n_max < 3 || n_max > 21)
        throw Error(ErrorCode::InvalidArgument, "table sstar needs 3 <= n_max <= 21");
    std::vector<ThresholdRecord> out;
    for (std::uint64_t n = 3; n <= n_max; ++n)
        out.push_back(engine.full_record(n, n - 1));
    return out;
}

std::vector<ConjectureRow> check_conjectures(std::uint64_t n_max, ThresholdEngine& engine)
{
    std::vector<ConjectureRow> rows;
    for (std::uint64_t n = 6; n <= n_max; ++n) {
        const std::uint64_t r = n - 1;
        ConjectureRow row{"1", n, r, engine.s_r_star(n, r), 0, false};
        const auto s0 = engine.s_r_0(n - 1, r);
        if (!s0)
            throw Error(ErrorCode::SearchBudgetExceeded, "s0 not found below cap for conjecture 1");
        row.rhs = *s0 + 1;
        row.hold = row.lhs == row.rhs;
        rows.push_back(row);
    }
    struct Variant {
        const char* name;
        std::uint64_t n_min;
        std::int64_t r_offset;
    };
    for (const Variant v : {Variant{"2a", 9, -2}, Variant{"2b", 7, -1}, Variant{"2c", 10, 0}}) {
        for (std::uint64_t n = v.n_min; n <= n_max; ++n) {
            const auto r = static_cast<std::uint64_t>(static_cast<std::int64_t>(n) + v.r_offset);
            ConjectureRow row{v.name, n, r, engine.s_r_star(n, r), engine.s_r_star(n - 1, r) + 1, false};
            row.hold = row.lhs == row.rhs;
            rows.push_back(row);
        }
    }
    return rows;
}

std::uint64_t disjoint_threshold_scan(std::uint64_t n, std::uint64_t r, std::uint64_t ceiling, Parallelism par)
{
    std::uint64_t s = ceiling;
    for (; s >= 1; --s) {
        if (disjoint_families(s, n, r, par).empty())
            break;
    }
    return s + 1;
}

std::string to_csv(const std::vector<ThresholdRecord>& records)
{
    std::ostringstream out;
    out << "n,r,s0,sstar\n";
    for (const auto& rec : records) {
        out << rec.n << ',' << rec.r << ',';
        if (rec.s0)
            out << *rec.s0;
        out << ',';
        if (rec.sstar)
            out << *rec.sstar;
        out << '\n';
    }
    return out.str();
}

std::string to_bfile(const std::vector<ThresholdRecord>& records)
{
    std::ostringstream out;
    for (const auto& rec : records) {
        const auto value = rec.sstar ? rec.sstar : rec.s0;
        if (value)
            out << rec.n << ' ' << *value << '\n';
    }
    return out.str();
}

} // namespace eqprod
