#include "eqprod/multiset.hpp"

#include "eqprod/error.hpp"

#include <algorithm>

namespace eqprod {

PartitionMultiset PartitionMultiset::canonicalize(std::span<const std::int64_t> raw)
{
    if (raw.empty())
        throw Error(ErrorCode::EmptyInput, "a partition needs at least one part");
    std::vector<Part> parts;
    parts.reserve(raw.size());
    for (auto v : raw) {
        if (v < 1)
            throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(v) + " is not positive");
        parts.push_back(static_cast<Part>(v));
    }
    std::sort(parts.begin(), parts.end());
    return PartitionMultiset(std::move(parts));
}

PartitionMultiset PartitionMultiset::canonicalize(std::initializer_list<std::int64_t> raw)
{
    return canonicalize(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

PartitionMultiset PartitionMultiset::from_parts(std::vector<Part> parts)
{
    if (parts.empty())
        throw Error(ErrorCode::EmptyInput, "a partition needs at least one part");
    if (std::find(parts.begin(), parts.end(), Part{0}) != parts.end())
        throw Error(ErrorCode::NonPositivePart, "part 0 is not positive");
    std::sort(parts.begin(), parts.end());
    return PartitionMultiset(std::move(parts));
}

PartitionMultiset PartitionMultiset::with_parts(std::span<const Part> extra) const
{
    std::vector<Part> parts = parts_;
    parts.insert(parts.end(), extra.begin(), extra.end());
    return from_parts(std::move(parts));
}

bool PartitionMultiset::has_distinct_parts() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Triple signature(const PartitionMultiset& x)
{
    Triple t;
    t.n = x.size();
    for (Part v : x.parts()) {
        t.s = add_or_throw(t.s, v);
        t.p = mul_or_throw(t.p, v);
    }
    return t;
}

std::string to_string(const Triple& t)
{
    return "(" + std::to_string(t.s) + "," + to_string(t.p) + "," + std::to_string(t.n) + ")";
}

std::string to_string(const PartitionMultiset& x)
{
    std::string out = "{";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(x[i]);
    }
    return out + "}";
}

} // namespace eqprod
