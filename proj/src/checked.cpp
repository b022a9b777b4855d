#include "eqprod/checked.hpp"

#include "eqprod/error.hpp"

#include <algorithm>

namespace eqprod {

u128 mul_or_throw(u128 a, u128 b)
{
    auto r = checked_mul(a, b);
    if (!r)
        throw Error(ErrorCode::ProductOverflow, "product exceeds 128 bits");
    return *r;
}

std::uint64_t add_or_throw(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorCode::ProductOverflow, "sum exceeds 64 bits");
    return out;
}

std::optional<u128> checked_pow(u128 base, unsigned exp) noexcept
{
    u128 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        auto next = checked_mul(result, base);
        if (!next)
            return std::nullopt;
        result = *next;
    }
    return result;
}

std::string to_string(u128 v)
{
    if (v == 0)
        return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string(i128 v)
{
    if (v < 0)
        return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
    return to_string(static_cast<u128>(v));
}

std::optional<u128> parse_u128(std::string_view text) noexcept
{
    if (text.empty())
        return std::nullopt;
    u128 v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            return std::nullopt;
        auto m = checked_mul(v, u128{10});
        if (!m)
            return std::nullopt;
        auto a = checked_add(*m, static_cast<u128>(c - '0'));
        if (!a)
            return std::nullopt;
        v = *a;
    }
    return v;
}

} // namespace eqprod
