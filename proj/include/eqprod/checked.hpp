#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eqprod {

using u128 = unsigned __int128;
using i128 = __int128;

inline std::optional<u128> checked_mul(u128 a, u128 b) noexcept
{
    u128 out;
    if (__builtin_mul_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

inline std::optional<u128> checked_add(u128 a, u128 b) noexcept
{
    u128 out;
    if (__builtin_add_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

inline std::optional<i128> checked_mul(i128 a, i128 b) noexcept
{
    i128 out;
    if (__builtin_mul_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

inline std::optional<i128> checked_add(i128 a, i128 b) noexcept
{
    i128 out;
    if (__builtin_add_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

/// Multiplies or throws Error(ProductOverflow).
u128 mul_or_throw(u128 a, u128 b);
std::uint64_t add_or_throw(std::uint64_t a, std::uint64_t b);

/// Checked power; nullopt on overflow.
std::optional<u128> checked_pow(u128 base, unsigned exp) noexcept;

std::string to_string(u128 v);
std::string to_string(i128 v);

/// Parses an unsigned decimal literal; nullopt on junk or overflow.
std::optional<u128> parse_u128(std::string_view text) noexcept;

} // namespace eqprod
