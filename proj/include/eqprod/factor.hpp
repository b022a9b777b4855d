#pragma once

#include "eqprod/checked.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace eqprod {

bool is_prime(std::uint64_t n) noexcept;

/// Prime -> exponent map. An empty map represents 1.
class FactoredInteger {
public:
    FactoredInteger() = default;

    /// Validates that every key is prime and every exponent positive.
    static FactoredInteger from_map(std::map<std::uint64_t, unsigned> factors);

    const std::map<std::uint64_t, unsigned>& factors() const noexcept { return factors_; }

    /// Expanded value, or nullopt when it does not fit in 128 bits.
    std::optional<u128> value() const noexcept;

    /// Total prime multiplicity (big omega).
    unsigned omega() const noexcept;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::map<std::uint64_t, unsigned> factors_;
};

FactoredInteger factorize(std::uint64_t u);

std::string to_string(const FactoredInteger& f);

} // namespace eqprod
