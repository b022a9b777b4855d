#include "eqprod/factor.hpp"

#include "eqprod/error.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace eqprod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable-prime test; this base set is deterministic below 2^64.
bool strong_probable_prime(std::uint64_t n) noexcept
{
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0)
            continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

constexpr std::uint64_t kTrialLimit = 1u << 16;

// Pollard-Brent rho; n must be an odd composite.
std::uint64_t find_divisor(std::uint64_t n)
{
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = find_divisor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 41 * 41)
        return true;
    if (n < (std::uint64_t{1} << 32)) {
        for (std::uint64_t p = 41; p * p <= n; p += 2) {
            if (n % p == 0)
                return false;
        }
        return true;
    }
    return strong_probable_prime(n);
}

FactoredInteger FactoredInteger::from_map(std::map<std::uint64_t, unsigned> factors)
{
    for (const auto& [p, e] : factors) {
        if (!is_prime(p))
            throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        if (e == 0)
            throw Error(ErrorCode::InvalidArgument, "zero exponent for prime " + std::to_string(p));
    }
    FactoredInteger f;
    f.factors_ = std::move(factors);
    return f;
}

std::optional<u128> FactoredInteger::value() const noexcept
{
    u128 v = 1;
    for (const auto& [p, e] : factors_) {
        auto pe = checked_pow(p, e);
        if (!pe)
            return std::nullopt;
        auto next = checked_mul(v, *pe);
        if (!next)
            return std::nullopt;
        v = *next;
    }
    return v;
}

unsigned FactoredInteger::omega() const noexcept
{
    unsigned total = 0;
    for (const auto& [p, e] : factors_)
        total += e;
    return total;
}

FactoredInteger factorize(std::uint64_t u)
{
    if (u == 0)
        throw Error(ErrorCode::InvalidArgument, "cannot factorize 0");
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t p = 2; p < kTrialLimit && p * p <= u; p += (p == 2 ? 1 : 2)) {
        while (u % p == 0) {
            ++out[p];
            u /= p;
        }
    }
    factor_into(u, out);
    return FactoredInteger::from_map(std::move(out));
}

std::string to_string(const FactoredInteger& f)
{
    if (f.factors().empty())
        return "1";
    std::string out;
    for (const auto& [p, e] : f.factors()) {
        if (!out.empty())
            out += "*";
        out += std::to_string(p);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace eqprod
