#pragma once

#include "eqprod/checked.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqprod {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial in k variables with integer coefficients.
/// Zero coefficients are never stored.
class IntPolynomial {
public:
    explicit IntPolynomial(std::size_t num_vars);

    /// Univariate polynomial from dense coefficients, lowest degree first.
    static IntPolynomial univariate(std::span<const std::int64_t> coeffs);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t coefficient(const Exponents& e) const;

    /// Adds `c` to the coefficient of the monomial `e`, erasing it if it
    /// cancels to zero.
    void add_term(const Exponents& e, std::int64_t c);

    /// Exact evaluation; nullopt on 128-bit overflow.
    std::optional<i128> evaluate(std::span<const std::int64_t> point) const;

    /// Partial derivative with respect to variable `var`.
    IntPolynomial partial(std::size_t var) const;

    /// Sum of |coefficient| over all terms.
    std::uint64_t abs_coefficient_sum() const noexcept;

    /// Univariate only: dense coefficients, lowest degree first.
    std::vector<std::int64_t> dense() const;

    /// Univariate synthetic division by (z - root). Returns the quotient when
    /// the remainder is zero.
    std::optional<IntPolynomial> divide_by_linear(std::int64_t root) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::size_t num_vars_;
    std::map<Exponents, std::int64_t> terms_;
};

/// Human-readable form, e.g. "z^3 - 4*z^2 + 5*z - 2" or "2*z1*z2 - z2^2 + 1".
std::string to_string(const IntPolynomial& poly);

} // namespace eqprod
