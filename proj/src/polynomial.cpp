#include "eqprod/polynomial.hpp"

#include "eqprod/error.hpp"

namespace eqprod {

IntPolynomial::IntPolynomial(std::size_t num_vars) : num_vars_(num_vars)
{
    if (num_vars == 0)
        throw Error(ErrorCode::InvalidArgument, "a polynomial needs at least one variable");
}

IntPolynomial IntPolynomial::univariate(std::span<const std::int64_t> coeffs)
{
    IntPolynomial poly(1);
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        poly.add_term({static_cast<unsigned>(t)}, coeffs[t]);
    return poly;
}

std::int64_t IntPolynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void IntPolynomial::add_term(const Exponents& e, std::int64_t c)
{
    if (e.size() != num_vars_)
        throw Error(ErrorCode::InvalidArgument, "exponent tuple has the wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<i128> IntPolynomial::evaluate(std::span<const std::int64_t> point) const
{
    if (point.size() != num_vars_)
        throw Error(ErrorCode::InvalidArgument, "evaluation point has the wrong dimension");
    i128 total = 0;
    for (const auto& [e, c] : terms_) {
        i128 term = c;
        for (std::size_t v = 0; v < num_vars_; ++v) {
            for (unsigned k = 0; k < e[v]; ++k) {
                auto next = checked_mul(term, static_cast<i128>(point[v]));
                if (!next)
                    return std::nullopt;
                term = *next;
            }
        }
        auto sum = checked_add(total, term);
        if (!sum)
            return std::nullopt;
        total = *sum;
    }
    return total;
}

IntPolynomial IntPolynomial::partial(std::size_t var) const
{
    if (var >= num_vars_)
        throw Error(ErrorCode::InvalidArgument, "no such variable");
    IntPolynomial out(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents lowered = e;
        --lowered[var];
        out.add_term(lowered, c * static_cast<std::int64_t>(e[var]));
    }
    return out;
}

std::uint64_t IntPolynomial::abs_coefficient_sum() const noexcept
{
    std::uint64_t total = 0;
    for (const auto& [e, c] : terms_)
        total += static_cast<std::uint64_t>(c < 0 ? -c : c);
    return total;
}

std::vector<std::int64_t> IntPolynomial::dense() const
{
    if (num_vars_ != 1)
        throw Error(ErrorCode::InvalidArgument, "dense form requires a univariate polynomial");
    std::vector<std::int64_t> out;
    for (const auto& [e, c] : terms_) {
        if (out.size() <= e[0])
            out.resize(e[0] + 1, 0);
        out[e[0]] = c;
    }
    return out;
}

std::optional<IntPolynomial> IntPolynomial::divide_by_linear(std::int64_t root) const
{
    auto coeffs = dense();
    if (coeffs.empty())
        return IntPolynomial(1);
    // Horner from the top: quotient[d-1] = coeffs[d], quotient[i-1] = coeffs[i] + root*quotient[i].
    std::vector<std::int64_t> quotient(coeffs.size() - 1, 0);
    i128 carry = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        i128 value = static_cast<i128>(coeffs[i]) + carry * root;
        if (i == 0) {
            if (value != 0)
                return std::nullopt;
            break;
        }
        quotient[i - 1] = static_cast<std::int64_t>(value);
        carry = value;
    }
    return univariate(quotient);
}

std::string to_string(const IntPolynomial& poly)
{
    if (poly.is_zero())
        return "0";
    auto var_name = [&](std::size_t v) {
        return poly.num_vars() == 1 ? std::string("z") : "z" + std::to_string(v + 1);
    };
    std::string out;
    // Highest total degree first reads naturally.
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(v);
            if (e[v] > 1)
                mono += "^" + std::to_string(e[v]);
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += std::to_string(mag) + "*" + mono;
    }
    return out;
}

} // namespace eqprod
