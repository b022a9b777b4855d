#include "eqprod/product_side.hpp"

#include "eqprod/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace eqprod {

WitnessPair WitnessPair::make(PartitionMultiset x, PartitionMultiset y)
{
    if (x == y)
        throw Error(ErrorCode::UnequalSignatures, "witness members are identical: " + to_string(x));
    const Triple tx = signature(x), ty = signature(y);
    if (tx != ty)
        throw Error(ErrorCode::UnequalSignatures, to_string(x) + " has " + to_string(tx) + " but " +
                                                      to_string(y) + " has " + to_string(ty));
    return WitnessPair{std::move(x), std::move(y)};
}

namespace {

Part part_or_throw(u128 v)
{
    if (v > std::numeric_limits<Part>::max())
        throw Error(ErrorCode::ProductOverflow, "part " + to_string(v) + " exceeds 64 bits");
    return static_cast<Part>(v);
}

Part prime_power_part(std::uint64_t q, unsigned e)
{
    auto v = checked_pow(q, e);
    if (!v)
        throw Error(ErrorCode::ProductOverflow, std::to_string(q) + "^" + std::to_string(e) + " exceeds 128 bits");
    return part_or_throw(*v);
}

std::vector<std::uint64_t> divisors_of(const FactoredInteger& f)
{
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : f.factors()) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

struct Factorization {
    std::vector<std::uint64_t> factors;
    std::uint64_t sum = 0;
};

class FactorizationWalker {
public:
    FactorizationWalker(std::vector<std::uint64_t> divisors, std::uint64_t cap)
        : divisors_(std::move(divisors)), cap_(cap)
    {
    }

    // Nondecreasing factor lists with every factor > 1 and product `rest`.
    void run(std::uint64_t rest, std::size_t min_index)
    {
        if (++nodes_ > cap_)
            throw Error(ErrorCode::SearchBudgetExceeded,
                        "factorization search exceeded node cap " + std::to_string(cap_));
        if (rest == 1) {
            out.push_back(Factorization{current_, current_sum_});
            return;
        }
        for (std::size_t i = std::max<std::size_t>(min_index, 1); i < divisors_.size(); ++i) {
            const std::uint64_t d = divisors_[i];
            if (d > rest)
                break;
            if (rest % d != 0)
                continue;
            const std::uint64_t next = rest / d;
            if (next != 1 && next < d)
                continue;
            current_.push_back(d);
            current_sum_ += d;
            run(next, i);
            current_sum_ -= d;
            current_.pop_back();
        }
    }

    std::vector<Factorization> out;

private:
    std::vector<std::uint64_t> divisors_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint64_t> current_;
    std::uint64_t current_sum_ = 0;
};

PartitionMultiset pad_with_ones(const std::vector<std::uint64_t>& factors, std::size_t n)
{
    std::vector<Part> parts(factors.begin(), factors.end());
    parts.resize(n, 1);
    return PartitionMultiset::from_parts(std::move(parts));
}

} // namespace

std::optional<WitnessPair> is_product_admissible(const FactoredInteger& p, SearchOptions opts)
{
    if (p.omega() > kMaxOmega)
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "Omega(p) = " + std::to_string(p.omega()) + " exceeds " + std::to_string(kMaxOmega));
    const auto value = p.value();
    if (!value || *value > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::InvalidArgument, "product search requires p < 2^64");

    FactorizationWalker walker(divisors_of(p), opts.node_cap);
    walker.run(static_cast<std::uint64_t>(*value), 1);

    // Group by sum - count; within a group the two shortest factorizations
    // give the shortest padded pair.
    std::map<std::uint64_t, std::vector<const Factorization*>> groups;
    for (const auto& f : walker.out)
        groups[f.sum - f.factors.size()].push_back(&f);

    struct Best {
        std::size_t n;
        std::uint64_t s;
        const Factorization* a;
        const Factorization* b;
    };
    std::optional<Best> best;
    for (auto& [key, list] : groups) {
        if (list.size() < 2)
            continue;
        std::stable_sort(list.begin(), list.end(), [](const Factorization* x, const Factorization* y) {
            return x->factors.size() < y->factors.size();
        });
        const std::size_t n = std::max(list[0]->factors.size(), list[1]->factors.size());
        const std::uint64_t s = key + n;
        if (!best || std::tie(n, s) < std::tie(best->n, best->s))
            best = Best{n, s, list[0], list[1]};
    }
    if (!best)
        return std::nullopt;
    return WitnessPair::make(pad_with_ones(best->a->factors, best->n), pad_with_ones(best->b->factors, best->n));
}

namespace {

class CVectorSearch {
public:
    CVectorSearch(std::uint64_t q, unsigned j, std::uint64_t cap) : j_(j), cap_(cap), c_(j + 1, 0), weight_(j + 1)
    {
        for (unsigned t = 0; t <= j; ++t) {
            auto qt = checked_pow(q, t);
            if (!qt || *qt > static_cast<u128>(std::numeric_limits<std::int64_t>::max()))
                throw Error(ErrorCode::SearchBudgetExceeded, "q^j too large for exhaustive search");
            weight_[t] = static_cast<i128>(*qt) - 1;
        }
    }

    std::optional<std::vector<std::int64_t>> run()
    {
        if (j_ == 0 || !descend(j_, 2 * static_cast<std::int64_t>(j_), 0, 0))
            return std::nullopt;
        std::int64_t total = 0;
        for (unsigned t = 1; t <= j_; ++t)
            total += c_[t];
        c_[0] = -total;
        return c_;
    }

private:
    // Chooses c_t for t = j..1. `budget` bounds the remaining sum of t*|c_t|,
    // `moment` is sum t*c_t and `value` is sum c_t*(q^t - 1) so far; c_0 is
    // implied by sum c_t = 0 and contributes nothing to either.
    bool descend(unsigned t, std::int64_t budget, std::int64_t moment, i128 value)
    {
        if (++nodes_ > cap_)
            throw Error(ErrorCode::SearchBudgetExceeded,
                        "coefficient search exceeded node cap " + std::to_string(cap_));
        if (t == 0)
            return moment == 0 && value == 0 && nonzero_;
        const std::int64_t limit = budget / t;
        for (std::int64_t c = -limit; c <= limit; ++c) {
            const std::int64_t rest = budget - (c < 0 ? -c : c) * static_cast<std::int64_t>(t);
            const std::int64_t m = moment + c * static_cast<std::int64_t>(t);
            const i128 v = value + static_cast<i128>(c) * weight_[t];
            // Lower terms can shift the moment by at most `rest` and the value
            // by at most rest * (q^(t-1) - 1) / (t-1).
            if ((m < 0 ? -m : m) > rest)
                continue;
            if (t >= 2) {
                const i128 av = v < 0 ? -v : v;
                if (av * (t - 1) > static_cast<i128>(rest) * weight_[t - 1])
                    continue;
            } else if (v != 0) {
                continue;
            }
            const bool was_nonzero = nonzero_;
            nonzero_ = nonzero_ || c != 0;
            c_[t] = c;
            if (descend(t - 1, rest, m, v))
                return true;
            c_[t] = 0;
            nonzero_ = was_nonzero;
        }
        return false;
    }

    unsigned j_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int64_t> c_;
    std::vector<i128> weight_;
    bool nonzero_ = false;
};

} // namespace

std::optional<std::vector<std::int64_t>> find_c_vector(std::uint64_t q, unsigned j, SearchOptions opts)
{
    if (!is_prime(q))
        throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
    return CVectorSearch(q, j, opts.node_cap).run();
}

PrimePowerResult is_prime_power_admissible(std::uint64_t q, unsigned j, PrimePowerMode mode, SearchOptions opts)
{
    if (!is_prime(q))
        throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
    if (j == 0)
        throw Error(ErrorCode::InvalidArgument, "exponent j must be positive");
    PrimePowerResult result;
    if (mode == PrimePowerMode::Theorem) {
        result.admissible = j >= 2 * q + 4;
        if (result.admissible) {
            try {
                result.witness = construct_prime_power_witness(q, j);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ProductOverflow)
                    throw;
            }
        }
        return result;
    }
    auto c = find_c_vector(q, j, opts);
    if (!c)
        return result;
    result.admissible = true;
    ChiCertificate cert{IntPolynomial::univariate(*c), {q}, {j}};
    result.witness = witness_from_chi(cert);
    return result;
}

WitnessPair construct_prime_power_witness(std::uint64_t q, unsigned j)
{
    if (!is_prime(q))
        throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
    const unsigned base = static_cast<unsigned>(2 * q + 4);
    if (j < base)
        throw Error(ErrorCode::InvalidArgument,
                    "need j >= 2q+4 = " + std::to_string(base) + ", got " + std::to_string(j));
    if (!checked_pow(q, j))
        throw Error(ErrorCode::ProductOverflow, std::to_string(q) + "^" + std::to_string(j) + " exceeds 128 bits");

    std::vector<Part> x(2 * q + 1, q);
    x.push_back(prime_power_part(q, 3));
    std::vector<Part> y(q + 2, prime_power_part(q, 2));
    y.insert(y.end(), q, 1);
    if (j > base) {
        const Part pad = prime_power_part(q, j - base);
        x.push_back(pad);
        y.push_back(pad);
    }
    return WitnessPair::make(PartitionMultiset::from_parts(std::move(x)), PartitionMultiset::from_parts(std::move(y)));
}

WitnessPair construct_qu_witness(std::uint64_t q, std::uint64_t u)
{
    if (u == 0)
        throw Error(ErrorCode::InvalidArgument, "u must be positive");
    const auto w = construct_prime_power_witness(q, static_cast<unsigned>(2 * q + 4));
    mul_or_throw(w.triple().p, u);
    const Part extra[] = {u};
    return WitnessPair::make(w.X.with_parts(extra), w.Y.with_parts(extra));
}

bool verify_chi(const ChiCertificate& cert)
{
    const std::size_t k = cert.chi.num_vars();
    if (cert.primes.size() != k || cert.exponents.size() != k)
        return false;
    for (std::size_t l = 0; l < k; ++l) {
        if (!is_prime(cert.primes[l]) || cert.exponents[l] == 0)
            return false;
    }
    if (cert.chi.is_zero())
        return false;

    std::vector<std::int64_t> primes_point(cert.primes.begin(), cert.primes.end());
    const std::vector<std::int64_t> ones(k, 1);
    const auto at_primes = cert.chi.evaluate(primes_point);
    if (!at_primes)
        throw Error(ErrorCode::ProductOverflow, "chi(q) does not fit in 128 bits");
    if (*at_primes != 0 || cert.chi.evaluate(ones) != i128{0})
        return false;
    for (std::size_t l = 0; l < k; ++l) {
        const IntPolynomial d = cert.chi.partial(l);
        if (d.evaluate(ones) != i128{0})
            return false;
        if (d.abs_coefficient_sum() > 2 * static_cast<std::uint64_t>(cert.exponents[l]))
            return false;
    }
    return true;
}

ChiCertificate chi_from_witness(const WitnessPair& w)
{
    if (w.X == w.Y)
        throw Error(ErrorCode::UnequalSignatures, "witness members are identical; chi would be zero");
    const Triple tx = signature(w.X);
    if (tx != signature(w.Y))
        throw Error(ErrorCode::UnequalSignatures, "witness members have different signatures");

    std::map<std::uint64_t, unsigned> total;
    std::vector<FactoredInteger> fx, fy;
    for (Part v : w.X.parts()) {
        fx.push_back(factorize(v));
        for (const auto& [p, e] : fx.back().factors())
            total[p] += e;
    }
    for (Part v : w.Y.parts())
        fy.push_back(factorize(v));

    ChiCertificate cert;
    for (const auto& [p, e] : total) {
        cert.primes.push_back(p);
        cert.exponents.push_back(e);
    }
    if (cert.primes.empty())
        throw Error(ErrorCode::UnequalSignatures, "product 1 admits no distinct witness");
    cert.chi = IntPolynomial(cert.primes.size());
    auto exponents_of = [&](const FactoredInteger& f) {
        Exponents e(cert.primes.size(), 0);
        for (const auto& [p, k] : f.factors()) {
            auto it = std::lower_bound(cert.primes.begin(), cert.primes.end(), p);
            e[static_cast<std::size_t>(it - cert.primes.begin())] = k;
        }
        return e;
    };
    for (const auto& f : fx)
        cert.chi.add_term(exponents_of(f), 1);
    for (const auto& f : fy)
        cert.chi.add_term(exponents_of(f), -1);
    return cert;
}

WitnessPair witness_from_chi(const ChiCertificate& cert)
{
    const std::size_t k = cert.chi.num_vars();
    if (cert.primes.size() != k || cert.exponents.size() != k)
        throw Error(ErrorCode::InvalidArgument, "certificate dimensions disagree");
    if (cert.chi.is_zero())
        throw Error(ErrorCode::InvalidArgument, "chi must be nonzero");

    std::vector<Part> x, y;
    std::vector<std::int64_t> used_x(k, 0), used_y(k, 0);
    for (const auto& [e, c] : cert.chi.terms()) {
        u128 value = 1;
        for (std::size_t l = 0; l < k; ++l)
            value = mul_or_throw(value, prime_power_part(cert.primes[l], e[l]));
        const Part part = part_or_throw(value);
        auto& side = c > 0 ? x : y;
        auto& used = c > 0 ? used_x : used_y;
        const std::int64_t count = c > 0 ? c : -c;
        side.insert(side.end(), static_cast<std::size_t>(count), part);
        for (std::size_t l = 0; l < k; ++l)
            used[l] += count * static_cast<std::int64_t>(e[l]);
    }
    if (x.empty() || y.empty())
        throw Error(ErrorCode::InfeasiblePadding, "chi has coefficients of only one sign");

    std::vector<unsigned> pad_exp(k, 0);
    for (std::size_t l = 0; l < k; ++l) {
        const std::int64_t left = static_cast<std::int64_t>(cert.exponents[l]) - used_x[l];
        if (left < 0 || used_x[l] != used_y[l])
            throw Error(ErrorCode::InfeasiblePadding,
                        "exponent budget of prime " + std::to_string(cert.primes[l]) + " cannot be balanced");
        pad_exp[l] = static_cast<unsigned>(left);
    }
    if (std::any_of(pad_exp.begin(), pad_exp.end(), [](unsigned e) { return e > 0; })) {
        u128 pad = 1;
        for (std::size_t l = 0; l < k; ++l)
            pad = mul_or_throw(pad, prime_power_part(cert.primes[l], pad_exp[l]));
        x.push_back(part_or_throw(pad));
        y.push_back(part_or_throw(pad));
    }

    auto sum_of = [](const std::vector<Part>& v) {
        std::uint64_t s = 0;
        for (Part p : v)
            s = add_or_throw(s, p);
        return s;
    };
    if (x.size() != y.size()) {
        auto& shorter = x.size() < y.size() ? x : y;
        const auto& longer = x.size() < y.size() ? y : x;
        const std::size_t missing = longer.size() - shorter.size();
        if (sum_of(shorter) + missing != sum_of(longer))
            throw Error(ErrorCode::InfeasiblePadding, "lengths differ and padding with ones breaks the sums");
        shorter.insert(shorter.end(), missing, 1);
    }
    if (sum_of(x) != sum_of(y))
        throw Error(ErrorCode::InfeasiblePadding, "sides have different sums");
    return WitnessPair::make(PartitionMultiset::from_parts(std::move(x)), PartitionMultiset::from_parts(std::move(y)));
}

} // namespace eqprod
