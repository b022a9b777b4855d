#pragma once

#include "eqprod/factor.hpp"
#include "eqprod/multiset.hpp"
#include "eqprod/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace eqprod {

/// Two distinct multisets with the same signature.
struct WitnessPair {
    PartitionMultiset X;
    PartitionMultiset Y;

    /// Throws UnequalSignatures when the signatures differ or X == Y.
    static WitnessPair make(PartitionMultiset x, PartitionMultiset y);

    Triple triple() const { return signature(X); }

    friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

/// A polynomial in k variables together with the primes q_l it is evaluated
/// at and the exponent budget j_l of each prime.
struct ChiCertificate {
    IntPolynomial chi{1};
    std::vector<std::uint64_t> primes;
    std::vector<unsigned> exponents;

    friend bool operator==(const ChiCertificate&, const ChiCertificate&) = default;
};

struct SearchOptions {
    /// Upper bound on visited search nodes before SearchBudgetExceeded.
    std::uint64_t node_cap = 20'000'000;
};

/// Largest total prime multiplicity accepted by is_product_admissible.
inline constexpr unsigned kMaxOmega = 40;

/// Searches for two distinct multisets with product p and equal sum and
/// length. Only multisets of divisors > 1 need to be considered: two
/// factorizations A, B of p can be padded with ones to a common length and
/// sum exactly when sum(A) - |A| == sum(B) - |B|. Among all such pairs the
/// one with the smallest length (then the smallest sum) is returned.
///
/// Throws SearchBudgetExceeded when Omega(p) > kMaxOmega or the number of
/// enumerated factorizations exceeds the node cap, and InvalidArgument when
/// p does not fit in 64 bits.
std::optional<WitnessPair> is_product_admissible(const FactoredInteger& p, SearchOptions opts = {});

enum class PrimePowerMode { Theorem, Exhaustive };

struct PrimePowerResult {
    bool admissible = false;
    std::optional<WitnessPair> witness;
};

/// Decides whether q^j is product-admissible. Theorem mode applies the
/// j >= 2q+4 criterion; exhaustive mode searches coefficient vectors
/// directly (see find_c_vector).
PrimePowerResult is_prime_power_admissible(std::uint64_t q, unsigned j, PrimePowerMode mode,
                                           SearchOptions opts = {});

/// Exhaustive search for (c_0, ..., c_j), not all zero, with
///   sum c_t = 0,  sum t*c_t = 0,  sum c_t*q^t = 0,  sum |t*c_t| <= 2j.
/// Returns the first vector found, lowest degree first.
std::optional<std::vector<std::int64_t>> find_c_vector(std::uint64_t q, unsigned j, SearchOptions opts = {});

/// {q^3, q x (2q+1)} vs {q^2 x (q+2), 1 x q}, each with one extra part
/// q^(j-2q-4) when j > 2q+4. Throws InvalidArgument when j < 2q+4 or q is
/// not prime, ProductOverflow when q^j or a part does not fit.
WitnessPair construct_prime_power_witness(std::uint64_t q, unsigned j);

/// The q^(2q+4) witness with a part u appended to both sides.
WitnessPair construct_qu_witness(std::uint64_t q, std::uint64_t u);

/// All four certificate conditions: chi(q) = 0, chi(1) = 0, every partial
/// vanishes at (1, ..., 1), and each partial's absolute coefficient sum is
/// at most 2*j_l. Malformed certificates are rejected. Throws
/// ProductOverflow if chi(q) cannot be evaluated in 128 bits.
bool verify_chi(const ChiCertificate& cert);

/// Coefficient of q^t = (multiplicity in X) - (multiplicity in Y) over the
/// primes of the common product. Throws UnequalSignatures.
ChiCertificate chi_from_witness(const WitnessPair& w);

/// Positive coefficients populate X, negative ones Y; both sides get one
/// padding part prod q_l^(j_l') unless every j_l' is zero. Throws
/// InfeasiblePadding.
WitnessPair witness_from_chi(const ChiCertificate& cert);

} // namespace eqprod
