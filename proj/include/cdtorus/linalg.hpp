#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cdtorus/matrix.hpp"

namespace cdtorus {

/// Thrown when span_closure has not stabilized within its round budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Controls how large rank computations are carried out. The default is the
/// two-prime modular fast path with an exact fallback on disagreement; exact
/// Bareiss/Gauss elimination is always available and is the reference path.
struct RankOptions {
    bool force_exact = false;
    std::optional<std::uint64_t> mod_prime;  // pin the first prime
    std::uint64_t seed = kDefaultSeed;       // drives prime selection
};

/// Reduced-echelon basis of a linear span of flattened matrices.
struct SpanBasis {
    std::size_t ambient_dim = 0;
    std::vector<std::size_t> pivot_cols;          // ascending, one per row
    std::vector<std::vector<Rational>> rows;      // reduced echelon, exact

    std::size_t rank() const { return rows.size(); }
};

/// Exact rank over the rationals. Fraction-free Bareiss elimination on integer
/// input, rational Gauss elimination otherwise.
std::size_t rank(const ExactMatrix& m);

/// Rank with the modular escape hatch enabled (used by the large closure and
/// commutant computations). Two independent primes > 2^40 must agree, else the
/// computation falls back to exact elimination.
std::size_t rank_certified(const ExactMatrix& m, const RankOptions& opts);

/// Basis of the right nullspace over the rationals; size == cols - rank(m).
std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m);

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Smallest linear span containing the generators and closed under products
/// basis x generator (both orders). Exact; throws BudgetError when the rank
/// has not stabilized after max_products breadth-first rounds.
SpanBasis span_closure(const std::vector<ExactMatrix>& generators,
                       std::size_t max_products = 16);

/// Rank of span_closure with the modular fast path; same stabilization budget.
std::size_t span_closure_rank(const std::vector<ExactMatrix>& generators,
                              std::size_t max_products, const RankOptions& opts);

/// Least k <= max_order with m^k == I, or nullopt.
std::optional<std::size_t> matrix_order(const ExactMatrix& m, std::size_t max_order);

/// Deterministic prime in (2^40, 2^41), selected by `index` under `seed` and
/// distinct from `avoid`. Exposed for the CLI's --mod-prime handling and tests.
std::uint64_t select_verification_prime(std::uint64_t seed, unsigned index,
                                        std::uint64_t avoid = 0);
bool is_prime_u64(std::uint64_t n);

}  // namespace cdtorus
