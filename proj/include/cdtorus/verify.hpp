#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdtorus/cayley_dickson.hpp"
#include "cdtorus/tensor_algebra.hpp"

namespace cdtorus {

inline constexpr const char* kVersion = "0.1.0";

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::int64_t millis = 0;
};

struct VerificationReport {
    std::size_t p = 0;
    std::size_t q = 0;
    std::string version;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
    bool exact = false;
    std::optional<std::uint64_t> mod_prime;
    std::size_t max_real_dim = kDefaultMaxRealDim;
    std::uint64_t seed = kDefaultSeed;
    int j_truncation = 100;
};

/// Runs the full verification pipeline for one (p, q): dimension formula,
/// table invariants, adjoint generator integrity, generated/commutant/rho
/// ranks and their equality, lattice splitting, order census, analytic
/// representation spot checks, and the j-invariant of the square lattice.
VerificationReport run_verification(std::size_t p, std::size_t q,
                                    const VerifyOptions& opts = {});

/// JSON with stable key ordering; millis fields are dropped when
/// include_millis is false so reports become byte-reproducible.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_millis);

/// CSV dump of a structure-constant table: header row of column indices,
/// cells "+l" / "-l".
std::string table_csv(const AlgebraTable& a);

/// Parses "R", "C", "H", "O" or "B(p,q)" into a table.
AlgebraTable table_from_spec(const std::string& spec,
                             std::size_t max_real_dim = kDefaultMaxRealDim);

}  // namespace cdtorus
