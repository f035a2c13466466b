#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdtorus/matrix.hpp"

namespace cdtorus {

/// Finite-dimensional algebra given by signed-permutation structure constants
/// on a monomial basis: e_j * e_k = sign(j,k) * e_{index(j,k)}.
struct AlgebraTable {
    std::size_t dim = 0;
    std::string name;
    std::vector<std::int8_t> sign;     // dim*dim entries in {-1,+1}
    std::vector<std::uint32_t> index;  // dim*dim entries in [0, dim)

    std::pair<int, std::size_t> product(std::size_t j, std::size_t k) const {
        return {sign[j * dim + k], index[j * dim + k]};
    }
    bool operator==(const AlgebraTable&) const = default;
};

/// Checks the structure-constant invariants: two-sided unit, signed-permutation
/// rows and columns, and basis squares landing on +-e0. When
/// `require_imaginary_squares` is set (the division-algebra tables), e_j^2 must
/// be exactly -e0 for j >= 1; tensor-product tables may square to +e0.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> validate_table(const AlgebraTable& a,
                                          bool require_imaginary_squares = true);

/// Element with exact coefficients in a table's basis.
struct AlgebraElement {
    const AlgebraTable* algebra = nullptr;
    std::vector<Rational> coeffs;
};

AlgebraElement make_element(const AlgebraTable& a, std::vector<Rational> coeffs);
AlgebraElement basis_element(const AlgebraTable& a, std::size_t j);

AlgebraTable base_real();
AlgebraTable cd_double(const AlgebraTable& a);

// The doubling chain R -> C -> H -> O under the frozen convention
// (x,y)(z,w) = (xz - conj(w) y, w x + y conj(z)).
AlgebraTable complex_table();
AlgebraTable quaternion_table();
AlgebraTable octonion_table();

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conjugate(const AlgebraElement& x);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
Rational norm(const AlgebraElement& x);

struct AssociativityResult {
    bool associative = true;
    std::optional<std::array<std::size_t, 3>> witness;  // basis triple on failure
};
AssociativityResult is_associative(const AlgebraTable& a);

/// Left/right alternative laws checked on all basis pairs and on a fixed-seed
/// set of random integer elements with coefficients in [-3, 3]. Basis pairs
/// alone do not decide the question (the laws are quadratic in x), hence the
/// random extension.
bool is_alternative(const AlgebraTable& a, std::size_t trials = 64,
                    std::uint64_t seed = kDefaultSeed);

/// Rank of {z : z e_k = e_k z for all k}. Rejects nonassociative tables.
std::size_t center_rank(const AlgebraTable& a);

}  // namespace cdtorus
