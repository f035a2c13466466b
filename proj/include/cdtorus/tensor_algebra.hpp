#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "cdtorus/cayley_dickson.hpp"

namespace cdtorus {

/// Thrown when a requested construction exceeds the configured dimension guard.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxRealDim = 256;  // 2p+3q <= 7

/// The tensor algebra C (x) H^p (x) O^q on a mixed-radix monomial basis,
/// complex factor most significant. Real dimension 2 * 4^p * 8^q.
struct TensorAlgebra {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<AlgebraTable> components;  // C, then p copies of H, then q of O
    AlgebraTable table;
    std::size_t complex_unit = 0;       // basis index of i (x) 1 (x) ... (x) 1
    std::vector<std::size_t> radices;   // {2, 4 x p, 8 x q}

    std::size_t real_dim() const { return table.dim; }
    std::size_t complex_dim() const { return table.dim / 2; }
};

/// Componentwise tensor product of structure-constant tables; signs multiply.
/// The left factor becomes the more significant digit.
AlgebraTable tensor_product(const AlgebraTable& a, const AlgebraTable& b);

TensorAlgebra build_B(std::size_t p, std::size_t q,
                      std::size_t max_real_dim = kDefaultMaxRealDim);

std::size_t basis_index(const TensorAlgebra& B, std::span<const std::size_t> digits);
std::vector<std::size_t> basis_decode(const TensorAlgebra& B, std::size_t index);

}  // namespace cdtorus
