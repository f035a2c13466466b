#pragma once

#include <string>
#include <vector>

#include "cdtorus/linalg.hpp"
#include "cdtorus/tensor_algebra.hpp"

namespace cdtorus {

/// Matrix of x -> e_j * x in the standard basis; a signed permutation.
ExactMatrix left_mult_matrix(const AlgebraTable& a, std::size_t j);
/// Matrix of x -> x * e_j.
ExactMatrix right_mult_matrix(const AlgebraTable& a, std::size_t j);

ExactMatrix left_mult_matrix(const AlgebraElement& y);
ExactMatrix right_mult_matrix(const AlgebraElement& x);

/// Matrix of z -> (y * z) * x, i.e. R_x composed after L_y.
ExactMatrix adjoint_map(const AlgebraTable& a, const AlgebraElement& x,
                        const AlgebraElement& y);

/// Integer signed-permutation generators of the componentwise adjoint action
/// on a tensor algebra: L_i from the complex factor, L_u and R_u for every
/// basis unit u of each quaternion/octonion factor, Kroneckered with the
/// identity on the other factors.
struct AdjointGeneratorSet {
    std::size_t ambient_dim = 0;
    std::vector<ExactMatrix> generators;
    std::vector<std::string> labels;
};

AdjointGeneratorSet componentwise_generators(const TensorAlgebra& B);

/// L_u and R_u for all basis units of a single table (the component-level
/// generator set whose closure realizes C_A, H_A, O_A).
std::vector<ExactMatrix> component_adjoint_generators(const AlgebraTable& a);

/// Rank of the algebra generated by the set under span_closure.
std::size_t generated_rank(const AdjointGeneratorSet& gens, const RankOptions& opts = {});

/// Rank of the plain linear span of the single maps A_{e_u, e_v} = R_u L_v,
/// with no closure under composition. Reported next to the closure rank.
std::size_t single_map_span_rank(const AlgebraTable& a);

}  // namespace cdtorus
