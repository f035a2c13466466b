#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cdtorus/adjoint.hpp"

namespace cdtorus {

/// The complex torus attached to a tensor algebra: the standard integer span
/// of the basis is the period lattice, J is left multiplication by the complex
/// unit, and the adjoint generators act as lattice-preserving endomorphisms.
struct TorusModel {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t real_dim = 0;
    std::size_t complex_dim = 0;
    TensorAlgebra algebra;
    ExactMatrix J;
    AdjointGeneratorSet adjoint_gens;
};

TorusModel make_torus(std::size_t p, std::size_t q,
                      std::size_t max_real_dim = kDefaultMaxRealDim);

/// Left multiplication by the complex unit on the full tensor table; J^2 = -I.
ExactMatrix complex_structure(const TensorAlgebra& B);

/// Rank of {M : MJ = JM} via the nullity of the commutator system. Because the
/// period lattice is the standard integer span, this is the full rank of the
/// endomorphism ring.
std::size_t commutant_rank(const ExactMatrix& J, const RankOptions& opts = {});

/// Rank of the closure of the adjoint generator images. Every image is first
/// checked to be an endomorphism candidate (integer entries, commutes with J);
/// a failure is surfaced as an exception, not swallowed.
std::size_t rho_image_rank(const TorusModel& T, const RankOptions& opts = {});

/// Pairs (k, k') with J e_k = +e_{k'}, partitioning the basis into
/// complex_dim J-stable planes, each carrying the lattice Z e_k + Z J e_k.
std::vector<std::pair<std::size_t, std::size_t>> splitting_pairs(const TorusModel& T);

struct OrderCensus {
    std::map<std::size_t, std::size_t> histogram;  // order -> count
    std::size_t unbounded = 0;                     // entries with no order <= max
    std::vector<std::string> order_four_labels;
};

/// Multiplicative orders of all adjoint generator images and of J, J^2, J^3.
OrderCensus order_census(const TorusModel& T, std::size_t max_order = 8);

/// Complex matrix with exact rational real and imaginary parts.
struct ComplexExactMatrix {
    ExactMatrix re, im;

    std::size_t dim() const { return re.rows(); }
    static ComplexExactMatrix identity(std::size_t n);
    ComplexExactMatrix operator*(const ComplexExactMatrix& rhs) const;
    bool operator==(const ComplexExactMatrix&) const = default;
};

/// The action of an endomorphism candidate on the tangent space, read off in
/// the complex basis given by the splitting pairs. Rejects M not commuting
/// with J.
ComplexExactMatrix analytic_representation(const TorusModel& T, const ExactMatrix& M);

}  // namespace cdtorus
