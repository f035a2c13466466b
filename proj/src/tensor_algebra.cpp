#include "cdtorus/tensor_algebra.hpp"

namespace cdtorus {

AlgebraTable tensor_product(const AlgebraTable& a, const AlgebraTable& b) {
    AlgebraTable t;
    t.dim = a.dim * b.dim;
    t.name = a.name + "(x)" + b.name;
    t.sign.assign(t.dim * t.dim, 0);
    t.index.assign(t.dim * t.dim, 0);
    for (std::size_t ja = 0; ja < a.dim; ++ja) {
        for (std::size_t jb = 0; jb < b.dim; ++jb) {
            const std::size_t j = ja * b.dim + jb;
            for (std::size_t ka = 0; ka < a.dim; ++ka) {
                for (std::size_t kb = 0; kb < b.dim; ++kb) {
                    const std::size_t k = ka * b.dim + kb;
                    auto [sa, ia] = a.product(ja, ka);
                    auto [sb, ib] = b.product(jb, kb);
                    t.sign[j * t.dim + k] = static_cast<std::int8_t>(sa * sb);
                    t.index[j * t.dim + k] = static_cast<std::uint32_t>(ia * b.dim + ib);
                }
            }
        }
    }
    return t;
}

TensorAlgebra build_B(std::size_t p, std::size_t q, std::size_t max_real_dim) {
    std::size_t dim = 2;
    for (std::size_t i = 0; i < p; ++i) dim *= 4;
    for (std::size_t i = 0; i < q; ++i) dim *= 8;
    if (dim > max_real_dim)
        throw ResourceLimitError("B(" + std::to_string(p) + "," + std::to_string(q) +
                                 ") has real dimension " + std::to_string(dim) +
                                 ", above the limit " + std::to_string(max_real_dim));

    TensorAlgebra B;
    B.p = p;
    B.q = q;
    B.components.push_back(complex_table());
    B.radices.push_back(2);
    for (std::size_t i = 0; i < p; ++i) {
        B.components.push_back(quaternion_table());
        B.radices.push_back(4);
    }
    for (std::size_t i = 0; i < q; ++i) {
        B.components.push_back(octonion_table());
        B.radices.push_back(8);
    }
    B.table = B.components.front();
    for (std::size_t i = 1; i < B.components.size(); ++i)
        B.table = tensor_product(B.table, B.components[i]);
    B.table.name = "B(" + std::to_string(p) + "," + std::to_string(q) + ")";
    B.complex_unit = B.table.dim / 2;
    return B;
}

std::size_t basis_index(const TensorAlgebra& B, std::span<const std::size_t> digits) {
    if (digits.size() != B.radices.size())
        throw std::invalid_argument("digit count does not match tensor factors");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= B.radices[i]) throw std::invalid_argument("digit out of range");
        idx = idx * B.radices[i] + digits[i];
    }
    return idx;
}

std::vector<std::size_t> basis_decode(const TensorAlgebra& B, std::size_t index) {
    if (index >= B.real_dim()) throw std::invalid_argument("basis index out of range");
    std::vector<std::size_t> digits(B.radices.size());
    for (std::size_t i = B.radices.size(); i-- > 0;) {
        digits[i] = index % B.radices[i];
        index /= B.radices[i];
    }
    return digits;
}

}  // namespace cdtorus
