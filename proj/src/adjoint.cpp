#include "cdtorus/adjoint.hpp"

#include "sparse_elim.hpp"

namespace cdtorus {

ExactMatrix left_mult_matrix(const AlgebraTable& a, std::size_t j) {
    ExactMatrix m(a.dim, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) {
        auto [s, i] = a.product(j, k);
        m.at(i, k) = s;
    }
    return m;
}

ExactMatrix right_mult_matrix(const AlgebraTable& a, std::size_t j) {
    ExactMatrix m(a.dim, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) {
        auto [s, i] = a.product(k, j);
        m.at(i, k) = s;
    }
    return m;
}

ExactMatrix left_mult_matrix(const AlgebraElement& y) {
    const AlgebraTable& a = *y.algebra;
    ExactMatrix m(a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
        if (y.coeffs[j] == 0) continue;
        for (std::size_t k = 0; k < a.dim; ++k) {
            auto [s, i] = a.product(j, k);
            m.at(i, k) += Rational(s) * y.coeffs[j];
        }
    }
    return m;
}

ExactMatrix right_mult_matrix(const AlgebraElement& x) {
    const AlgebraTable& a = *x.algebra;
    ExactMatrix m(a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
        if (x.coeffs[j] == 0) continue;
        for (std::size_t k = 0; k < a.dim; ++k) {
            auto [s, i] = a.product(k, j);
            m.at(i, k) += Rational(s) * x.coeffs[j];
        }
    }
    return m;
}

ExactMatrix adjoint_map(const AlgebraTable& a, const AlgebraElement& x,
                        const AlgebraElement& y) {
    if (x.algebra != &a || y.algebra != &a)
        throw std::invalid_argument("adjoint arguments live in a different algebra");
    return right_mult_matrix(x) * left_mult_matrix(y);
}

AdjointGeneratorSet componentwise_generators(const TensorAlgebra& B) {
    AdjointGeneratorSet out;
    out.ambient_dim = B.real_dim();

    std::size_t h_seen = 0, o_seen = 0;
    for (std::size_t c = 0; c < B.components.size(); ++c) {
        const AlgebraTable& comp = B.components[c];
        std::size_t pre = 1, post = 1;
        for (std::size_t i = 0; i < c; ++i) pre *= B.radices[i];
        for (std::size_t i = c + 1; i < B.radices.size(); ++i) post *= B.radices[i];
        const ExactMatrix ipre = ExactMatrix::identity(pre);
        const ExactMatrix ipost = ExactMatrix::identity(post);
        auto lift = [&](const ExactMatrix& op) {
            return kron(kron(ipre, op), ipost);
        };

        std::string tag;
        if (c == 0) {
            tag = "C";
            out.generators.push_back(lift(left_mult_matrix(comp, 1)));
            out.labels.push_back(tag + ":L_e1");
            continue;
        }
        tag = comp.name == "H" ? "H" + std::to_string(++h_seen)
                               : "O" + std::to_string(++o_seen);
        for (std::size_t u = 0; u < comp.dim; ++u) {
            out.generators.push_back(lift(left_mult_matrix(comp, u)));
            out.labels.push_back(tag + ":L_e" + std::to_string(u));
            out.generators.push_back(lift(right_mult_matrix(comp, u)));
            out.labels.push_back(tag + ":R_e" + std::to_string(u));
        }
    }

    if (B.p == 0 && B.q == 0) {
        out.generators.push_back(ExactMatrix::identity(out.ambient_dim));
        out.labels.push_back("I");
    }
    return out;
}

std::vector<ExactMatrix> component_adjoint_generators(const AlgebraTable& a) {
    std::vector<ExactMatrix> gens;
    gens.reserve(2 * a.dim);
    for (std::size_t u = 0; u < a.dim; ++u) {
        gens.push_back(left_mult_matrix(a, u));
        gens.push_back(right_mult_matrix(a, u));
    }
    return gens;
}

std::size_t generated_rank(const AdjointGeneratorSet& gens, const RankOptions& opts) {
    return span_closure_rank(gens.generators, 16, opts);
}

std::size_t single_map_span_rank(const AlgebraTable& a) {
    detail::SparseEliminator<detail::RationalField> elim(detail::RationalField{},
                                                         a.dim * a.dim);
    for (std::size_t u = 0; u < a.dim; ++u) {
        const ExactMatrix ru = right_mult_matrix(a, u);
        for (std::size_t v = 0; v < a.dim; ++v) {
            const ExactMatrix m = ru * left_mult_matrix(a, v);
            detail::SparseVec<Rational> vec;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (m.at(r, c) != 0)
                        vec.emplace_back(static_cast<std::uint32_t>(r * m.cols() + c),
                                         m.at(r, c));
                }
            }
            elim.insert(std::move(vec));
        }
    }
    return elim.rank();
}

}  // namespace cdtorus
