#include <doctest.h>

#include <array>

#include "cdtorus/tensor_algebra.hpp"

using namespace cdtorus;

namespace {

// The first, basis-pair-only phase of the alternativity check, restated
// independently. Passing here while is_alternative fails shows the random
// extension carries the information.
bool basis_pairs_alternative(const AlgebraTable& a) {
    for (std::size_t j = 0; j < a.dim; ++j) {
        auto [sjj, ijj] = a.product(j, j);
        for (std::size_t k = 0; k < a.dim; ++k) {
            auto [s1, i1] = a.product(ijj, k);
            auto [sjk, ijk] = a.product(j, k);
            auto [s2, i2] = a.product(j, ijk);
            if (i1 != i2 || sjj * s1 != sjk * s2) return false;
            auto [s3, i3] = a.product(k, ijj);
            auto [skj, ikj] = a.product(k, j);
            auto [s4, i4] = a.product(ikj, j);
            if (i3 != i4 || sjj * s3 != skj * s4) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("tensor algebra dimensions") {
    const std::array<std::array<std::size_t, 4>, 5> cases{{
        {0, 0, 2, 1},
        {1, 0, 8, 4},
        {0, 1, 16, 8},
        {2, 0, 32, 16},
        {1, 1, 64, 32},
    }};
    for (const auto& [p, q, rdim, cdim] : cases) {
        const TensorAlgebra B = build_B(p, q);
        CHECK(B.real_dim() == rdim);
        CHECK(B.complex_dim() == cdim);
        CHECK(B.complex_unit == rdim / 2);
        CHECK(B.components.size() == 1 + p + q);
        CHECK(B.table.name ==
              "B(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
}

TEST_CASE("resource guard") {
    CHECK_THROWS_AS(build_B(4, 0), ResourceLimitError);
    CHECK_THROWS_AS(build_B(1, 2), ResourceLimitError);
    CHECK(build_B(2, 1).real_dim() == 256);
    CHECK(build_B(4, 0, 1024).real_dim() == 512);
}

TEST_CASE("tensor tables satisfy the relaxed invariants") {
    const std::array<std::pair<std::size_t, std::size_t>, 3> cases{
        {{1, 0}, {0, 1}, {1, 1}}};
    for (const auto& [p, q] : cases) {
        const TensorAlgebra B = build_B(p, q);
        CHECK(validate_table(B.table, false) == std::nullopt);
    }
    // (i (x) e1)^2 = (+1) e0: mixed squares reach +e0, so the strict form fails.
    const TensorAlgebra B10 = build_B(1, 0);
    CHECK(B10.table.product(5, 5) == std::pair<int, std::size_t>{1, 0});
    CHECK(validate_table(B10.table, true).has_value());
}

TEST_CASE("tensor product constants factor componentwise") {
    const AlgebraTable c = complex_table();
    const AlgebraTable h = quaternion_table();
    const AlgebraTable t = tensor_product(c, h);
    REQUIRE(t.dim == 8);
    for (std::size_t ja = 0; ja < 2; ++ja)
        for (std::size_t jb = 0; jb < 4; ++jb)
            for (std::size_t ka = 0; ka < 2; ++ka)
                for (std::size_t kb = 0; kb < 4; ++kb) {
                    auto [sa, ia] = c.product(ja, ka);
                    auto [sb, ib] = h.product(jb, kb);
                    CHECK(t.product(ja * 4 + jb, ka * 4 + kb) ==
                          std::pair<int, std::size_t>{sa * sb, ia * 4 + ib});
                }
}

TEST_CASE("the complex digit prefixes the octonion table in B(0,1)") {
    const TensorAlgebra B = build_B(0, 1);
    const AlgebraTable o = octonion_table();
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(B.table.product(j, k) == o.product(j, k));
}

TEST_CASE("tensor basis index arithmetic is xor") {
    const TensorAlgebra B = build_B(1, 1);
    for (std::size_t j = 0; j < B.real_dim(); ++j)
        for (std::size_t k = 0; k < B.real_dim(); ++k)
            CHECK(B.table.product(j, k).second == (j ^ k));
}

TEST_CASE("basis index encode and decode round trip") {
    const TensorAlgebra B = build_B(1, 1);
    CHECK(B.radices == std::vector<std::size_t>{2, 4, 8});
    for (std::size_t idx = 0; idx < B.real_dim(); ++idx) {
        const auto digits = basis_decode(B, idx);
        CHECK(basis_index(B, digits) == idx);
    }
    CHECK(basis_index(B, std::vector<std::size_t>{1, 0, 0}) == B.complex_unit);
    CHECK_THROWS_AS(basis_index(B, std::vector<std::size_t>{1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(basis_index(B, std::vector<std::size_t>{0, 4, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(basis_decode(B, 64), std::invalid_argument);
}

TEST_CASE("C tensor H is associative with center rank 2") {
    const TensorAlgebra B = build_B(1, 0);
    CHECK(is_associative(B.table).associative);
    CHECK(center_rank(B.table) == 2);
}

TEST_CASE("O tensor O fails alternativity only on random elements") {
    const AlgebraTable o = octonion_table();
    const AlgebraTable oo = tensor_product(o, o);
    REQUIRE(oo.dim == 64);
    CHECK(basis_pairs_alternative(oo));
    CHECK_FALSE(is_alternative(oo));
    CHECK_FALSE(is_associative(oo).associative);
}
