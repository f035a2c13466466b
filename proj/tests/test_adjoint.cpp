#include <doctest.h>

#include <random>

#include "cdtorus/adjoint.hpp"

using namespace cdtorus;

namespace {

AlgebraElement random_element(const AlgebraTable& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Rational> c(a.dim);
    for (auto& v : c) v = d(rng);
    return make_element(a, std::move(c));
}

}  // namespace

TEST_CASE("multiplication operators on C") {
    const AlgebraTable c = complex_table();
    const ExactMatrix j{{0, -1}, {1, 0}};
    CHECK(left_mult_matrix(c, 1) == j);
    CHECK(right_mult_matrix(c, 1) == j);
    CHECK(left_mult_matrix(c, 0) == ExactMatrix::identity(2));
}

TEST_CASE("left and right multiplications act via the table") {
    const AlgebraTable o = octonion_table();
    for (std::size_t u = 0; u < 8; ++u) {
        const ExactMatrix l = left_mult_matrix(o, u);
        const ExactMatrix r = right_mult_matrix(o, u);
        for (std::size_t k = 0; k < 8; ++k) {
            const auto lk = multiply(basis_element(o, u), basis_element(o, k));
            const auto rk = multiply(basis_element(o, k), basis_element(o, u));
            for (std::size_t i = 0; i < 8; ++i) {
                CHECK(l.at(i, k) == lk.coeffs[i]);
                CHECK(r.at(i, k) == rk.coeffs[i]);
            }
        }
        if (u > 0) {
            CHECK(l * l == ExactMatrix::identity(8).scaled(-1));
            CHECK(r * r == ExactMatrix::identity(8).scaled(-1));
        }
    }
}

TEST_CASE("left and right operators commute in H but not in O") {
    const AlgebraTable h = quaternion_table();
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v) {
            const ExactMatrix l = left_mult_matrix(h, u);
            const ExactMatrix r = right_mult_matrix(h, v);
            CHECK(l * r == r * l);
        }
    const AlgebraTable o = octonion_table();
    const ExactMatrix l1 = left_mult_matrix(o, 1);
    const ExactMatrix r2 = right_mult_matrix(o, 2);
    CHECK_FALSE(l1 * r2 == r2 * l1);
}

TEST_CASE("element overloads expand linearly") {
    const AlgebraTable o = octonion_table();
    std::mt19937_64 rng(kDefaultSeed);
    const AlgebraElement y = random_element(o, rng);
    ExactMatrix expect(8, 8);
    for (std::size_t j = 0; j < 8; ++j)
        expect = expect + left_mult_matrix(o, j).scaled(y.coeffs[j]);
    CHECK(left_mult_matrix(y) == expect);
}

TEST_CASE("adjoint_map is right-after-left composition") {
    const AlgebraTable o = octonion_table();
    std::mt19937_64 rng(kDefaultSeed + 1);
    for (int t = 0; t < 8; ++t) {
        const AlgebraElement x = random_element(o, rng);
        const AlgebraElement y = random_element(o, rng);
        const ExactMatrix a = adjoint_map(o, x, y);
        CHECK(a == right_mult_matrix(x) * left_mult_matrix(y));
        for (std::size_t k = 0; k < 8; ++k) {
            const auto image = multiply(multiply(y, basis_element(o, k)), x);
            for (std::size_t i = 0; i < 8; ++i) CHECK(a.at(i, k) == image.coeffs[i]);
        }
    }
    const AlgebraTable h = quaternion_table();
    CHECK_THROWS_AS(
        adjoint_map(h, basis_element(o, 0), basis_element(o, 0)),
        std::invalid_argument);
}

TEST_CASE("component closure ranks realize the isomorphism list") {
    CHECK(span_closure_rank(component_adjoint_generators(complex_table()), 16, {}) == 2);
    CHECK(span_closure_rank(component_adjoint_generators(quaternion_table()), 16, {}) ==
          16);
    CHECK(span_closure_rank(component_adjoint_generators(octonion_table()), 16, {}) ==
          64);
    // Exact elimination agrees with the modular default.
    RankOptions exact{true, {}, kDefaultSeed};
    CHECK(span_closure_rank(component_adjoint_generators(quaternion_table()), 16,
                            exact) == 16);
    CHECK(span_closure_rank(component_adjoint_generators(octonion_table()), 16,
                            exact) == 64);
}

TEST_CASE("single adjoint maps already span the full octonion closure") {
    CHECK(single_map_span_rank(octonion_table()) == 64);
    CHECK(single_map_span_rank(quaternion_table()) == 16);
    CHECK(single_map_span_rank(complex_table()) == 2);
}

TEST_CASE("closure rank does not depend on the verification primes") {
    const auto gens = component_adjoint_generators(octonion_table());
    for (std::uint64_t s : {1ULL, 42ULL, 999999ULL})
        CHECK(span_closure_rank(gens, 16, {false, {}, s}) == 64);
    RankOptions pinned;
    pinned.mod_prime = 1099511627791ULL;
    CHECK(span_closure_rank(gens, 16, pinned) == 64);
}

TEST_CASE("componentwise generator sets") {
    const TensorAlgebra b00 = build_B(0, 0);
    const AdjointGeneratorSet g00 = componentwise_generators(b00);
    CHECK(g00.generators.size() == 2);
    CHECK(g00.labels == std::vector<std::string>{"C:L_e1", "I"});
    CHECK(g00.ambient_dim == 2);

    const TensorAlgebra b10 = build_B(1, 0);
    const AdjointGeneratorSet g10 = componentwise_generators(b10);
    CHECK(g10.generators.size() == 9);
    CHECK(g10.labels[0] == "C:L_e1");
    CHECK(g10.labels[1] == "H1:L_e0");
    CHECK(g10.labels[2] == "H1:R_e0");
    CHECK(g10.labels[8] == "H1:R_e3");
    for (const auto& g : g10.generators) {
        CHECK(g.rows() == 8);
        CHECK(g.is_integer());
        CHECK(as_signed_perm(g).has_value());
    }

    const TensorAlgebra b11 = build_B(1, 1);
    const AdjointGeneratorSet g11 = componentwise_generators(b11);
    CHECK(g11.generators.size() == 25);
    CHECK(g11.labels[9] == "O1:L_e0");
    CHECK(g11.ambient_dim == 64);
}

TEST_CASE("generated ranks for small tensor cases") {
    CHECK(generated_rank(componentwise_generators(build_B(0, 0))) == 2);
    CHECK(generated_rank(componentwise_generators(build_B(1, 0))) == 32);
    CHECK(generated_rank(componentwise_generators(build_B(0, 1))) == 128);
    RankOptions exact{true, {}, kDefaultSeed};
    CHECK(generated_rank(componentwise_generators(build_B(1, 0)), exact) == 32);
}
