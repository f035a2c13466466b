#include "cdtorus/cayley_dickson.hpp"

#include <random>

#include "cdtorus/adjoint.hpp"
#include "cdtorus/linalg.hpp"

namespace cdtorus {
namespace {

int conj_sign(std::size_t k) { return k == 0 ? 1 : -1; }

std::string doubled_name(const std::string& base, std::size_t new_dim) {
    if (base == "R") return "C";
    if (base == "C") return "H";
    if (base == "H") return "O";
    return "CD" + std::to_string(new_dim);
}

AlgebraElement random_element(const AlgebraTable& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Rational> c(a.dim);
    for (auto& v : c) v = coeff(rng);
    return make_element(a, std::move(c));
}

bool elements_equal(const AlgebraElement& x, const AlgebraElement& y) {
    return x.coeffs == y.coeffs;
}

}  // namespace

std::optional<std::string> validate_table(const AlgebraTable& a,
                                          bool require_imaginary_squares) {
    const std::size_t n = a.dim;
    if (n == 0) return "table has dimension zero";
    if (a.sign.size() != n * n || a.index.size() != n * n)
        return "structure constant arrays do not match dim*dim";
    for (std::size_t i = 0; i < n * n; ++i) {
        if (a.sign[i] != 1 && a.sign[i] != -1)
            return "sign entry outside {-1,+1} at flat index " + std::to_string(i);
        if (a.index[i] >= n)
            return "basis index out of range at flat index " + std::to_string(i);
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (a.product(0, k) != std::pair<int, std::size_t>{1, k})
            return "e0 is not a left unit at column " + std::to_string(k);
        if (a.product(k, 0) != std::pair<int, std::size_t>{1, k})
            return "e0 is not a right unit at row " + std::to_string(k);
    }
    std::vector<bool> seen(n);
    for (std::size_t j = 0; j < n; ++j) {
        seen.assign(n, false);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = a.index[j * n + k];
            if (seen[i]) return "row " + std::to_string(j) + " is not a permutation";
            seen[i] = true;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        seen.assign(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t i = a.index[j * n + k];
            if (seen[i]) return "column " + std::to_string(k) + " is not a permutation";
            seen[i] = true;
        }
    }
    for (std::size_t j = 1; j < n; ++j) {
        auto [s, i] = a.product(j, j);
        if (i != 0)
            return "e" + std::to_string(j) + " squared is not a multiple of e0";
        if (require_imaginary_squares && s != -1)
            return "e" + std::to_string(j) + " squared is not -e0";
    }
    return std::nullopt;
}

AlgebraElement make_element(const AlgebraTable& a, std::vector<Rational> coeffs) {
    if (coeffs.size() != a.dim)
        throw std::invalid_argument("coefficient count does not match algebra dim");
    return AlgebraElement{&a, std::move(coeffs)};
}

AlgebraElement basis_element(const AlgebraTable& a, std::size_t j) {
    if (j >= a.dim) throw std::invalid_argument("basis index out of range");
    std::vector<Rational> c(a.dim, Rational(0));
    c[j] = 1;
    return AlgebraElement{&a, std::move(c)};
}

AlgebraTable base_real() {
    AlgebraTable t;
    t.dim = 1;
    t.name = "R";
    t.sign = {1};
    t.index = {0};
    return t;
}

AlgebraTable cd_double(const AlgebraTable& a) {
    const std::size_t n = a.dim;
    AlgebraTable d;
    d.dim = 2 * n;
    d.name = doubled_name(a.name, d.dim);
    d.sign.assign(d.dim * d.dim, 0);
    d.index.assign(d.dim * d.dim, 0);
    auto set = [&](std::size_t j, std::size_t k, int s, std::size_t i) {
        d.sign[j * d.dim + k] = static_cast<std::int8_t>(s);
        d.index[j * d.dim + k] = static_cast<std::uint32_t>(i);
    };
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            auto [s, i] = a.product(j, k);
            auto [s2, i2] = a.product(k, j);
            set(j, k, s, i);                                  // (x,0)(z,0) = (xz,0)
            set(j, n + k, s2, n + i2);                        // (x,0)(0,w) = (0,wx)
            set(n + j, k, conj_sign(k) * s, n + i);           // (0,y)(z,0) = (0,y conj z)
            set(n + j, n + k, -conj_sign(k) * s2, i2);        // (0,y)(0,w) = (-conj(w) y, 0)
        }
    }
    return d;
}

AlgebraTable complex_table() { return cd_double(base_real()); }
AlgebraTable quaternion_table() { return cd_double(complex_table()); }
AlgebraTable octonion_table() { return cd_double(quaternion_table()); }

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra != y.algebra)
        throw std::invalid_argument("elements live in different algebras");
    const AlgebraTable& a = *x.algebra;
    std::vector<Rational> out(a.dim, Rational(0));
    for (std::size_t j = 0; j < a.dim; ++j) {
        if (x.coeffs[j] == 0) continue;
        for (std::size_t k = 0; k < a.dim; ++k) {
            if (y.coeffs[k] == 0) continue;
            auto [s, i] = a.product(j, k);
            out[i] += Rational(s) * x.coeffs[j] * y.coeffs[k];
        }
    }
    return AlgebraElement{&a, std::move(out)};
}

AlgebraElement conjugate(const AlgebraElement& x) {
    AlgebraElement out = x;
    for (std::size_t j = 1; j < out.coeffs.size(); ++j) out.coeffs[j] = -out.coeffs[j];
    return out;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra != y.algebra)
        throw std::invalid_argument("elements live in different algebras");
    AlgebraElement out = x;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += y.coeffs[j];
    return out;
}

Rational norm(const AlgebraElement& x) {
    Rational n = 0;
    for (const auto& c : x.coeffs) n += c * c;
    return n;
}

AssociativityResult is_associative(const AlgebraTable& a) {
    for (std::size_t j = 0; j < a.dim; ++j) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            auto [sjk, ijk] = a.product(j, k);
            for (std::size_t l = 0; l < a.dim; ++l) {
                auto [s1, i1] = a.product(ijk, l);
                auto [skl, ikl] = a.product(k, l);
                auto [s2, i2] = a.product(j, ikl);
                if (i1 != i2 || sjk * s1 != skl * s2)
                    return {false, std::array<std::size_t, 3>{j, k, l}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_alternative(const AlgebraTable& a, std::size_t trials, std::uint64_t seed) {
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
    // The laws are quadratic in x, so basis pairs alone prove nothing about
    // mixed terms; extend over random integer elements.
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        AlgebraElement x = random_element(a, rng);
        AlgebraElement y = random_element(a, rng);
        AlgebraElement xx = multiply(x, x);
        if (!elements_equal(multiply(xx, y), multiply(x, multiply(x, y)))) return false;
        if (!elements_equal(multiply(y, xx), multiply(multiply(y, x), x))) return false;
    }
    return true;
}

std::size_t center_rank(const AlgebraTable& a) {
    if (!is_associative(a).associative)
        throw std::invalid_argument("center_rank requires an associative table");
    ExactMatrix system(a.dim * a.dim, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) {
        const ExactMatrix d = left_mult_matrix(a, k) - right_mult_matrix(a, k);
        for (std::size_t r = 0; r < a.dim; ++r) {
            for (std::size_t c = 0; c < a.dim; ++c) system.at(k * a.dim + r, c) = d.at(r, c);
        }
    }
    return a.dim - rank(system);
}

}  // namespace cdtorus
