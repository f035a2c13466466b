// Acceptance suite: one line per criterion, exit status = number of failures.
// Every expected value is exact except the pinned floating tolerances in
// criterion 7.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cdtorus/elliptic.hpp"
#include "cdtorus/torus.hpp"
#include "cdtorus/verify.hpp"

using namespace cdtorus;

namespace {

const std::vector<std::pair<std::size_t, std::size_t>> kCases = {
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("CDTORUS_SEED");
    if (!raw) return kDefaultSeed;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        return kDefaultSeed;
    }
}

int failures = 0;

void outcome(int criterion, const std::string& title, bool pass,
             const std::string& detail) {
    std::cout << "[" << (pass ? "PASS" : "FAIL") << "] " << criterion << ". " << title
              << ": " << detail << "\n";
    if (!pass) ++failures;
}

template <class Body>
void criterion(int number, const std::string& title, Body&& body) {
    try {
        auto [pass, detail] = body();
        outcome(number, title, pass, detail);
    } catch (const std::exception& e) {
        outcome(number, title, false, std::string("exception: ") + e.what());
    }
}

AlgebraElement random_element(const AlgebraTable& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Rational> c(a.dim);
    for (auto& v : c) v = d(rng);
    return make_element(a, std::move(c));
}

}  // namespace

int main() {
    const std::uint64_t seed = seed_from_env();
    const RankOptions rank_opts{false, {}, seed};
    std::cout << "acceptance suite, seed " << seed << "\n";

    criterion(1, "dimension formula", [] {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, q] : kCases) {
            const TensorAlgebra B = build_B(p, q);
            const std::size_t expected = std::size_t{1} << (2 * p + 3 * q);
            ok = ok && B.complex_dim() == expected &&
                 B.real_dim() == 2 * expected;
            os << "(" << p << "," << q << "):" << B.complex_dim() << " ";
        }
        return std::pair{ok, os.str()};
    });

    criterion(2, "component operator-algebra ranks", [] {
        const std::size_t rc =
            span_closure_rank(component_adjoint_generators(complex_table()), 16,
                              {true, {}, kDefaultSeed});
        const std::size_t rh =
            span_closure_rank(component_adjoint_generators(quaternion_table()), 16,
                              {true, {}, kDefaultSeed});
        const std::size_t ro =
            span_closure_rank(component_adjoint_generators(octonion_table()), 16,
                              {true, {}, kDefaultSeed});
        std::ostringstream os;
        os << "C:" << rc << " H:" << rh << " O:" << ro;
        return std::pair{rc == 2 && rh == 16 && ro == 64, os.str()};
    });

    criterion(3, "C tensor H is an associative algebra with center rank 2", [] {
        const TensorAlgebra B = build_B(1, 0);
        const bool assoc = is_associative(B.table).associative;
        const std::size_t center = assoc ? center_rank(B.table) : 0;
        std::ostringstream os;
        os << "dim:" << B.real_dim() << " associative:" << (assoc ? "yes" : "no")
           << " center:" << center;
        return std::pair{B.real_dim() == 8 && assoc && center == 2, os.str()};
    });

    criterion(4, "full-rank endomorphism ring", [&] {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, q] : kCases) {
            const TorusModel T = make_torus(p, q);
            const std::size_t expected = std::size_t{1} << (4 * p + 6 * q + 1);
            const std::size_t rho = rho_image_rank(T, rank_opts);
            const std::size_t comm = commutant_rank(T.J, rank_opts);
            ok = ok && rho == expected && comm == expected;
            os << "(" << p << "," << q << "):" << rho << "/" << comm << " ";
        }
        return std::pair{ok, os.str()};
    });

    criterion(5, "lattice splitting into J-planes", [] {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, q] : kCases) {
            const TorusModel T = make_torus(p, q);
            const auto pairs = splitting_pairs(T);
            const std::size_t expected = std::size_t{1} << (2 * p + 3 * q);
            ok = ok && pairs.size() == expected;
            os << "(" << p << "," << q << "):" << pairs.size() << " ";
        }
        return std::pair{ok, os.str()};
    });

    criterion(6, "order-4 automorphism and finite census", [] {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, q] : kCases) {
            const TorusModel T = make_torus(p, q);
            const OrderCensus census = order_census(T, 8);
            bool j_found = false;
            for (const auto& label : census.order_four_labels)
                j_found |= label == "J";
            bool finite = census.unbounded == 0;
            for (const auto& [ord, count] : census.histogram)
                finite = finite && (ord == 1 || ord == 2 || ord == 4);
            ok = ok && j_found && finite;
            os << "(" << p << "," << q << "):" << (j_found && finite ? "ok" : "BAD")
               << " ";
        }
        return std::pair{ok, os.str()};
    });

    criterion(7, "j-invariants of the split factors", [] {
        const LatticeBasis2D square{{1, 0}, {0, 1}};
        const LatticeBasis2D hex{{1, 0}, std::polar(1.0, std::acos(-1.0) / 3)};
        const LatticeBasis2D tall{{1, 0}, {0, 2}};
        const std::complex<double> j_square = j_invariant(square, 100);
        const std::complex<double> j_hex = j_invariant(hex, 100);
        const std::complex<double> j_tall = j_invariant(tall, 200);
        const double err_square = std::abs(j_square - 1728.0) / 1728.0;
        const double err_hex = std::abs(j_hex);
        const double err_tall = std::abs(j_tall - 287496.0) / 287496.0;
        const bool ok = err_square < 1e-6 && err_hex < 1e-6 && err_tall < 1e-3;
        std::ostringstream os;
        os << "square:" << err_square << " hex:" << err_hex << " tall:" << err_tall;
        return std::pair{ok, os.str()};
    });

    criterion(8, "seeded property suites", [&] {
        std::mt19937_64 rng(seed);
        std::ostringstream os;
        bool ok = true;

        bool norms = true;
        for (const AlgebraTable& t : {base_real(), complex_table(),
                                      quaternion_table(), octonion_table()}) {
            for (int trial = 0; trial < 16; ++trial) {
                const AlgebraElement x = random_element(t, rng);
                const AlgebraElement y = random_element(t, rng);
                norms = norms && norm(multiply(x, y)) == norm(x) * norm(y);
            }
        }
        ok = ok && norms;
        os << "norm-composition:" << (norms ? "ok" : "BAD");

        const bool alt = is_alternative(octonion_table(), 64, seed);
        ok = ok && alt;
        os << " alternativity:" << (alt ? "ok" : "BAD");

        const auto assoc = is_associative(octonion_table());
        const bool witness = !assoc.associative && assoc.witness.has_value();
        ok = ok && witness;
        os << " nonassoc-witness:" << (witness ? "ok" : "BAD");

        bool conj_anti = true;
        for (const AlgebraTable& t : {quaternion_table(), octonion_table()}) {
            for (int trial = 0; trial < 16; ++trial) {
                const AlgebraElement x = random_element(t, rng);
                const AlgebraElement y = random_element(t, rng);
                conj_anti = conj_anti &&
                            conjugate(multiply(x, y)).coeffs ==
                                multiply(conjugate(y), conjugate(x)).coeffs;
            }
        }
        ok = ok && conj_anti;
        os << " conjugation:" << (conj_anti ? "ok" : "BAD");

        const TorusModel T = make_torus(1, 0);
        std::uniform_int_distribution<std::size_t> pick(
            0, T.adjoint_gens.generators.size() - 1);
        bool tau_mult = true;
        for (int trial = 0; trial < 8; ++trial) {
            const ExactMatrix& a = T.adjoint_gens.generators[pick(rng)];
            const ExactMatrix& b = T.adjoint_gens.generators[pick(rng)];
            tau_mult = tau_mult &&
                       analytic_representation(T, a * b) ==
                           analytic_representation(T, a) * analytic_representation(T, b);
        }
        ok = ok && tau_mult;
        os << " tau-multiplicative:" << (tau_mult ? "ok" : "BAD");

        bool integral = true;
        for (auto [p, q] : kCases) {
            const TorusModel Tc = make_torus(p, q);
            for (const auto& g : Tc.adjoint_gens.generators)
                integral = integral && g.is_integer();
        }
        ok = ok && integral;
        os << " lattice-preservation:" << (integral ? "ok" : "BAD");

        return std::pair{ok, os.str()};
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << " criteria failed\n";
    }
    return failures;
}
