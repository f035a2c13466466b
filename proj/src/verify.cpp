#include "cdtorus/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cdtorus/elliptic.hpp"
#include "cdtorus/torus.hpp"

namespace cdtorus {
namespace {

using Clock = std::chrono::steady_clock;

struct CheckOutcome {
    std::string actual;
    bool pass = false;
};

template <class Body>
void run_check(VerificationReport& rep, std::string name, std::string expected,
               Body&& body) {
    CheckResult res;
    res.name = std::move(name);
    res.expected = std::move(expected);
    const auto start = Clock::now();
    try {
        CheckOutcome out = body();
        res.actual = std::move(out.actual);
        res.pass = out.pass;
    } catch (const std::exception& e) {
        res.actual = std::string("error: ") + e.what();
        res.pass = false;
    }
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                       start)
                     .count();
    rep.checks.push_back(std::move(res));
}

std::string format_complex(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(10) << z.real();
    if (std::abs(z.imag()) > 1e-9) {
        os << (z.imag() < 0 ? "-" : "+") << std::setprecision(10)
           << std::abs(z.imag()) << "i";
    }
    return os.str();
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

VerificationReport run_verification(std::size_t p, std::size_t q,
                                    const VerifyOptions& opts) {
    VerificationReport rep;
    rep.p = p;
    rep.q = q;
    rep.version = kVersion;

    const TorusModel T = make_torus(p, q, opts.max_real_dim);
    const RankOptions rank_opts{opts.exact, opts.mod_prime, opts.seed};
    const std::size_t expected_cdim = std::size_t{1} << (2 * p + 3 * q);
    const std::size_t expected_rank = std::size_t{1} << (4 * p + 6 * q + 1);

    run_check(rep, "complex_dimension", std::to_string(expected_cdim), [&] {
        return CheckOutcome{std::to_string(T.complex_dim),
                            T.complex_dim == expected_cdim &&
                                T.real_dim == 2 * T.complex_dim};
    });

    run_check(rep, "table_invariants", "ok", [&] {
        if (auto err = validate_table(T.algebra.table, false))
            return CheckOutcome{*err, false};
        for (const auto& comp : T.algebra.components) {
            if (auto err = validate_table(comp, true))
                return CheckOutcome{comp.name + ": " + *err, false};
        }
        return CheckOutcome{"ok", true};
    });

    run_check(rep, "adjoint_generator_integrity", "ok", [&] {
        const auto jp = as_signed_perm(T.J);
        for (std::size_t i = 0; i < T.adjoint_gens.generators.size(); ++i) {
            const ExactMatrix& g = T.adjoint_gens.generators[i];
            const std::string& label = T.adjoint_gens.labels[i];
            if (!g.is_integer()) return CheckOutcome{label + " not integral", false};
            auto gp = as_signed_perm(g);
            if (!gp) return CheckOutcome{label + " not a signed permutation", false};
            if (!jp || !(compose(*gp, *jp) == compose(*jp, *gp)))
                return CheckOutcome{label + " does not commute with J", false};
        }
        return CheckOutcome{"ok", true};
    });

    std::optional<std::size_t> generated, commutant, rho;

    run_check(rep, "generated_rank", std::to_string(expected_rank), [&] {
        generated = generated_rank(T.adjoint_gens, rank_opts);
        return CheckOutcome{std::to_string(*generated), *generated == expected_rank};
    });

    run_check(rep, "commutant_rank", std::to_string(expected_rank), [&] {
        commutant = commutant_rank(T.J, rank_opts);
        return CheckOutcome{std::to_string(*commutant), *commutant == expected_rank};
    });

    run_check(rep, "rho_image_rank", std::to_string(expected_rank), [&] {
        rho = rho_image_rank(T, rank_opts);
        return CheckOutcome{std::to_string(*rho), *rho == expected_rank};
    });

    run_check(rep, "full_rank_equality",
              "generated == commutant == rho == " + std::to_string(expected_rank),
              [&] {
                  if (!generated || !commutant || !rho)
                      return CheckOutcome{"rank checks incomplete", false};
                  std::ostringstream os;
                  os << *generated << " / " << *commutant << " / " << *rho;
                  const bool ok = *generated == expected_rank &&
                                  *commutant == expected_rank && *rho == expected_rank;
                  return CheckOutcome{os.str(), ok};
              });

    run_check(rep, "splitting_pairs", std::to_string(expected_cdim) + " planes", [&] {
        const auto pairs = splitting_pairs(T);
        return CheckOutcome{std::to_string(pairs.size()) + " planes",
                            pairs.size() == expected_cdim};
    });

    run_check(rep, "order_census", "orders within {1,2,4}, J of order 4", [&] {
        const OrderCensus census = order_census(T, 8);
        bool ok = census.unbounded == 0;
        for (const auto& [ord, count] : census.histogram) {
            if (ord != 1 && ord != 2 && ord != 4) ok = false;
        }
        bool j_found = false;
        for (const auto& label : census.order_four_labels) j_found |= label == "J";
        ok = ok && j_found;
        std::ostringstream os;
        for (const auto& [ord, count] : census.histogram)
            os << ord << ":" << count << " ";
        os << "unbounded:" << census.unbounded;
        return CheckOutcome{os.str(), ok};
    });

    run_check(rep, "analytic_representation", "ok", [&] {
        const std::size_t m = T.complex_dim;
        const auto tau_i = analytic_representation(T, ExactMatrix::identity(T.real_dim));
        if (!(tau_i == ComplexExactMatrix::identity(m)))
            return CheckOutcome{"tau(I) != I", false};
        const auto tau_j = analytic_representation(T, T.J);
        ComplexExactMatrix i_identity{ExactMatrix(m, m), ExactMatrix::identity(m)};
        if (!(tau_j == i_identity)) return CheckOutcome{"tau(J) != i*I", false};
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(
            0, T.adjoint_gens.generators.size() - 1);
        for (int t = 0; t < 4; ++t) {
            const ExactMatrix& a = T.adjoint_gens.generators[pick(rng)];
            const ExactMatrix& b = T.adjoint_gens.generators[pick(rng)];
            if (!(analytic_representation(T, a * b) ==
                  analytic_representation(T, a) * analytic_representation(T, b)))
                return CheckOutcome{"tau not multiplicative", false};
        }
        return CheckOutcome{"ok", true};
    });

    run_check(rep, "j_invariant", "1728", [&] {
        const LatticeBasis2D zi{{1, 0}, {0, 1}};
        const std::complex<double> j = j_invariant(zi, opts.j_truncation);
        const bool ok = std::abs(j - 1728.0) / 1728.0 < 1e-6;
        return CheckOutcome{format_complex(j), ok};
    });

    return rep;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_millis) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json jrep;
        jrep["p"] = rep.p;
        jrep["q"] = rep.q;
        jrep["version"] = rep.version;
        jrep["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            jc["pass"] = c.pass;
            if (include_millis) jc["millis"] = c.millis;
            jrep["checks"].push_back(std::move(jc));
        }
        arr.push_back(std::move(jrep));
    }
    return arr.dump(2) + "\n";
}

std::string table_csv(const AlgebraTable& a) {
    std::ostringstream os;
    for (std::size_t k = 0; k < a.dim; ++k) os << (k ? "," : "") << k;
    os << "\n";
    for (std::size_t j = 0; j < a.dim; ++j) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            auto [s, i] = a.product(j, k);
            os << (k ? "," : "") << (s > 0 ? "+" : "-") << i;
        }
        os << "\n";
    }
    return os.str();
}

AlgebraTable table_from_spec(const std::string& spec, std::size_t max_real_dim) {
    if (spec == "R") return base_real();
    if (spec == "C") return complex_table();
    if (spec == "H") return quaternion_table();
    if (spec == "O") return octonion_table();
    unsigned p = 0, q = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "B(%u,%u%c", &p, &q, &tail) == 3 && tail == ')' &&
        spec.back() == ')')
        return build_B(p, q, max_real_dim).table;
    throw std::invalid_argument("unknown algebra spec: " + spec);
}

}  // namespace cdtorus
