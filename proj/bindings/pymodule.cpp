#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdtorus/elliptic.hpp"
#include "cdtorus/torus.hpp"
#include "cdtorus/verify.hpp"

namespace py = pybind11;
using namespace cdtorus;

namespace {

VerifyOptions make_opts(bool exact, std::uint64_t mod_prime, std::size_t max_dim,
                        std::uint64_t seed, int j_truncation) {
    VerifyOptions opts;
    opts.exact = exact;
    if (mod_prime != 0) opts.mod_prime = mod_prime;
    opts.max_real_dim = max_dim;
    opts.seed = seed;
    opts.j_truncation = j_truncation;
    return opts;
}

py::dict report_to_dict(const VerificationReport& rep) {
    py::dict d;
    d["p"] = rep.p;
    d["q"] = rep.q;
    d["version"] = rep.version;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        jc["millis"] = c.millis;
        checks.append(std::move(jc));
    }
    d["checks"] = std::move(checks);
    d["all_pass"] = rep.all_pass();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact tensor-algebra torus verification core";

    m.def("version", [] { return std::string(kVersion); });

    py::class_<AlgebraTable>(m, "AlgebraTable")
        .def_readonly("dim", &AlgebraTable::dim)
        .def_readonly("name", &AlgebraTable::name)
        .def("product", &AlgebraTable::product, py::arg("j"), py::arg("k"))
        .def("csv", [](const AlgebraTable& a) { return table_csv(a); })
        .def("__repr__", [](const AlgebraTable& a) {
            return "<AlgebraTable " + a.name + " dim=" + std::to_string(a.dim) + ">";
        });

    m.def("table", &table_from_spec, py::arg("spec"),
          py::arg("max_dim") = kDefaultMaxRealDim,
          "structure-constant table for R, C, H, O or B(p,q)");

    m.def("validate_table", &validate_table, py::arg("table"),
          py::arg("require_imaginary_squares") = true);

    m.def(
        "rank",
        [](const std::vector<std::vector<long long>>& rows) {
            const std::size_t r = rows.size();
            const std::size_t c = r == 0 ? 0 : rows.front().size();
            ExactMatrix mat(r, c);
            for (std::size_t i = 0; i < r; ++i) {
                if (rows[i].size() != c)
                    throw std::invalid_argument("ragged matrix");
                for (std::size_t j = 0; j < c; ++j) mat.at(i, j) = rows[i][j];
            }
            return rank(mat);
        },
        py::arg("rows"), "exact rank of an integer matrix");

    m.def(
        "build_tensor",
        [](std::size_t p, std::size_t q, std::size_t max_dim) {
            const TensorAlgebra B = build_B(p, q, max_dim);
            py::dict d;
            d["p"] = B.p;
            d["q"] = B.q;
            d["real_dim"] = B.real_dim();
            d["complex_dim"] = B.complex_dim();
            d["complex_unit"] = B.complex_unit;
            d["name"] = B.table.name;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("max_dim") = kDefaultMaxRealDim);

    m.def(
        "ranks",
        [](std::size_t p, std::size_t q, bool exact, std::uint64_t mod_prime,
           std::size_t max_dim, std::uint64_t seed) {
            const TorusModel T =
                make_torus(p, q, max_dim);
            RankOptions opts{exact,
                             mod_prime != 0 ? std::optional<std::uint64_t>(mod_prime)
                                            : std::nullopt,
                             seed};
            py::dict d;
            d["generated"] = generated_rank(T.adjoint_gens, opts);
            d["commutant"] = commutant_rank(T.J, opts);
            d["rho"] = rho_image_rank(T, opts);
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("exact") = false,
        py::arg("mod_prime") = 0, py::arg("max_dim") = kDefaultMaxRealDim,
        py::arg("seed") = kDefaultSeed);

    m.def(
        "splitting_pairs",
        [](std::size_t p, std::size_t q, std::size_t max_dim) {
            return splitting_pairs(make_torus(p, q, max_dim));
        },
        py::arg("p"), py::arg("q"), py::arg("max_dim") = kDefaultMaxRealDim);

    m.def(
        "verify",
        [](std::size_t p, std::size_t q, bool exact, std::uint64_t mod_prime,
           std::size_t max_dim, std::uint64_t seed, int j_truncation) {
            return report_to_dict(run_verification(
                p, q, make_opts(exact, mod_prime, max_dim, seed, j_truncation)));
        },
        py::arg("p"), py::arg("q"), py::arg("exact") = false,
        py::arg("mod_prime") = 0, py::arg("max_dim") = kDefaultMaxRealDim,
        py::arg("seed") = kDefaultSeed, py::arg("j_truncation") = 100);

    m.def(
        "j_invariant",
        [](std::complex<double> omega1, std::complex<double> omega2, int truncation) {
            return j_invariant(LatticeBasis2D{omega1, omega2}, truncation);
        },
        py::arg("omega1"), py::arg("omega2"), py::arg("truncation") = 100);
}
