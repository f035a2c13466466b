#include "cdtorus/torus.hpp"

#include <algorithm>

#include "sparse_elim.hpp"

namespace cdtorus {
namespace {

using detail::RationalField;
using detail::SparseEliminator;
using detail::ZpField;

// Sparse rows of the commutator system: the equation for position (a, b) of
// MJ - JM in the n^2 unknowns M[r][c] flattened row-major.
template <class Field>
std::optional<std::size_t> commutator_system_rank(const Field& f, const ExactMatrix& J) {
    const std::size_t n = J.rows();
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> col_nnz(n), row_nnz(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& v = J.at(r, c);
            if (v == 0) continue;
            col_nnz[c].emplace_back(static_cast<std::uint32_t>(r), v);
            row_nnz[r].emplace_back(static_cast<std::uint32_t>(c), v);
        }
    }

    SparseEliminator<Field> elim(f, n * n);
    std::vector<std::pair<std::uint32_t, Rational>> raw;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            raw.clear();
            for (const auto& [k, v] : col_nnz[b])
                raw.emplace_back(static_cast<std::uint32_t>(a * n + k), v);
            for (const auto& [k, v] : row_nnz[a])
                raw.emplace_back(static_cast<std::uint32_t>(k * n + b), -v);
            std::sort(raw.begin(), raw.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            detail::SparseVec<typename Field::Elem> vec;
            for (const auto& [col, v] : raw) {
                if (!vec.empty() && vec.back().first == col) {
                    auto e = f.from_rational(v);
                    if (!e) return std::nullopt;
                    vec.back().second = f.add(vec.back().second, *e);
                    if (f.is_zero(vec.back().second)) vec.pop_back();
                } else {
                    auto e = f.from_rational(v);
                    if (!e) return std::nullopt;
                    if (!f.is_zero(*e)) vec.emplace_back(col, *e);
                }
            }
            elim.insert(std::move(vec));
        }
    }
    return elim.rank();
}

bool commutes_with(const ExactMatrix& m, const ExactMatrix& J,
                   const std::optional<SignedPerm>& jp) {
    if (jp) {
        if (auto mp = as_signed_perm(m)) return compose(*mp, *jp) == compose(*jp, *mp);
    }
    return m * J == J * m;
}

}  // namespace

TorusModel make_torus(std::size_t p, std::size_t q, std::size_t max_real_dim) {
    TorusModel T;
    T.p = p;
    T.q = q;
    T.algebra = build_B(p, q, max_real_dim);
    T.real_dim = T.algebra.real_dim();
    T.complex_dim = T.algebra.complex_dim();
    T.J = complex_structure(T.algebra);
    T.adjoint_gens = componentwise_generators(T.algebra);
    return T;
}

ExactMatrix complex_structure(const TensorAlgebra& B) {
    return left_mult_matrix(B.table, B.complex_unit);
}

std::size_t commutant_rank(const ExactMatrix& J, const RankOptions& opts) {
    if (!J.is_square()) throw std::invalid_argument("J must be square");
    const std::size_t n = J.rows();
    if (!((J * J) == ExactMatrix::identity(n).scaled(Rational(-1))))
        throw std::invalid_argument("J^2 != -I");

    auto exact = [&] {
        auto r = commutator_system_rank(RationalField{}, J);
        return n * n - *r;
    };
    if (opts.force_exact) return exact();

    auto attempt = [&](std::uint64_t prime) -> std::optional<std::size_t> {
        auto r = commutator_system_rank(ZpField{prime}, J);
        if (!r) return std::nullopt;
        return n * n - *r;
    };
    // Local two-prime agreement, mirroring rank_certified.
    std::uint64_t p1 = opts.mod_prime ? *opts.mod_prime
                                      : select_verification_prime(opts.seed, 0);
    if (opts.mod_prime && !is_prime_u64(*opts.mod_prime))
        throw std::invalid_argument("--mod-prime value is not prime");
    std::uint64_t p2 = select_verification_prime(opts.seed, 1, p1);
    auto r1 = attempt(p1);
    auto r2 = attempt(p2);
    if (r1 && r2 && *r1 == *r2) return *r1;
    return exact();
}

std::size_t rho_image_rank(const TorusModel& T, const RankOptions& opts) {
    const auto jp = as_signed_perm(T.J);
    for (std::size_t i = 0; i < T.adjoint_gens.generators.size(); ++i) {
        const ExactMatrix& g = T.adjoint_gens.generators[i];
        if (!g.is_integer())
            throw std::logic_error("generator " + T.adjoint_gens.labels[i] +
                                   " is not integral");
        if (!commutes_with(g, T.J, jp))
            throw std::logic_error("generator " + T.adjoint_gens.labels[i] +
                                   " does not commute with J");
    }
    return span_closure_rank(T.adjoint_gens.generators, 16, opts);
}

std::vector<std::pair<std::size_t, std::size_t>> splitting_pairs(const TorusModel& T) {
    const auto jp = as_signed_perm(T.J);
    if (!jp) throw std::logic_error("J is not a signed permutation");
    const std::size_t n = jp->dim();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> covered(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (jp->sign[k] != 1) continue;
        const std::size_t kp = jp->target[k];
        if (covered[k] || covered[kp] || kp == k)
            throw std::logic_error("J does not split the basis into planes");
        covered[k] = covered[kp] = true;
        pairs.emplace_back(k, kp);
    }
    if (pairs.size() != T.complex_dim ||
        !std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw std::logic_error("J does not split the basis into planes");
    return pairs;
}

OrderCensus order_census(const TorusModel& T, std::size_t max_order) {
    OrderCensus census;
    auto tally = [&](const ExactMatrix& m, const std::string& label) {
        auto ord = matrix_order(m, max_order);
        if (!ord) {
            ++census.unbounded;
            return;
        }
        ++census.histogram[*ord];
        if (*ord == 4) census.order_four_labels.push_back(label);
    };
    for (std::size_t i = 0; i < T.adjoint_gens.generators.size(); ++i)
        tally(T.adjoint_gens.generators[i], T.adjoint_gens.labels[i]);
    tally(T.J, "J");
    tally(T.J * T.J, "J^2");
    tally(T.J * T.J * T.J, "J^3");
    return census;
}

ComplexExactMatrix ComplexExactMatrix::identity(std::size_t n) {
    return {ExactMatrix::identity(n), ExactMatrix::zero(n, n)};
}

ComplexExactMatrix ComplexExactMatrix::operator*(const ComplexExactMatrix& rhs) const {
    return {re * rhs.re - im * rhs.im, re * rhs.im + im * rhs.re};
}

ComplexExactMatrix analytic_representation(const TorusModel& T, const ExactMatrix& M) {
    if (!commutes_with(M, T.J, as_signed_perm(T.J)))
        throw std::invalid_argument("matrix does not commute with J");
    const auto pairs = splitting_pairs(T);
    const std::size_t m = pairs.size();
    ComplexExactMatrix out{ExactMatrix(m, m), ExactMatrix(m, m)};
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
            out.re.at(r, s) = M.at(pairs[r].first, pairs[s].first);
            out.im.at(r, s) = M.at(pairs[r].second, pairs[s].first);
        }
    }
    return out;
}

}  // namespace cdtorus
