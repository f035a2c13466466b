#include "cdtorus/linalg.hpp"

#include <algorithm>
#include <set>

#include "sparse_elim.hpp"

namespace cdtorus {
namespace {

using detail::RationalField;
using detail::SparseEliminator;
using detail::SparseVec;
using detail::ZpField;

// Raised when a denominator vanishes against the current modulus; the caller
// reruns with a different prime.
struct PrimeCollision {};

template <class Field>
SparseVec<typename Field::Elem> flatten_matrix(const Field& f, const ExactMatrix& m) {
    SparseVec<typename Field::Elem> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& v = m.at(r, c);
            if (v == 0) continue;
            auto e = f.from_rational(v);
            if (!e) throw PrimeCollision{};
            if (!f.is_zero(*e))
                out.emplace_back(static_cast<std::uint32_t>(r * m.cols() + c), *e);
        }
    }
    return out;
}

template <class Field>
SparseVec<typename Field::Elem> flatten_perm(const Field& f, const SignedPerm& sp) {
    const std::size_t n = sp.dim();
    SparseVec<typename Field::Elem> out;
    out.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
        out.emplace_back(static_cast<std::uint32_t>(sp.target[c] * n + c),
                         sp.sign[c] > 0 ? f.one() : f.neg(f.one()));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

template <class Field>
SparseVec<typename Field::Elem> row_vector(const Field& f, const ExactMatrix& m,
                                           std::size_t r) {
    SparseVec<typename Field::Elem> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rational& v = m.at(r, c);
        if (v == 0) continue;
        auto e = f.from_rational(v);
        if (!e) throw PrimeCollision{};
        if (!f.is_zero(*e)) out.emplace_back(static_cast<std::uint32_t>(c), *e);
    }
    return out;
}

// Sign-canonical dedup key: the perm and its negation collapse to one key.
std::vector<std::uint64_t> perm_key(const SignedPerm& sp) {
    const bool flip = sp.sign[0] < 0;
    std::vector<std::uint64_t> key;
    key.reserve(sp.dim() + sp.dim() / 64 + 1);
    for (std::uint32_t t : sp.target) key.push_back(t);
    std::uint64_t word = 0;
    for (std::size_t c = 0; c < sp.dim(); ++c) {
        const bool neg = flip ? sp.sign[c] > 0 : sp.sign[c] < 0;
        if (neg) word |= 1ULL << (c % 64);
        if (c % 64 == 63 || c + 1 == sp.dim()) {
            key.push_back(word);
            word = 0;
        }
    }
    return key;
}

// Breadth-first closure of span{generators} under two-sided products with the
// generators. Accepted rows are immutable, so every product of an accepted row
// with a generator lands in the final span; once a round adds nothing, the
// span is an algebra (without unit unless supplied).
template <class Field>
void closure_into(SparseEliminator<Field>& elim,
                  const std::vector<ExactMatrix>& generators,
                  std::size_t max_products) {
    if (generators.empty()) return;
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != n)
            throw std::invalid_argument("generators must be square of equal size");
    }

    std::vector<SignedPerm> perm_gens;
    perm_gens.reserve(generators.size());
    bool all_perms = true;
    for (const auto& g : generators) {
        auto sp = as_signed_perm(g);
        if (!sp) {
            all_perms = false;
            break;
        }
        perm_gens.push_back(std::move(*sp));
    }

    const std::size_t ambient = n * n;
    if (all_perms) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<SignedPerm> frontier;
        for (const auto& sp : perm_gens) {
            if (!seen.insert(perm_key(sp)).second) continue;
            if (elim.insert(flatten_perm(elim.field(), sp))) frontier.push_back(sp);
        }
        for (std::size_t round = 0; !frontier.empty(); ++round) {
            if (elim.rank() == ambient) return;
            if (round >= max_products)
                throw BudgetError("span closure did not stabilize within " +
                                  std::to_string(max_products) + " product rounds");
            std::vector<SignedPerm> next;
            for (const auto& a : frontier) {
                for (const auto& g : perm_gens) {
                    for (const SignedPerm& prod : {compose(a, g), compose(g, a)}) {
                        if (!seen.insert(perm_key(prod)).second) continue;
                        if (elim.insert(flatten_perm(elim.field(), prod)))
                            next.push_back(prod);
                    }
                }
            }
            frontier = std::move(next);
        }
        return;
    }

    std::vector<ExactMatrix> frontier;
    for (const auto& g : generators) {
        if (elim.insert(flatten_matrix(elim.field(), g))) frontier.push_back(g);
    }
    for (std::size_t round = 0; !frontier.empty(); ++round) {
        if (elim.rank() == ambient) return;
        if (round >= max_products)
            throw BudgetError("span closure did not stabilize within " +
                              std::to_string(max_products) + " product rounds");
        std::vector<ExactMatrix> next;
        for (const auto& a : frontier) {
            for (const auto& g : generators) {
                for (ExactMatrix prod : {a * g, g * a}) {
                    if (elim.insert(flatten_matrix(elim.field(), prod)))
                        next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
}

std::size_t bareiss_rank(const ExactMatrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = numerator(m.at(r, c));

    Integer prev = 1;
    std::size_t piv = 0;
    for (std::size_t col = 0; col < m.cols() && piv < m.rows(); ++col) {
        std::size_t sel = piv;
        while (sel < m.rows() && a[sel][col] == 0) ++sel;
        if (sel == m.rows()) continue;
        std::swap(a[piv], a[sel]);
        for (std::size_t r = piv + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c)
                a[r][c] = (a[piv][col] * a[r][c] - a[r][col] * a[piv][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[piv][col];
        ++piv;
    }
    return piv;
}

std::size_t rational_rank(const ExactMatrix& m) {
    SparseEliminator<RationalField> elim(RationalField{}, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        elim.insert(row_vector(RationalField{}, m, r));
    return elim.rank();
}

std::optional<std::size_t> modular_rank(const ExactMatrix& m, std::uint64_t p) {
    try {
        SparseEliminator<ZpField> elim(ZpField{p}, m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            elim.insert(row_vector(ZpField{p}, m, r));
        return elim.rank();
    } catch (const PrimeCollision&) {
        return std::nullopt;
    }
}

std::optional<std::size_t> modular_closure_rank(const std::vector<ExactMatrix>& gens,
                                                std::size_t max_products,
                                                std::uint64_t p, std::size_t ambient) {
    try {
        SparseEliminator<ZpField> elim(ZpField{p}, ambient);
        closure_into(elim, gens, max_products);
        return elim.rank();
    } catch (const PrimeCollision&) {
        return std::nullopt;
    }
}

// Runs `attempt` under two distinct verification primes; agreement wins,
// disagreement or repeated denominator collisions defer to `exact`.
template <class Attempt, class Exact>
std::size_t two_prime_certify(const RankOptions& opts, Attempt&& attempt,
                              Exact&& exact) {
    unsigned next_index = 0;
    auto draw = [&](std::uint64_t avoid) {
        return select_verification_prime(opts.seed, next_index++, avoid);
    };

    std::uint64_t p1 = 0;
    if (opts.mod_prime) {
        if (!is_prime_u64(*opts.mod_prime))
            throw std::invalid_argument("--mod-prime value is not prime");
        p1 = *opts.mod_prime;
    } else {
        p1 = draw(0);
    }

    constexpr unsigned kMaxCollisionRetries = 8;
    std::optional<std::size_t> r1;
    for (unsigned i = 0; i < kMaxCollisionRetries && !(r1 = attempt(p1)); ++i)
        p1 = draw(0);
    if (!r1) return exact();

    std::uint64_t p2 = draw(p1);
    std::optional<std::size_t> r2;
    for (unsigned i = 0; i < kMaxCollisionRetries && !(r2 = attempt(p2)); ++i)
        p2 = draw(p1);
    if (!r2) return exact();

    if (*r1 == *r2) return *r1;
    return exact();
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_integer()) return bareiss_rank(m);
    return rational_rank(m);
}

std::size_t rank_certified(const ExactMatrix& m, const RankOptions& opts) {
    if (opts.force_exact) return rank(m);
    return two_prime_certify(
        opts, [&](std::uint64_t p) { return modular_rank(m, p); },
        [&] { return rank(m); });
}

std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m) {
    SparseEliminator<RationalField> elim(RationalField{}, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        elim.insert(row_vector(RationalField{}, m, r));
    elim.make_reduced();

    const auto pivots = elim.pivot_cols();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < elim.rows().size(); ++r) {
            for (const auto& [col, val] : elim.rows()[r]) {
                if (col == f) {
                    x[pivots[r]] = -val;
                    break;
                }
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Rational& v = a.at(ar, ac);
            if (v == 0) continue;
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    if (b.at(br, bc) == 0) continue;
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

SpanBasis span_closure(const std::vector<ExactMatrix>& generators,
                       std::size_t max_products) {
    SpanBasis out;
    if (generators.empty()) return out;
    const std::size_t n = generators.front().rows();
    out.ambient_dim = n * n;
    SparseEliminator<RationalField> elim(RationalField{}, out.ambient_dim);
    closure_into(elim, generators, max_products);
    elim.make_reduced();
    out.pivot_cols = elim.pivot_cols();
    for (const auto& row : elim.rows()) {
        std::vector<Rational> dense(out.ambient_dim, Rational(0));
        for (const auto& [col, val] : row) dense[col] = val;
        out.rows.push_back(std::move(dense));
    }
    return out;
}

std::size_t span_closure_rank(const std::vector<ExactMatrix>& generators,
                              std::size_t max_products, const RankOptions& opts) {
    if (generators.empty()) return 0;
    const std::size_t n = generators.front().rows();
    const std::size_t ambient = n * n;
    auto exact = [&] {
        SparseEliminator<RationalField> elim(RationalField{}, ambient);
        closure_into(elim, generators, max_products);
        return elim.rank();
    };
    if (opts.force_exact) return exact();
    return two_prime_certify(
        opts,
        [&](std::uint64_t p) {
            return modular_closure_rank(generators, max_products, p, ambient);
        },
        exact);
}

std::optional<std::size_t> matrix_order(const ExactMatrix& m, std::size_t max_order) {
    if (!m.is_square()) throw std::invalid_argument("order of a non-square matrix");
    if (auto sp = as_signed_perm(m)) {
        SignedPerm acc = *sp;
        for (std::size_t k = 1; k <= max_order; ++k) {
            if (acc.is_identity()) return k;
            acc = compose(*sp, acc);
        }
        return std::nullopt;
    }
    ExactMatrix acc = m;
    for (std::size_t k = 1; k <= max_order; ++k) {
        if (acc.is_identity()) return k;
        acc = m * acc;
    }
    return std::nullopt;
}

std::uint64_t select_verification_prime(std::uint64_t seed, unsigned index,
                                        std::uint64_t avoid) {
    std::uint64_t state = seed;
    std::uint64_t draw = 0;
    for (unsigned i = 0; i <= index; ++i) draw = detail::splitmix64(state);
    std::uint64_t cand = (1ULL << 40) | (draw % (1ULL << 40)) | 1ULL;
    while (!detail::miller_rabin_u64(cand) || cand == avoid) cand += 2;
    return cand;
}

bool is_prime_u64(std::uint64_t n) { return detail::miller_rabin_u64(n); }

}  // namespace cdtorus
