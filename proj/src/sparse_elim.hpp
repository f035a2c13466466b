#pragma once

// Internal sparse forward-echelon elimination over a pluggable field.
// Rows are stored lead-normalized and never modified after insertion, so
// elimination during a closure loop stays incremental; make_reduced() turns
// the accumulated echelon basis into a proper RREF at the end.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdtorus/scalar.hpp"

namespace cdtorus::detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

inline bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Prime field Z/p for p < 2^62; elements are canonical residues.
struct ZpField {
    using Elem = std::uint64_t;
    std::uint64_t p;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return a >= b ? a - b : a + p - b;
    }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
    Elem mul(const Elem& a, const Elem& b) const { return mulmod_u64(a, b, p); }
    Elem inv(const Elem& a) const { return powmod_u64(a, p - 2, p); }

    // Empty when the denominator vanishes mod p (prime must be rejected).
    std::optional<Elem> from_rational(const Rational& r) const {
        const Integer num = numerator(r) % Integer(p);
        const Integer den = denominator(r) % Integer(p);
        std::uint64_t d = static_cast<std::uint64_t>(den < 0 ? -den : den);
        if (d == 0) return std::nullopt;
        std::uint64_t n = static_cast<std::uint64_t>(num < 0 ? -num : num);
        Elem val = mul(n % p, inv(d % p));
        if ((num < 0) != (den < 0)) val = neg(val);
        return val;
    }
};

struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return Rational(1) / a; }
    std::optional<Elem> from_rational(const Rational& r) const { return r; }
};

// Sorted-by-column sparse vector.
template <class Elem>
using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

// result = a + c * b, zeros dropped.
template <class Field>
SparseVec<typename Field::Elem> axpy(const Field& f,
                                     const SparseVec<typename Field::Elem>& a,
                                     const typename Field::Elem& c,
                                     const SparseVec<typename Field::Elem>& b) {
    SparseVec<typename Field::Elem> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            typename Field::Elem v = f.mul(c, b[j].second);
            if (!f.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            typename Field::Elem v = f.add(a[i].second, f.mul(c, b[j].second));
            if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class Field>
class SparseEliminator {
  public:
    using Elem = typename Field::Elem;
    using Vec = SparseVec<Elem>;
    static constexpr std::uint32_t kNoRow = 0xffffffffu;

    SparseEliminator(Field f, std::size_t ncols)
        : field_(std::move(f)), pivot_row_of_col_(ncols, kNoRow) {}

    const Field& field() const { return field_; }
    std::size_t cols() const { return pivot_row_of_col_.size(); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

    // Eliminates v against the stored pivots; result is either empty or has a
    // leading column with no pivot yet.
    Vec reduce(Vec v) const {
        while (!v.empty()) {
            std::uint32_t row = pivot_row_of_col_[v.front().first];
            if (row == kNoRow) break;
            v = axpy(field_, v, field_.neg(v.front().second), rows_[row]);
        }
        return v;
    }

    // Returns true when v enlarges the span.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const Elem lead_inv = field_.inv(v.front().second);
        for (auto& [col, val] : v) val = field_.mul(val, lead_inv);
        v.front().second = field_.one();
        pivot_row_of_col_[v.front().first] = static_cast<std::uint32_t>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    // Back-substitutes to RREF and orders rows by pivot column.
    void make_reduced() {
        std::vector<std::uint32_t> order;
        order.reserve(rows_.size());
        for (std::uint32_t c = 0; c < pivot_row_of_col_.size(); ++c) {
            if (pivot_row_of_col_[c] != kNoRow) order.push_back(pivot_row_of_col_[c]);
        }
        std::vector<Vec> sorted;
        sorted.reserve(order.size());
        for (std::uint32_t r : order) sorted.push_back(std::move(rows_[r]));
        rows_ = std::move(sorted);
        for (std::uint32_t c = 0, r = 0; c < pivot_row_of_col_.size(); ++c) {
            if (pivot_row_of_col_[c] != kNoRow) pivot_row_of_col_[c] = r++;
        }
        for (std::size_t r = rows_.size(); r-- > 0;) {
            Vec reduced = rows_[r];
            for (std::size_t k = 1; k < reduced.size();) {
                std::uint32_t piv = pivot_row_of_col_[reduced[k].first];
                if (piv != kNoRow && piv > r) {
                    reduced = axpy(field_, reduced, field_.neg(reduced[k].second),
                                   rows_[piv]);
                    k = 1;
                } else {
                    ++k;
                }
            }
            rows_[r] = std::move(reduced);
        }
    }

    std::vector<std::size_t> pivot_cols() const {
        std::vector<std::size_t> out;
        for (std::uint32_t c = 0; c < pivot_row_of_col_.size(); ++c) {
            if (pivot_row_of_col_[c] != kNoRow) out.push_back(c);
        }
        return out;
    }

  private:
    Field field_;
    std::vector<std::uint32_t> pivot_row_of_col_;
    std::vector<Vec> rows_;
};

}  // namespace cdtorus::detail
