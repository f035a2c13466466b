#include "cdtorus/matrix.hpp"

#include <sstream>

namespace cdtorus {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_integer() const {
    for (const auto& e : entries_) {
        if (!cdtorus::is_integer(e)) return false;
    }
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
    ExactMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Rational& b = rhs.at(k, c);
                if (b == 0) continue;
                out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("dimension mismatch in sum");
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("dimension mismatch in difference");
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-() const { return scaled(Rational(-1)); }

ExactMatrix ExactMatrix::scaled(const Rational& s) const {
    ExactMatrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < cols_; ++c) {
            os << to_string(at(r, c)) << (c + 1 < cols_ ? " " : "");
        }
        os << (r + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

bool SignedPerm::is_identity() const {
    for (std::size_t c = 0; c < target.size(); ++c) {
        if (target[c] != c || sign[c] != 1) return false;
    }
    return true;
}

std::optional<SignedPerm> as_signed_perm(const ExactMatrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    SignedPerm p;
    p.target.assign(n, 0);
    p.sign.assign(n, 0);
    std::vector<bool> hit(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t found = n;
        for (std::size_t r = 0; r < n; ++r) {
            const Rational& v = m.at(r, c);
            if (v == 0) continue;
            if (found != n || (v != 1 && v != -1)) return std::nullopt;
            found = r;
            p.sign[c] = (v == 1) ? 1 : -1;
        }
        if (found == n || hit[found]) return std::nullopt;
        hit[found] = true;
        p.target[c] = static_cast<std::uint32_t>(found);
    }
    return p;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in compose");
    SignedPerm out;
    out.target.resize(a.dim());
    out.sign.resize(a.dim());
    for (std::size_t c = 0; c < b.dim(); ++c) {
        out.target[c] = a.target[b.target[c]];
        out.sign[c] = static_cast<std::int8_t>(a.sign[b.target[c]] * b.sign[c]);
    }
    return out;
}

ExactMatrix to_matrix(const SignedPerm& p) {
    ExactMatrix m(p.dim(), p.dim());
    for (std::size_t c = 0; c < p.dim(); ++c) m.at(p.target[c], c) = p.sign[c];
    return m;
}

}  // namespace cdtorus
