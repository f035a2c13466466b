#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cdtorus/scalar.hpp"

namespace cdtorus {

/// Dense matrix with exact rational entries. The universal carrier for
/// multiplication operators, complex structures and endomorphism candidates.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_integer() const;
    bool is_zero() const;
    bool is_identity() const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const Rational& s) const;
    bool operator==(const ExactMatrix& rhs) const = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Signed permutation view of a matrix: column c maps to sign[c] * e_target[c].
/// Multiplication operators of Cayley-Dickson tables always have this shape,
/// which gives O(n) composition and powering.
struct SignedPerm {
    std::vector<std::uint32_t> target;
    std::vector<std::int8_t> sign;

    std::size_t dim() const { return target.size(); }
    bool is_identity() const;
    bool operator==(const SignedPerm&) const = default;
};

std::optional<SignedPerm> as_signed_perm(const ExactMatrix& m);
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
ExactMatrix to_matrix(const SignedPerm& p);

}  // namespace cdtorus
