// Dense exact linear algebra over the rationals: just enough for polytope
// work in dimension ~10. Row-major matrices of Rational.
#pragma once

#include "polystab/rational.hpp"

#include <cstddef>
#include <optional>

namespace polystab {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static RatMat identity(std::size_t n);
    bool operator==(const RatMat& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    RatVec data_;
};

RatMat mat_mul(const RatMat& a, const RatMat& b);

// Solves A x = rhs exactly (A square). Throws SingularMatrix if rank(A) < n.
RatVec solve_linear_system(const RatMat& a, const RatVec& rhs);

// Like solve_linear_system but reports singularity as nullopt; used in the
// hot enumeration loops where singular subsets are routine.
std::optional<RatVec> try_solve(const RatMat& a, const RatVec& rhs);

// Exact determinant, sign preserved. Fraction-free (Bareiss) on the
// denominator-cleared integer matrix.
Rational determinant(const RatMat& a);

std::size_t rank(const RatMat& a);

// Basis of {x : A x = 0}, one column vector per basis element.
std::vector<RatVec> nullspace(const RatMat& a);

Rational dot(const RatVec& a, const RatVec& b);

}  // namespace polystab
