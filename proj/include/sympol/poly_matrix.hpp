#pragma once

#include <optional>

#include "sympol/polynomial.hpp"

namespace sympol {

// Dense matrix of polynomials sharing one variable count.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0), num_vars_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
        : rows_(rows), cols_(cols), num_vars_(num_vars),
          entries_(rows * cols, Polynomial(num_vars)) {}

    static PolyMatrix identity(std::size_t n, std::size_t num_vars);
    static PolyMatrix from_grid(const RationalGrid& grid, std::size_t num_vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_vars() const { return num_vars_; }
    bool is_square() const { return rows_ == cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const;
    Polynomial& at(std::size_t i, std::size_t j);

    PolyMatrix transpose() const;
    RationalGrid evaluate(const RationalVector& point) const;

    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Polynomial& s, PolyMatrix m);

    bool operator==(const PolyMatrix& rhs) const = default;

    bool is_antisymmetric() const;
    int max_degree() const;  // -1 for the zero matrix

private:
    std::size_t rows_, cols_, num_vars_;
    std::vector<Polynomial> entries_;
};

// Quotient of an exact polynomial division; nullopt when the division is
// not exact. Division by zero throws.
std::optional<Polynomial> try_divide_exact(const Polynomial& dividend, const Polynomial& divisor);
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

// Fraction-free (Bareiss) determinant with row pivoting; exact over the
// polynomial ring. Cofactor expansion handles the small cases.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyMatrix& m);

struct DetAdjugate {
    Polynomial det;
    PolyMatrix adjugate;
};

// Satisfies m * adjugate == det * I symbolically; det may be zero.
DetAdjugate det_adjugate(const PolyMatrix& m);

}  // namespace sympol
