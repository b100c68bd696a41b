#include "sympol/poly_matrix.hpp"

#include <stdexcept>

namespace sympol {

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t num_vars) {
    PolyMatrix m(n, n, num_vars);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Polynomial::constant(num_vars, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::from_grid(const RationalGrid& grid, std::size_t num_vars) {
    const std::size_t rows = grid.size();
    const std::size_t cols = rows == 0 ? 0 : grid[0].size();
    PolyMatrix m(rows, cols, num_vars);
    for (std::size_t i = 0; i < rows; ++i) {
        if (grid[i].size() != cols) throw std::invalid_argument("ragged grid");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Polynomial::constant(num_vars, grid[i][j]);
    }
    return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[i * cols_ + j];
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[i * cols_ + j];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, num_vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RationalGrid PolyMatrix::evaluate(const RationalVector& point) const {
    RationalGrid out(rows_, RationalVector(cols_, Rational(0)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).evaluate(point);
    return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out(a.rows_, b.cols_, a.num_vars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Polynomial& lhs = a.at(i, k);
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += lhs * b.at(k, j);
            }
        }
    return out;
}

PolyMatrix operator*(const Polynomial& s, PolyMatrix m) {
    for (auto& e : m.entries_) e *= s;
    return m;
}

bool PolyMatrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(at(i, j) + at(j, i)).is_zero()) return false;
    return true;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Polynomial quotient(dividend.num_vars());
    Polynomial remainder = dividend;
    const auto& lead_d = *divisor.terms().begin();
    while (!remainder.is_zero()) {
        const auto& lead_r = *remainder.terms().begin();
        Monomial q_mono(remainder.num_vars());
        for (std::size_t i = 0; i < q_mono.size(); ++i) {
            if (lead_r.first[i] < lead_d.first[i]) return std::nullopt;
            q_mono[i] = lead_r.first[i] - lead_d.first[i];
        }
        const Rational q_coeff = lead_r.second / lead_d.second;
        const Polynomial t = Polynomial::monomial(remainder.num_vars(), q_mono, q_coeff);
        quotient += t;
        remainder -= t * divisor;
    }
    return quotient;
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
    auto q = try_divide_exact(dividend, divisor);
    if (!q) throw std::logic_error("polynomial division was not exact");
    return *q;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.num_vars(), Rational(1));
    if (n == 1) return m.at(0, 0);
    Polynomial det(m.num_vars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.num_vars());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, mc++) = m.at(r, c);
            }
        }
        Polynomial term = m.at(0, j) * determinant_cofactor(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

Polynomial determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n <= 3) return determinant_cofactor(m);

    PolyMatrix work = m;
    Polynomial prev = Polynomial::constant(m.num_vars(), Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work.at(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && work.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Polynomial(m.num_vars());
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(k, j), work.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial numerator = work.at(i, j) * work.at(k, k) - work.at(i, k) * work.at(k, j);
                work.at(i, j) = divide_exact(numerator, prev);
            }
            work.at(i, k) = Polynomial(m.num_vars());
        }
        prev = work.at(k, k);
    }
    Polynomial det = work.at(n - 1, n - 1);
    return negate ? -det : det;
}

DetAdjugate det_adjugate(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    DetAdjugate out{determinant(m), PolyMatrix(n, n, m.num_vars())};
    if (n == 0) return out;
    if (n == 1) {
        out.adjugate.at(0, 0) = Polynomial::constant(m.num_vars(), Rational(1));
        return out;
    }
    PolyMatrix minor(n - 1, n - 1, m.num_vars());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t mc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            Polynomial cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            // Adjugate is the transposed cofactor matrix.
            out.adjugate.at(j, i) = std::move(cof);
        }
    }
    return out;
}

}  // namespace sympol
