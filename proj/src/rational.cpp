#include "sympol/rational.hpp"

#include <cctype>

namespace sympol {

Rational rat_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) {
        if (text[pos] != '/')
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        ++pos;
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size())
            throw std::invalid_argument("bad rational literal: " + std::string(text));
    }
    if (text[0] == '+') text.remove_prefix(1);  // GMP rejects a leading '+'
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return out;
}

RationalGrid identity_grid(std::size_t n) {
    RationalGrid m(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalGrid multiply(const RationalGrid& a, const RationalGrid& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    RationalGrid out(rows, RationalVector(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("grid shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

RationalVector multiply(const RationalGrid& a, const RationalVector& v) {
    RationalVector out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("grid/vector shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    }
    return out;
}

Rational determinant(RationalGrid m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (is_zero(m[row][col])) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

RationalGrid inverse(const RationalGrid& m) {
    const std::size_t n = m.size();
    RationalGrid work = m;
    RationalGrid inv = identity_grid(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(work[pivot][col])) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || is_zero(work[row][col])) continue;
            const Rational factor = work[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[row][j] -= factor * work[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

std::size_t row_reduce(RationalGrid& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const Rational scale = rows[rank][col];
        for (std::size_t j = 0; j < cols; ++j) rows[rank][j] /= scale;
        for (std::size_t row = 0; row < rows.size(); ++row) {
            if (row == rank || is_zero(rows[row][col])) continue;
            const Rational factor = rows[row][col];
            for (std::size_t j = 0; j < cols; ++j) rows[row][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

bool is_antisymmetric(const RationalGrid& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j <= i; ++j)
            if (m[i][j] != -m[j][i]) return false;
    }
    return true;
}

}  // namespace sympol
