#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sympol {

// Exact rational scalar. Always kept canonical: lowest terms, positive
// denominator, zero stored as 0/1. GMP maintains canonical form under
// arithmetic as long as inputs are canonical, so every entry point that
// builds a Rational from raw data must canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional leading sign, nothing else.
Rational rat_from_string(std::string_view text);

// Prints "p" for integers and "p/q" otherwise; this is the canonical
// coefficient grammar shared with the CLI.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational pow(const Rational& base, unsigned exponent);

using RationalVector = std::vector<Rational>;
using RationalGrid = std::vector<std::vector<Rational>>;

RationalGrid identity_grid(std::size_t n);
RationalGrid multiply(const RationalGrid& a, const RationalGrid& b);
RationalVector multiply(const RationalGrid& a, const RationalVector& v);
Rational determinant(RationalGrid m);

// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
RationalGrid inverse(const RationalGrid& m);

// In-place reduced row echelon form; returns the rank.
std::size_t row_reduce(RationalGrid& rows);

bool is_antisymmetric(const RationalGrid& m);

}  // namespace sympol
