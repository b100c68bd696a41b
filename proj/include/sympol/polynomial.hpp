#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sympol/rational.hpp"

namespace sympol {

// Exponent vector of a monomial; length always equals the owning
// polynomial's variable count.
using Monomial = std::vector<unsigned>;

// Graded lexicographic, highest degree first. Map iteration order is the
// canonical printing order, so the comparator is part of the output contract.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficients; every exponent vector has
// length num_vars(); degree of the zero polynomial is -1.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Rational& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index);
    static Polynomial monomial(std::size_t num_vars, Monomial exponents, const Rational& coeff);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    int degree() const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial(num_vars_, 0)); }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    bool operator==(const Polynomial& rhs) const {
        return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
    }

    Polynomial partial(std::size_t var) const;
    Rational evaluate(const RationalVector& point) const;

    // Composition: replaces x_i by values[i]; all values must share one
    // variable count, which becomes the result's.
    Polynomial substitute(const std::vector<Polynomial>& values) const;

    void add_term(const Monomial& exponents, const Rational& coeff);

private:
    void require_same_vars(const Polynomial& rhs) const;

    std::size_t num_vars_;
    TermMap terms_;
};

int degree(const Polynomial& p);

}  // namespace sympol
