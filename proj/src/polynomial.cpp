#include "sympol/polynomial.hpp"

#include <stdexcept>

namespace sympol {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::out_of_range("variable index out of range");
    Monomial m(num_vars, 0);
    m[index] = 1;
    return monomial(num_vars, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t num_vars, Monomial exponents, const Rational& coeff) {
    if (exponents.size() != num_vars) throw std::invalid_argument("exponent vector length mismatch");
    Polynomial p(num_vars);
    p.add_term(exponents, coeff);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // Leading term of the graded order has maximal total degree.
    unsigned d = 0;
    for (unsigned e : terms_.begin()->first) d += e;
    return static_cast<int>(d);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& exponents, const Rational& coeff) {
    if (exponents.size() != num_vars_) throw std::invalid_argument("exponent vector length mismatch");
    if (sympol::is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sympol::is_zero(it->second)) terms_.erase(it);
    }
}

void Polynomial::require_same_vars(const Polynomial& rhs) const {
    if (num_vars_ != rhs.num_vars_)
        throw std::invalid_argument("polynomial variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_vars(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_vars(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    Polynomial out(a.num_vars());
    Monomial mono(a.num_vars());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = ma[i] + mb[i];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (sympol::is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= scalar;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(num_vars_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

Polynomial Polynomial::partial(std::size_t var) const {
    if (var >= num_vars_) throw std::out_of_range("partial derivative index out of range");
    Polynomial out(num_vars_);
    for (const auto& [mono, coeff] : terms_) {
        if (mono[var] == 0) continue;
        Monomial m = mono;
        --m[var];
        out.add_term(m, coeff * Rational(mono[var]));
    }
    return out;
}

Rational Polynomial::evaluate(const RationalVector& point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (mono[i] != 0) term *= pow(point[i], mono[i]);
        total += term;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
    if (values.size() != num_vars_) throw std::invalid_argument("substitution arity mismatch");
    const std::size_t target_vars = values.empty() ? 0 : values[0].num_vars();
    for (const auto& v : values)
        if (v.num_vars() != target_vars) throw std::invalid_argument("substitution variable count mismatch");

    // Lazily grown power tables, one per substituted variable.
    std::vector<std::vector<Polynomial>> powers(num_vars_);
    auto power = [&](std::size_t var, unsigned exp) -> const Polynomial& {
        auto& table = powers[var];
        if (table.empty()) table.push_back(Polynomial::constant(target_vars, Rational(1)));
        while (table.size() <= exp) table.push_back(table.back() * values[var]);
        return table[exp];
    };

    Polynomial out(target_vars);
    for (const auto& [mono, coeff] : terms_) {
        Polynomial term = Polynomial::constant(target_vars, coeff);
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (mono[i] != 0) term *= power(i, mono[i]);
        out += term;
    }
    return out;
}

int degree(const Polynomial& p) { return p.degree(); }

}  // namespace sympol
