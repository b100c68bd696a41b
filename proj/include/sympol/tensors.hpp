#pragma once

#include <optional>

#include "sympol/poly_matrix.hpp"

namespace sympol {

// Component index tuple; stored strictly increasing so antisymmetry is
// structural rather than enforced by redundant entries.
using IndexTuple = std::vector<unsigned>;

// Sorts the tuple and returns the permutation sign, or nullopt when an
// index repeats (the component is then identically zero).
std::optional<int> sort_with_parity(IndexTuple& tuple);

enum class TensorKind { MultiVector, Form };

// Polynomial-coefficient alternating tensor of one fixed arity, stored
// sparsely on increasing index tuples.
template <TensorKind Kind>
class SkewTensor {
public:
    using ComponentMap = std::map<IndexTuple, Polynomial>;

    SkewTensor() : num_vars_(0), arity_(0) {}
    // arity > num_vars is allowed and forces the zero tensor: no strictly
    // increasing tuple of that length exists.
    SkewTensor(std::size_t num_vars, std::size_t arity) : num_vars_(num_vars), arity_(arity) {}

    std::size_t num_vars() const { return num_vars_; }
    std::size_t arity() const { return arity_; }
    const ComponentMap& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [tuple, poly] : comps_) d = std::max(d, poly.degree());
        return d;
    }

    // Accumulates onto the component of `tuple`, which may come in any
    // order; a repeated index contributes nothing.
    void add_component(IndexTuple tuple, Polynomial value) {
        if (tuple.size() != arity_) throw std::invalid_argument("component tuple arity mismatch");
        if (value.num_vars() != num_vars_)
            throw std::invalid_argument("component variable count mismatch");
        for (unsigned idx : tuple)
            if (idx >= num_vars_) throw std::out_of_range("component index out of range");
        if (value.is_zero()) return;
        auto parity = sort_with_parity(tuple);
        if (!parity) return;
        if (*parity < 0) value = -value;
        auto it = comps_.find(tuple);
        if (it == comps_.end()) {
            comps_.emplace(std::move(tuple), std::move(value));
        } else {
            it->second += value;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    // Component at a strictly increasing tuple; zero when absent.
    Polynomial component(const IndexTuple& tuple) const {
        auto it = comps_.find(tuple);
        return it == comps_.end() ? Polynomial(num_vars_) : it->second;
    }

    // Fully antisymmetric component lookup for arbitrary index order.
    Polynomial signed_component(IndexTuple tuple) const {
        auto parity = sort_with_parity(tuple);
        if (!parity) return Polynomial(num_vars_);
        Polynomial c = component(tuple);
        return *parity < 0 ? -c : c;
    }

    SkewTensor& operator+=(const SkewTensor& rhs) {
        require_compatible(rhs);
        for (const auto& [tuple, poly] : rhs.comps_) accumulate(tuple, poly);
        return *this;
    }
    SkewTensor& operator-=(const SkewTensor& rhs) {
        require_compatible(rhs);
        for (const auto& [tuple, poly] : rhs.comps_) accumulate(tuple, -poly);
        return *this;
    }
    SkewTensor& operator*=(const Rational& s) {
        if (sympol::is_zero(s)) {
            comps_.clear();
            return *this;
        }
        for (auto& [tuple, poly] : comps_) poly *= s;
        return *this;
    }
    SkewTensor operator-() const {
        SkewTensor out(num_vars_, arity_);
        for (const auto& [tuple, poly] : comps_) out.comps_.emplace(tuple, -poly);
        return out;
    }
    friend SkewTensor operator+(SkewTensor a, const SkewTensor& b) { return a += b; }
    friend SkewTensor operator-(SkewTensor a, const SkewTensor& b) { return a -= b; }
    friend SkewTensor operator*(const Rational& s, SkewTensor t) { return t *= s; }

    bool operator==(const SkewTensor& rhs) const = default;

private:
    void require_compatible(const SkewTensor& rhs) const {
        if (num_vars_ != rhs.num_vars_ || arity_ != rhs.arity_)
            throw std::invalid_argument("tensor shape mismatch");
    }
    void accumulate(const IndexTuple& tuple, const Polynomial& value) {
        auto [it, inserted] = comps_.emplace(tuple, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    std::size_t num_vars_;
    std::size_t arity_;
    ComponentMap comps_;
};

using PolyMultiVector = SkewTensor<TensorKind::MultiVector>;
using PolyForm = SkewTensor<TensorKind::Form>;

// Polynomial vector field, dense on coordinate derivations.
struct PolyVectorField {
    std::vector<Polynomial> components;

    PolyVectorField() = default;
    explicit PolyVectorField(std::size_t num_vars)
        : components(num_vars, Polynomial(num_vars)) {}
    explicit PolyVectorField(std::vector<Polynomial> comps) : components(std::move(comps)) {}

    std::size_t num_vars() const { return components.size(); }
    bool is_zero() const;
    int degree() const;

    // Directional derivative of a scalar along the field.
    Polynomial apply(const Polynomial& f) const;

    PolyVectorField& operator+=(const PolyVectorField& rhs);
    PolyVectorField& operator-=(const PolyVectorField& rhs);
    PolyVectorField& operator*=(const Rational& s);
    PolyVectorField operator-() const;
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }

    bool operator==(const PolyVectorField& rhs) const = default;
};

PolyMultiVector to_multivector(const PolyVectorField& x);
PolyVectorField to_vector_field(const PolyMultiVector& x);

PolyForm one_form(std::vector<Polynomial> components);
std::vector<Polynomial> one_form_components(const PolyForm& alpha);

// Bivector/2-form <-> full antisymmetric coefficient matrix.
PolyMultiVector bivector_from_matrix(const PolyMatrix& m);
PolyMatrix bivector_matrix(const PolyMultiVector& p);
PolyForm two_form_from_matrix(const PolyMatrix& m);
PolyMatrix two_form_matrix(const PolyForm& f);

// [X,Y]^m = sum_j (X^j d_j Y^m - Y^j d_j X^m)
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);

// Schouten-Nijenhuis bracket of two bivectors, normalized so that
// [P,P] = 0 is exactly the Jacobi identity of {f,g} = sum P_ij d_i f d_j g.
PolyMultiVector schouten_bracket(const PolyMultiVector& p, const PolyMultiVector& q);

PolyMultiVector wedge(const PolyMultiVector& a, const PolyMultiVector& b);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

PolyForm exterior_derivative(const PolyForm& f);

// Contraction in the first slot.
PolyForm interior_product(const PolyVectorField& x, const PolyForm& f);

// Cartan formula L_X = i_X d + d i_X.
PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& f);

// Sharp map of a bivector: component i of sharp(alpha) is sum_j P_ji alpha_j,
// the convention under which [df,dg]_P = d{f,g} holds.
PolyVectorField sharp(const PolyMultiVector& p, const PolyForm& alpha);

// Scalar pairing P(alpha,beta) = sum_{ij} P_ij alpha_i beta_j.
Polynomial bivector_pairing(const PolyMultiVector& p, const PolyForm& alpha, const PolyForm& beta);

// Koszul bracket [a,b]_P = L_{#a} b - L_{#b} a - d P(a,b).
PolyForm koszul_bracket(const PolyForm& alpha, const PolyForm& beta, const PolyMultiVector& p);

// Musical dualization induced by mutually inverse S (symplectic) and
// P (Poisson) matrices; (T^w)^w = T for every supported arity.
PolyForm dualize(const PolyVectorField& x, const PolyMatrix& s, const PolyMatrix& p);
PolyVectorField dualize(const PolyForm& alpha, const PolyMatrix& s, const PolyMatrix& p);
PolyForm dualize(const PolyMultiVector& q, const PolyMatrix& s, const PolyMatrix& p);
PolyMultiVector dualize_two_form(const PolyForm& f, const PolyMatrix& s, const PolyMatrix& p);

// Parallel for the flat chart connection: every coefficient constant.
bool is_parallel(const PolyVectorField& x);
template <TensorKind Kind>
bool is_parallel(const SkewTensor<Kind>& t) {
    return t.degree() <= 0;
}

// Value of a top-degree form on n vector fields.
Polynomial evaluate_top_form(const PolyForm& f, const std::vector<PolyVectorField>& fields);

}  // namespace sympol
