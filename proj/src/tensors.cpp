#include "sympol/tensors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympol {

std::optional<int> sort_with_parity(IndexTuple& tuple) {
    int sign = 1;
    // Insertion sort; tuples are tiny.
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        unsigned v = tuple[i];
        std::size_t j = i;
        while (j > 0 && tuple[j - 1] > v) {
            tuple[j] = tuple[j - 1];
            sign = -sign;
            --j;
        }
        tuple[j] = v;
    }
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i - 1] == tuple[i]) return std::nullopt;
    return sign;
}

bool PolyVectorField::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

int PolyVectorField::degree() const {
    int d = -1;
    for (const auto& c : components) d = std::max(d, c.degree());
    return d;
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
    if (f.num_vars() != num_vars()) throw std::invalid_argument("field/function variable mismatch");
    Polynomial out(num_vars());
    for (std::size_t j = 0; j < components.size(); ++j)
        if (!components[j].is_zero()) out += components[j] * f.partial(j);
    return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& rhs) {
    if (num_vars() != rhs.num_vars()) throw std::invalid_argument("field shape mismatch");
    for (std::size_t i = 0; i < components.size(); ++i) components[i] += rhs.components[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& rhs) {
    if (num_vars() != rhs.num_vars()) throw std::invalid_argument("field shape mismatch");
    for (std::size_t i = 0; i < components.size(); ++i) components[i] -= rhs.components[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& s) {
    for (auto& c : components) c *= s;
    return *this;
}

PolyVectorField PolyVectorField::operator-() const {
    PolyVectorField out(num_vars());
    for (std::size_t i = 0; i < components.size(); ++i) out.components[i] = -components[i];
    return out;
}

PolyMultiVector to_multivector(const PolyVectorField& x) {
    PolyMultiVector out(x.num_vars(), 1);
    for (unsigned i = 0; i < x.num_vars(); ++i) out.add_component({i}, x.components[i]);
    return out;
}

PolyVectorField to_vector_field(const PolyMultiVector& x) {
    if (x.arity() != 1) throw std::invalid_argument("expected an arity-1 multivector");
    PolyVectorField out(x.num_vars());
    for (const auto& [tuple, poly] : x.components()) out.components[tuple[0]] = poly;
    return out;
}

PolyForm one_form(std::vector<Polynomial> components) {
    const std::size_t n = components.size();
    PolyForm out(n, 1);
    for (unsigned i = 0; i < n; ++i) out.add_component({i}, std::move(components[i]));
    return out;
}

std::vector<Polynomial> one_form_components(const PolyForm& alpha) {
    if (alpha.arity() != 1) throw std::invalid_argument("expected a 1-form");
    std::vector<Polynomial> out(alpha.num_vars(), Polynomial(alpha.num_vars()));
    for (const auto& [tuple, poly] : alpha.components()) out[tuple[0]] = poly;
    return out;
}

PolyMultiVector bivector_from_matrix(const PolyMatrix& m) {
    if (!m.is_antisymmetric()) throw std::invalid_argument("bivector matrix must be antisymmetric");
    PolyMultiVector out(m.rows(), 2);
    for (unsigned i = 0; i < m.rows(); ++i)
        for (unsigned j = i + 1; j < m.cols(); ++j) out.add_component({i, j}, m.at(i, j));
    return out;
}

PolyMatrix bivector_matrix(const PolyMultiVector& p) {
    if (p.arity() != 2) throw std::invalid_argument("expected a bivector");
    PolyMatrix out(p.num_vars(), p.num_vars(), p.num_vars());
    for (const auto& [tuple, poly] : p.components()) {
        out.at(tuple[0], tuple[1]) = poly;
        out.at(tuple[1], tuple[0]) = -poly;
    }
    return out;
}

PolyForm two_form_from_matrix(const PolyMatrix& m) {
    if (!m.is_antisymmetric()) throw std::invalid_argument("2-form matrix must be antisymmetric");
    PolyForm out(m.rows(), 2);
    for (unsigned i = 0; i < m.rows(); ++i)
        for (unsigned j = i + 1; j < m.cols(); ++j) out.add_component({i, j}, m.at(i, j));
    return out;
}

PolyMatrix two_form_matrix(const PolyForm& f) {
    if (f.arity() != 2) throw std::invalid_argument("expected a 2-form");
    PolyMatrix out(f.num_vars(), f.num_vars(), f.num_vars());
    for (const auto& [tuple, poly] : f.components()) {
        out.at(tuple[0], tuple[1]) = poly;
        out.at(tuple[1], tuple[0]) = -poly;
    }
    return out;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
    if (x.num_vars() != y.num_vars()) throw std::invalid_argument("field shape mismatch");
    const std::size_t n = x.num_vars();
    PolyVectorField out(n);
    for (std::size_t m = 0; m < n; ++m) {
        Polynomial comp(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!x.components[j].is_zero()) comp += x.components[j] * y.components[m].partial(j);
            if (!y.components[j].is_zero()) comp -= y.components[j] * x.components[m].partial(j);
        }
        out.components[m] = std::move(comp);
    }
    return out;
}

PolyMultiVector schouten_bracket(const PolyMultiVector& p, const PolyMultiVector& q) {
    if (p.arity() != 2 || q.arity() != 2)
        throw std::invalid_argument("schouten bracket implemented for bivectors");
    if (p.num_vars() != q.num_vars()) throw std::invalid_argument("tensor shape mismatch");
    const std::size_t n = p.num_vars();
    const PolyMatrix pm = bivector_matrix(p);
    const PolyMatrix qm = bivector_matrix(q);
    PolyMultiVector out(n, 3);
    auto cyclic = [&](unsigned i, unsigned j, unsigned k) {
        Polynomial acc(n);
        for (unsigned l = 0; l < n; ++l) {
            if (!pm.at(i, l).is_zero()) acc += pm.at(i, l) * qm.at(j, k).partial(l);
            if (!qm.at(i, l).is_zero()) acc += qm.at(i, l) * pm.at(j, k).partial(l);
        }
        return acc;
    };
    for (unsigned i = 0; i + 2 < n; ++i)
        for (unsigned j = i + 1; j + 1 < n; ++j)
            for (unsigned k = j + 1; k < n; ++k)
                out.add_component({i, j, k}, cyclic(i, j, k) + cyclic(j, k, i) + cyclic(k, i, j));
    return out;
}

namespace {

template <TensorKind Kind>
SkewTensor<Kind> wedge_impl(const SkewTensor<Kind>& a, const SkewTensor<Kind>& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("tensor shape mismatch");
    if (a.arity() + b.arity() > a.num_vars())
        throw std::invalid_argument("wedge arity exceeds variable count");
    SkewTensor<Kind> out(a.num_vars(), a.arity() + b.arity());
    IndexTuple merged;
    for (const auto& [ta, pa] : a.components()) {
        for (const auto& [tb, pb] : b.components()) {
            merged.clear();
            merged.insert(merged.end(), ta.begin(), ta.end());
            merged.insert(merged.end(), tb.begin(), tb.end());
            out.add_component(merged, pa * pb);
        }
    }
    return out;
}

}  // namespace

PolyMultiVector wedge(const PolyMultiVector& a, const PolyMultiVector& b) { return wedge_impl(a, b); }
PolyForm wedge(const PolyForm& a, const PolyForm& b) { return wedge_impl(a, b); }

PolyForm exterior_derivative(const PolyForm& f) {
    if (f.arity() >= f.num_vars())
        throw std::invalid_argument("exterior derivative of a top-degree form");
    PolyForm out(f.num_vars(), f.arity() + 1);
    IndexTuple extended;
    for (const auto& [tuple, poly] : f.components()) {
        for (unsigned a = 0; a < f.num_vars(); ++a) {
            Polynomial d = poly.partial(a);
            if (d.is_zero()) continue;
            extended.clear();
            extended.push_back(a);
            extended.insert(extended.end(), tuple.begin(), tuple.end());
            out.add_component(extended, std::move(d));
        }
    }
    return out;
}

PolyForm interior_product(const PolyVectorField& x, const PolyForm& f) {
    if (x.num_vars() != f.num_vars()) throw std::invalid_argument("tensor shape mismatch");
    if (f.arity() == 0) throw std::invalid_argument("interior product with a 0-form");
    PolyForm out(f.num_vars(), f.arity() - 1);
    IndexTuple rest;
    for (const auto& [tuple, poly] : f.components()) {
        for (std::size_t p = 0; p < tuple.size(); ++p) {
            const Polynomial& xc = x.components[tuple[p]];
            if (xc.is_zero()) continue;
            rest.clear();
            for (std::size_t q = 0; q < tuple.size(); ++q)
                if (q != p) rest.push_back(tuple[q]);
            Polynomial term = xc * poly;
            if (p % 2 == 1) term = -term;
            out.add_component(rest, std::move(term));
        }
    }
    return out;
}

PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& f) {
    if (f.arity() == 0) {
        // L_X f = X(f) for scalars.
        Polynomial scalar = f.component(IndexTuple{});
        PolyForm out(f.num_vars(), 0);
        out.add_component(IndexTuple{}, x.apply(scalar));
        return out;
    }
    PolyForm out = exterior_derivative(interior_product(x, f));
    if (f.arity() < f.num_vars()) out += interior_product(x, exterior_derivative(f));
    return out;
}

PolyVectorField sharp(const PolyMultiVector& p, const PolyForm& alpha) {
    if (p.arity() != 2 || alpha.arity() != 1)
        throw std::invalid_argument("sharp expects a bivector and a 1-form");
    if (p.num_vars() != alpha.num_vars()) throw std::invalid_argument("tensor shape mismatch");
    const std::size_t n = p.num_vars();
    const PolyMatrix pm = bivector_matrix(p);
    const auto comps = one_form_components(alpha);
    PolyVectorField out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial acc(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!comps[j].is_zero()) acc += pm.at(j, i) * comps[j];
        out.components[i] = std::move(acc);
    }
    return out;
}

Polynomial bivector_pairing(const PolyMultiVector& p, const PolyForm& alpha, const PolyForm& beta) {
    const PolyMatrix pm = bivector_matrix(p);
    const auto a = one_form_components(alpha);
    const auto b = one_form_components(beta);
    Polynomial out(p.num_vars());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out += pm.at(i, j) * a[i] * b[j];
    }
    return out;
}

PolyForm koszul_bracket(const PolyForm& alpha, const PolyForm& beta, const PolyMultiVector& p) {
    PolyForm out = lie_derivative(sharp(p, alpha), beta);
    out -= lie_derivative(sharp(p, beta), alpha);
    const Polynomial pairing = bivector_pairing(p, alpha, beta);
    PolyForm scalar(p.num_vars(), 0);
    scalar.add_component(IndexTuple{}, pairing);
    out -= exterior_derivative(scalar);
    return out;
}

namespace {

void require_mutually_inverse(const PolyMatrix& s, const PolyMatrix& p) {
    if (!(s * p == PolyMatrix::identity(s.rows(), s.num_vars())))
        throw std::invalid_argument("dualization matrices are not mutually inverse");
}

}  // namespace

PolyForm dualize(const PolyVectorField& x, const PolyMatrix& s, const PolyMatrix& p) {
    require_mutually_inverse(s, p);
    const std::size_t n = x.num_vars();
    std::vector<Polynomial> comps(n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!x.components[j].is_zero()) comps[i] += s.at(i, j) * x.components[j];
    return one_form(std::move(comps));
}

PolyVectorField dualize(const PolyForm& alpha, const PolyMatrix& s, const PolyMatrix& p) {
    if (alpha.arity() != 1) throw std::invalid_argument("expected a 1-form");
    require_mutually_inverse(s, p);
    const std::size_t n = alpha.num_vars();
    const auto a = one_form_components(alpha);
    PolyVectorField out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a[j].is_zero()) out.components[i] += p.at(i, j) * a[j];
    return out;
}

PolyForm dualize(const PolyMultiVector& q, const PolyMatrix& s, const PolyMatrix& p) {
    if (q.arity() != 2) throw std::invalid_argument("expected a bivector");
    require_mutually_inverse(s, p);
    const PolyMatrix m = s * bivector_matrix(q) * s.transpose();
    return two_form_from_matrix(m);
}

PolyMultiVector dualize_two_form(const PolyForm& f, const PolyMatrix& s, const PolyMatrix& p) {
    if (f.arity() != 2) throw std::invalid_argument("expected a 2-form");
    require_mutually_inverse(s, p);
    const PolyMatrix m = p * two_form_matrix(f) * p.transpose();
    return bivector_from_matrix(m);
}

bool is_parallel(const PolyVectorField& x) { return x.degree() <= 0; }

Polynomial evaluate_top_form(const PolyForm& f, const std::vector<PolyVectorField>& fields) {
    const std::size_t n = f.num_vars();
    if (f.arity() != n) throw std::invalid_argument("expected a top-degree form");
    if (fields.size() != n) throw std::invalid_argument("expected one field per variable");
    IndexTuple top(n);
    for (unsigned i = 0; i < n; ++i) top[i] = i;
    PolyMatrix frame(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) frame.at(i, j) = fields[j].components[i];
    return f.component(top) * determinant(frame);
}

}  // namespace sympol
