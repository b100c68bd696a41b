#include "sympol/chart.hpp"

#include <sstream>

#include "sympol/text.hpp"

namespace sympol {

ConstantMultiVector ConstantMultiVector::basis_tuple(std::size_t dim, IndexTuple tuple) {
    ConstantMultiVector out{dim, tuple.size(), {}};
    out.add(std::move(tuple), Rational(1));
    return out;
}

ConstantMultiVector ConstantMultiVector::from_grid(const RationalGrid& grid) {
    if (!is_antisymmetric(grid)) throw std::invalid_argument("bivector grid must be antisymmetric");
    ConstantMultiVector out{grid.size(), 2, {}};
    for (unsigned i = 0; i < grid.size(); ++i)
        for (unsigned j = i + 1; j < grid.size(); ++j)
            if (!is_zero(grid[i][j])) out.add({i, j}, grid[i][j]);
    return out;
}

void ConstantMultiVector::add(IndexTuple tuple, Rational value) {
    if (tuple.size() != arity) throw std::invalid_argument("tuple arity mismatch");
    for (unsigned idx : tuple)
        if (idx >= dim) throw std::out_of_range("tuple index out of range");
    auto parity = sort_with_parity(tuple);
    if (!parity || is_zero(value)) return;
    if (*parity < 0) value = -value;
    auto it = comps.find(tuple);
    if (it == comps.end()) {
        comps.emplace(std::move(tuple), std::move(value));
    } else {
        it->second += value;
        if (is_zero(it->second)) comps.erase(it);
    }
}

PolyMatrix poisson_matrix_from(const StructureConstants& c, const TwoCocycle& omega) {
    if (c.dim() != omega.dim()) throw std::invalid_argument("algebra/cocycle dimension mismatch");
    const std::size_t n = c.dim();
    PolyMatrix p(n, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Polynomial entry = Polynomial::constant(n, omega.at(i, j));
            for (unsigned k = 0; k < n; ++k) {
                const Rational ck = c.c(i, j, k);
                if (!is_zero(ck)) entry += ck * Polynomial::variable(n, k);
            }
            p.at(i, j) = std::move(entry);
        }
    return p;
}

namespace {

std::string format_witness(const char* kind, const std::vector<unsigned>& indices,
                           const std::vector<std::string>& names) {
    std::ostringstream out;
    out << kind << " fails at (";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out << ", ";
        out << names[indices[i]];
    }
    out << ")";
    return out.str();
}

}  // namespace

ChartModel build_chart(const StructureConstants& c, const TwoCocycle& omega,
                       std::vector<std::string> chart_names) {
    if (c.dim() != omega.dim()) throw std::invalid_argument("algebra/cocycle dimension mismatch");
    const auto jacobi = check_jacobi(c);
    if (!jacobi.ok) {
        const auto& w = *jacobi.witness;
        throw ChartPreconditionError(
            "structure constants violate the Jacobi identity",
            format_witness("Jacobi identity", {w[0], w[1], w[2], w[3]}, c.names()));
    }
    const auto cocycle = check_cocycle(omega, c);
    if (!cocycle.ok) {
        const auto& w = *cocycle.witness;
        throw ChartPreconditionError("omega is not a 2-cocycle",
                                     format_witness("cocycle identity", {w[0], w[1], w[2]}, c.names()));
    }
    if (!is_nondegenerate(omega))
        throw ChartPreconditionError("omega is degenerate", "det(omega) = 0");
    if (chart_names.empty()) chart_names = default_chart_names(c.dim());
    if (chart_names.size() != c.dim()) throw std::invalid_argument("chart name count mismatch");
    PolyMatrix p = poisson_matrix_from(c, omega);
    return ChartModel{c, omega, std::move(p), std::move(chart_names)};
}

SymplecticData symplectic_matrix(const ChartModel& m) {
    auto [det, adj] = det_adjugate(m.P);
    if (det.is_zero()) throw std::domain_error("degenerate Poisson matrix");
    SymplecticData out{std::move(det), std::move(adj), false, PolyMatrix(), ""};
    if (out.det.is_constant()) {
        out.polynomial = true;
        const Rational scale = Rational(1) / out.det.constant_term();
        out.S = out.adjugate;
        for (std::size_t i = 0; i < out.S.rows(); ++i)
            for (std::size_t j = 0; j < out.S.cols(); ++j) out.S.at(i, j) *= scale;
    } else {
        out.marker = kNonUnimodularMarker;
    }
    return out;
}

PolyForm symplectic_form(const ChartModel& m) {
    const SymplecticData data = symplectic_matrix(m);
    if (!data.polynomial) throw NonUnimodularError(data.marker);
    return two_form_from_matrix(data.S);
}

PolyMultiVector poisson_bivector(const ChartModel& m) { return bivector_from_matrix(m.P); }

PolyVectorField right_invariant_field(const ChartModel& m, const RationalVector& u) {
    const std::size_t n = m.dim();
    if (u.size() != n) throw std::invalid_argument("vector length mismatch");
    PolyVectorField out(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(u[i])) out.components[j] += u[i] * m.P.at(j, i);
    return out;
}

PolyForm right_invariant_form(const ChartModel& m, const RationalVector& alpha) {
    const std::size_t n = m.dim();
    if (alpha.size() != n) throw std::invalid_argument("covector length mismatch");
    const SymplecticData data = symplectic_matrix(m);
    if (!data.polynomial) throw NonUnimodularError(data.marker);
    std::vector<Polynomial> comps(n, Polynomial(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(alpha[i])) comps[j] += alpha[i] * data.S.at(i, j);
    return one_form(std::move(comps));
}

PolyMultiVector right_multivector(const ChartModel& m, const ConstantMultiVector& w) {
    if (w.dim != m.dim()) throw std::invalid_argument("multivector dimension mismatch");
    if (w.arity < 1 || w.arity > m.dim()) throw std::out_of_range("multivector arity out of range");
    PolyMultiVector out(m.dim(), w.arity);
    RationalVector basis(m.dim(), Rational(0));
    for (const auto& [tuple, value] : w.comps) {
        PolyMultiVector term(m.dim(), 0);
        term.add_component(IndexTuple{}, Polynomial::constant(m.dim(), value));
        for (unsigned idx : tuple) {
            basis.assign(m.dim(), Rational(0));
            basis[idx] = 1;
            term = wedge(term, to_multivector(right_invariant_field(m, basis)));
        }
        out += term;
    }
    return out;
}

Polynomial poisson_bracket(const ChartModel& m, const Polynomial& f, const Polynomial& g) {
    const std::size_t n = m.dim();
    if (f.num_vars() != n || g.num_vars() != n)
        throw std::invalid_argument("bracket arguments must live in chart variables");
    Polynomial out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial df = f.partial(i);
        if (df.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (m.P.at(i, j).is_zero()) continue;
            out += m.P.at(i, j) * df * g.partial(j);
        }
    }
    return out;
}

VolumeReport volume_check(const ChartModel& m) {
    const std::size_t n = m.dim();
    if (n % 2 != 0) throw std::invalid_argument("volume check needs an even dimension");
    const SymplecticData data = symplectic_matrix(m);
    VolumeReport out{data.det, data.polynomial && data.det.is_constant(), std::nullopt, false, false};
    if (!data.polynomial) return out;

    const PolyForm omega_form = two_form_from_matrix(data.S);
    PolyForm top = omega_form;
    for (std::size_t k = 1; k < n / 2; ++k) top = wedge(top, omega_form);
    out.wedge_constant = top.degree() <= 0;
    out.top_wedge = top;

    // det P = (Omega(u_1^-, ..., u_n^-))^2 / ((n/2)!)^2 with Omega the top
    // wedge; the frame value is the top coefficient times det P.
    std::vector<PolyVectorField> frame;
    RationalVector basis(n, Rational(0));
    for (unsigned i = 0; i < n; ++i) {
        basis.assign(n, Rational(0));
        basis[i] = 1;
        frame.push_back(right_invariant_field(m, basis));
    }
    const Polynomial frame_value = evaluate_top_form(top, frame);
    Rational half_factorial(1);
    for (std::size_t k = 2; k <= n / 2; ++k) half_factorial *= Rational(static_cast<long>(k));
    const Rational scale = Rational(1) / (half_factorial * half_factorial);
    out.identity_ok = (scale * (frame_value * frame_value) == out.det);
    return out;
}

bool commuting_frame_check(const ChartModel& m) {
    const std::size_t n = m.dim();
    const SymplecticData data = symplectic_matrix(m);
    if (!data.polynomial) throw NonUnimodularError(data.marker);
    std::vector<PolyVectorField> sharps;
    RationalVector dual(n, Rational(0));
    for (unsigned i = 0; i < n; ++i) {
        dual.assign(n, Rational(0));
        dual[i] = 1;
        PolyVectorField v = -dualize(right_invariant_form(m, dual), data.S, m.P);
        if (!is_parallel(v)) return false;
        sharps.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!lie_bracket(sharps[a], sharps[b]).is_zero()) return false;
    return true;
}

}  // namespace sympol
