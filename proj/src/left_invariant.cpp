#include "sympol/left_invariant.hpp"

namespace sympol {

namespace {

bool grid_all_zero(const std::vector<std::vector<Polynomial>>& grid) {
    for (const auto& row : grid)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

}  // namespace

LeftFieldSolution left_invariant_field(const ChartModel& m, const RationalVector& u) {
    const std::size_t n = m.dim();
    if (u.size() != n) throw std::invalid_argument("vector length mismatch");

    const NilpotencyResult verdict = lower_central_series(m.algebra);
    if (!verdict.nilpotent)
        throw NotNilpotentError(
            "left-invariant fields are polynomial only on nilpotent groups; "
            "the lower central series stabilizes at dimension " +
                std::to_string(verdict.lower_central_dims.back()),
            verdict);

    // Frame equations u_j^-(f_m) = sum_a P_aj d_a f_m = sum_a C^a_mj f_a.
    // Split P = omega + L and solve degree by degree: the degree-(d+1)
    // gradient of f_m is -omega^{-1} applied to the degree-d residual.
    const RationalGrid omega_inv = inverse(m.omega.omega);
    PolyMatrix linear = m.P;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            linear.at(i, j) -= Polynomial::constant(n, m.omega.at(i, j));

    // f^(0)_i = omega(u_i, u).
    std::vector<std::vector<Polynomial>> parts;  // parts[d][m]: degree-d homogeneous part
    parts.emplace_back();
    for (std::size_t i = 0; i < n; ++i) {
        Rational init(0);
        for (std::size_t j = 0; j < n; ++j) init += m.omega.at(i, j) * u[j];
        parts.back().push_back(Polynomial::constant(n, init));
    }

    const int cap = verdict.nilindex;
    for (int d = 0;; ++d) {
        // Residual R_jm = sum_a C^a_mj f^(d)_a - sum_a L_aj d_a f^(d)_m.
        std::vector<std::vector<Polynomial>> residual(n, std::vector<Polynomial>(n, Polynomial(n)));
        for (unsigned j = 0; j < n; ++j)
            for (unsigned mm = 0; mm < n; ++mm) {
                Polynomial r(n);
                for (unsigned a = 0; a < n; ++a) {
                    const Rational c = m.algebra.c(mm, j, a);  // C^a_{m j}
                    if (!is_zero(c)) r += c * parts[d][a];
                    if (!linear.at(a, j).is_zero()) r -= linear.at(a, j) * parts[d][mm].partial(a);
                }
                residual[j][mm] = std::move(r);
            }
        if (grid_all_zero(residual)) break;
        if (d >= cap)
            throw std::logic_error("left-invariant solver exceeded the nilindex degree cap");

        parts.emplace_back();
        auto& next = parts.back();
        for (unsigned mm = 0; mm < n; ++mm) {
            // gradient v = -omega^{-1} R_{.m}
            std::vector<Polynomial> gradient(n, Polynomial(n));
            for (unsigned a = 0; a < n; ++a)
                for (unsigned j = 0; j < n; ++j)
                    if (!residual[j][mm].is_zero())
                        gradient[a] -= omega_inv[a][j] * residual[j][mm];
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = a + 1; b < n; ++b)
                    if (!(gradient[a].partial(b) == gradient[b].partial(a)))
                        throw std::logic_error("left-invariant solver: inconsistent mixed partials");
            // Euler: f^(d+1) = (1/(d+1)) sum_b x_b v_b.
            Polynomial f(n);
            for (unsigned b = 0; b < n; ++b)
                if (!gradient[b].is_zero()) f += Polynomial::variable(n, b) * gradient[b];
            f *= rat(1, d + 1);
            for (unsigned a = 0; a < n; ++a)
                if (!(f.partial(a) == gradient[a]))
                    throw std::logic_error("left-invariant solver: gradient integration failed");
            next.push_back(std::move(f));
        }
    }

    LeftFieldSolution out{u, std::vector<Polynomial>(n, Polynomial(n)), 0};
    for (std::size_t d = 0; d < parts.size(); ++d)
        for (std::size_t i = 0; i < n; ++i) out.components[i] += parts[d][i];
    out.achieved_degree = std::max(0, out.field().degree());
    return out;
}

PolyMultiVector left_multivector(const ChartModel& m, const ConstantMultiVector& w) {
    if (w.dim != m.dim()) throw std::invalid_argument("multivector dimension mismatch");
    if (w.arity < 1 || w.arity > m.dim()) throw std::out_of_range("multivector arity out of range");
    const std::size_t n = m.dim();

    std::vector<PolyMultiVector> frame;
    RationalVector basis(n, Rational(0));
    for (unsigned i = 0; i < n; ++i) {
        basis.assign(n, Rational(0));
        basis[i] = 1;
        frame.push_back(to_multivector(left_invariant_field(m, basis).field()));
    }

    PolyMultiVector out(n, w.arity);
    for (const auto& [tuple, value] : w.comps) {
        PolyMultiVector term(n, 0);
        term.add_component(IndexTuple{}, Polynomial::constant(n, value));
        for (unsigned idx : tuple) term = wedge(term, frame[idx]);
        out += term;
    }
    return out;
}

PolyMultiVector lie_poisson_difference(const ChartModel& m, const ConstantMultiVector& w) {
    if (w.arity != 2) throw std::invalid_argument("expected a constant bivector");
    PolyMultiVector diff = left_multivector(m, w) - right_multivector(m, w);

    RationalGrid grid(w.dim, RationalVector(w.dim, Rational(0)));
    for (const auto& [tuple, value] : w.comps) {
        grid[tuple[0]][tuple[1]] = value;
        grid[tuple[1]][tuple[0]] = -value;
    }
    if (check_cybe(grid, m.algebra).ok) {
        if (diff.degree() > 2)
            throw std::logic_error("Lie-Poisson difference of a Yang-Baxter solution exceeded degree 2");
        if (!schouten_bracket(diff, diff).is_zero())
            throw std::logic_error("Lie-Poisson difference of a Yang-Baxter solution is not Poisson");
    }
    return diff;
}

bool parallel_transport_identity_check(const ChartModel& m, const RationalVector& u,
                                       const TransportTensor& tensor) {
    const PolyVectorField left_field = left_invariant_field(m, u).field();
    const SymplecticData data = symplectic_matrix(m);
    if (!data.polynomial) throw NonUnimodularError(data.marker);

    if (std::holds_alternative<PolyVectorField>(tensor)) {
        const auto& t = std::get<PolyVectorField>(tensor);
        PolyVectorField lhs(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) lhs.components[i] = left_field.apply(t.components[i]);
        const PolyForm dual = dualize(t, data.S, m.P);
        const PolyVectorField rhs = dualize(lie_derivative(left_field, dual), data.S, m.P);
        return lhs == rhs;
    }
    const auto& t = std::get<PolyForm>(tensor);
    if (t.arity() != 1) throw std::invalid_argument("transport check expects a vector field or 1-form");
    auto comps = one_form_components(t);
    std::vector<Polynomial> lhs(m.dim(), Polynomial(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) lhs[i] = left_field.apply(comps[i]);
    const PolyVectorField dual = dualize(t, data.S, m.P);
    const PolyForm rhs = dualize(lie_bracket(left_field, dual), data.S, m.P);
    return one_form(std::move(lhs)) == rhs;
}

}  // namespace sympol
