#pragma once

#include <variant>

#include "sympol/chart.hpp"

namespace sympol {

struct NotNilpotentError : std::runtime_error {
    NotNilpotentError(const std::string& what, NilpotencyResult verdict)
        : std::runtime_error(what), verdict(std::move(verdict)) {}
    NilpotencyResult verdict;
};

// Chart expression of the left-invariant field u^+ on a nilpotent
// symplectic Lie group: u^+ = sum_j f_j d/dx_j with f_j(0) = omega(u_j, u)
// and [u^+, v^-] = 0 for every right-invariant v^-.
struct LeftFieldSolution {
    RationalVector u;
    std::vector<Polynomial> components;
    int achieved_degree;

    PolyVectorField field() const { return PolyVectorField(components); }
};

// Degree-graded iteration: the degree-(d+1) part of f is recovered from
// the degree-d residual through the constant matrix P(0) = omega and
// Euler's identity. Refuses non-nilpotent algebras up front; aborts
// loudly if the iteration passes the nilindex cap or produces
// inconsistent mixed partials (either would be a convention bug).
LeftFieldSolution left_invariant_field(const ChartModel& m, const RationalVector& u);

// Wedge/linearity extension of u -> u^+.
PolyMultiVector left_multivector(const ChartModel& m, const ConstantMultiVector& w);

// left_multivector(w) - right_multivector(w) for a constant bivector w.
// When w solves the classical Yang-Baxter equation the result is checked
// to have degree <= 2 and vanishing Schouten square.
PolyMultiVector lie_poisson_difference(const ChartModel& m, const ConstantMultiVector& w);

using TransportTensor = std::variant<PolyVectorField, PolyForm>;

// Flat-connection derivative along u^+ versus the dualized Lie
// derivative: nabla_{u^+} T == (L_{u^+} T^w)^w, checked symbolically.
bool parallel_transport_identity_check(const ChartModel& m, const RationalVector& u,
                                       const TransportTensor& tensor);

}  // namespace sympol
