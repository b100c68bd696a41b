#pragma once

#include "sympol/lie_algebra.hpp"
#include "sympol/tensors.hpp"

namespace sympol {

// Constant multivector on the algebra, given on increasing basis tuples.
struct ConstantMultiVector {
    std::size_t dim;
    std::size_t arity;
    std::map<IndexTuple, Rational> comps;

    static ConstantMultiVector basis_tuple(std::size_t dim, IndexTuple tuple);
    static ConstantMultiVector from_grid(const RationalGrid& grid);  // arity 2
    void add(IndexTuple tuple, Rational value);
};

struct ChartPreconditionError : std::runtime_error {
    ChartPreconditionError(const std::string& what, std::string witness)
        : std::runtime_error(what), witness(std::move(witness)) {}
    std::string witness;
};

struct NonUnimodularError : std::runtime_error {
    explicit NonUnimodularError(const std::string& what) : std::runtime_error(what) {}
};

// Affine-chart model centered at the group identity: the Poisson matrix
// P(x) has entries sum_k C^k_ij x_k + omega_ij, so P(0) = omega and
// d_k P_ij = C^k_ij.
struct ChartModel {
    StructureConstants algebra;
    TwoCocycle omega;
    PolyMatrix P;
    std::vector<std::string> chart_names;

    std::size_t dim() const { return algebra.dim(); }
};

// The P(x) matrix alone, with no algebraic preconditions; used by the
// corruption-detection tests, which need charts over invalid data.
PolyMatrix poisson_matrix_from(const StructureConstants& c, const TwoCocycle& omega);

// Validates Jacobi, the cocycle identity and non-degeneracy, then builds
// the model; throws ChartPreconditionError carrying the failing witness.
ChartModel build_chart(const StructureConstants& c, const TwoCocycle& omega,
                       std::vector<std::string> chart_names = {});

inline constexpr const char* kNonUnimodularMarker = "non-polynomial inverse (non-unimodular)";

struct SymplecticData {
    Polynomial det;        // det P
    PolyMatrix adjugate;   // adj P, always available
    bool polynomial;       // det constant nonzero, S = adj/det is polynomial
    PolyMatrix S;          // valid when polynomial
    std::string marker;    // kNonUnimodularMarker when not polynomial
};

// Throws std::domain_error when det P is identically zero (degenerate
// omega; excluded by build_chart but checked defensively).
SymplecticData symplectic_matrix(const ChartModel& m);

// The 2-form with coefficient matrix S, matching the printed tables of
// the catalog; requires a polynomial inverse.
PolyForm symplectic_form(const ChartModel& m);

PolyMultiVector poisson_bivector(const ChartModel& m);

// u^- for a constant vector u; column combination of P, degree <= 1.
PolyVectorField right_invariant_field(const ChartModel& m, const RationalVector& u);

// alpha^- for a constant covector; row combination of S, degree <= n-1.
PolyForm right_invariant_form(const ChartModel& m, const RationalVector& alpha);

// Wedge/linearity extension of u -> u^-; degree <= arity.
PolyMultiVector right_multivector(const ChartModel& m, const ConstantMultiVector& w);

Polynomial poisson_bracket(const ChartModel& m, const Polynomial& f, const Polynomial& g);

struct VolumeReport {
    Polynomial det;
    bool parallel;                       // det P constant (and nonzero)
    std::optional<PolyForm> top_wedge;   // wedge^{n/2} of the symplectic form, when polynomial
    bool wedge_constant;                 // all top-wedge coefficients constant
    bool identity_ok;                    // det P == (top wedge on the right frame)^2/((n/2)!)^2
};

VolumeReport volume_check(const ChartModel& m);  // throws on odd dimension

// Sharps of the right-invariant coframe: all constant, pairwise commuting.
bool commuting_frame_check(const ChartModel& m);

}  // namespace sympol
