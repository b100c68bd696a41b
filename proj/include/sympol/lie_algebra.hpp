#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "sympol/rational.hpp"

namespace sympol {

// Lie algebra given by structure constants. Only i<j pairs are stored;
// reads are antisymmetrized. Registering (i,j) twice, or with i >= j,
// is rejected rather than silently merged.
class StructureConstants {
public:
    StructureConstants(std::size_t dim, std::vector<std::string> names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }

    // coeffs[k] is the coefficient of e_k in [e_i, e_j]; requires i < j.
    void set_bracket(unsigned i, unsigned j, RationalVector coeffs);

    // C^k_ij for arbitrary i, j.
    Rational c(unsigned i, unsigned j, unsigned k) const;

    // [u, v] extended bilinearly.
    RationalVector bracket(const RationalVector& u, const RationalVector& v) const;

    const std::map<std::pair<unsigned, unsigned>, RationalVector>& stored_brackets() const {
        return brackets_;
    }

    bool is_abelian() const { return brackets_.empty(); }

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    std::map<std::pair<unsigned, unsigned>, RationalVector> brackets_;
};

// Antisymmetric scalar 2-form on the algebra.
struct TwoCocycle {
    RationalGrid omega;

    static TwoCocycle from_grid(RationalGrid grid);
    static TwoCocycle from_sparse(std::size_t dim,
                                  const std::vector<std::tuple<unsigned, unsigned, Rational>>& entries);

    std::size_t dim() const { return omega.size(); }
    const Rational& at(unsigned i, unsigned j) const { return omega[i][j]; }
};

struct JacobiCheck {
    bool ok;
    // (i, j, k, l): basis triple whose Jacobiator has a nonzero e_l part.
    std::optional<std::array<unsigned, 4>> witness;
};

struct CocycleCheck {
    bool ok;
    // (i, j, k): basis triple violating the cocycle identity.
    std::optional<std::array<unsigned, 3>> witness;
};

struct UnimodularCheck {
    bool ok;
    std::optional<unsigned> witness;  // basis index with trace(ad) != 0
    RationalVector traces;
};

struct NilpotencyResult {
    bool nilpotent;
    int nilindex;  // number of nonzero terms of the lower central series; -1 if not nilpotent
    bool solvable;
    std::vector<std::size_t> lower_central_dims;  // dims of g^1, g^2, ...
    std::vector<std::size_t> derived_dims;
};

struct CybeCheck {
    bool ok;
    std::optional<std::array<unsigned, 3>> witness;  // component of [r,r] that is nonzero
};

JacobiCheck check_jacobi(const StructureConstants& c);
CocycleCheck check_cocycle(const TwoCocycle& omega, const StructureConstants& c);
UnimodularCheck check_unimodular(const StructureConstants& c);
NilpotencyResult lower_central_series(const StructureConstants& c);
bool is_nondegenerate(const TwoCocycle& omega);

// The constant bivector r with matrix omega^{-1}; throws std::domain_error
// when omega is degenerate.
RationalGrid yang_baxter_r(const TwoCocycle& omega);

// Algebraic Schouten bracket [r,r] on Lambda^3 g; ok iff it vanishes.
CybeCheck check_cybe(const RationalGrid& r, const StructureConstants& c);

struct AlgebraReport {
    JacobiCheck jacobi;
    CocycleCheck cocycle;
    bool nondegenerate;
    UnimodularCheck unimodular;
    NilpotencyResult nilpotency;
    std::optional<CybeCheck> cybe_of_r;  // for r = omega^{-1}; absent when omega degenerate

    bool structural_ok() const { return jacobi.ok && cocycle.ok && nondegenerate; }
};

AlgebraReport analyze(const StructureConstants& c, const TwoCocycle& omega);

std::vector<std::string> default_basis_names(std::size_t n);

}  // namespace sympol
