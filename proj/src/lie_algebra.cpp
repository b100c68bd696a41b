#include "sympol/lie_algebra.hpp"

#include <stdexcept>

namespace sympol {

std::vector<std::string> default_basis_names(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i + 1);
    return names;
}

StructureConstants::StructureConstants(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)) {
    if (dim_ == 0) throw std::invalid_argument("zero-dimensional algebra");
    if (names_.empty()) names_ = default_basis_names(dim_);
    if (names_.size() != dim_) throw std::invalid_argument("basis name count mismatch");
}

void StructureConstants::set_bracket(unsigned i, unsigned j, RationalVector coeffs) {
    if (i >= j) throw std::invalid_argument("brackets must be stored with i < j");
    if (j >= dim_) throw std::out_of_range("bracket index out of range");
    if (coeffs.size() != dim_) throw std::invalid_argument("bracket coefficient length mismatch");
    bool all_zero = true;
    for (const auto& q : coeffs)
        if (!is_zero(q)) {
            all_zero = false;
            break;
        }
    if (!brackets_.emplace(std::make_pair(i, j), std::move(coeffs)).second)
        throw std::invalid_argument("duplicate bracket entry");
    if (all_zero) brackets_.erase({i, j});
}

Rational StructureConstants::c(unsigned i, unsigned j, unsigned k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index");
    if (i == j) return Rational(0);
    const bool flip = i > j;
    auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end()) return Rational(0);
    return flip ? -it->second[k] : it->second[k];
}

RationalVector StructureConstants::bracket(const RationalVector& u, const RationalVector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("vector length mismatch");
    RationalVector out(dim_, Rational(0));
    for (const auto& [key, coeffs] : brackets_) {
        const auto [i, j] = key;
        const Rational scale = u[i] * v[j] - u[j] * v[i];
        if (is_zero(scale)) continue;
        for (std::size_t k = 0; k < dim_; ++k) out[k] += scale * coeffs[k];
    }
    return out;
}

TwoCocycle TwoCocycle::from_grid(RationalGrid grid) {
    if (!is_antisymmetric(grid)) throw std::invalid_argument("cocycle grid must be antisymmetric");
    return TwoCocycle{std::move(grid)};
}

TwoCocycle TwoCocycle::from_sparse(std::size_t dim,
                                   const std::vector<std::tuple<unsigned, unsigned, Rational>>& entries) {
    RationalGrid grid(dim, RationalVector(dim, Rational(0)));
    std::map<std::pair<unsigned, unsigned>, bool> seen;
    for (const auto& [i, j, value] : entries) {
        if (i >= j) throw std::invalid_argument("cocycle entries must be stored with i < j");
        if (j >= dim) throw std::out_of_range("cocycle index out of range");
        if (!seen.emplace(std::make_pair(i, j), true).second)
            throw std::invalid_argument("duplicate cocycle entry");
        grid[i][j] = value;
        grid[j][i] = -value;
    }
    return TwoCocycle{std::move(grid)};
}

JacobiCheck check_jacobi(const StructureConstants& c) {
    const unsigned n = static_cast<unsigned>(c.dim());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = j + 1; k < n; ++k)
                for (unsigned l = 0; l < n; ++l) {
                    Rational acc(0);
                    for (unsigned m = 0; m < n; ++m) {
                        acc += c.c(i, j, m) * c.c(m, k, l);
                        acc += c.c(j, k, m) * c.c(m, i, l);
                        acc += c.c(k, i, m) * c.c(m, j, l);
                    }
                    if (!is_zero(acc)) return {false, std::array<unsigned, 4>{i, j, k, l}};
                }
    return {true, std::nullopt};
}

CocycleCheck check_cocycle(const TwoCocycle& omega, const StructureConstants& c) {
    if (omega.dim() != c.dim()) throw std::invalid_argument("cocycle dimension mismatch");
    if (!is_antisymmetric(omega.omega))
        throw std::invalid_argument("cocycle grid must be antisymmetric");
    const unsigned n = static_cast<unsigned>(c.dim());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = j + 1; k < n; ++k) {
                // omega([u_i,u_j],u_k) + omega([u_j,u_k],u_i) + omega([u_k,u_i],u_j)
                Rational acc(0);
                for (unsigned m = 0; m < n; ++m) {
                    acc += c.c(i, j, m) * omega.at(m, k);
                    acc += c.c(j, k, m) * omega.at(m, i);
                    acc += c.c(k, i, m) * omega.at(m, j);
                }
                if (!is_zero(acc)) return {false, std::array<unsigned, 3>{i, j, k}};
            }
    return {true, std::nullopt};
}

UnimodularCheck check_unimodular(const StructureConstants& c) {
    const unsigned n = static_cast<unsigned>(c.dim());
    UnimodularCheck out{true, std::nullopt, RationalVector(n, Rational(0))};
    for (unsigned i = 0; i < n; ++i) {
        Rational trace(0);
        for (unsigned k = 0; k < n; ++k) trace += c.c(i, k, k);
        out.traces[i] = trace;
        if (!is_zero(trace) && out.ok) {
            out.ok = false;
            out.witness = i;
        }
    }
    return out;
}

namespace {

// Span of the brackets [e_i, b] over all basis vectors e_i and rows b.
RationalGrid bracket_span(const StructureConstants& c, const RationalGrid& subspace) {
    RationalGrid generated;
    RationalVector ei(c.dim(), Rational(0));
    for (unsigned i = 0; i < c.dim(); ++i) {
        ei.assign(c.dim(), Rational(0));
        ei[i] = 1;
        for (const auto& row : subspace) generated.push_back(c.bracket(ei, row));
    }
    row_reduce(generated);
    return generated;
}

RationalGrid derived_span(const StructureConstants& c, const RationalGrid& subspace) {
    RationalGrid generated;
    for (std::size_t a = 0; a < subspace.size(); ++a)
        for (std::size_t b = a + 1; b < subspace.size(); ++b)
            generated.push_back(c.bracket(subspace[a], subspace[b]));
    row_reduce(generated);
    return generated;
}

}  // namespace

NilpotencyResult lower_central_series(const StructureConstants& c) {
    NilpotencyResult out{false, -1, false, {}, {}};

    RationalGrid current = identity_grid(c.dim());
    out.lower_central_dims.push_back(current.size());
    while (true) {
        RationalGrid next = bracket_span(c, current);
        if (next.size() == current.size()) break;  // stabilized at nonzero dimension
        out.lower_central_dims.push_back(next.size());
        if (next.empty()) {
            out.nilpotent = true;
            out.nilindex = static_cast<int>(out.lower_central_dims.size()) - 1;
            break;
        }
        current = std::move(next);
    }

    current = identity_grid(c.dim());
    out.derived_dims.push_back(current.size());
    while (true) {
        RationalGrid next = derived_span(c, current);
        if (next.size() == current.size()) break;
        out.derived_dims.push_back(next.size());
        if (next.empty()) {
            out.solvable = true;
            break;
        }
        current = std::move(next);
    }

    return out;
}

bool is_nondegenerate(const TwoCocycle& omega) {
    return !is_zero(determinant(omega.omega));
}

RationalGrid yang_baxter_r(const TwoCocycle& omega) {
    if (!is_nondegenerate(omega)) throw std::domain_error("degenerate cocycle has no r-matrix");
    return inverse(omega.omega);
}

CybeCheck check_cybe(const RationalGrid& r, const StructureConstants& c) {
    const unsigned n = static_cast<unsigned>(c.dim());
    if (r.size() != n) throw std::invalid_argument("r-matrix dimension mismatch");
    if (!is_antisymmetric(r)) throw std::invalid_argument("r-matrix must be antisymmetric");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = j + 1; k < n; ++k) {
                Rational acc(0);
                for (unsigned a = 0; a < n; ++a)
                    for (unsigned b = 0; b < n; ++b) {
                        acc += r[i][a] * r[j][b] * c.c(a, b, k);
                        acc += r[j][a] * r[k][b] * c.c(a, b, i);
                        acc += r[k][a] * r[i][b] * c.c(a, b, j);
                    }
                if (!is_zero(acc)) return {false, std::array<unsigned, 3>{i, j, k}};
            }
    return {true, std::nullopt};
}

AlgebraReport analyze(const StructureConstants& c, const TwoCocycle& omega) {
    AlgebraReport report{
        check_jacobi(c),
        check_cocycle(omega, c),
        is_nondegenerate(omega),
        check_unimodular(c),
        lower_central_series(c),
        std::nullopt,
    };
    if (report.nondegenerate) report.cybe_of_r = check_cybe(yang_baxter_r(omega), c);
    return report;
}

}  // namespace sympol
