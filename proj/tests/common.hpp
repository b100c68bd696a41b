#pragma once

#include <cstdint>

#include "sympol/catalog.hpp"
#include "sympol/chart.hpp"

namespace sympol::testing {

// Deterministic generator so every "random" test is reproducible from a
// fixed seed, independent of the standard library implementation.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {
        next();
        next();
    }

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long max_num = 5, long max_den = 3) {
        return rat(int_in(-max_num, max_num), int_in(1, max_den));
    }

    RationalVector vector(std::size_t n, long max_num = 5, long max_den = 3) {
        RationalVector out(n, Rational(0));
        for (auto& q : out) q = rational(max_num, max_den);
        return out;
    }

    Polynomial polynomial(std::size_t num_vars, int max_degree, std::size_t terms = 4) {
        Polynomial p(num_vars);
        for (std::size_t t = 0; t < terms; ++t) {
            Monomial mono(num_vars, 0);
            int budget = static_cast<int>(below(static_cast<std::uint64_t>(max_degree + 1)));
            for (int d = 0; d < budget; ++d) ++mono[below(num_vars)];
            p.add_term(mono, rational());
        }
        return p;
    }

    PolyVectorField field(std::size_t num_vars, int max_degree) {
        PolyVectorField out(num_vars);
        for (auto& c : out.components) c = polynomial(num_vars, max_degree, 3);
        return out;
    }
};

struct AlgebraPair {
    StructureConstants algebra;
    TwoCocycle omega;
};

// Base algebra padded with abelian directions, then conjugated by a
// random integer change of basis. Validity (Jacobi, cocycle,
// non-degeneracy, nilpotency class) is preserved by construction.
inline AlgebraPair random_valid_pair(std::uint64_t seed) {
    Rng rng(seed);

    CatalogEntry base = load(rng.below(2) == 0 ? "g1" : "g4");
    const std::size_t pad = 2 * rng.below(2);  // 0 or 2 abelian directions
    const std::size_t n = base.algebra.dim() + pad;

    StructureConstants algebra(n);
    for (const auto& [key, coeffs] : base.algebra.stored_brackets()) {
        RationalVector padded = coeffs;
        padded.resize(n, Rational(0));
        algebra.set_bracket(key.first, key.second, padded);
    }
    RationalGrid omega_grid(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < base.omega.dim(); ++i)
        for (std::size_t j = 0; j < base.omega.dim(); ++j) omega_grid[i][j] = base.omega.at(i, j);
    for (std::size_t i = base.omega.dim(); i + 1 < n; i += 2) {
        omega_grid[i][i + 1] = 1;
        omega_grid[i + 1][i] = -1;
    }

    // Random integer change of basis, tracked together with its inverse.
    RationalGrid t = identity_grid(n);
    RationalGrid tinv = identity_grid(n);
    const std::size_t ops = 4 + rng.below(5);
    for (std::size_t o = 0; o < ops; ++o) {
        const std::size_t a = rng.below(n);
        std::size_t b = rng.below(n);
        while (b == a) b = rng.below(n);
        switch (rng.below(3)) {
            case 0: {  // u'_a += k u'_b
                Rational k = rat(rng.int_in(-2, 2));
                if (is_zero(k)) k = 1;
                for (std::size_t r = 0; r < n; ++r) t[r][a] += k * t[r][b];
                for (std::size_t c = 0; c < n; ++c) tinv[b][c] -= k * tinv[a][c];
                break;
            }
            case 1: {  // swap
                for (std::size_t r = 0; r < n; ++r) std::swap(t[r][a], t[r][b]);
                std::swap(tinv[a], tinv[b]);
                break;
            }
            default: {  // negate
                for (std::size_t r = 0; r < n; ++r) t[r][a] = -t[r][a];
                for (std::size_t c = 0; c < n; ++c) tinv[a][c] = -tinv[a][c];
                break;
            }
        }
    }

    StructureConstants out(n);
    RationalVector ui(n), uj(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            for (std::size_t r = 0; r < n; ++r) {
                ui[r] = t[r][i];
                uj[r] = t[r][j];
            }
            out.set_bracket(i, j, multiply(tinv, algebra.bracket(ui, uj)));
        }

    RationalGrid tt(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tt[i][j] = t[j][i];
    return AlgebraPair{out, TwoCocycle::from_grid(multiply(multiply(tt, omega_grid), t))};
}

inline RationalVector basis_vector(std::size_t n, std::size_t i) {
    RationalVector v(n, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace sympol::testing
