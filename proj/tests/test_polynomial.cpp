#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sympol/poly_matrix.hpp"
#include "sympol/text.hpp"

using namespace sympol;
using testing::Rng;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST_CASE("difference of squares") {
    // (x1 + 1)(x1 - 1) = x1^2 - 1
    const Polynomial one = Polynomial::constant(2, rat(1));
    const Polynomial x1 = var(2, 0);
    CHECK((x1 + one) * (x1 - one) == x1 * x1 - one);
}

TEST_CASE("additive identity and cancellation") {
    Rng rng(3);
    const Polynomial p = rng.polynomial(3, 3);
    CHECK(p + Polynomial(3) == p);
    const Polynomial y = var(3, 1), z = var(3, 2);
    CHECK(((-y) * z + y * z).is_zero());
}

TEST_CASE("num_vars mismatch is detected") {
    CHECK_THROWS_AS(Polynomial(2) + Polynomial(3), std::invalid_argument);
    CHECK_THROWS_AS(var(2, 0) * var(3, 0), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    // d/dY of (-Y) is -1: the degree-1 chart entries differentiate to
    // structure constants.
    const Polynomial minus_y = -var(4, 1);
    CHECK(minus_y.partial(1) == Polynomial::constant(4, rat(-1)));
    CHECK(Polynomial::constant(4, rat(9)).partial(0).is_zero());
    // power rule: d/dx1 (x1^2 x2) = 2 x1 x2
    const Polynomial p = var(4, 0) * var(4, 0) * var(4, 1);
    CHECK(p.partial(0) == rat(2) * (var(4, 0) * var(4, 1)));
    CHECK_THROWS_AS(p.partial(4), std::out_of_range);
}

TEST_CASE("degree and the zero sentinel") {
    CHECK(Polynomial(3).degree() == -1);
    CHECK(Polynomial::constant(3, rat(5)).degree() == 0);
    CHECK((var(3, 0) * var(3, 1)).degree() == 2);
}

TEST_CASE("deg(p*q) = deg p + deg q over exact rationals") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = rng.polynomial(3, 3);
        Polynomial q = rng.polynomial(3, 2);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial a = rng.polynomial(3, 3);
        const Polynomial b = rng.polynomial(3, 3);
        const Polynomial c = rng.polynomial(3, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is exact and multiplicative") {
    const Polynomial p = var(3, 0) * var(3, 1) + var(3, 2);  // x1 x2 + x3
    CHECK(p.evaluate({rat(1), rat(2), rat(3)}) == rat(5));
    CHECK((-var(4, 1)).evaluate({rat(0), rat(3), rat(0), rat(0)}) == rat(-3));
    CHECK_THROWS_AS(p.evaluate({rat(1)}), std::invalid_argument);

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial a = rng.polynomial(3, 3);
        const Polynomial b = rng.polynomial(3, 3);
        const RationalVector pt = rng.vector(3);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("substitution composes with evaluation") {
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial p = rng.polynomial(2, 3);
        std::vector<Polynomial> values = {rng.polynomial(3, 2), rng.polynomial(3, 2)};
        const Polynomial composed = p.substitute(values);
        const RationalVector pt = rng.vector(3);
        CHECK(composed.evaluate(pt) ==
              p.evaluate({values[0].evaluate(pt), values[1].evaluate(pt)}));
    }
}

TEST_CASE("exact polynomial division") {
    Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial a = rng.polynomial(3, 2);
        Polynomial b = rng.polynomial(3, 2);
        if (b.is_zero()) b = Polynomial::constant(3, rat(1));
        CHECK(divide_exact(a * b, b) == a);
    }
    // x1^2 + 1 is not divisible by x1
    CHECK(!try_divide_exact(var(2, 0) * var(2, 0) + Polynomial::constant(2, rat(1)), var(2, 0)));
    CHECK_THROWS_AS(divide_exact(var(2, 0), Polynomial(2)), std::invalid_argument);
}

TEST_CASE("identity matrix det and adjugate") {
    const PolyMatrix id = PolyMatrix::identity(4, 4);
    auto [det, adj] = det_adjugate(id);
    CHECK(det == Polynomial::constant(4, rat(1)));
    CHECK(adj == id);
}

TEST_CASE("2x2 counterexample determinant") {
    // [[0, x2+1], [-x2-1, 0]] has det (x2+1)^2 = x2^2 + 2 x2 + 1.
    const std::vector<std::string> names = {"x1", "x2"};
    PolyMatrix m(2, 2, 2);
    m.at(0, 1) = parse_polynomial("x2 + 1", names);
    m.at(1, 0) = parse_polynomial("-x2 - 1", names);
    const Polynomial expected = parse_polynomial("x2^2 + 2*x2 + 1", names);
    CHECK(determinant(m) == expected);
    auto [det, adj] = det_adjugate(m);
    CHECK(det == expected);
    CHECK(m * adj == det * PolyMatrix::identity(2, 2));
}

TEST_CASE("catalog matrix of g1: det 1 and the printed inverse") {
    const CatalogEntry g1 = load("g1");
    const PolyMatrix a = poisson_matrix_from(g1.algebra, g1.omega);
    auto [det, adj] = det_adjugate(a);
    CHECK(det == Polynomial::constant(4, rat(1)));
    // det = 1, so the adjugate is the printed inverse table.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(to_canonical(adj.at(i, j), g1.chart_names) == g1.golden_S[i][j]);
    CHECK(a * adj == PolyMatrix::identity(4, 4));
    // the constant determinant evaluates to 1 at any point
    testing::Rng rng(47);
    for (int trial = 0; trial < 3; ++trial) CHECK(det.evaluate(rng.vector(4)) == rat(1));
}

TEST_CASE("M * adj(M) = det(M) * I for random degree-1 matrices") {
    Rng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + rng.below(4);  // up to 5x5
        PolyMatrix m(n, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.polynomial(n, 1, 2);
        auto [det, adj] = det_adjugate(m);
        CHECK(m * adj == det * PolyMatrix::identity(n, n));
        CHECK(determinant_cofactor(m) == det);  // two determinant routes agree
    }
}

TEST_CASE("singular matrices have zero determinant and consistent adjugate") {
    PolyMatrix m(3, 3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        m.at(0, j) = var(3, j);
        m.at(1, j) = rat(2) * var(3, j);
        m.at(2, j) = Polynomial::constant(3, rat(1));
    }
    auto [det, adj] = det_adjugate(m);
    CHECK(det.is_zero());
    CHECK(m * adj == PolyMatrix(3, 3, 3));
}
