#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sympol/text.hpp"

using namespace sympol;
using testing::Rng;
using testing::basis_vector;

TEST_CASE("catalog loads and rejects unknown ids") {
    CHECK(catalog_ids() == std::vector<std::string>{"g1", "g2", "g3", "g4", "aff2"});
    for (const auto& id : catalog_ids()) {
        const CatalogEntry entry = load(id);
        CHECK(entry.id == id);
        CHECK(entry.algebra.dim() == entry.omega.dim());
        CHECK_FALSE(entry.golden_P.empty());
        CHECK_FALSE(entry.lattice_notes.empty());
    }
    CHECK_THROWS_AS(load("g5"), UnknownCatalogId);

    const CatalogEntry g1 = load("g1");
    CHECK(g1.algebra.names() == std::vector<std::string>{"e1", "e2", "e3", "e4"});
    // [e4,e1] = e2 and [e4,e2] = e3 read through antisymmetry
    CHECK(g1.algebra.c(3, 0, 1) == rat(1));
    CHECK(g1.algebra.c(3, 1, 2) == rat(1));
    // omega = e4* ^ e3* + e1* ^ e2*
    CHECK(g1.omega.at(3, 2) == rat(1));
    CHECK(g1.omega.at(0, 1) == rat(1));

    const CatalogEntry g4 = load("g4");
    CHECK(g4.algebra.c(0, 1, 2) == rat(1));  // [e1,e2] = e3
    CHECK(g4.omega.at(0, 3) == rat(1));
    CHECK(g4.omega.at(1, 2) == rat(1));

    const CatalogEntry aff2 = load("aff2");
    CHECK(aff2.algebra.dim() == 2);
    CHECK(aff2.algebra.c(0, 1, 1) == rat(1));
}

TEST_CASE("golden comparison is clean for every entry") {
    for (const auto& id : catalog_ids()) {
        const GoldenReport report = golden_compare(load(id));
        INFO(id);
        for (const auto& d : report.diffs)
            MESSAGE(d.tensor, d.location, ": expected ", d.expected, ", got ", d.got);
        CHECK(report.ok());
    }
    // g2's report documents the printed-table discrepancy
    CHECK_FALSE(golden_compare(load("g2")).notes.empty());
    CHECK(golden_compare(load("g1")).notes.empty());
}

TEST_CASE("expected flags agree with the algebra checks") {
    for (const auto& id : catalog_ids()) {
        const CatalogEntry entry = load(id);
        const AlgebraReport report = analyze(entry.algebra, entry.omega);
        CHECK(report.jacobi.ok);
        CHECK(report.cocycle.ok);
        CHECK(report.nondegenerate);
        CHECK(report.unimodular.ok == entry.expect_unimodular);
        CHECK(report.nilpotency.nilpotent == entry.expect_nilpotent);
        if (entry.expect_nilpotent) CHECK(report.nilpotency.nilindex == entry.expect_nilindex);
        CHECK(report.nilpotency.solvable == entry.expect_solvable);
    }
}

TEST_CASE("chart maps and inverse charts compose to the identity") {
    for (const auto& id : catalog_ids()) {
        const CatalogEntry entry = load(id);
        if (!entry.oracle) continue;
        const std::size_t n = entry.algebra.dim();
        for (std::size_t i = 0; i < n; ++i) {
            // inverse_chart_i(chart_map) == group variable i
            const Polynomial composed = entry.oracle->inverse_chart[i].substitute(entry.oracle->chart_map);
            CHECK(composed == Polynomial::variable(n, i));
            // chart_map_i(inverse_chart) == chart variable i
            const Polynomial other = entry.oracle->chart_map[i].substitute(entry.oracle->inverse_chart);
            CHECK(other == Polynomial::variable(n, i));
        }
    }
}

TEST_CASE("oracle equals the symbolic model at seeded random chart points") {
    Rng rng(42);
    for (const char* id : {"g1", "g2", "g3", "g4"}) {
        const CatalogEntry entry = load(id);
        const ChartModel model = build_chart(entry.algebra, entry.omega, entry.chart_names);
        const SymplecticData data = symplectic_matrix(model);
        REQUIRE(data.polynomial);
        for (int trial = 0; trial < 10; ++trial) {
            const RationalVector pt = rng.vector(4);
            CHECK(numeric_oracle(entry, "P", pt) == model.P.evaluate(pt));
            CHECK(numeric_oracle(entry, "S", pt) == data.S.evaluate(pt));
        }
        CHECK_THROWS_AS(numeric_oracle(entry, "Q", rng.vector(4)), std::invalid_argument);
    }
}

TEST_CASE("oracle at the identity recovers omega") {
    const RationalVector origin(4, Rational(0));
    for (const char* id : {"g1", "g2", "g3", "g4"}) {
        const CatalogEntry entry = load(id);
        CHECK(oracle_p_matrix(entry, origin) == entry.omega.omega);
        // the group point under the chart origin is the identity
        const RationalVector g = oracle_group_point(entry, origin);
        for (const auto& q : g) CHECK(is_zero(q));
    }
}

TEST_CASE("g2 oracle resolves the printed sign: P_12 = +Y") {
    const CatalogEntry g2 = load("g2");
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        RationalVector pt = rng.vector(4);
        pt[1] = rat(5);  // Y = 5
        CHECK(oracle_p_matrix(g2, pt)[0][1] == rat(5));
    }
}

TEST_CASE("g1 oracle entry (1,4) equals -Y") {
    const CatalogEntry g1 = load("g1");
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        RationalVector pt = rng.vector(4);
        pt[1] = rat(2);
        CHECK(oracle_p_matrix(g1, pt)[0][3] == rat(-2));
    }
}

TEST_CASE("right frames push forward to the P columns everywhere") {
    Rng rng(11);
    for (const char* id : {"g1", "g2", "g3", "g4"}) {
        const CatalogEntry entry = load(id);
        const ChartModel model = build_chart(entry.algebra, entry.omega, entry.chart_names);
        for (int trial = 0; trial < 4; ++trial) {
            const RationalVector u = rng.vector(4);
            const RationalVector pt = rng.vector(4);
            const PolyVectorField field = right_invariant_field(model, u);
            const RationalVector expected = oracle_invariant_field(entry, u, pt, false);
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(field.components[c].evaluate(pt) == expected[c]);
        }
    }
    CHECK_THROWS_AS(oracle_invariant_field(load("g2"), basis_vector(4, 0),
                                           RationalVector(4, Rational(0)), true),
                    std::invalid_argument);  // no polynomial left frame on g2
}

TEST_CASE("aff2 has no oracle pack") {
    const CatalogEntry aff2 = load("aff2");
    CHECK_FALSE(aff2.oracle.has_value());
    CHECK_THROWS_AS(oracle_p_matrix(aff2, RationalVector(2, Rational(0))),
                    std::invalid_argument);
}
