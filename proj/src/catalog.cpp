#include "sympol/catalog.hpp"

#include "sympol/text.hpp"

namespace sympol {

namespace {

const std::vector<std::string> kIds = {"g1", "g2", "g3", "g4", "aff2"};
const std::vector<std::string> kChartNames = {"X", "Y", "Z", "T"};

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts,
                                  const std::vector<std::string>& names) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_polynomial(t, names));
    return out;
}

PolyVectorField parse_field(const std::vector<std::string>& comps,
                            const std::vector<std::string>& names) {
    return PolyVectorField(parse_all(comps, names));
}

PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows,
                        const std::vector<std::string>& names) {
    PolyMatrix out(rows.size(), rows.empty() ? 0 : rows[0].size(), names.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            out.at(i, j) = parse_polynomial(rows[i][j], names);
    return out;
}

RationalVector coeffs4(long a, long b, long c, long d) {
    return {rat(a), rat(b), rat(c), rat(d)};
}

CatalogEntry make_g1() {
    StructureConstants algebra(4);
    // [e4,e1] = e2 and [e4,e2] = e3, stored on increasing pairs.
    algebra.set_bracket(0, 3, coeffs4(0, -1, 0, 0));
    algebra.set_bracket(1, 3, coeffs4(0, 0, -1, 0));
    TwoCocycle omega = TwoCocycle::from_sparse(4, {{0, 1, rat(1)}, {2, 3, rat(-1)}});

    const std::vector<std::string> gv = {"x", "y", "z", "t"};
    OraclePack oracle{
        gv,
        parse_all({"y - 1/6*t^3", "-x + 1/2*t^2", "-t", "-1/2*x^2 + 1/2*x*t^2 - y*t + z"}, gv),
        parse_all({"1/2*Z^2 - Y", "X - 1/6*Z^3", "T + 1/2*Y^2 - X*Z + 1/24*Z^4", "-Z"},
                  kChartNames),
        parse_matrix({{"0", "1", "0", "-1/2*t^2"},
                      {"-1", "0", "0", "t"},
                      {"0", "0", "0", "-1"},
                      {"1/2*t^2", "-t", "1", "0"}},
                     gv),
        {parse_field({"1", "0", "0", "0"}, gv), parse_field({"0", "1", "0", "0"}, gv),
         parse_field({"0", "0", "1", "0"}, gv), parse_field({"0", "x", "y", "1"}, gv)},
        {parse_field({"1", "t", "1/2*t^2", "0"}, gv), parse_field({"0", "1", "t", "0"}, gv),
         parse_field({"0", "0", "1", "0"}, gv), parse_field({"0", "0", "0", "1"}, gv)},
    };

    return CatalogEntry{
        "g1",
        "filiform nilpotent group of dimension 4",
        algebra,
        omega,
        kChartNames,
        {{"0", "1", "0", "-Y"}, {"-1", "0", "0", "-Z"}, {"0", "0", "0", "-1"}, {"Y", "Z", "1", "0"}},
        {{"0", "-1", "Z", "0"}, {"1", "0", "-Y", "0"}, {"-Z", "Y", "0", "1"}, {"0", "0", "-1", "0"}},
        "∂X^∂Y - Y*∂X^∂T - Z*∂Y^∂T - ∂Z^∂T",
        "-dX^dY + Z*dX^dZ - Y*dY^dZ + dZ^dT",
        "1",
        true,
        true,
        3,
        true,
        oracle,
        {},
        "integer points with even last coordinate form a uniform lattice; "
        "infinitely many pairwise non-isomorphic lattices exist",
    };
}

CatalogEntry make_g2() {
    StructureConstants algebra(4);
    // [e1,e2] = e2 and [e1,e3] = -e3.
    algebra.set_bracket(0, 1, coeffs4(0, 1, 0, 0));
    algebra.set_bracket(0, 2, coeffs4(0, 0, -1, 0));
    TwoCocycle omega = TwoCocycle::from_sparse(4, {{0, 3, rat(1)}, {1, 2, rat(1)}});

    const std::vector<std::string> gv = {"x", "y", "z", "t"};
    OraclePack oracle{
        gv,
        parse_all({"t + y*z", "z", "-y", "-x"}, gv),
        parse_all({"-T", "-Z", "Y", "X + Y*Z"}, kChartNames),
        parse_matrix({{"0", "0", "0", "1"},
                      {"0", "0", "1", "0"},
                      {"0", "-1", "0", "0"},
                      {"-1", "0", "0", "0"}},
                     gv),
        {parse_field({"1", "y", "-z", "0"}, gv), parse_field({"0", "1", "0", "0"}, gv),
         parse_field({"0", "0", "1", "0"}, gv), parse_field({"0", "0", "0", "1"}, gv)},
        {},
    };

    return CatalogEntry{
        "g2",
        "solvable non-nilpotent group of dimension 4 (hyperbolic type)",
        algebra,
        omega,
        kChartNames,
        {{"0", "Y", "-Z", "1"}, {"-Y", "0", "1", "0"}, {"Z", "-1", "0", "0"}, {"-1", "0", "0", "0"}},
        {{"0", "0", "0", "-1"}, {"0", "0", "-1", "-Z"}, {"0", "1", "0", "-Y"}, {"1", "Z", "Y", "0"}},
        "Y*∂X^∂Y - Z*∂X^∂Z + ∂X^∂T + ∂Y^∂Z",
        "-dX^dT - dY^dZ - Z*dY^dT - Y*dZ^dT",
        "1",
        true,
        false,
        -1,
        true,
        oracle,
        {
            "printed-table discrepancy at entries (1,2)/(2,1): the printed matrix has "
            "A_12 = -Y, but the chart model and the numeric pushforward oracle both give +Y",
            "the discrepancy propagates to the printed bivector term -Y dX^dY (resolved: +Y), "
            "to the printed inverse entries (3,4)/(4,3) (resolved: A^-1_34 = -Y), and to the "
            "printed 2-form term +Y dZ^dT (resolved: -Y)",
        },
        "lattices are products L x Z where L is generated by the integer plane "
        "and a hyperbolic integer automorphism [[0,-1],[1,n]] with n >= 3",
    };
}

CatalogEntry make_g3() {
    StructureConstants algebra(4);
    // [e1,e2] = e3 and [e1,e3] = -e2.
    algebra.set_bracket(0, 1, coeffs4(0, 0, 1, 0));
    algebra.set_bracket(0, 2, coeffs4(0, -1, 0, 0));
    TwoCocycle omega = TwoCocycle::from_sparse(4, {{0, 3, rat(1)}, {1, 2, rat(1)}});

    // The first chart coordinate is forced by the contraction of e1^- into
    // the symplectic form: dt - y dy - z dz, so X = t - (y^2 + z^2)/2.
    const std::vector<std::string> gv = {"x", "y", "z", "t"};
    OraclePack oracle{
        gv,
        parse_all({"t - 1/2*y^2 - 1/2*z^2", "z", "-y", "-x"}, gv),
        parse_all({"-T", "-Z", "Y", "X + 1/2*Y^2 + 1/2*Z^2"}, kChartNames),
        parse_matrix({{"0", "0", "0", "1"},
                      {"0", "0", "1", "0"},
                      {"0", "-1", "0", "0"},
                      {"-1", "0", "0", "0"}},
                     gv),
        {parse_field({"1", "-z", "y", "0"}, gv), parse_field({"0", "1", "0", "0"}, gv),
         parse_field({"0", "0", "1", "0"}, gv), parse_field({"0", "0", "0", "1"}, gv)},
        {},
    };

    return CatalogEntry{
        "g3",
        "solvable non-nilpotent group of dimension 4 (rotation type)",
        algebra,
        omega,
        kChartNames,
        {{"0", "Z", "-Y", "1"}, {"-Z", "0", "1", "0"}, {"Y", "-1", "0", "0"}, {"-1", "0", "0", "0"}},
        {{"0", "0", "0", "-1"}, {"0", "0", "-1", "-Y"}, {"0", "1", "0", "-Z"}, {"1", "Y", "Z", "0"}},
        "Z*∂X^∂Y - Y*∂X^∂Z + ∂X^∂T + ∂Y^∂Z",
        "-dX^dT - dY^dZ - Y*dY^dT - Z*dZ^dT",
        "1",
        true,
        false,
        -1,
        true,
        oracle,
        {
            "printed chart coordinate X = t - yz does not satisfy the defining contraction "
            "identity for this frame (it is the neighboring example's expression); the chart "
            "centered at the identity has X = t - (y^2 + z^2)/2. The printed A, A^-1 and "
            "tensor tables only involve Y and Z and are unaffected",
        },
        "the unit rotation time together with the integer translations generates a "
        "lattice isomorphic to Z^3; adjoining the half rotation gives a non-nilpotent "
        "lattice containing it with index 2",
    };
}

CatalogEntry make_g4() {
    StructureConstants algebra(4);
    // [e1,e2] = e3; the fourth group coordinate is s = ln t.
    algebra.set_bracket(0, 1, coeffs4(0, 0, 1, 0));
    TwoCocycle omega = TwoCocycle::from_sparse(4, {{0, 3, rat(1)}, {1, 2, rat(1)}});

    const std::vector<std::string> gv = {"x", "y", "z", "s"};
    OraclePack oracle{
        gv,
        parse_all({"s - 1/2*y^2", "z", "-y", "-x"}, gv),
        parse_all({"-T", "-Z", "Y", "X + 1/2*Z^2"}, kChartNames),
        parse_matrix({{"0", "0", "0", "1"},
                      {"0", "0", "1", "0"},
                      {"0", "-1", "0", "0"},
                      {"-1", "0", "0", "0"}},
                     gv),
        {parse_field({"1", "0", "y", "0"}, gv), parse_field({"0", "1", "0", "0"}, gv),
         parse_field({"0", "0", "1", "0"}, gv), parse_field({"0", "0", "0", "1"}, gv)},
        {parse_field({"1", "0", "0", "0"}, gv), parse_field({"0", "1", "x", "0"}, gv),
         parse_field({"0", "0", "1", "0"}, gv), parse_field({"0", "0", "0", "1"}, gv)},
    };

    return CatalogEntry{
        "g4",
        "Heisenberg group times a line, dimension 4",
        algebra,
        omega,
        kChartNames,
        {{"0", "Z", "0", "1"}, {"-Z", "0", "1", "0"}, {"0", "-1", "0", "0"}, {"-1", "0", "0", "0"}},
        {{"0", "0", "0", "-1"}, {"0", "0", "-1", "0"}, {"0", "1", "0", "-Z"}, {"1", "0", "Z", "0"}},
        "Z*∂X^∂Y + ∂X^∂T + ∂Y^∂Z",
        "-dX^dT - dY^dZ - Z*dZ^dT",
        "1",
        true,
        true,
        2,
        true,
        oracle,
        {},
        "lattices of unipotent integer type with denominators p, q, pqr; the (p,q,r) "
        "lattice contains the unit one with index p^2 q^2 r",
    };
}

CatalogEntry make_aff2() {
    StructureConstants algebra(2);
    algebra.set_bracket(0, 1, {rat(0), rat(1)});  // [e1,e2] = e2
    TwoCocycle omega = TwoCocycle::from_sparse(2, {{0, 1, rat(1)}});

    return CatalogEntry{
        "aff2",
        "affine group of the line; non-unimodular counterexample",
        algebra,
        omega,
        {"x1", "x2"},
        {{"0", "x2 + 1"}, {"-x2 - 1", "0"}},
        {},
        "(x2 + 1)*∂x1^∂x2",
        "",
        "x2^2 + 2*x2 + 1",
        false,
        false,
        -1,
        true,
        std::nullopt,
        {},
        "carries no lattice: a group with a uniform lattice is unimodular",
    };
}

}  // namespace

const std::vector<std::string>& catalog_ids() { return kIds; }

CatalogEntry load(const std::string& id) {
    if (id == "g1") return make_g1();
    if (id == "g2") return make_g2();
    if (id == "g3") return make_g3();
    if (id == "g4") return make_g4();
    if (id == "aff2") return make_aff2();
    throw UnknownCatalogId(id);
}

GoldenReport golden_compare(const CatalogEntry& entry) {
    GoldenReport report;
    report.notes = entry.paper_notes;

    const ChartModel model = build_chart(entry.algebra, entry.omega, entry.chart_names);
    const std::size_t n = model.dim();
    auto diff = [&](std::string tensor, std::string location, std::string expected,
                    std::string got) {
        if (expected != got)
            report.diffs.push_back(
                {std::move(tensor), std::move(location), std::move(expected), std::move(got)});
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            diff("P", "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                 entry.golden_P[i][j], to_canonical(model.P.at(i, j), entry.chart_names));

    diff("pi", "", entry.golden_pi, to_canonical(poisson_bivector(model), entry.chart_names));

    const SymplecticData data = symplectic_matrix(model);
    diff("det", "", entry.golden_det, to_canonical(data.det, entry.chart_names));

    if (entry.golden_S.empty()) {
        // Non-unimodular entry: the marker must be raised instead of S.
        diff("marker", "", kNonUnimodularMarker, data.polynomial ? "" : data.marker);
    } else {
        if (!data.polynomial) {
            diff("marker", "", "", data.marker);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    diff("S", "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                         entry.golden_S[i][j], to_canonical(data.S.at(i, j), entry.chart_names));
            diff("omega", "", entry.golden_omega_form,
                 to_canonical(symplectic_form(model), entry.chart_names));
        }
    }
    return report;
}

RationalVector oracle_group_point(const CatalogEntry& entry, const RationalVector& chart_point) {
    if (!entry.oracle) throw std::invalid_argument("catalog entry has no oracle pack");
    RationalVector out;
    out.reserve(entry.oracle->inverse_chart.size());
    for (const auto& expr : entry.oracle->inverse_chart) out.push_back(expr.evaluate(chart_point));
    return out;
}

namespace {

RationalGrid frame_at(const std::vector<PolyVectorField>& frame, const RationalVector& point) {
    const std::size_t n = frame.size();
    RationalGrid out(n, RationalVector(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out[i][j] = frame[j].components[i].evaluate(point);
    return out;
}

RationalGrid jacobian_at(const std::vector<Polynomial>& chart_map, const RationalVector& point) {
    const std::size_t n = chart_map.size();
    RationalGrid out(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = chart_map[i].partial(j).evaluate(point);
    return out;
}

}  // namespace

RationalGrid oracle_p_matrix(const CatalogEntry& entry, const RationalVector& chart_point) {
    if (!entry.oracle) throw std::invalid_argument("catalog entry has no oracle pack");
    const RationalVector g = oracle_group_point(entry, chart_point);
    const RationalGrid frame = frame_at(entry.oracle->right_frame, g);
    RationalGrid omega(entry.algebra.dim(), RationalVector(entry.algebra.dim(), Rational(0)));
    for (std::size_t i = 0; i < entry.algebra.dim(); ++i)
        for (std::size_t j = 0; j < entry.algebra.dim(); ++j)
            omega[i][j] = entry.oracle->omega_group.at(i, j).evaluate(g);
    // A_ij = omega(frame_i, frame_j) = (F^T Omega F)_ij.
    RationalGrid ft(frame.size(), RationalVector(frame.size(), Rational(0)));
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = 0; j < frame.size(); ++j) ft[i][j] = frame[j][i];
    return multiply(multiply(ft, omega), frame);
}

RationalGrid oracle_s_matrix(const CatalogEntry& entry, const RationalVector& chart_point) {
    return inverse(oracle_p_matrix(entry, chart_point));
}

RationalVector oracle_invariant_field(const CatalogEntry& entry, const RationalVector& u,
                                      const RationalVector& chart_point, bool left) {
    if (!entry.oracle) throw std::invalid_argument("catalog entry has no oracle pack");
    const auto& frame = left ? entry.oracle->left_frame : entry.oracle->right_frame;
    if (frame.empty()) throw std::invalid_argument("no polynomial frame available");
    const RationalVector g = oracle_group_point(entry, chart_point);
    const std::size_t n = entry.algebra.dim();
    RationalVector v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(u[i])) continue;
        for (std::size_t c = 0; c < n; ++c) v[c] += u[i] * frame[i].components[c].evaluate(g);
    }
    return multiply(jacobian_at(entry.oracle->chart_map, g), v);
}

RationalGrid numeric_oracle(const CatalogEntry& entry, const std::string& tensor,
                            const RationalVector& chart_point) {
    if (tensor == "P") return oracle_p_matrix(entry, chart_point);
    if (tensor == "S") return oracle_s_matrix(entry, chart_point);
    throw std::invalid_argument("unknown oracle tensor: " + tensor);
}

}  // namespace sympol
