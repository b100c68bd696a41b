#pragma once

#include "sympol/chart.hpp"

namespace sympol {

// Group-coordinate data used as the independent numeric oracle: every
// chart of the catalog is polynomial in (possibly re-parameterized)
// group coordinates, so the oracle is exact rational end to end.
struct OraclePack {
    std::vector<std::string> group_vars;
    std::vector<Polynomial> chart_map;       // chart coords as functions on the group
    std::vector<Polynomial> inverse_chart;   // group coords as functions of the chart
    PolyMatrix omega_group;                  // matrix of the symplectic form on the group
    std::vector<PolyVectorField> right_frame;
    std::vector<PolyVectorField> left_frame;  // empty when not polynomial on the group
};

struct CatalogEntry {
    std::string id;
    std::string description;
    StructureConstants algebra;
    TwoCocycle omega;
    std::vector<std::string> chart_names;

    std::vector<std::vector<std::string>> golden_P;
    std::vector<std::vector<std::string>> golden_S;  // empty for non-unimodular entries
    std::string golden_pi;
    std::string golden_omega_form;  // empty for non-unimodular entries
    std::string golden_det;

    bool expect_unimodular;
    bool expect_nilpotent;
    int expect_nilindex;  // -1 when not nilpotent
    bool expect_solvable;

    std::optional<OraclePack> oracle;
    std::vector<std::string> paper_notes;  // printed-table discrepancies and the like
    std::string lattice_notes;
};

struct UnknownCatalogId : std::runtime_error {
    explicit UnknownCatalogId(const std::string& id)
        : std::runtime_error("unknown catalog id: " + id) {}
};

const std::vector<std::string>& catalog_ids();
CatalogEntry load(const std::string& id);

struct GoldenDiff {
    std::string tensor;    // "P", "S", "pi", "omega", "det", "marker"
    std::string location;  // "(i,j)" or ""
    std::string expected;
    std::string got;
};

struct GoldenReport {
    std::vector<GoldenDiff> diffs;
    std::vector<std::string> notes;
    bool ok() const { return diffs.empty(); }
};

// Builds the chart from the entry's algebraic data and compares every
// golden tensor in canonical text; for g2 the targets are the
// oracle-resolved tables and the printed-table discrepancy is reported
// in the notes.
GoldenReport golden_compare(const CatalogEntry& entry);

// Exact evaluation of the group-coordinate tensors pushed into the chart.
RationalVector oracle_group_point(const CatalogEntry& entry, const RationalVector& chart_point);
RationalGrid oracle_p_matrix(const CatalogEntry& entry, const RationalVector& chart_point);
RationalGrid oracle_s_matrix(const CatalogEntry& entry, const RationalVector& chart_point);

// Pushforward of a frame vector (right or left) to chart components.
RationalVector oracle_invariant_field(const CatalogEntry& entry, const RationalVector& u,
                                      const RationalVector& chart_point, bool left);

// Dispatcher used by the CLI: tensor is "P" or "S".
RationalGrid numeric_oracle(const CatalogEntry& entry, const std::string& tensor,
                            const RationalVector& chart_point);

}  // namespace sympol
