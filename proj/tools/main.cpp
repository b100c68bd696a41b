// sympol: exact affine-chart models of symplectic Lie groups from
// structure constants and a scalar 2-cocycle.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympol/catalog.hpp"
#include "sympol/json_io.hpp"
#include "sympol/left_invariant.hpp"
#include "sympol/text.hpp"

using nlohmann::ordered_json;
using namespace sympol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStructural = 2;
constexpr int kExitParse = 3;
constexpr int kExitNotNilpotent = 4;

struct Options {
    std::string format = "text";
    std::vector<std::string> chart_names;  // empty: x1..xn
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

RationalVector parse_vector_arg(const std::string& text, std::size_t dim) {
    const auto parts = split_list(text);
    if (parts.size() != dim)
        throw FileFormatError("expected " + std::to_string(dim) + " comma-separated entries");
    RationalVector out;
    out.reserve(dim);
    for (const auto& p : parts) out.push_back(rat_from_string(p));
    return out;
}

IndexTuple parse_tuple_arg(const std::string& text, std::size_t dim) {
    IndexTuple out;
    for (const auto& p : split_list(text)) {
        long raw = 0;
        try {
            raw = std::stol(p);
        } catch (...) {
            throw FileFormatError("bad index '" + p + "'");
        }
        if (raw < 1 || static_cast<std::size_t>(raw) > dim)
            throw FileFormatError("index " + p + " out of range 1.." + std::to_string(dim));
        out.push_back(static_cast<unsigned>(raw - 1));
    }
    if (out.empty()) throw FileFormatError("empty index tuple");
    return out;
}

std::vector<std::string> chart_names_for(const Options& opt, std::size_t dim) {
    if (opt.chart_names.empty()) return default_chart_names(dim);
    if (opt.chart_names.size() != dim)
        throw FileFormatError("--names must list exactly " + std::to_string(dim) + " labels");
    return opt.chart_names;
}

ordered_json json_matrix(const PolyMatrix& m, const std::vector<std::string>& names) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_canonical(m.at(i, j), names));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json validate_report(const StructureConstants& c, const TwoCocycle& omega) {
    const AlgebraReport report = analyze(c, omega);
    ordered_json out;
    out["checks"]["jacobi"] = report.jacobi.ok;
    if (report.jacobi.witness) {
        const auto& w = *report.jacobi.witness;
        out["checks"]["jacobi_witness"] = {c.names()[w[0]], c.names()[w[1]], c.names()[w[2]],
                                           c.names()[w[3]]};
    }
    out["checks"]["cocycle"] = report.cocycle.ok;
    if (report.cocycle.witness) {
        const auto& w = *report.cocycle.witness;
        out["checks"]["cocycle_witness"] = {c.names()[w[0]], c.names()[w[1]], c.names()[w[2]]};
    }
    out["checks"]["nondegenerate"] = report.nondegenerate;
    if (report.cybe_of_r) out["checks"]["cybe_of_r"] = report.cybe_of_r->ok;
    out["flags"]["unimodular"] = report.unimodular.ok;
    if (!report.unimodular.ok)
        out["flags"]["unimodular_witness"] = c.names()[*report.unimodular.witness];
    out["flags"]["nilpotent"] =
        report.nilpotency.nilpotent ? ordered_json(report.nilpotency.nilindex) : ordered_json(false);
    out["flags"]["solvable"] = report.nilpotency.solvable;
    out["flags"]["lower_central_dims"] = report.nilpotency.lower_central_dims;
    out["structural_ok"] = report.structural_ok();
    return out;
}

void print_validate_text(const ordered_json& report, std::ostream& os) {
    const auto& checks = report["checks"];
    auto line = [&](const char* name, bool ok) {
        os << (ok ? "  [pass] " : "  [FAIL] ") << name << "\n";
    };
    os << "structural checks:\n";
    line("jacobi identity", checks["jacobi"].get<bool>());
    if (checks.contains("jacobi_witness"))
        os << "         witness: " << checks["jacobi_witness"].dump() << "\n";
    line("cocycle identity", checks["cocycle"].get<bool>());
    if (checks.contains("cocycle_witness"))
        os << "         witness: " << checks["cocycle_witness"].dump() << "\n";
    line("non-degenerate", checks["nondegenerate"].get<bool>());
    if (checks.contains("cybe_of_r"))
        line("yang-baxter for omega^-1", checks["cybe_of_r"].get<bool>());
    const auto& flags = report["flags"];
    os << "flags:\n";
    os << "  unimodular: " << (flags["unimodular"].get<bool>() ? "yes" : "no") << "\n";
    if (flags["nilpotent"].is_boolean())
        os << "  nilpotent: no\n";
    else
        os << "  nilpotent: yes (nilindex " << flags["nilpotent"].get<int>() << ")\n";
    os << "  solvable: " << (flags["solvable"].get<bool>() ? "yes" : "no") << "\n";
}

int cmd_validate(const std::string& path, const Options& opt) {
    const AlgebraInput input = read_algebra_file(path);
    const ordered_json report = validate_report(input.algebra, input.omega);
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        print_validate_text(report, std::cout);
    return report["structural_ok"].get<bool>() ? kExitOk : kExitStructural;
}

struct ChartSections {
    bool poisson = false;
    bool symplectic = false;
    bool volume = false;
    bool degrees = false;
};

ordered_json degree_table(const ChartModel& model, const SymplecticData& data) {
    const std::size_t n = model.dim();
    ordered_json table = ordered_json::array();
    int pmax = -1;
    bool dichotomy = true;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            pmax = std::max(pmax, model.P.at(i, j).degree());
            bool bracket_nonzero = false;
            for (unsigned k = 0; k < n; ++k)
                if (!is_zero(model.algebra.c(i, j, k))) bracket_nonzero = true;
            if (bracket_nonzero != (model.P.at(i, j).degree() == 1)) dichotomy = false;
        }
    table.push_back(
        {{"tensor", "poisson matrix"}, {"bound", 1}, {"degree", pmax}, {"pass", pmax <= 1}});
    table.push_back({{"tensor", "degree-1 dichotomy"},
                     {"bound", "degree 1 exactly where the bracket is nonzero"},
                     {"pass", dichotomy}});
    if (data.polynomial) {
        table.push_back({{"tensor", "symplectic matrix"},
                         {"bound", static_cast<int>(n) - 1},
                         {"degree", data.S.max_degree()},
                         {"pass", data.S.max_degree() <= static_cast<int>(n) - 1}});
        if (n % 2 == 0) {
            const VolumeReport volume = volume_check(model);
            const int wd = volume.top_wedge ? volume.top_wedge->degree() : -1;
            table.push_back(
                {{"tensor", "top wedge"}, {"bound", 0}, {"degree", wd}, {"pass", wd <= 0}});
        }
    } else {
        table.push_back({{"tensor", "symplectic matrix"},
                         {"bound", static_cast<int>(n) - 1},
                         {"marker", data.marker},
                         {"pass", false}});
    }
    return table;
}

ordered_json chart_report(const ChartModel& model, const ChartSections& sections) {
    const std::vector<std::string>& names = model.chart_names;
    ordered_json out;
    out["chart_names"] = names;
    const SymplecticData data = symplectic_matrix(model);

    if (sections.poisson) {
        out["poisson"]["matrix"] = json_matrix(model.P, names);
        out["poisson"]["bivector"] = to_canonical(poisson_bivector(model), names);
    }
    if (sections.symplectic) {
        out["symplectic"]["det"] = to_canonical(data.det, names);
        if (data.polynomial) {
            out["symplectic"]["matrix"] = json_matrix(data.S, names);
            out["symplectic"]["form"] = to_canonical(two_form_from_matrix(data.S), names);
        } else {
            out["symplectic"]["marker"] = data.marker;
            out["symplectic"]["adjugate"] = json_matrix(data.adjugate, names);
        }
    }
    if (sections.volume) {
        if (model.dim() % 2 == 0) {
            const VolumeReport volume = volume_check(model);
            out["volume"]["det"] = to_canonical(volume.det, names);
            out["volume"]["parallel"] = volume.parallel;
            if (volume.top_wedge)
                out["volume"]["top_wedge"] = to_canonical(*volume.top_wedge, names);
            out["volume"]["wedge_constant"] = volume.wedge_constant;
            out["volume"]["frame_identity"] = volume.identity_ok;
        } else {
            out["volume"]["error"] = "volume form needs an even dimension";
        }
    }
    if (sections.degrees) out["degrees"] = degree_table(model, data);
    return out;
}

void print_chart_text(const ChartModel& model, const ChartSections& sections,
                      const std::string& format, std::ostream& os) {
    const std::vector<std::string>& names = model.chart_names;
    const SymplecticData data = symplectic_matrix(model);
    const bool latex = format == "latex";

    if (sections.poisson) {
        os << "P(x):\n";
        os << (latex ? to_latex(model.P, names) : to_text(model.P, names)) << "\n";
        const PolyMultiVector pi = poisson_bivector(model);
        os << "pi+ = " << (latex ? to_latex(pi, names) : to_canonical(pi, names)) << "\n";
    }
    if (sections.symplectic) {
        os << "det P = " << to_canonical(data.det, names) << "\n";
        if (data.polynomial) {
            os << "S(x):\n";
            os << (latex ? to_latex(data.S, names) : to_text(data.S, names)) << "\n";
            const PolyForm form = two_form_from_matrix(data.S);
            os << "omega+ = " << (latex ? to_latex(form, names) : to_canonical(form, names))
               << "\n";
        } else {
            os << "marker: " << data.marker << "\n";
            os << "adjugate:\n";
            os << (latex ? to_latex(data.adjugate, names) : to_text(data.adjugate, names)) << "\n";
        }
    }
    if (sections.volume && model.dim() % 2 == 0) {
        const VolumeReport volume = volume_check(model);
        os << "volume: det P = " << to_canonical(volume.det, names)
           << (volume.parallel ? " (constant, parallel volume form)" : " (non-constant)") << "\n";
        if (volume.top_wedge)
            os << "top wedge = " << to_canonical(*volume.top_wedge, names)
               << (volume.wedge_constant ? " (constant coefficients)" : "") << "\n";
        if (volume.parallel)
            os << "frame identity det P = Omega(frame)^2/((n/2)!)^2: "
               << (volume.identity_ok ? "holds" : "FAILS") << "\n";
    }
    if (sections.degrees) {
        os << "degree bounds:\n";
        for (const auto& row : degree_table(model, data)) {
            os << "  " << (row["pass"].get<bool>() ? "[pass] " : "[FAIL] ")
               << row["tensor"].get<std::string>();
            if (row.contains("degree"))
                os << ": degree " << row["degree"].get<int>() << ", bound " << row["bound"].dump();
            os << "\n";
        }
    }
}

int cmd_chart(const std::string& path, ChartSections sections, const Options& opt) {
    const AlgebraInput input = read_algebra_file(path);
    if (!sections.poisson && !sections.symplectic && !sections.volume && !sections.degrees)
        sections = {true, true, true, true};
    const ChartModel model =
        build_chart(input.algebra, input.omega, chart_names_for(opt, input.algebra.dim()));
    if (opt.format == "json")
        std::cout << chart_report(model, sections).dump(2) << "\n";
    else
        print_chart_text(model, sections, opt.format, std::cout);
    return kExitOk;
}

int cmd_fields(const std::string& path, const std::string& side, bool basis,
               const std::string& vector_arg, const std::string& multi_arg, const Options& opt) {
    const AlgebraInput input = read_algebra_file(path);
    const std::size_t n = input.algebra.dim();
    const ChartModel model = build_chart(input.algebra, input.omega, chart_names_for(opt, n));
    const bool left = side == "left";
    const std::vector<std::string>& names = model.chart_names;

    ordered_json out;
    out["side"] = side;

    auto field_json = [&](const std::string& label, const PolyVectorField& f) {
        ordered_json entry;
        entry["label"] = label;
        entry["field"] = to_canonical(f, names);
        entry["degree"] = f.degree();
        return entry;
    };

    ordered_json list = ordered_json::array();
    if (basis) {
        for (std::size_t i = 0; i < n; ++i) {
            RationalVector u(n, Rational(0));
            u[i] = 1;
            const PolyVectorField f =
                left ? left_invariant_field(model, u).field() : right_invariant_field(model, u);
            list.push_back(field_json(input.algebra.names()[i], f));
        }
    } else if (!vector_arg.empty()) {
        const RationalVector u = parse_vector_arg(vector_arg, n);
        const PolyVectorField f =
            left ? left_invariant_field(model, u).field() : right_invariant_field(model, u);
        list.push_back(field_json("u", f));
    } else if (!multi_arg.empty()) {
        const IndexTuple tuple = parse_tuple_arg(multi_arg, n);
        const ConstantMultiVector w = ConstantMultiVector::basis_tuple(n, tuple);
        const PolyMultiVector mv = left ? left_multivector(model, w) : right_multivector(model, w);
        ordered_json entry;
        entry["label"] = multi_arg;
        entry["multivector"] = to_canonical(mv, names);
        entry["degree"] = mv.degree();
        list.push_back(std::move(entry));
    } else {
        throw FileFormatError("one of --basis, --vector, --multi is required");
    }
    out["fields"] = std::move(list);

    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& entry : out["fields"]) {
            std::cout << entry["label"].get<std::string>() << (left ? "+" : "-") << " = ";
            if (entry.contains("field"))
                std::cout << entry["field"].get<std::string>();
            else
                std::cout << entry["multivector"].get<std::string>();
            std::cout << "   (degree " << entry["degree"].get<int>() << ")\n";
        }
    }
    return kExitOk;
}

int cmd_bracket(const std::string& path, const std::string& f_text, const std::string& g_text,
                const Options& opt) {
    const AlgebraInput input = read_algebra_file(path);
    const std::vector<std::string> names = chart_names_for(opt, input.algebra.dim());
    const ChartModel model = build_chart(input.algebra, input.omega, names);
    const Polynomial f = parse_polynomial(f_text, names);
    const Polynomial g = parse_polynomial(g_text, names);
    std::cout << to_canonical(poisson_bracket(model, f, g), names) << "\n";
    return kExitOk;
}

int cmd_catalog(const std::string& id, bool golden, bool export_json, const Options& opt) {
    const CatalogEntry entry = load(id);
    if (export_json) {
        std::cout << algebra_to_json(entry.algebra, entry.omega);
        return kExitOk;
    }
    if (golden) {
        const GoldenReport report = golden_compare(entry);
        if (opt.format == "json") {
            ordered_json out;
            out["id"] = entry.id;
            out["match"] = report.ok();
            ordered_json diffs = ordered_json::array();
            for (const auto& d : report.diffs)
                diffs.push_back({{"tensor", d.tensor},
                                 {"location", d.location},
                                 {"expected", d.expected},
                                 {"got", d.got}});
            out["diffs"] = std::move(diffs);
            out["notes"] = report.notes;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << entry.id << ": " << (report.ok() ? "all tensors match" : "DIFFS FOUND")
                      << "\n";
            for (const auto& d : report.diffs)
                std::cout << "  " << d.tensor << d.location << ": expected " << d.expected
                          << ", got " << d.got << "\n";
            for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
        }
        return report.ok() ? kExitOk : kExitStructural;
    }
    // default: entry summary
    if (opt.format == "json") {
        ordered_json out;
        out["id"] = entry.id;
        out["description"] = entry.description;
        out["dim"] = entry.algebra.dim();
        out["unimodular"] = entry.expect_unimodular;
        out["nilpotent"] = entry.expect_nilpotent ? ordered_json(entry.expect_nilindex)
                                                  : ordered_json(false);
        out["solvable"] = entry.expect_solvable;
        out["golden"]["P"] = entry.golden_P;
        out["golden"]["pi"] = entry.golden_pi;
        if (!entry.golden_S.empty()) {
            out["golden"]["S"] = entry.golden_S;
            out["golden"]["omega"] = entry.golden_omega_form;
        }
        out["golden"]["det"] = entry.golden_det;
        out["paper_notes"] = entry.paper_notes;
        out["lattice_notes"] = entry.lattice_notes;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << entry.id << ": " << entry.description << "\n";
        std::cout << "  unimodular: " << (entry.expect_unimodular ? "yes" : "no")
                  << ", nilpotent: "
                  << (entry.expect_nilpotent
                          ? "yes (nilindex " + std::to_string(entry.expect_nilindex) + ")"
                          : "no")
                  << ", solvable: " << (entry.expect_solvable ? "yes" : "no") << "\n";
        std::cout << "  pi+ = " << entry.golden_pi << "\n";
        if (!entry.golden_omega_form.empty())
            std::cout << "  omega+ = " << entry.golden_omega_form << "\n";
        std::cout << "  det P = " << entry.golden_det << "\n";
        for (const auto& note : entry.paper_notes) std::cout << "  note: " << note << "\n";
        std::cout << "  lattices: " << entry.lattice_notes << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact affine-chart models of symplectic Lie groups"};
    app.require_subcommand(1);
    Options opt;

    std::string path, side, vector_arg, multi_arg, f_text, g_text, id;
    std::string names_arg;
    bool basis = false, golden = false, export_json = false, info = false;
    ChartSections sections;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_option("--names", names_arg, "comma-separated chart names (default x1..xn)");
    };

    CLI::App* validate = app.add_subcommand("validate", "run the algebraic checks on a file");
    validate->add_option("file", path)->required();
    add_common(validate);

    CLI::App* chart = app.add_subcommand("chart", "build the affine-chart model");
    chart->add_option("file", path)->required();
    chart->add_flag("--poisson", sections.poisson, "Poisson matrix and bivector");
    chart->add_flag("--symplectic", sections.symplectic, "symplectic matrix and 2-form");
    chart->add_flag("--volume", sections.volume, "volume determinant and top wedge");
    chart->add_flag("--degrees", sections.degrees, "degree-bound table");
    add_common(chart);

    CLI::App* fields = app.add_subcommand("fields", "invariant fields and multivectors");
    fields->add_option("file", path)->required();
    fields->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->required();
    fields->add_flag("--basis", basis, "all basis fields");
    fields->add_option("--vector", vector_arg, "components c1,...,cn");
    fields->add_option("--multi", multi_arg, "basis wedge indices i,j,...");
    add_common(fields);

    CLI::App* bracket = app.add_subcommand("bracket", "Poisson bracket of two polynomials");
    bracket->add_option("file", path)->required();
    bracket->add_option("-f", f_text)->required();
    bracket->add_option("-g", g_text)->required();
    add_common(bracket);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in worked examples");
    catalog->add_option("id", id)->required();
    catalog->add_flag("--golden", golden, "compare against the stored tables");
    catalog->add_flag("--export", export_json, "emit the algebra file JSON");
    catalog->add_flag("--info", info, "print the entry summary");
    add_common(catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }
    if (!names_arg.empty()) opt.chart_names = split_list(names_arg);

    try {
        if (validate->parsed()) return cmd_validate(path, opt);
        if (chart->parsed()) return cmd_chart(path, sections, opt);
        if (fields->parsed()) return cmd_fields(path, side, basis, vector_arg, multi_arg, opt);
        if (bracket->parsed()) return cmd_bracket(path, f_text, g_text, opt);
        if (catalog->parsed()) return cmd_catalog(id, golden, export_json, opt);
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownCatalogId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ChartPreconditionError& e) {
        std::cerr << "error: " << e.what() << " (" << e.witness << ")\n";
        return kExitStructural;
    } catch (const NotNilpotentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "lower central series dimensions:";
        for (std::size_t d : e.verdict.lower_central_dims) std::cerr << " " << d;
        std::cerr << "\n";
        return kExitNotNilpotent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
