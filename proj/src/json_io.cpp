#include "sympol/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sympol {

namespace {

using nlohmann::ordered_json;

Rational rational_from_json(const ordered_json& value, const std::string& where) {
    if (value.is_number_integer()) return rat(value.get<long>());
    if (value.is_string()) {
        try {
            return rat_from_string(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FileFormatError(where + ": " + e.what());
        }
    }
    throw FileFormatError(where + ": expected a rational string or integer");
}

unsigned index_from_json(const ordered_json& obj, const char* key, std::size_t dim,
                         const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw FileFormatError(where + ": missing integer field '" + key + "'");
    const long raw = obj[key].get<long>();
    if (raw < 1 || static_cast<std::size_t>(raw) > dim)
        throw FileFormatError(where + ": index " + std::to_string(raw) + " out of range 1.." +
                              std::to_string(dim));
    return static_cast<unsigned>(raw - 1);
}

}  // namespace

AlgebraInput parse_algebra_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FileFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FileFormatError("top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw FileFormatError("missing integer field 'dim'");
    const long dim_raw = doc["dim"].get<long>();
    if (dim_raw < 1 || dim_raw > 64) throw FileFormatError("'dim' out of range");
    const std::size_t dim = static_cast<std::size_t>(dim_raw);

    std::vector<std::string> names;
    if (doc.contains("names")) {
        if (!doc["names"].is_array() || doc["names"].size() != dim)
            throw FileFormatError("'names' must list one label per basis vector");
        for (const auto& n : doc["names"]) {
            if (!n.is_string()) throw FileFormatError("'names' entries must be strings");
            names.push_back(n.get<std::string>());
        }
    }

    StructureConstants algebra(dim, names);
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) throw FileFormatError("'brackets' must be an array");
        std::set<std::pair<unsigned, unsigned>> seen;
        std::size_t index = 0;
        for (const auto& entry : doc["brackets"]) {
            const std::string where = "brackets[" + std::to_string(index++) + "]";
            if (!entry.is_object()) throw FileFormatError(where + ": expected an object");
            const unsigned i = index_from_json(entry, "i", dim, where);
            const unsigned j = index_from_json(entry, "j", dim, where);
            if (i >= j)
                throw FileFormatError(where + ": brackets must satisfy i < j; store [e_j, e_i] "
                                              "with negated coefficients instead");
            if (!seen.emplace(i, j).second)
                throw FileFormatError(where + ": duplicate bracket (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ")");
            if (!entry.contains("coeffs") || !entry["coeffs"].is_object())
                throw FileFormatError(where + ": missing object field 'coeffs'");
            RationalVector coeffs(dim, Rational(0));
            for (const auto& [key, value] : entry["coeffs"].items()) {
                long k = 0;
                try {
                    k = std::stol(key);
                } catch (...) {
                    throw FileFormatError(where + ": bad coefficient index '" + key + "'");
                }
                if (k < 1 || static_cast<std::size_t>(k) > dim)
                    throw FileFormatError(where + ": coefficient index " + key + " out of range");
                coeffs[static_cast<std::size_t>(k - 1)] =
                    rational_from_json(value, where + ".coeffs." + key);
            }
            algebra.set_bracket(i, j, std::move(coeffs));
        }
    }

    if (!doc.contains("omega")) throw FileFormatError("missing field 'omega'");
    const auto& om = doc["omega"];
    if (!om.is_array()) throw FileFormatError("'omega' must be an array");
    TwoCocycle omega{RationalGrid(dim, RationalVector(dim, Rational(0)))};
    if (!om.empty() && om[0].is_array()) {
        if (om.size() != dim) throw FileFormatError("'omega' grid must be dim x dim");
        RationalGrid grid(dim, RationalVector(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i) {
            if (!om[i].is_array() || om[i].size() != dim)
                throw FileFormatError("'omega' grid must be dim x dim");
            for (std::size_t j = 0; j < dim; ++j)
                grid[i][j] = rational_from_json(
                    om[i][j], "omega[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
        if (!is_antisymmetric(grid)) throw FileFormatError("'omega' grid must be antisymmetric");
        omega = TwoCocycle::from_grid(std::move(grid));
    } else {
        std::vector<std::tuple<unsigned, unsigned, Rational>> entries;
        std::size_t index = 0;
        std::set<std::pair<unsigned, unsigned>> seen;
        for (const auto& entry : om) {
            const std::string where = "omega[" + std::to_string(index++) + "]";
            if (!entry.is_object()) throw FileFormatError(where + ": expected an object");
            const unsigned i = index_from_json(entry, "i", dim, where);
            const unsigned j = index_from_json(entry, "j", dim, where);
            if (i >= j) throw FileFormatError(where + ": omega entries must satisfy i < j");
            if (!seen.emplace(i, j).second)
                throw FileFormatError(where + ": duplicate omega entry");
            if (!entry.contains("value"))
                throw FileFormatError(where + ": missing field 'value'");
            entries.emplace_back(i, j, rational_from_json(entry["value"], where + ".value"));
        }
        omega = TwoCocycle::from_sparse(dim, entries);
    }

    return AlgebraInput{std::move(algebra), std::move(omega)};
}

AlgebraInput read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_json(buffer.str());
}

std::string algebra_to_json(const StructureConstants& c, const TwoCocycle& omega) {
    ordered_json doc;
    doc["dim"] = c.dim();
    doc["names"] = c.names();
    ordered_json brackets = ordered_json::array();
    for (const auto& [key, coeffs] : c.stored_brackets()) {
        ordered_json entry;
        entry["i"] = key.first + 1;
        entry["j"] = key.second + 1;
        ordered_json cmap = ordered_json::object();
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!is_zero(coeffs[k])) cmap[std::to_string(k + 1)] = to_string(coeffs[k]);
        entry["coeffs"] = std::move(cmap);
        brackets.push_back(std::move(entry));
    }
    doc["brackets"] = std::move(brackets);
    ordered_json om = ordered_json::array();
    for (unsigned i = 0; i < c.dim(); ++i)
        for (unsigned j = i + 1; j < c.dim(); ++j)
            if (!is_zero(omega.at(i, j))) {
                ordered_json entry;
                entry["i"] = i + 1;
                entry["j"] = j + 1;
                entry["value"] = to_string(omega.at(i, j));
                om.push_back(std::move(entry));
            }
    doc["omega"] = std::move(om);
    return doc.dump(2) + "\n";
}

}  // namespace sympol
