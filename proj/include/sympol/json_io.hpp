#pragma once

#include <string>

#include "sympol/lie_algebra.hpp"

namespace sympol {

struct FileFormatError : std::runtime_error {
    explicit FileFormatError(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraInput {
    StructureConstants algebra;
    TwoCocycle omega;
};

// JSON schema: { "dim": n, "names": [...], "brackets": [{"i","j","coeffs"}],
// "omega": sparse [{"i","j","value"}] or a full antisymmetric grid }.
// Indices are 1-based in files and converted here; i < j is required and
// duplicate (i,j) entries are format errors. Rational values are "p" or
// "p/q" strings (plain JSON integers are also accepted).
AlgebraInput parse_algebra_json(const std::string& text);
AlgebraInput read_algebra_file(const std::string& path);

std::string algebra_to_json(const StructureConstants& c, const TwoCocycle& omega);

}  // namespace sympol
