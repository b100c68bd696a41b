#pragma once

#include <string>

#include "sympol/tensors.hpp"

namespace sympol {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Canonical polynomial text: terms in graded-lex order (highest first),
// coefficients "p" or "p/q", e.g. "-1/2*X^2 + X*Z". Parsing accepts the
// same grammar plus parentheses and arbitrary whitespace.
std::string to_canonical(const Polynomial& p, const std::vector<std::string>& names);
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

// Canonical tensor text: components in increasing-tuple order, wedge
// written "^", e.g. "∂X^∂Y - Y*∂X^∂T" and "-dX^dY + Z*dX^dZ".
std::string to_canonical(const PolyForm& f, const std::vector<std::string>& names);
std::string to_canonical(const PolyMultiVector& m, const std::vector<std::string>& names);
std::string to_canonical(const PolyVectorField& x, const std::vector<std::string>& names);

PolyForm parse_form(const std::string& text, const std::vector<std::string>& names,
                    std::size_t arity);
PolyMultiVector parse_multivector(const std::string& text, const std::vector<std::string>& names,
                                  std::size_t arity);

// One bracketed row per line: "[a, b, c]".
std::string to_text(const PolyMatrix& m, const std::vector<std::string>& names);

// LaTeX renderings used by the CLI's --format latex mode.
std::string to_latex(const Polynomial& p, const std::vector<std::string>& names);
std::string to_latex(const PolyMatrix& m, const std::vector<std::string>& names);
std::string to_latex(const PolyForm& f, const std::vector<std::string>& names);
std::string to_latex(const PolyMultiVector& m, const std::vector<std::string>& names);

std::vector<std::string> default_chart_names(std::size_t n);

}  // namespace sympol
