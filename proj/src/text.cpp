#include "sympol/text.hpp"

#include <cctype>
#include <sstream>

namespace sympol {

namespace {

constexpr const char* kPartialSymbol = "\u2202";  // ∂

std::string monomial_body(const Monomial& mono, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
    }
    return out;
}

// One printed term split into sign and body, so callers can join with
// " + " / " - ".
struct PrintedTerm {
    bool negative;
    std::string body;
};

PrintedTerm print_term(const Monomial& mono, const Rational& coeff,
                       const std::vector<std::string>& names) {
    PrintedTerm out{sgn(coeff) < 0, {}};
    const Rational mag = abs(coeff);
    const std::string vars = monomial_body(mono, names);
    if (vars.empty()) {
        out.body = to_string(mag);
    } else if (mag == 1) {
        out.body = vars;
    } else {
        out.body = to_string(mag) + "*" + vars;
    }
    return out;
}

std::string join_terms(const std::vector<PrintedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

std::string atom_chain(const IndexTuple& tuple, const char* prefix,
                       const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) out += "^";
        out += prefix;
        out += names[tuple[i]];
    }
    return out;
}

// Coefficient-with-basis term: pulls the sign out of single-monomial
// coefficients, parenthesizes sums.
PrintedTerm print_tensor_term(const Polynomial& coeff, const std::string& chain,
                              const std::vector<std::string>& names) {
    if (coeff.terms().size() == 1) {
        const auto& [mono, c] = *coeff.terms().begin();
        PrintedTerm t = print_term(mono, c, names);
        const bool bare_unit = monomial_body(mono, names).empty() && abs(c) == 1;
        t.body = bare_unit ? chain : t.body + "*" + chain;
        return t;
    }
    return {false, "(" + to_canonical(coeff, names) + ")*" + chain};
}

template <TensorKind Kind>
std::string tensor_to_canonical(const SkewTensor<Kind>& t, const char* prefix,
                                const std::vector<std::string>& names) {
    if (t.arity() == 0) return to_canonical(t.component(IndexTuple{}), names);
    std::vector<PrintedTerm> terms;
    for (const auto& [tuple, poly] : t.components())
        terms.push_back(print_tensor_term(poly, atom_chain(tuple, prefix, names), names));
    return join_terms(terms);
}

// ---------------------------------------------------------------------
// Tokenizer shared by the polynomial and tensor parsers.

struct Token {
    enum Type { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Type type;
    std::string text;
    std::size_t pos;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = text[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Int, text.substr(start, i - start), start});
        } else if (ident_start(c)) {
            while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Ident, text.substr(start, i - start), start});
        } else {
            Token::Type type;
            switch (c) {
                case '+': type = Token::Plus; break;
                case '-': type = Token::Minus; break;
                case '*': type = Token::Star; break;
                case '^': type = Token::Caret; break;
                case '/': type = Token::Slash; break;
                case '(': type = Token::LParen; break;
                case ')': type = Token::RParen; break;
                default: throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
            }
            out.push_back({type, text.substr(start, 1), start});
            ++i;
        }
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : tokens_(tokenize(text)), names_(names) {}

    Polynomial parse_polynomial() {
        Polynomial p = parse_expr();
        expect(Token::End, "trailing input after polynomial");
        return p;
    }

    template <TensorKind Kind>
    SkewTensor<Kind> parse_tensor(std::size_t arity, const char* prefix) {
        SkewTensor<Kind> out(names_.size(), arity);
        bool negative = accept(Token::Minus);
        if (!negative) accept(Token::Plus);
        while (true) {
            parse_tensor_term(out, negative, prefix);
            if (accept(Token::Plus)) {
                negative = false;
            } else if (accept(Token::Minus)) {
                negative = true;
            } else {
                break;
            }
        }
        expect(Token::End, "trailing input after tensor");
        return out;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }
    bool accept(Token::Type type) {
        if (peek().type != type) return false;
        ++cursor_;
        return true;
    }
    void expect(Token::Type type, const char* message) {
        if (!accept(type)) throw ParseError(message, peek().pos);
    }

    std::optional<std::size_t> name_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    unsigned parse_uint() {
        const Token& t = peek();
        if (t.type != Token::Int) throw ParseError("expected an integer", t.pos);
        advance();
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Rational parse_rational_literal() {
        const Token& t = advance();
        Rational value = rat_from_string(t.text);
        if (accept(Token::Slash)) {
            const Token& den = peek();
            if (den.type != Token::Int) throw ParseError("expected a denominator", den.pos);
            advance();
            const Rational d = rat_from_string(den.text);
            if (is_zero(d)) throw ParseError("zero denominator", den.pos);
            value /= d;
        }
        return value;
    }

    Polynomial pow_poly(Polynomial base, unsigned e) {
        Polynomial out = Polynomial::constant(names_.size(), Rational(1));
        for (unsigned k = 0; k < e; ++k) out *= base;
        return out;
    }

    // factor := INT['/'INT] | NAME['^'INT] | '(' expr ')' ['^'INT]
    Polynomial parse_factor() {
        const Token& t = peek();
        if (t.type == Token::Int)
            return Polynomial::constant(names_.size(), parse_rational_literal());
        if (t.type == Token::LParen) {
            advance();
            Polynomial inner = parse_expr();
            expect(Token::RParen, "expected ')'");
            if (accept(Token::Caret)) return pow_poly(inner, parse_uint());
            return inner;
        }
        if (t.type == Token::Ident) {
            auto idx = name_index(t.text);
            if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
            advance();
            unsigned e = 1;
            if (accept(Token::Caret)) e = parse_uint();
            Monomial mono(names_.size(), 0);
            mono[*idx] = e;
            return Polynomial::monomial(names_.size(), mono, Rational(1));
        }
        throw ParseError("expected a factor", t.pos);
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept(Token::Star)) p *= parse_factor();
        return p;
    }

    Polynomial parse_expr() {
        bool negative = accept(Token::Minus);
        if (!negative) accept(Token::Plus);
        Polynomial p = parse_term();
        if (negative) p = -p;
        while (true) {
            if (accept(Token::Plus)) {
                p += parse_term();
            } else if (accept(Token::Minus)) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    // Splits an identifier into basis atom ("dX" / "∂X") or variable.
    std::optional<std::size_t> atom_index(const std::string& text, const char* prefix) const {
        const std::string p(prefix);
        if (text.size() <= p.size() || text.compare(0, p.size(), p) != 0) return std::nullopt;
        return name_index(text.substr(p.size()));
    }

    template <TensorKind Kind>
    void parse_tensor_term(SkewTensor<Kind>& out, bool negative, const char* prefix) {
        Polynomial coeff = Polynomial::constant(names_.size(), Rational(1));
        IndexTuple atoms;
        bool saw_factor = false;
        while (true) {
            const Token& t = peek();
            if (t.type == Token::Ident) {
                if (auto idx = atom_index(t.text, prefix)) {
                    advance();
                    atoms.push_back(static_cast<unsigned>(*idx));
                    // A caret after an atom is a wedge onto the next atom.
                    while (accept(Token::Caret)) {
                        const Token& nt = peek();
                        auto next_idx =
                            nt.type == Token::Ident ? atom_index(nt.text, prefix) : std::nullopt;
                        if (!next_idx) throw ParseError("expected a basis factor after '^'", nt.pos);
                        advance();
                        atoms.push_back(static_cast<unsigned>(*next_idx));
                    }
                } else {
                    coeff *= parse_factor();
                }
            } else if (t.type == Token::Int || t.type == Token::LParen) {
                coeff *= parse_factor();
            } else {
                throw ParseError("expected a term", t.pos);
            }
            saw_factor = true;
            if (!accept(Token::Star)) break;
        }
        if (!saw_factor) throw ParseError("empty term", peek().pos);
        if (atoms.size() != out.arity()) {
            if (!(atoms.empty() && coeff.is_zero()))
                throw ParseError("term arity does not match the tensor arity", peek().pos);
        }
        if (negative) coeff = -coeff;
        if (atoms.size() == out.arity()) out.add_component(atoms, coeff);
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    const std::vector<std::string>& names_;
};

std::string latex_name(const std::string& name) {
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
    if (split == name.size() || split == 0) return name;
    return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string latex_rational(const Rational& q) {
    if (q.get_den() == 1) return to_string(q);
    std::string sign = sgn(q) < 0 ? "-" : "";
    const Integer num_abs = abs(q.get_num());
    return sign + "\\frac{" + num_abs.get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string to_canonical(const Polynomial& p, const std::vector<std::string>& names) {
    if (names.size() != p.num_vars()) throw std::invalid_argument("name list length mismatch");
    std::vector<PrintedTerm> terms;
    for (const auto& [mono, coeff] : p.terms()) terms.push_back(print_term(mono, coeff, names));
    return join_terms(terms);
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse_polynomial();
}

std::string to_canonical(const PolyForm& f, const std::vector<std::string>& names) {
    return tensor_to_canonical(f, "d", names);
}

std::string to_canonical(const PolyMultiVector& m, const std::vector<std::string>& names) {
    return tensor_to_canonical(m, kPartialSymbol, names);
}

std::string to_canonical(const PolyVectorField& x, const std::vector<std::string>& names) {
    return tensor_to_canonical(to_multivector(x), kPartialSymbol, names);
}

PolyForm parse_form(const std::string& text, const std::vector<std::string>& names,
                    std::size_t arity) {
    return Parser(text, names).parse_tensor<TensorKind::Form>(arity, "d");
}

PolyMultiVector parse_multivector(const std::string& text, const std::vector<std::string>& names,
                                  std::size_t arity) {
    return Parser(text, names).parse_tensor<TensorKind::MultiVector>(arity, kPartialSymbol);
}

std::string to_text(const PolyMatrix& m, const std::vector<std::string>& names) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ", ";
            out << to_canonical(m.at(i, j), names);
        }
        out << "]";
        if (i + 1 < m.rows()) out << "\n";
    }
    return out.str();
}

std::string to_latex(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        const Rational mag = abs(coeff);
        std::string vars;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!vars.empty()) vars += " ";
            vars += latex_name(names[i]);
            if (mono[i] > 1) vars += "^{" + std::to_string(mono[i]) + "}";
        }
        std::string body = vars.empty()      ? latex_rational(mag)
                           : mag == 1        ? vars
                                             : latex_rational(mag) + " " + vars;
        if (first) {
            out += (sgn(coeff) < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (sgn(coeff) < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string to_latex(const PolyMatrix& m, const std::vector<std::string>& names) {
    std::string out = "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " & ";
            out += to_latex(m.at(i, j), names);
        }
        out += " \\\\\n";
    }
    out += "\\end{pmatrix}";
    return out;
}

namespace {

template <TensorKind Kind>
std::string tensor_to_latex(const SkewTensor<Kind>& t, const std::vector<std::string>& names,
                            bool form) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [tuple, poly] : t.components()) {
        std::string chain;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i > 0) chain += " \\wedge ";
            chain += form ? "d" + latex_name(names[tuple[i]])
                          : "\\partial_{" + names[tuple[i]] + "}";
        }
        std::string coeff;
        bool negative = false;
        if (poly.terms().size() == 1) {
            const auto& [mono, c] = *poly.terms().begin();
            negative = sgn(c) < 0;
            Polynomial mag = Polynomial::monomial(poly.num_vars(), mono, abs(c));
            coeff = (mag == Polynomial::constant(poly.num_vars(), Rational(1)))
                        ? ""
                        : to_latex(mag, names) + "\\, ";
        } else {
            coeff = "\\left(" + to_latex(poly, names) + "\\right) ";
        }
        if (first) {
            out += (negative ? "-" : "") + coeff + chain;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + coeff + chain;
        }
    }
    return out;
}

}  // namespace

std::string to_latex(const PolyForm& f, const std::vector<std::string>& names) {
    return tensor_to_latex(f, names, true);
}

std::string to_latex(const PolyMultiVector& m, const std::vector<std::string>& names) {
    return tensor_to_latex(m, names, false);
}

std::vector<std::string> default_chart_names(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
    return names;
}

}  // namespace sympol
