#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcp/algebra.hpp"

namespace pcp {

// Syntax or validation failure, carrying the offending position (0-based
// offset into the input).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Parse tree over the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] atom ("'")*
//   atom   := generator | indicator | scalar | '(' expr ')'
// Generators are S<i>, T<i>, R<i>, P<i> and I; indicators are
// chi[a,b] / chi[a,b;slot] followed by an optional U(r,k) / U(r,k,p);
// scalars are rationals a/b in lowest terms and the imaginary unit i.
struct ExprAst {
    enum class Kind { add, sub, mul, neg, adjoint, generator, indicator, scalar, identity };

    Kind kind;
    std::size_t position = 0;
    std::vector<std::unique_ptr<ExprAst>> children;

    // generator
    char family = 0;
    int index = 0;
    // indicator: interval endpoints, slot, and optional U-part
    BigRat lo, hi;
    int slot = 0;
    bool has_u = false;
    BigRat u_r;
    long u_k = 0;
    long u_p = 0;
    // scalar
    Scalar value;
};

// Parses and validates against the session grammar; rejects indicator
// monomials whose interval escapes ran beta_g (the coefficient invariant).
std::unique_ptr<ExprAst> parse_ast(const std::string& text, Session s);

// Parse + evaluate to a canonical element.
AlgebraElement parse_expr(const std::string& text, Session s);

enum class SerializeFormat { text, json };

// Canonical, deterministic output; parse_expr / element deserialization
// inverts it.
std::string serialize(const AlgebraElement& a, SerializeFormat format);
AlgebraElement deserialize(const std::string& text, Session s, SerializeFormat format);

}  // namespace pcp
