#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mono/algebra.hpp"
#include "mono/fock.hpp"

namespace mono {

// Operator expression AST.
//   expr     := term (('+'|'-') term)*
//   term     := factor (factor | '*' factor)*
//   factor   := atom [''] | rational ['*' factor] | '(' expr ')' [''']
//   atom     := 'c(' int ')' | 'a(' int ')' | 'I'
//   rational := int ['/' int]
// c(i) is the creator a_i†, a(i) the annihilator a_i, postfix ' the adjoint.
// Juxtaposition multiplies with left associativity; ' binds tighter.
struct ExprAst {
    enum Kind { ScalarLit, Generator, Identity, Sum, Diff, Product, ScalarMul, Adjoint } kind;
    Scalar value;          // ScalarLit / ScalarMul
    Letter letter{};       // Generator
    std::vector<std::unique_ptr<ExprAst>> children;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : std::runtime_error(what), offset(off) {}
};

std::unique_ptr<ExprAst> parse(const std::string& src);

Element eval_ast(const ExprAst& ast);

enum class FormatMode { Text, Json };

std::string format_element(const Element& x, FormatMode mode);

Element element_from_json(const std::string& json_text);

std::string format_fock_vector(const FockVector& v);

// "(i1,i2,...)" with "()" the vacuum.
FockBasisVector parse_fock_basis_vector(const std::string& text);

}  // namespace mono
