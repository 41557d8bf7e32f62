#include "mono/expr.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "mono/wick.hpp"

namespace mono {

namespace {

using AstPtr = std::unique_ptr<ExprAst>;

AstPtr make_node(ExprAst::Kind kind) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    AstPtr run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("end of input, '+', '-', '*', or a factor");
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_, "syntax error at byte " + std::to_string(pos_) +
                                   ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    bool at_digit() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        return c == '-' && pos_ + 1 < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]));
    }

    // Factor starts usable for juxtaposed products. A leading '-' is not one
    // so that "x - 2*y" stays a subtraction.
    bool at_factor() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return c == 'c' || c == 'a' || c == 'I' || c == '(' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    Index parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == start || (pos_ == start + 1 && src_[start] == '-')) {
            pos_ = start;
            fail("integer");
        }
        return std::stoll(src_.substr(start, pos_ - start));
    }

    Scalar parse_rational() {
        BigInt num(parse_int());
        if (accept('/')) {
            std::size_t den_at = pos_;
            BigInt den(parse_int());
            if (den == 0)
                throw ParseError(den_at, "syntax error at byte " +
                                             std::to_string(den_at) +
                                             ": zero denominator");
            return Scalar(num, den);
        }
        return Scalar(num);
    }

    AstPtr parse_expr() {
        auto left = parse_term();
        while (true) {
            skip_ws();
            if (accept('+')) {
                auto n = make_node(ExprAst::Sum);
                n->children.push_back(std::move(left));
                n->children.push_back(parse_term());
                left = std::move(n);
            } else if (accept('-')) {
                auto n = make_node(ExprAst::Diff);
                n->children.push_back(std::move(left));
                n->children.push_back(parse_term());
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    AstPtr parse_term() {
        auto left = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                auto n = make_node(ExprAst::Product);
                n->children.push_back(std::move(left));
                n->children.push_back(parse_factor());
                left = std::move(n);
            } else if (at_factor()) {
                auto n = make_node(ExprAst::Product);
                n->children.push_back(std::move(left));
                n->children.push_back(parse_factor());
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    AstPtr maybe_adjoint(AstPtr inner) {
        while (accept('\'')) {
            auto n = make_node(ExprAst::Adjoint);
            n->children.push_back(std::move(inner));
            inner = std::move(n);
        }
        return inner;
    }

    AstPtr parse_factor() {
        skip_ws();
        if (pos_ >= src_.size()) fail("a factor");
        char c = src_[pos_];
        if (c == 'c' || c == 'a') {
            ++pos_;
            expect('(');
            Index i = parse_int();
            expect(')');
            auto n = make_node(ExprAst::Generator);
            n->letter = (c == 'c') ? creator(i) : annihilator(i);
            return maybe_adjoint(std::move(n));
        }
        if (c == 'I') {
            ++pos_;
            return maybe_adjoint(make_node(ExprAst::Identity));
        }
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            expect(')');
            return maybe_adjoint(std::move(e));
        }
        if (at_digit()) {
            Scalar r = parse_rational();
            if (accept('*')) {
                auto n = make_node(ExprAst::ScalarMul);
                n->value = std::move(r);
                n->children.push_back(parse_factor());
                return n;
            }
            auto n = make_node(ExprAst::ScalarLit);
            n->value = std::move(r);
            return n;
        }
        fail("'c(', 'a(', 'I', '(', or a rational");
    }
};

}  // namespace

std::unique_ptr<ExprAst> parse(const std::string& src) {
    return Parser(src).run();
}

Element eval_ast(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::ScalarLit:
            return ast.value * Element::identity();
        case ExprAst::Generator:
            return normalize_word({ast.letter});
        case ExprAst::Identity:
            return Element::identity();
        case ExprAst::Sum:
            return eval_ast(*ast.children[0]) + eval_ast(*ast.children[1]);
        case ExprAst::Diff:
            return eval_ast(*ast.children[0]) - eval_ast(*ast.children[1]);
        case ExprAst::Product:
            return multiply(eval_ast(*ast.children[0]), eval_ast(*ast.children[1]));
        case ExprAst::ScalarMul:
            return ast.value * eval_ast(*ast.children[0]);
        case ExprAst::Adjoint:
            return eval_ast(*ast.children[0]).adjoint();
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string word_text(const BasisIndex& b) {
    if (b.is_identity()) return "I";
    std::string s;
    for (const Letter& x : b.letters()) {
        s += (x.kind == LetterKind::Creator ? "c(" : "a(");
        s += std::to_string(x.index);
        s += ')';
    }
    return s;
}

std::string text_format(const Element& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : x.terms()) {
        Scalar coeff = c;
        if (first) {
            if (coeff < 0) {
                out += '-';
                coeff = -coeff;
            }
        } else {
            out += (coeff < 0) ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        out += to_string(coeff);
        out += '*';
        out += word_text(b);
        first = false;
    }
    return out;
}

nlohmann::ordered_json json_of(const Element& x) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [b, c] : x.terms()) {
        nlohmann::ordered_json t;
        t["l1"] = b.lambda1();
        t["l2"] = b.lambda2();
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json root;
    root["terms"] = std::move(terms);
    return root;
}

}  // namespace

std::string format_element(const Element& x, FormatMode mode) {
    if (mode == FormatMode::Text) return text_format(x);
    return json_of(x).dump();
}

Element element_from_json(const std::string& json_text) {
    auto root = nlohmann::json::parse(json_text);
    Element x;
    for (const auto& t : root.at("terms")) {
        IndexSet l1 = t.at("l1").get<IndexSet>();
        IndexSet l2 = t.at("l2").get<IndexSet>();
        auto c = parse_scalar(t.at("coeff").get<std::string>());
        if (!c) throw std::invalid_argument("bad coefficient in JSON element");
        x.add_term(BasisIndex(std::move(l1), std::move(l2)), *c);
    }
    return x;
}

std::string format_fock_vector(const FockVector& v) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : v.terms()) {
        nlohmann::ordered_json t;
        t["v"] = e.indices();
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json root;
    root["terms"] = std::move(terms);
    return root.dump();
}

FockBasisVector parse_fock_basis_vector(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
        throw ParseError(pos, "expected '(' in vector literal");
    ++pos;
    std::vector<Index> idx;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
        std::size_t start = pos;
        if (text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(pos, "expected integer in vector literal");
        idx.push_back(std::stoll(text.substr(start, pos - start)));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
        }
    }
    if (pos >= text.size()) throw ParseError(pos, "expected ')' in vector literal");
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError(pos, "trailing input after vector literal");
    return FockBasisVector(std::move(idx));
}

}  // namespace mono
