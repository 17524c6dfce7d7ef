#include "dio/parser.hpp"

#include <cctype>
#include <optional>

#include "dio/errors.hpp"

namespace dio {

namespace {

struct Token {
    enum class Type { Integer, Variable, Plus, Minus, Star, Caret, LParen, RParen, Equals, End };
    Type type;
    std::size_t offset;
    Int value;    // Integer
    int var = 0;  // Variable
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t at = pos_;
        if (pos_ >= text_.size()) return {Token::Type::End, at};
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Type::Plus, at};
            case '-': ++pos_; return {Token::Type::Minus, at};
            case '*': ++pos_; return {Token::Type::Star, at};
            case '^': ++pos_; return {Token::Type::Caret, at};
            case '(': ++pos_; return {Token::Type::LParen, at};
            case ')': ++pos_; return {Token::Type::RParen, at};
            case '=': ++pos_; return {Token::Type::Equals, at};
            case '/':
                throw ParseError(ParseError::Kind::Unsupported, at,
                                 "division is not supported (offset " + std::to_string(at) + ")");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Token t{Token::Type::Integer, at};
            t.value = Int(std::string(text_.substr(start, pos_ - start)));
            return t;
        }
        if (c == 'x') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                throw ParseError(ParseError::Kind::Syntax, at,
                                 "expected digits after 'x' (offset " + std::to_string(at) + ")");
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6)
                throw ParseError(ParseError::Kind::UnknownVariable, at,
                                 "variable index too large: x" + digits);
            int index = std::stoi(digits);
            if (index < 1)
                throw ParseError(ParseError::Kind::UnknownVariable, at,
                                 "variable indices start at x1, got x" + digits);
            Token t{Token::Type::Variable, at};
            t.var = index;
            return t;
        }
        throw ParseError(ParseError::Kind::Syntax, at,
                         std::string("unexpected character '") + c + "' (offset " +
                             std::to_string(at) + ")");
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Expr parse_expr() {
        Expr lhs = parse_term();
        std::vector<Expr> terms;
        terms.push_back(std::move(lhs));
        while (current_.type == Token::Type::Plus || current_.type == Token::Type::Minus) {
            bool minus = current_.type == Token::Type::Minus;
            advance();
            Expr rhs = parse_term();
            terms.push_back(minus ? Expr::negate(std::move(rhs)) : std::move(rhs));
        }
        if (terms.size() == 1) return std::move(terms[0]);
        return Expr::sum(std::move(terms));
    }

    Expr parse_equation_body(Expr& lhs_out, Expr& rhs_out) {
        lhs_out = parse_expr();
        expect(Token::Type::Equals, "'='");
        advance();
        rhs_out = parse_expr();
        expect(Token::Type::End, "end of input");
        return Expr::sum({lhs_out, Expr::negate(rhs_out)});
    }

    Expr parse_whole_expr() {
        Expr e = parse_expr();
        expect(Token::Type::End, "end of input");
        return e;
    }

  private:
    Expr parse_term() {
        Expr first = parse_factor();
        std::vector<Expr> factors;
        factors.push_back(std::move(first));
        while (current_.type == Token::Type::Star) {
            advance();
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return std::move(factors[0]);
        return Expr::product(std::move(factors));
    }

    Expr parse_factor() {
        Expr base = parse_atom();
        if (current_.type == Token::Type::Caret) {
            std::size_t caret_at = current_.offset;
            advance();
            Expr exponent = parse_atom();
            if (contains_negation(exponent))
                throw ParseError(ParseError::Kind::Unsupported, caret_at,
                                 "negative values and subtraction are not supported in "
                                 "exponents (offset " +
                                     std::to_string(caret_at) + ")");
            return Expr::power(std::move(base), std::move(exponent));
        }
        return base;
    }

    Expr parse_atom() {
        switch (current_.type) {
            case Token::Type::Integer: {
                Expr e = Expr::constant(current_.value);
                advance();
                return e;
            }
            case Token::Type::Variable: {
                Expr e = Expr::variable(current_.var);
                advance();
                return e;
            }
            case Token::Type::LParen: {
                advance();
                Expr e = parse_expr();
                expect(Token::Type::RParen, "')'");
                advance();
                return e;
            }
            case Token::Type::Minus: {
                advance();
                return Expr::negate(parse_atom());
            }
            default:
                throw ParseError(ParseError::Kind::Syntax, current_.offset,
                                 "expected integer, variable, '(' or '-' (offset " +
                                     std::to_string(current_.offset) + ")");
        }
    }

    static bool contains_negation(const Expr& e) {
        if (e.kind == Expr::Kind::Negate) return true;
        for (const auto& c : e.children)
            if (contains_negation(c)) return true;
        return false;
    }

    void expect(Token::Type t, const std::string& what) {
        if (current_.type != t)
            throw ParseError(ParseError::Kind::Syntax, current_.offset,
                             "expected " + what + " (offset " + std::to_string(current_.offset) +
                                 ")");
    }

    void advance() { current_ = lexer_.next(); }

    Lexer lexer_;
    Token current_{Token::Type::End, 0};
};

void check_contiguous_variables(const Expr& raw, std::string_view text) {
    std::vector<bool> used;
    collect_variables(raw, used);
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i])
            throw ParseError(ParseError::Kind::UnknownVariable, text.size(),
                             "variables must be contiguous: x" + std::to_string(used.size()) +
                                 " is used but x" + std::to_string(i + 1) + " is not");
    }
}

std::optional<Equation::ExplicitForm> detect_explicit(const Expr& lhs, const Expr& rhs) {
    auto try_side = [](const Expr& isolated, const Expr& body)
        -> std::optional<Equation::ExplicitForm> {
        if (isolated.kind != Expr::Kind::Variable) return std::nullopt;
        std::vector<bool> used;
        collect_variables(body, used);
        if (static_cast<std::size_t>(isolated.var) <= used.size() && used[isolated.var - 1])
            return std::nullopt;
        return Equation::ExplicitForm{isolated.var, normalize(body)};
    };
    if (auto f = try_side(lhs, rhs)) return f;
    return try_side(rhs, lhs);
}

}  // namespace

Expr parse_expression(std::string_view text) {
    Parser p(text);
    return normalize(p.parse_whole_expr());
}

Equation parse_equation(std::string_view text) {
    Parser p(text);
    Expr raw_lhs, raw_rhs;
    Expr raw = p.parse_equation_body(raw_lhs, raw_rhs);
    check_contiguous_variables(raw, text);

    Equation eq;
    eq.source = std::string(text);
    eq.var_count = max_variable(raw);  // before folding, so 0*x1 keeps k = 1
    eq.f = normalize(raw);
    eq.algebraic = is_algebraic(eq.f);
    eq.explicit_form = detect_explicit(raw_lhs, raw_rhs);
    if (eq.algebraic) {
        eq.poly = expand_expr(eq.f, eq.var_count);
        eq.degree = eq.poly->total_degree();
    }
    return eq;
}

const Polynomial& expand_polynomial(const Equation& eq) {
    if (!eq.algebraic || !eq.poly)
        throw NotAlgebraicError("equation has a variable exponent: " + eq.source);
    return *eq.poly;
}

}  // namespace dio
