#include "heun/expr.hpp"

#include <cctype>

namespace heun {

namespace {

struct Token {
    enum class Kind { number, ident, op, lparen, rparen, end };
    Kind kind;
    std::string text;
    size_t column;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        tok_.column = pos_ + 1;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::end, "", pos_ + 1};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Kind::number, s_.substr(start, pos_ - start), start + 1};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::ident, s_.substr(start, pos_ - start), start + 1};
            return;
        }
        if (c == '(') {
            tok_ = {Token::Kind::lparen, "(", pos_ + 1};
            ++pos_;
            return;
        }
        if (c == ')') {
            tok_ = {Token::Kind::rparen, ")", pos_ + 1};
            ++pos_;
            return;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            tok_ = {Token::Kind::op, std::string(1, c), pos_ + 1};
            ++pos_;
            return;
        }
        throw error("parse error at column " + std::to_string(pos_ + 1) +
                    ": unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
};

ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw error("parse error at column " + std::to_string(t.column) +
                        ": unexpected '" + t.text + "'");
        return e;
    }

  private:
    ExprPtr sum() {
        ExprPtr e = product();
        while (lex_.peek().kind == Token::Kind::op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.take().text;
            ExprPtr r = product();
            Expr n;
            n.kind = op == "+" ? Expr::Kind::add : Expr::Kind::sub;
            n.lhs = e;
            n.rhs = r;
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (lex_.peek().kind == Token::Kind::op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            std::string op = lex_.take().text;
            ExprPtr r = unary();
            Expr n;
            n.kind = op == "*" ? Expr::Kind::mul : Expr::Kind::div;
            n.lhs = e;
            n.rhs = r;
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "-") {
            lex_.take();
            Expr n;
            n.kind = Expr::Kind::neg;
            n.lhs = unary();
            return make(std::move(n));
        }
        if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "+") {
            lex_.take();
            return unary();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "^") {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::number)
                throw error("parse error at column " + std::to_string(caret.column) +
                            ": exponent must be a nonnegative integer literal");
            Expr n;
            n.kind = Expr::Kind::pow;
            n.lhs = base;
            n.exponent = std::stol(e.text);
            return make(std::move(n));
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number: {
                Expr n;
                n.kind = Expr::Kind::number;
                n.value = rational_from_string(t.text);
                return make(std::move(n));
            }
            case Token::Kind::ident: {
                Expr n;
                n.kind = Expr::Kind::variable;
                n.name = t.text;
                return make(std::move(n));
            }
            case Token::Kind::lparen: {
                ExprPtr e = sum();
                Token close = lex_.take();
                if (close.kind != Token::Kind::rparen)
                    throw error("parse error at column " + std::to_string(close.column) +
                                ": expected ')'");
                return e;
            }
            default:
                throw error("parse error at column " + std::to_string(t.column) +
                            ": expected a value");
        }
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

RationalFunction eval_expr(const ExprPtr& e,
                           const std::map<std::string, RationalFunction>& vars) {
    switch (e->kind) {
        case Expr::Kind::number:
            return RationalFunction(ExactScalar(e->value));
        case Expr::Kind::variable: {
            auto it = vars.find(e->name);
            if (it == vars.end()) throw error("unknown symbol '" + e->name + "'");
            return it->second;
        }
        case Expr::Kind::add:
            return eval_expr(e->lhs, vars) + eval_expr(e->rhs, vars);
        case Expr::Kind::sub:
            return eval_expr(e->lhs, vars) - eval_expr(e->rhs, vars);
        case Expr::Kind::mul:
            return eval_expr(e->lhs, vars) * eval_expr(e->rhs, vars);
        case Expr::Kind::div:
            return eval_expr(e->lhs, vars) / eval_expr(e->rhs, vars);
        case Expr::Kind::neg:
            return -eval_expr(e->lhs, vars);
        case Expr::Kind::pow:
            return eval_expr(e->lhs, vars).pow(e->exponent);
    }
    throw error("corrupt expression tree");
}

std::map<std::string, RationalFunction> EvalContext::bindings(bool with_z) const {
    std::map<std::string, RationalFunction> vars;
    if (with_z) vars["z"] = RationalFunction::variable();
    if (field.is_quadratic())
        vars["t1"] = RationalFunction(ExactScalar::generator(field));
    for (const auto& [name, value] : params) vars[name] = RationalFunction(value);
    return vars;
}

RationalFunction parse_ratfunc(const std::string& text, const EvalContext& ctx) {
    return eval_expr(parse_expr(text), ctx.bindings(true));
}

Poly parse_poly(const std::string& text, const EvalContext& ctx) {
    RationalFunction f = parse_ratfunc(text, ctx);
    if (f.den().degree() != 0)
        throw error("expected a polynomial, got denominator " + poly_to_string(f.den()));
    return f.num();  // den is monic constant = 1
}

ExactScalar parse_scalar(const std::string& text, const EvalContext& ctx) {
    RationalFunction f = eval_expr(parse_expr(text), ctx.bindings(false));
    if (!f.is_constant()) throw error("expected a scalar expression");
    if (f.is_zero()) return ExactScalar(0);
    return f.num().coeff(0) / f.den().coeff(0);
}

FieldSpec parse_field_decl(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw error("field declaration must look like t1^2 = p*t1 + q");
    std::string lhs = text.substr(0, eq);
    std::string stripped;
    for (char c : lhs)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped != "t1^2") throw error("field declaration must look like t1^2 = p*t1 + q");
    // Parse the right-hand side with t1 as an indeterminate.
    std::map<std::string, RationalFunction> vars;
    vars["t1"] = RationalFunction::variable();
    RationalFunction rhs = eval_expr(parse_expr(text.substr(eq + 1)), vars);
    if (rhs.den().degree() != 0 || rhs.num().degree() > 1)
        throw error("right-hand side of the minimal polynomial must be linear in t1");
    ExactScalar p = rhs.num().coeff(1) / rhs.den().coeff(0);
    ExactScalar q = rhs.num().coeff(0) / rhs.den().coeff(0);
    if (!p.is_rational() || !q.is_rational())
        throw error("minimal polynomial coefficients must be rational");
    return FieldSpec::quadratic(p.rat(), q.rat());
}

namespace {
// Coefficient rendered so that `coef * z^k` re-parses: quadratic-field values
// are parenthesized.
std::string coeff_to_string(const ExactScalar& c, bool* negated) {
    *negated = false;
    if (c.is_rational()) {
        Rational r = c.rat();
        if (r < 0) {
            *negated = true;
            r = -r;
        }
        return rational_to_string(r);
    }
    return "(" + scalar_to_string(c) + ")";
}
}  // namespace

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        ExactScalar c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = false;
        std::string cs = coeff_to_string(c, &neg);
        std::string sep = out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string term;
        if (k == 0) {
            term = cs;
        } else {
            std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
            term = (cs == "1") ? zp : cs + "*" + zp;
        }
        out += sep + term;
    }
    return out;
}

std::string ratfunc_to_string(const RationalFunction& f) {
    if (f.den().degree() == 0) return poly_to_string(f.num());
    return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

}  // namespace heun
