#pragma once

#include <map>
#include <memory>
#include <string>

#include "heun/ratfunc.hpp"

namespace heun {

// Text grammar shared by the CLI and the fixture files:
//   integers and fractions (-16/9), indeterminate z, extension generator t1,
//   parameter names (letters), operators + - * / ^, parentheses.
// '^' takes a nonnegative integer literal exponent.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, variable, add, sub, mul, div, neg, pow };
    Kind kind;
    Rational value;      // number
    std::string name;    // variable
    ExprPtr lhs, rhs;    // binary ops / neg (lhs)
    long exponent = 0;   // pow
};

// Throws heun::error with a column reference on malformed input.
ExprPtr parse_expr(const std::string& text);

// Variables are bound to rational functions ("z" to the indeterminate,
// parameters and "t1" to constants).  Unbound names are an error.
RationalFunction eval_expr(const ExprPtr& e,
                           const std::map<std::string, RationalFunction>& vars);

struct EvalContext {
    FieldSpec field;
    std::map<std::string, ExactScalar> params;

    std::map<std::string, RationalFunction> bindings(bool with_z) const;
};

// Convenience wrappers: parse and evaluate in one go.
RationalFunction parse_ratfunc(const std::string& text, const EvalContext& ctx);
Poly parse_poly(const std::string& text, const EvalContext& ctx);      // denominator must be constant
ExactScalar parse_scalar(const std::string& text, const EvalContext& ctx);  // no z allowed

// "t1^2 = p*t1 + q" with rational p, q.
FieldSpec parse_field_decl(const std::string& text);

std::string poly_to_string(const Poly& p);
std::string ratfunc_to_string(const RationalFunction& f);

}  // namespace heun
