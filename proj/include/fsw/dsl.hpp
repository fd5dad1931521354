#pragma once

#include "fsw/kcalc.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fsw::dsl {

// Parse failure with the byte offset of the offending character.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { Number, Ident, Neg, Binary, Call };
    Kind kind = Kind::Number;
    Rational number;          // Number
    std::string name;         // Ident / Call
    char op = 0;              // Binary: '+', '-', '*'
    std::vector<ExprPtr> args;
};

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := literal | ident | call | '(' expr ')' | '-' factor.
// Rationals are written p/q. Whitespace-insensitive.
ExprPtr parse(std::string_view text);
std::string print(const Expr& e);

using Value = std::variant<Rational, GradedClass, KClass>;

struct Environment {
    RingPtr ring;
    std::map<std::string, Value> bindings;
};

// Calls: c -> total_chern, s -> total_segre, rank, grade(e, d), sym(e, d),
// dual(e), twist(e, t). Unbound identifiers and ill-typed applications are
// domain errors.
Value eval(const Expr& e, const Environment& env);

std::string value_string(const Value& v);

} // namespace fsw::dsl
