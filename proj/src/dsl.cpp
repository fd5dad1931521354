#include "fsw/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace fsw::dsl {

namespace {

const std::set<std::string>& known_functions() {
    static const std::set<std::string> fns = {"c", "s", "rank", "grade", "sym", "dual", "twist"};
    return fns;
}

int arity_of(const std::string& fn) { return fn == "grade" || fn == "sym" || fn == "twist" ? 2 : 1; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                return lhs;
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Binary;
            node->op = c;
            node->args.push_back(std::move(lhs));
            node->args.push_back(term());
            lhs = std::move(node);
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (peek() == '*') {
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Binary;
            node->op = '*';
            node->args.push_back(std::move(lhs));
            node->args.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Neg;
            node->args.push_back(factor());
            return node;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return ident_or_call();
        throw ParseError("expected a factor", pos_);
    }

    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        Integer value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value *= 10;
            value += text_[pos_] - '0';
            ++pos_;
        }
        if (start == pos_)
            throw ParseError("expected digits", pos_);
        return value;
    }

    ExprPtr literal() {
        Integer num = digits();
        Rational value(num);
        if (peek() == '/') {
            ++pos_;
            Integer den = digits();
            if (den == 0)
                throw ParseError("zero denominator", pos_);
            value = Rational(num, den);
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Number;
        node->number = value;
        return node;
    }

    ExprPtr ident_or_call() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (peek() != '(') {
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Ident;
            node->name = std::move(name);
            return node;
        }
        if (!known_functions().count(name))
            throw ParseError("unknown function '" + name + "'", start);
        ++pos_; // '('
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Call;
        node->name = name;
        node->args.push_back(expr());
        const int arity = arity_of(name);
        for (int i = 1; i < arity; ++i) {
            expect(',');
            node->args.push_back(expr());
        }
        expect(')');
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print_rec(const Expr& e, std::ostringstream& os, int parent_level) {
    // levels: 0 = sum, 1 = product, 2 = atom
    switch (e.kind) {
    case Expr::Kind::Number:
        os << to_fraction_string(e.number);
        return;
    case Expr::Kind::Ident:
        os << e.name;
        return;
    case Expr::Kind::Neg:
        os << "-";
        print_rec(*e.args[0], os, 2);
        return;
    case Expr::Kind::Call: {
        os << e.name << "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i)
                os << ", ";
            print_rec(*e.args[i], os, 0);
        }
        os << ")";
        return;
    }
    case Expr::Kind::Binary: {
        const int level = e.op == '*' ? 1 : 0;
        const bool parens = level < parent_level;
        if (parens)
            os << "(";
        print_rec(*e.args[0], os, level);
        os << " " << e.op << " ";
        // Right operand of '-' must not swallow following terms on reparse.
        print_rec(*e.args[1], os, level + 1);
        if (parens)
            os << ")";
        return;
    }
    }
}

struct Evaluator {
    const Environment& env;

    Value eval_expr(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::Number:
            return e.number;
        case Expr::Kind::Ident: {
            auto it = env.bindings.find(e.name);
            if (it == env.bindings.end())
                throw Error("unbound identifier '" + e.name + "'");
            return it->second;
        }
        case Expr::Kind::Neg:
            return negate(eval_expr(*e.args[0]));
        case Expr::Kind::Binary:
            return binary(e.op, eval_expr(*e.args[0]), eval_expr(*e.args[1]));
        case Expr::Kind::Call:
            return call(e);
        }
        throw Error("corrupt expression");
    }

    Value negate(Value v) {
        if (auto* r = std::get_if<Rational>(&v))
            return Rational(-*r);
        if (auto* g = std::get_if<GradedClass>(&v))
            return -*g;
        return -std::get<KClass>(v);
    }

    GradedClass as_class(const Value& v) {
        if (const auto* g = std::get_if<GradedClass>(&v))
            return *g;
        if (const auto* r = std::get_if<Rational>(&v))
            return GradedClass::constant(env.ring, *r);
        throw Error("expected a graded class, got a K-class");
    }

    Value binary(char op, Value a, Value b) {
        const bool ka = std::holds_alternative<KClass>(a);
        const bool kb = std::holds_alternative<KClass>(b);
        if (ka || kb) {
            if (!(ka && kb))
                throw Error("cannot mix K-classes with ring values");
            const auto& x = std::get<KClass>(a);
            const auto& y = std::get<KClass>(b);
            if (op == '+')
                return x + y;
            if (op == '-')
                return x - y;
            throw Error("K-classes support only + and -");
        }
        if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
            const auto& x = std::get<Rational>(a);
            const auto& y = std::get<Rational>(b);
            if (op == '+')
                return Rational(x + y);
            if (op == '-')
                return Rational(x - y);
            return Rational(x * y);
        }
        GradedClass x = as_class(a);
        GradedClass y = as_class(b);
        if (op == '+')
            return x + y;
        if (op == '-')
            return x - y;
        return x * y;
    }

    long long small_integer(const Value& v, const char* what) {
        const auto* r = std::get_if<Rational>(&v);
        if (!r || denominator(*r) != 1)
            throw Error(std::string(what) + " must be an integer");
        return static_cast<long long>(numerator(*r));
    }

    Value call(const Expr& e) {
        const std::string& fn = e.name;
        Value first = eval_expr(*e.args[0]);
        if (fn == "c" || fn == "s" || fn == "rank" || fn == "dual") {
            const auto* k = std::get_if<KClass>(&first);
            if (!k)
                throw Error("'" + fn + "' expects a K-class");
            if (fn == "c")
                return total_chern(*k, env.ring);
            if (fn == "s")
                return total_segre(*k, env.ring);
            if (fn == "rank")
                return Rational(rank(*k));
            return dual(*k);
        }
        if (fn == "grade") {
            const auto* g = std::get_if<GradedClass>(&first);
            if (!g)
                throw Error("'grade' expects a graded class");
            return grade(*g, static_cast<int>(small_integer(eval_expr(*e.args[1]), "grade degree")));
        }
        if (fn == "sym") {
            const auto* k = std::get_if<KClass>(&first);
            if (!k || k->terms().size() != 1 || k->terms()[0].mult != 1 ||
                !k->terms()[0].twist.empty())
                throw Error("'sym' expects a single bundle symbol");
            return sym_power(k->terms()[0].symbol,
                             static_cast<int>(small_integer(eval_expr(*e.args[1]), "sym degree")));
        }
        // twist
        const auto* k = std::get_if<KClass>(&first);
        if (!k)
            throw Error("'twist' expects a K-class");
        Value second = eval_expr(*e.args[1]);
        const auto* t = std::get_if<GradedClass>(&second);
        if (!t)
            throw Error("'twist' expects a degree-1 class as its twist");
        return tensor_line(*k, LineTwist{"", *t});
    }
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    std::ostringstream os;
    print_rec(e, os, 0);
    return os.str();
}

Value eval(const Expr& e, const Environment& env) {
    if (!env.ring)
        throw Error("evaluation environment has no ambient ring");
    return Evaluator{env}.eval_expr(e);
}

std::string value_string(const Value& v) {
    if (const auto* r = std::get_if<Rational>(&v))
        return to_fraction_string(*r);
    if (const auto* g = std::get_if<GradedClass>(&v))
        return g->str();
    return std::get<KClass>(v).str();
}

} // namespace fsw::dsl
