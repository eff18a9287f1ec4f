#include "feq/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq {

struct Expr::Node {
    Kind kind;
    double value = 0.0;
    Const constant = Const::Pi;
    Func func = Func::Sin;
    std::optional<Expr> lhs;
    std::optional<Expr> rhs;
};

namespace {

struct FuncEntry {
    const char* name;
    Expr::Func func;
};

constexpr std::array<FuncEntry, 9> kFuncs{{
    {"sin", Expr::Func::Sin},
    {"cos", Expr::Func::Cos},
    {"tan", Expr::Func::Tan},
    {"exp", Expr::Func::Exp},
    {"ln", Expr::Func::Ln},
    {"abs", Expr::Func::Abs},
    {"sqrt", Expr::Func::Sqrt},
    {"floor", Expr::Func::Floor},
    {"frac", Expr::Func::Frac},
}};

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string("non-finite result from ") + what);
    return v;
}

double apply(Expr::Func f, double a) {
    switch (f) {
        case Expr::Func::Sin: return checked(std::sin(a), "sin");
        case Expr::Func::Cos: return checked(std::cos(a), "cos");
        case Expr::Func::Tan: return checked(std::tan(a), "tan");
        case Expr::Func::Exp: return checked(std::exp(a), "exp");
        case Expr::Func::Ln:
            if (!(a > 0.0)) throw DomainError("ln of non-positive argument " + format_real(a));
            return checked(std::log(a), "ln");
        case Expr::Func::Abs: return std::fabs(a);
        case Expr::Func::Sqrt:
            if (a < 0.0) throw DomainError("sqrt of negative argument " + format_real(a));
            return std::sqrt(a);
        case Expr::Func::Floor: return std::floor(a);
        case Expr::Func::Frac: {
            double r = a - std::floor(a);
            // a tiny negative a rounds to exactly 1.0
            if (r >= 1.0) r = std::nextafter(1.0, 0.0);
            return r;
        }
    }
    throw InternalError("unhandled function");
}

// --- parser ------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = sum();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "operator or end of input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (accept('+')) e = Expr::binary(Expr::Kind::Add, e, product());
            else if (accept('-')) e = Expr::binary(Expr::Kind::Sub, e, product());
            else return e;
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            if (accept('*')) e = Expr::binary(Expr::Kind::Mul, e, unary());
            else if (accept('/')) e = Expr::binary(Expr::Kind::Div, e, unary());
            else return e;
        }
    }

    Expr unary() {
        if (accept('-')) return Expr::neg(unary());
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return Expr::binary(Expr::Kind::Pow, base, unary());
        return base;
    }

    Expr primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "number, identifier or '('");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            Expr e = sum();
            if (!accept(')')) throw SyntaxError(pos_, "')'");
            return e;
        }
        throw SyntaxError(pos_, "number, identifier or '('");
    }

    Expr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) throw SyntaxError(start, "digits");
        // Exponent only when a digit follows, so "2e" stays an error later on.
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                digits();
            }
        }
        auto v = parse_real(text_.substr(start, pos_ - start));
        if (!v) throw SyntaxError(start, "numeric literal");
        return Expr::number(*v);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return Expr::variable();
        if (name == "pi") return Expr::constant(Expr::Const::Pi);
        if (name == "e") return Expr::constant(Expr::Const::E);
        for (const auto& f : kFuncs) {
            if (name == f.name) {
                if (!accept('(')) throw SyntaxError(pos_, "'(' after function name");
                Expr arg = sum();
                if (!accept(')')) throw SyntaxError(pos_, "')'");
                return Expr::call(f.func, arg);
            }
        }
        throw UnknownIdentifier(std::string(name), start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// --- printer -----------------------------------------------------------------

int precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        case Expr::Kind::Number: return e.number_value() < 0 || std::signbit(e.number_value()) ? 3 : 5;
        default: return 5;
    }
}

std::string wrap(const Expr& e, int min_prec) {
    std::string s = to_string(e);
    if (precedence(e) < min_prec) return "(" + s + ")";
    return s;
}

}  // namespace

// --- Expr --------------------------------------------------------------------

Expr Expr::number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Number;
    n->value = v;
    return Expr{std::move(n)};
}

Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    return Expr{std::move(n)};
}

Expr Expr::constant(Const c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->constant = c;
    return Expr{std::move(n)};
}

Expr Expr::neg(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->lhs = std::move(operand);
    return Expr{std::move(n)};
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
    switch (op) {
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Div:
        case Kind::Pow: break;
        default: throw ArgumentError("not a binary operator");
    }
    auto n = std::make_shared<Node>();
    n->kind = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return Expr{std::move(n)};
}

Expr Expr::call(Func f, Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Call;
    n->func = f;
    n->lhs = std::move(arg);
    return Expr{std::move(n)};
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::number_value() const { return node_->value; }
Expr::Const Expr::constant_id() const { return node_->constant; }
Expr::Func Expr::func() const { return node_->func; }

const Expr& Expr::lhs() const {
    if (!node_->lhs) throw InternalError("leaf expression has no operand");
    return *node_->lhs;
}

const Expr& Expr::rhs() const {
    if (!node_->rhs) throw InternalError("expression has no right operand");
    return *node_->rhs;
}

double Expr::eval(double x) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Number: return n.value;
        case Kind::Variable: return x;
        case Kind::Constant: return n.constant == Const::Pi ? std::numbers::pi : std::numbers::e;
        case Kind::Neg: return -n.lhs->eval(x);
        case Kind::Add: return checked(n.lhs->eval(x) + n.rhs->eval(x), "+");
        case Kind::Sub: return checked(n.lhs->eval(x) - n.rhs->eval(x), "-");
        case Kind::Mul: return checked(n.lhs->eval(x) * n.rhs->eval(x), "*");
        case Kind::Div: {
            const double num = n.lhs->eval(x);
            const double den = n.rhs->eval(x);
            if (den == 0.0) throw DomainError("division by zero");
            return checked(num / den, "/");
        }
        case Kind::Pow: return checked(std::pow(n.lhs->eval(x), n.rhs->eval(x)), "^");
        case Kind::Call: return apply(n.func, n.lhs->eval(x));
    }
    throw InternalError("unhandled expression kind");
}

bool Expr::depends_on_x() const {
    const Node& n = *node_;
    if (n.kind == Kind::Variable) return true;
    return (n.lhs && n.lhs->depends_on_x()) || (n.rhs && n.rhs->depends_on_x());
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::Number: return x.value == y.value;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Constant: return x.constant == y.constant;
        case Expr::Kind::Neg: return *x.lhs == *y.lhs;
        case Expr::Kind::Call: return x.func == y.func && *x.lhs == *y.lhs;
        default: return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
    }
}

Expr parse_expr(std::string_view text) { return Parser{text}.parse(); }

const char* func_name(Expr::Func f) {
    for (const auto& e : kFuncs)
        if (e.func == f) return e.name;
    return "?";
}

std::string to_string(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Number: return format_real(e.number_value());
        case Expr::Kind::Variable: return "x";
        case Expr::Kind::Constant: return e.constant_id() == Expr::Const::Pi ? "pi" : "e";
        case Expr::Kind::Neg: return "-" + wrap(e.lhs(), 3);
        case Expr::Kind::Call: return std::string(func_name(e.func())) + "(" + to_string(e.lhs()) + ")";
        case Expr::Kind::Add: return wrap(e.lhs(), 1) + "+" + wrap(e.rhs(), 2);
        case Expr::Kind::Sub: return wrap(e.lhs(), 1) + "-" + wrap(e.rhs(), 2);
        case Expr::Kind::Mul: return wrap(e.lhs(), 2) + "*" + wrap(e.rhs(), 3);
        case Expr::Kind::Div: return wrap(e.lhs(), 2) + "/" + wrap(e.rhs(), 3);
        case Expr::Kind::Pow: return wrap(e.lhs(), 5) + "^" + wrap(e.rhs(), 3);
    }
    return "?";
}

}  // namespace feq
