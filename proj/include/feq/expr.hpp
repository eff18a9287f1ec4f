#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace feq {

/// Immutable expression tree in one real variable `x`.
///
/// Grammar (lowest to highest precedence):
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?          right-associative
///   primary := number | 'x' | 'pi' | 'e' | func '(' sum ')' | '(' sum ')'
///
/// So "-x^2" is -(x^2) and "2^3^2" is 2^9. There is no unary plus.
class Expr {
public:
    enum class Kind { Number, Variable, Constant, Neg, Add, Sub, Mul, Div, Pow, Call };
    enum class Func { Sin, Cos, Tan, Exp, Ln, Abs, Sqrt, Floor, Frac };
    enum class Const { Pi, E };

    static Expr number(double v);
    static Expr variable();
    static Expr constant(Const c);
    static Expr neg(Expr operand);
    static Expr binary(Kind op, Expr lhs, Expr rhs);
    static Expr call(Func f, Expr arg);

    Kind kind() const;
    double number_value() const;
    Const constant_id() const;
    Func func() const;
    const Expr& lhs() const;  // operand of Neg/Call, left side of binaries
    const Expr& rhs() const;

    /// Evaluates at x. Throws DomainError on division by zero or any
    /// non-finite intermediate (ln of non-positive, sqrt of negative, ...).
    double eval(double x) const;

    /// True if the tree mentions `x`.
    bool depends_on_x() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Throws SyntaxError / UnknownIdentifier with 0-based character positions.
Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(to_string(e)) == e for every parsed e.
std::string to_string(const Expr& e);

const char* func_name(Expr::Func f);

}  // namespace feq
