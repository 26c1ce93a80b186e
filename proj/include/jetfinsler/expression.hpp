#pragma once

// Arithmetic expressions over the jet coordinates.
//
// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number | coordinate | func '(' expr ')' | '(' expr ')'
//   coordinate := t | x1 | x2 | x3 | y1 | y2 | y3
//   func    := exp | sin | cos
//
// Evaluation works on doubles and on Taylor values, so derivatives of parsed
// expressions stay exact.

#include <jetfinsler/jet_point.hpp>
#include <jetfinsler/scalar.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jetfinsler {

class Expression
{
public:
    /// Throws ConfigError with the offending position on malformed input.
    static auto parse(std::string_view text) -> Expression;
    static auto constant(double value) -> Expression;

    [[nodiscard]] auto text() const -> std::string const& { return text_; }

    /// True when the expression mentions coordinate c.
    [[nodiscard]] auto uses(diff::Coord c) const -> bool;
    [[nodiscard]] auto is_constant() const -> bool;

    template <Scalar scalar_t> [[nodiscard]] auto evaluate(BasicJetPoint<scalar_t> const& at) const -> scalar_t
    {
        return eval(root_, at);
    }

private:
    enum class Op { add, sub, mul, div, neg, exp, sin, cos };

    struct Number
    {
        double value;
    };
    struct Variable
    {
        diff::Coord coord;
    };
    struct Unary
    {
        Op op;
        int arg;
    };
    struct Binary
    {
        Op op;
        int lhs;
        int rhs;
    };
    struct IntPower
    {
        int base;
        int exponent;
    };
    using NodeData = std::variant<Number, Variable, Unary, Binary, IntPower>;

    friend class ExpressionParser;

    template <Scalar scalar_t> auto eval(int node, BasicJetPoint<scalar_t> const& at) const -> scalar_t
    {
        return std::visit(
            [&](auto const& n) -> scalar_t {
                using node_t = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<node_t, Number>) {
                    return scalar_t(n.value);
                } else if constexpr (std::is_same_v<node_t, Variable>) {
                    auto const c = diff::coord_index(n.coord);
                    if (c == 0) return at.t;
                    if (c <= 3) return at.x(c);
                    return at.y(c - 3);
                } else if constexpr (std::is_same_v<node_t, Unary>) {
                    auto const a = eval(n.arg, at);
                    switch (n.op) {
                    case Op::neg: return -a;
                    case Op::exp: return scalar::exp(a);
                    case Op::sin: return scalar::sin(a);
                    case Op::cos: return scalar::cos(a);
                    default: break;
                    }
                    throw ConfigError("invalid unary node");
                } else if constexpr (std::is_same_v<node_t, Binary>) {
                    auto const a = eval(n.lhs, at);
                    auto const b = eval(n.rhs, at);
                    switch (n.op) {
                    case Op::add: return a + b;
                    case Op::sub: return a - b;
                    case Op::mul: return a * b;
                    case Op::div:
                        if (scalar::value_of(b) == 0.0) throw DomainError("division by zero in '" + text_ + "'");
                        return a / b;
                    default: break;
                    }
                    throw ConfigError("invalid binary node");
                } else {
                    return scalar::ipow(eval(n.base, at), n.exponent);
                }
            },
            nodes_[static_cast<std::size_t>(node)]);
    }

    std::string text_;
    std::vector<NodeData> nodes_;
    int root_{0};
};

} // namespace jetfinsler
