#include <jetfinsler/expression.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace jetfinsler {

class ExpressionParser
{
public:
    ExpressionParser(std::string_view text, Expression& out) : text_{text}, out_{out} {}

    auto run() -> int
    {
        auto const root = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return root;
    }

private:
    using Op = Expression::Op;

    [[noreturn]] void fail(std::string const& what) const
    {
        throw ConfigError("expression '" + std::string(text_) + "': " + what + " at position " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    auto accept(char c) -> bool
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    auto push(Expression::NodeData node) -> int
    {
        out_.nodes_.push_back(node);
        return static_cast<int>(out_.nodes_.size()) - 1;
    }

    auto parse_expr() -> int
    {
        auto lhs = parse_term();
        for (;;) {
            if (accept('+')) lhs = push(Expression::Binary{Op::add, lhs, parse_term()});
            else if (accept('-')) lhs = push(Expression::Binary{Op::sub, lhs, parse_term()});
            else return lhs;
        }
    }

    auto parse_term() -> int
    {
        auto lhs = parse_unary();
        for (;;) {
            if (accept('*')) lhs = push(Expression::Binary{Op::mul, lhs, parse_unary()});
            else if (accept('/')) lhs = push(Expression::Binary{Op::div, lhs, parse_unary()});
            else return lhs;
        }
    }

    auto parse_unary() -> int
    {
        if (accept('-')) return push(Expression::Unary{Op::neg, parse_unary()});
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    auto parse_power() -> int
    {
        auto const base = parse_primary();
        if (!accept('^')) return base;
        skip_space();
        bool negative = false;
        if (accept('-')) negative = true;
        skip_space();
        auto const start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("only integer exponents are supported");
        int exponent     = 0;
        auto const digits = text_.substr(start, pos_ - start);
        auto [ptr, ec]   = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
        if (ec != std::errc{}) fail("exponent out of range");
        return push(Expression::IntPower{base, negative ? -exponent : exponent});
    }

    auto parse_number() -> int
    {
        // strtod needs a terminated buffer
        std::string const tail(text_.substr(pos_));
        char* end          = nullptr;
        double const value = std::strtod(tail.c_str(), &end);
        if (end == tail.c_str()) fail("expected a number");
        pos_ += static_cast<std::size_t>(end - tail.c_str());
        return push(Expression::Number{value});
    }

    auto parse_primary() -> int
    {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        auto const c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (accept('(')) {
            auto const inner = parse_expr();
            expect(')');
            return inner;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'");

        auto const start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        auto const name = text_.substr(start, pos_ - start);

        if (name == "t") return push(Expression::Variable{diff::Coord::t});
        if (name.size() == 2 && (name[0] == 'x' || name[0] == 'y') && name[1] >= '1' && name[1] <= '3') {
            auto const i = name[1] - '0';
            return push(Expression::Variable{name[0] == 'x' ? diff::coord_x(i) : diff::coord_y(i)});
        }
        Op op{};
        if (name == "exp") op = Op::exp;
        else if (name == "sin") op = Op::sin;
        else if (name == "cos") op = Op::cos;
        else fail("unknown identifier '" + std::string(name) + "'");

        expect('(');
        auto const arg = parse_expr();
        expect(')');
        return push(Expression::Unary{op, arg});
    }

    std::string_view text_;
    Expression& out_;
    std::size_t pos_{0};
};

auto Expression::parse(std::string_view text) -> Expression
{
    Expression e;
    e.text_ = std::string(text);
    e.root_ = ExpressionParser(text, e).run();
    return e;
}

auto Expression::constant(double value) -> Expression
{
    Expression e;
    std::ostringstream os;
    os << std::setprecision(17) << value;
    e.text_ = os.str();
    e.nodes_.push_back(Number{value});
    return e;
}

auto Expression::uses(diff::Coord c) const -> bool
{
    for (auto const& n : nodes_)
        if (auto const* v = std::get_if<Variable>(&n); v != nullptr && v->coord == c) return true;
    return false;
}

auto Expression::is_constant() const -> bool
{
    for (auto const& n : nodes_)
        if (std::holds_alternative<Variable>(n)) return false;
    return true;
}

} // namespace jetfinsler
