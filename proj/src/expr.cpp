#include "clairaut/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <type_traits>
#include <utility>

namespace clairaut {
namespace detail {

enum class NodeKind { number, variable, negate, add, sub, mul, div, pow, call };

enum class Fn { sqrt, sin, cos, ln, exp };

struct ExprNode {
    NodeKind kind;
    double number = 0.0;
    std::string name;  // variable name or function spelling
    Fn fn = Fn::sqrt;
    std::unique_ptr<const ExprNode> lhs;  // also the sole child of negate/call
    std::unique_ptr<const ExprNode> rhs;
};

namespace {

using NodePtr = std::unique_ptr<const ExprNode>;

// ---------------------------------------------------------------- scanning

enum class TokKind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    TokKind kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

class Scanner {
public:
    explicit Scanner(std::string_view src) : src_(src) { advance(); }

    const Token& current() const { return current_; }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) {
            current_ = {TokKind::end, src_.size(), {}};
            return;
        }
        const std::size_t start = pos_;
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            // Let strtod eat the literal; it accepts 1, 1.5, .5, 1e-3, ...
            const std::string chunk(src_.substr(start));
            char* tail = nullptr;
            const double v = std::strtod(chunk.c_str(), &tail);
            const std::size_t len = static_cast<std::size_t>(tail - chunk.c_str());
            pos_ = start + len;
            current_ = {TokKind::number, start, src_.substr(start, len), v};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            current_ = {TokKind::ident, start, src_.substr(start, end - start)};
            pos_ = end;
            return;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::plus; break;
            case '-': kind = TokKind::minus; break;
            case '*': kind = TokKind::star; break;
            case '/': kind = TokKind::slash; break;
            case '^': kind = TokKind::caret; break;
            case '(': kind = TokKind::lparen; break;
            case ')': kind = TokKind::rparen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                                     std::to_string(start),
                                 start, "a number, name, operator, or parenthesis");
        }
        ++pos_;
        current_ = {kind, start, src_.substr(start, 1)};
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

// ----------------------------------------------------------------- parsing

class Parser {
public:
    explicit Parser(std::string_view src) : scan_(src) {}

    NodePtr run(std::vector<std::string>& free_vars) {
        NodePtr e = expression();
        if (scan_.current().kind != TokKind::end)
            fail("trailing input", "end of expression or an operator");
        free_vars = std::move(vars_);
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::string expected) {
        const Token& t = scan_.current();
        throw ParseError(what + " at offset " + std::to_string(t.offset), t.offset,
                         std::move(expected));
    }

    NodePtr expression() {
        NodePtr lhs = term();
        for (;;) {
            const TokKind k = scan_.current().kind;
            if (k != TokKind::plus && k != TokKind::minus) return lhs;
            scan_.advance();
            NodePtr rhs = term();
            auto n = std::make_unique<ExprNode>();
            n->kind = k == TokKind::plus ? NodeKind::add : NodeKind::sub;
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            const TokKind k = scan_.current().kind;
            if (k != TokKind::star && k != TokKind::slash) return lhs;
            scan_.advance();
            NodePtr rhs = unary();
            auto n = std::make_unique<ExprNode>();
            n->kind = k == TokKind::star ? NodeKind::mul : NodeKind::div;
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
    }

    NodePtr unary() {
        if (scan_.current().kind == TokKind::minus) {
            scan_.advance();
            auto n = std::make_unique<ExprNode>();
            n->kind = NodeKind::negate;
            n->lhs = unary();
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (scan_.current().kind != TokKind::caret) return base;
        scan_.advance();
        auto n = std::make_unique<ExprNode>();
        n->kind = NodeKind::pow;
        n->lhs = std::move(base);
        n->rhs = unary();  // right-associative, and a^-2 stays legal
        return n;
    }

    NodePtr primary() {
        const Token t = scan_.current();
        switch (t.kind) {
            case TokKind::number: {
                scan_.advance();
                auto n = std::make_unique<ExprNode>();
                n->kind = NodeKind::number;
                n->number = t.number;
                return n;
            }
            case TokKind::ident: {
                scan_.advance();
                if (scan_.current().kind == TokKind::lparen) {
                    Fn fn;
                    if (t.text == "sqrt") fn = Fn::sqrt;
                    else if (t.text == "sin") fn = Fn::sin;
                    else if (t.text == "cos") fn = Fn::cos;
                    else if (t.text == "ln") fn = Fn::ln;
                    else if (t.text == "exp") fn = Fn::exp;
                    else
                        throw ParseError("unknown function '" + std::string(t.text) +
                                             "' at offset " + std::to_string(t.offset),
                                         t.offset, "one of sqrt, sin, cos, ln, exp");
                    scan_.advance();  // past '('
                    NodePtr arg = expression();
                    if (scan_.current().kind != TokKind::rparen)
                        fail("unterminated call argument", "')'");
                    scan_.advance();
                    auto n = std::make_unique<ExprNode>();
                    n->kind = NodeKind::call;
                    n->fn = fn;
                    n->name = std::string(t.text);
                    n->lhs = std::move(arg);
                    return n;
                }
                auto n = std::make_unique<ExprNode>();
                n->kind = NodeKind::variable;
                n->name = std::string(t.text);
                bool seen = false;
                for (const auto& v : vars_) seen = seen || v == n->name;
                if (!seen) vars_.push_back(n->name);
                return n;
            }
            case TokKind::lparen: {
                scan_.advance();
                NodePtr e = expression();
                if (scan_.current().kind != TokKind::rparen)
                    fail("unbalanced parenthesis", "')'");
                scan_.advance();
                return e;
            }
            default:
                fail("expected an operand", "a number, name, '(', or unary '-'");
        }
    }

    Scanner scan_;
    std::vector<std::string> vars_;
};

// ------------------------------------------------------------ serialization

// Shortest digit string that strtod maps back to exactly the same double.
std::string format_number(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

// Operator precedence used both to parenthesize minimally and to decide when
// a child must be wrapped: add/sub 1, mul/div 2, negate 3, pow 4, atoms 5.
int precedence(const ExprNode& n) {
    switch (n.kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul:
        case NodeKind::div: return 2;
        case NodeKind::negate: return 3;
        case NodeKind::pow: return 4;
        default: return 5;
    }
}

void serialize_node(const ExprNode& n, int min_prec, std::string& out) {
    const int prec = precedence(n);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case NodeKind::number: out += format_number(n.number); break;
        case NodeKind::variable: out += n.name; break;
        case NodeKind::negate:
            out += '-';
            serialize_node(*n.lhs, 3, out);
            break;
        case NodeKind::add:
            serialize_node(*n.lhs, 1, out);
            out += " + ";
            serialize_node(*n.rhs, 2, out);
            break;
        case NodeKind::sub:
            serialize_node(*n.lhs, 1, out);
            out += " - ";
            serialize_node(*n.rhs, 2, out);
            break;
        case NodeKind::mul:
            serialize_node(*n.lhs, 2, out);
            out += "*";
            serialize_node(*n.rhs, 3, out);
            break;
        case NodeKind::div:
            serialize_node(*n.lhs, 2, out);
            out += "/";
            serialize_node(*n.rhs, 3, out);
            break;
        case NodeKind::pow:
            serialize_node(*n.lhs, 5, out);  // (a^b)^c keeps its parens
            out += "^";
            serialize_node(*n.rhs, 3, out);  // a^b^c stays right-associative
            break;
        case NodeKind::call:
            out += n.name;
            out += '(';
            serialize_node(*n.lhs, 0, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

std::string describe(const ExprNode& n) {
    std::string s;
    serialize_node(n, 0, s);
    return s;
}

// -------------------------------------------------------------- evaluation

double value_of(double v) { return v; }
double value_of(const DualValue& v) { return v.value; }

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

template <typename T>
struct EvalContext {
    const Bindings& bindings;
    std::string_view seed;  // empty for plain evaluation
};

template <typename T>
T bind_variable(const ExprNode& n, const EvalContext<T>& ctx);

template <>
double bind_variable<double>(const ExprNode& n, const EvalContext<double>& ctx) {
    auto it = ctx.bindings.find(n.name);
    if (it == ctx.bindings.end())
        throw DomainError("unbound variable '" + n.name + "'", n.name);
    return it->second;
}

template <>
DualValue bind_variable<DualValue>(const ExprNode& n, const EvalContext<DualValue>& ctx) {
    auto it = ctx.bindings.find(n.name);
    if (it == ctx.bindings.end())
        throw DomainError("unbound variable '" + n.name + "'", n.name);
    return n.name == ctx.seed ? seeded(it->second) : constant(it->second);
}

template <typename T>
T make_number(double v);
template <>
double make_number<double>(double v) { return v; }
template <>
DualValue make_number<DualValue>(double v) { return constant(v); }

template <typename T>
T eval_node(const ExprNode& n, const EvalContext<T>& ctx) {
    T result{};
    switch (n.kind) {
        case NodeKind::number: result = make_number<T>(n.number); break;
        case NodeKind::variable: result = bind_variable<T>(n, ctx); break;
        case NodeKind::negate: result = -eval_node(*n.lhs, ctx); break;
        case NodeKind::add: result = eval_node(*n.lhs, ctx) + eval_node(*n.rhs, ctx); break;
        case NodeKind::sub: result = eval_node(*n.lhs, ctx) - eval_node(*n.rhs, ctx); break;
        case NodeKind::mul: result = eval_node(*n.lhs, ctx) * eval_node(*n.rhs, ctx); break;
        case NodeKind::div: {
            T a = eval_node(*n.lhs, ctx);
            T b = eval_node(*n.rhs, ctx);
            if (value_of(b) == 0.0) throw DomainError("division by zero", describe(n));
            result = a / b;
            break;
        }
        case NodeKind::pow: {
            T a = eval_node(*n.lhs, ctx);
            T b = eval_node(*n.rhs, ctx);
            const double base = value_of(a);
            const double expo = value_of(b);
            if (base == 0.0 && expo < 0.0)
                throw DomainError("zero raised to a negative power", describe(n));
            if (base < 0.0 && !is_integral(expo))
                throw DomainError("fractional power of a negative base", describe(n));
            if constexpr (std::is_same_v<T, DualValue>) {
                if (b.derivative == 0.0) {
                    result = pow_const(a, expo);
                } else {
                    if (base <= 0.0)
                        throw DomainError("power with varying exponent needs a positive base",
                                          describe(n));
                    result = pow(a, b);
                }
            } else {
                result = std::pow(base, expo);
            }
            break;
        }
        case NodeKind::call: {
            T a = eval_node(*n.lhs, ctx);
            const double v = value_of(a);
            switch (n.fn) {
                case Fn::sqrt:
                    if (v < 0.0) throw DomainError("sqrt of a negative value", describe(n));
                    if constexpr (std::is_same_v<T, DualValue>) result = sqrt(a);
                    else result = std::sqrt(v);
                    break;
                case Fn::sin:
                    if constexpr (std::is_same_v<T, DualValue>) result = sin(a);
                    else result = std::sin(v);
                    break;
                case Fn::cos:
                    if constexpr (std::is_same_v<T, DualValue>) result = cos(a);
                    else result = std::cos(v);
                    break;
                case Fn::ln:
                    if (v <= 0.0) throw DomainError("ln of a non-positive value", describe(n));
                    if constexpr (std::is_same_v<T, DualValue>) result = log(a);
                    else result = std::log(v);
                    break;
                case Fn::exp:
                    if constexpr (std::is_same_v<T, DualValue>) result = exp(a);
                    else result = std::exp(v);
                    break;
            }
            break;
        }
    }
    if (!std::isfinite(value_of(result)))
        throw DomainError("non-finite result (overflow or indeterminate form)", describe(n));
    if constexpr (std::is_same_v<T, DualValue>) {
        if (!std::isfinite(result.derivative))
            throw DomainError("derivative is not finite here", describe(n));
    }
    return result;
}

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::number: return a.number == b.number;
        case NodeKind::variable: return a.name == b.name;
        case NodeKind::negate: return nodes_equal(*a.lhs, *b.lhs);
        case NodeKind::call: return a.fn == b.fn && nodes_equal(*a.lhs, *b.lhs);
        default: return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    }
}

} // namespace
} // namespace detail

Expr Expr::parse(std::string_view source) {
    detail::Parser parser(source);
    Expr e;
    std::vector<std::string> vars;
    e.root_ = parser.run(vars);
    e.free_vars_ = std::move(vars);
    return e;
}

double Expr::eval(const Bindings& bindings) const {
    detail::EvalContext<double> ctx{bindings, {}};
    return detail::eval_node<double>(*root_, ctx);
}

DualValue Expr::eval_derivative(const Bindings& bindings, std::string_view seed) const {
    detail::EvalContext<DualValue> ctx{bindings, seed};
    return detail::eval_node<DualValue>(*root_, ctx);
}

std::string Expr::serialize() const {
    std::string out;
    detail::serialize_node(*root_, 0, out);
    return out;
}

bool Expr::same_structure(const Expr& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return detail::nodes_equal(*root_, *other.root_);
}

} // namespace clairaut
