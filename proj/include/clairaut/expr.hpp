#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clairaut/dual.hpp"
#include "clairaut/errors.hpp"

namespace clairaut {

// Variable assignments for evaluation. Transparent comparator so lookups can
// take string_views without allocating.
using Bindings = std::map<std::string, double, std::less<>>;

namespace detail {
struct ExprNode;
}

// A parsed arithmetic expression over named variables.
//
// Grammar: numeric literals, identifiers, + - * / ^ with the usual precedence
// (^ binds tightest and associates right), parentheses, unary minus, and the
// calls sqrt, sin, cos, ln, exp. Names are case-sensitive.
//
// Trees are immutable; copies share structure, so Expr is cheap to pass
// around and safe to evaluate from several threads at once.
class Expr {
public:
    Expr() = default;

    // Throws ParseError (with byte offset) on malformed input or an unknown
    // function name.
    static Expr parse(std::string_view source);

    // Evaluate with every free variable bound. Missing bindings and values
    // outside the real domain throw DomainError naming the subexpression;
    // a finite real always comes back otherwise (never a silent NaN).
    double eval(const Bindings& bindings) const;

    // Value and exact d/d(seed) in one pass via dual numbers. `seed` must be
    // one of the free variables.
    DualValue eval_derivative(const Bindings& bindings, std::string_view seed) const;

    // Free variables in order of first appearance.
    const std::vector<std::string>& free_vars() const { return free_vars_; }

    // Canonical text form. parse(serialize()) reproduces the same tree.
    std::string serialize() const;

    // Structural equality (used by the round-trip tests).
    bool same_structure(const Expr& other) const;

    explicit operator bool() const { return root_ != nullptr; }

private:
    std::shared_ptr<const detail::ExprNode> root_;
    std::vector<std::string> free_vars_;
};

} // namespace clairaut
