#pragma once

#include <memory>
#include <string>

namespace curveasym {

/// Parsed arithmetic expression of a single variable t.
///
/// Grammar: + - * / ^ (right-associative, binds above unary minus),
/// parentheses, functions sin cos tan exp ln sqrt abs arccot pow(x,y),
/// constants pi and e. No implicit multiplication.
class Expr {
public:
    struct Node;

    static Expr parse(const std::string& text);

    /// Evaluate at t. Throws eval_error when a subexpression leaves the
    /// real domain; never returns a non-finite value silently.
    double eval(double t) const;

    /// Canonical fully parenthesized printout; re-parsing it yields an
    /// identical tree.
    std::string to_string() const;

    bool operator==(const Expr& other) const;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

} // namespace curveasym
