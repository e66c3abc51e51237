#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "shellfe/errors.hpp"

namespace shellfe {

/// A parsed arithmetic expression over a fixed list of named variables.
///
/// Supports + - * / ^, unary minus, parentheses, the functions
/// sin, cos, tan, sqrt, exp, log, and the constants pi and e.
/// Differentiation is symbolic: derivative() returns a new expression with
/// constant subtrees folded, so geometry kernels never rely on finite
/// differences of user-supplied profiles.
class Expression {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    Expression() = default;

    /// Parse `text` against the variable list `vars` (index order fixed).
    /// Throws ExpressionParseError with a column-annotated message.
    static Expression parse(const std::string& text, std::vector<std::string> vars);

    static Expression constant(double value);

    /// Variable `name` from `vars`, as a bare expression.
    static Expression variable(const std::string& name, std::vector<std::string> vars);

    /// Evaluate with `values[i]` bound to the i-th declared variable.
    double operator()(std::span<const double> values) const;
    double operator()(double v0) const { return (*this)(std::span<const double>(&v0, 1)); }
    double operator()(double v0, double v1) const {
        const double vals[2] = {v0, v1};
        return (*this)(std::span<const double>(vals, 2));
    }

    /// Exact partial derivative with respect to the named variable.
    Expression derivative(const std::string& var) const;

    bool is_constant() const;
    bool is_zero() const;

    /// Round-trippable text form (for logs and config echo).
    std::string to_string() const;

    const std::vector<std::string>& variables() const { return vars_; }

private:
    Expression(NodePtr root, std::vector<std::string> vars)
        : root_(std::move(root)), vars_(std::move(vars)) {}

    NodePtr root_;
    std::vector<std::string> vars_;
};

} // namespace shellfe
