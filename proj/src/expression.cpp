#include "shellfe/expression.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace shellfe {

namespace {

enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Tan, Sqrt, Exp, Log };

bool is_unary_fn(Op op) {
    return op == Op::Neg || op == Op::Sin || op == Op::Cos || op == Op::Tan ||
           op == Op::Sqrt || op == Op::Exp || op == Op::Log;
}

} // namespace

struct Expression::Node {
    Op op;
    double value = 0.0; // Const
    int var = -1;       // Var
    NodePtr lhs, rhs;   // rhs unused for unary ops

    Node(Op o, double v) : op(o), value(v) {}
    Node(Op o, int index) : op(o), var(index) {}
    Node(Op o, NodePtr l, NodePtr r = nullptr) : op(o), lhs(std::move(l)), rhs(std::move(r)) {}
};

namespace {

using NodePtr = Expression::NodePtr;
using Node = Expression::Node;

NodePtr make_const(double v) { return std::make_shared<Node>(Op::Const, v); }
NodePtr make_var(int i) { return std::make_shared<Node>(Op::Var, i); }

bool is_const(const NodePtr& n, double v) {
    return n->op == Op::Const && n->value == v;
}

double eval_node(const Node& n, std::span<const double> vals);

// Smart constructors fold constants and strip identities so derivative trees
// stay small.
NodePtr make_add(NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) return make_const(a->value + b->value);
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    return std::make_shared<Node>(Op::Add, std::move(a), std::move(b));
}

NodePtr make_neg(NodePtr a) {
    if (a->op == Op::Const) return make_const(-a->value);
    if (a->op == Op::Neg) return a->lhs;
    return std::make_shared<Node>(Op::Neg, std::move(a));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) return make_const(a->value - b->value);
    if (is_const(b, 0.0)) return a;
    if (is_const(a, 0.0)) return make_neg(b);
    return std::make_shared<Node>(Op::Sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) return make_const(a->value * b->value);
    if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    return std::make_shared<Node>(Op::Mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0)) return make_const(0.0);
    if (is_const(b, 1.0)) return a;
    if (a->op == Op::Const && b->op == Op::Const && b->value != 0.0)
        return make_const(a->value / b->value);
    return std::make_shared<Node>(Op::Div, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr a, NodePtr b) {
    if (b->op == Op::Const) {
        if (b->value == 0.0) return make_const(1.0);
        if (b->value == 1.0) return a;
        if (a->op == Op::Const) return make_const(std::pow(a->value, b->value));
    }
    return std::make_shared<Node>(Op::Pow, std::move(a), std::move(b));
}

NodePtr make_fn(Op op, NodePtr a) {
    if (a->op == Op::Const) {
        Node tmp(op, a);
        return make_const(eval_node(tmp, {}));
    }
    return std::make_shared<Node>(op, std::move(a));
}

double eval_node(const Node& n, std::span<const double> vals) {
    switch (n.op) {
        case Op::Const: return n.value;
        case Op::Var: return vals[static_cast<size_t>(n.var)];
        case Op::Add: return eval_node(*n.lhs, vals) + eval_node(*n.rhs, vals);
        case Op::Sub: return eval_node(*n.lhs, vals) - eval_node(*n.rhs, vals);
        case Op::Mul: return eval_node(*n.lhs, vals) * eval_node(*n.rhs, vals);
        case Op::Div: return eval_node(*n.lhs, vals) / eval_node(*n.rhs, vals);
        case Op::Pow: return std::pow(eval_node(*n.lhs, vals), eval_node(*n.rhs, vals));
        case Op::Neg: return -eval_node(*n.lhs, vals);
        case Op::Sin: return std::sin(eval_node(*n.lhs, vals));
        case Op::Cos: return std::cos(eval_node(*n.lhs, vals));
        case Op::Tan: return std::tan(eval_node(*n.lhs, vals));
        case Op::Sqrt: return std::sqrt(eval_node(*n.lhs, vals));
        case Op::Exp: return std::exp(eval_node(*n.lhs, vals));
        case Op::Log: return std::log(eval_node(*n.lhs, vals));
    }
    return 0.0;
}

NodePtr diff_node(const NodePtr& n, int var) {
    switch (n->op) {
        case Op::Const: return make_const(0.0);
        case Op::Var: return make_const(n->var == var ? 1.0 : 0.0);
        case Op::Add: return make_add(diff_node(n->lhs, var), diff_node(n->rhs, var));
        case Op::Sub: return make_sub(diff_node(n->lhs, var), diff_node(n->rhs, var));
        case Op::Mul:
            return make_add(make_mul(diff_node(n->lhs, var), n->rhs),
                            make_mul(n->lhs, diff_node(n->rhs, var)));
        case Op::Div:
            return make_div(make_sub(make_mul(diff_node(n->lhs, var), n->rhs),
                                     make_mul(n->lhs, diff_node(n->rhs, var))),
                            make_mul(n->rhs, n->rhs));
        case Op::Pow: {
            if (n->rhs->op == Op::Const) {
                const double e = n->rhs->value;
                return make_mul(make_const(e),
                                make_mul(make_pow(n->lhs, make_const(e - 1.0)),
                                         diff_node(n->lhs, var)));
            }
            // General case via a^b = exp(b log a).
            NodePtr loga = make_fn(Op::Log, n->lhs);
            NodePtr inner = make_add(make_mul(diff_node(n->rhs, var), loga),
                                     make_mul(n->rhs, make_div(diff_node(n->lhs, var), n->lhs)));
            return make_mul(std::make_shared<Node>(Op::Pow, n->lhs, n->rhs), inner);
        }
        case Op::Neg: return make_neg(diff_node(n->lhs, var));
        case Op::Sin: return make_mul(make_fn(Op::Cos, n->lhs), diff_node(n->lhs, var));
        case Op::Cos: return make_neg(make_mul(make_fn(Op::Sin, n->lhs), diff_node(n->lhs, var)));
        case Op::Tan: {
            NodePtr c = make_fn(Op::Cos, n->lhs);
            return make_div(diff_node(n->lhs, var), make_mul(c, c));
        }
        case Op::Sqrt:
            return make_div(diff_node(n->lhs, var),
                            make_mul(make_const(2.0), make_fn(Op::Sqrt, n->lhs)));
        case Op::Exp: return make_mul(make_fn(Op::Exp, n->lhs), diff_node(n->lhs, var));
        case Op::Log: return make_div(diff_node(n->lhs, var), n->lhs);
    }
    return make_const(0.0);
}

void print_node(const Node& n, std::ostringstream& out) {
    auto paren = [&](const Node& c) {
        out << '(';
        print_node(c, out);
        out << ')';
    };
    switch (n.op) {
        case Op::Const: out << n.value; return;
        case Op::Var: out << "$" << n.var; return;
        case Op::Add: paren(*n.lhs); out << '+'; paren(*n.rhs); return;
        case Op::Sub: paren(*n.lhs); out << '-'; paren(*n.rhs); return;
        case Op::Mul: paren(*n.lhs); out << '*'; paren(*n.rhs); return;
        case Op::Div: paren(*n.lhs); out << '/'; paren(*n.rhs); return;
        case Op::Pow: paren(*n.lhs); out << '^'; paren(*n.rhs); return;
        case Op::Neg: out << "-"; paren(*n.lhs); return;
        case Op::Sin: out << "sin"; paren(*n.lhs); return;
        case Op::Cos: out << "cos"; paren(*n.lhs); return;
        case Op::Tan: out << "tan"; paren(*n.lhs); return;
        case Op::Sqrt: out << "sqrt"; paren(*n.lhs); return;
        case Op::Exp: out << "exp"; paren(*n.lhs); return;
        case Op::Log: out << "log"; paren(*n.lhs); return;
    }
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ExpressionParseError("expression error at column " + std::to_string(pos_ + 1) +
                                   ": " + msg + " in \"" + text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
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

    NodePtr parse_sum() {
        NodePtr e = parse_product();
        while (true) {
            if (eat('+')) e = make_add(e, parse_product());
            else if (eat('-')) e = make_sub(e, parse_product());
            else return e;
        }
    }

    NodePtr parse_product() {
        NodePtr e = parse_unary();
        while (true) {
            if (eat('*')) e = make_mul(e, parse_unary());
            else if (eat('/')) e = make_div(e, parse_unary());
            else return e;
        }
    }

    NodePtr parse_unary() {
        if (eat('-')) return make_neg(parse_unary());
        if (eat('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (eat('^')) return make_pow(base, parse_unary()); // right-associative
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        size_t end = pos_;
        const char* begin = text_.c_str() + pos_;
        char* stop = nullptr;
        double v = std::strtod(begin, &stop);
        if (stop == begin) fail("malformed number");
        end = pos_ + static_cast<size_t>(stop - begin);
        pos_ = end;
        return make_const(v);
    }

    NodePtr parse_ident() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (peek() == '(') {
            ++pos_;
            NodePtr arg = parse_sum();
            if (!eat(')')) fail("missing ')' after " + name);
            if (name == "sin") return make_fn(Op::Sin, arg);
            if (name == "cos") return make_fn(Op::Cos, arg);
            if (name == "tan") return make_fn(Op::Tan, arg);
            if (name == "sqrt") return make_fn(Op::Sqrt, arg);
            if (name == "exp") return make_fn(Op::Exp, arg);
            if (name == "log") return make_fn(Op::Log, arg);
            fail("unknown function '" + name + "'");
        }
        if (name == "pi") return make_const(M_PI);
        if (name == "e") return make_const(M_E);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return make_var(static_cast<int>(i));
        fail("unknown identifier '" + name + "'");
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
};

} // namespace

Expression Expression::parse(const std::string& text, std::vector<std::string> vars) {
    Parser p(text, vars);
    return Expression(p.run(), std::move(vars));
}

Expression Expression::constant(double value) {
    return Expression(make_const(value), {});
}

Expression Expression::variable(const std::string& name, std::vector<std::string> vars) {
    return parse(name, std::move(vars));
}

double Expression::operator()(std::span<const double> values) const {
    return eval_node(*root_, values);
}

Expression Expression::derivative(const std::string& var) const {
    int index = -1;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) index = static_cast<int>(i);
    // Differentiating with respect to a variable the expression was not
    // declared over is identically zero.
    if (index < 0) return Expression(make_const(0.0), vars_);
    return Expression(diff_node(root_, index), vars_);
}

bool Expression::is_constant() const { return root_ && root_->op == Op::Const; }

bool Expression::is_zero() const {
    return root_ && root_->op == Op::Const && root_->value == 0.0;
}

std::string Expression::to_string() const {
    std::ostringstream out;
    out.precision(17);
    if (root_) print_node(*root_, out);
    std::string s = out.str();
    for (size_t i = 0; i < vars_.size(); ++i) {
        std::string tag = "$" + std::to_string(i);
        size_t pos = 0;
        while ((pos = s.find(tag, pos)) != std::string::npos) {
            s.replace(pos, tag.size(), vars_[i]);
            pos += vars_[i].size();
        }
    }
    return s;
}

} // namespace shellfe
