#include "curveasym/expr.hpp"
#include "curveasym/errors.hpp"
#include "curveasym/geometry.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <utility>
#include <vector>

namespace curveasym {

enum class Op { num, var, add, sub, mul, div, pow, neg, fun };
enum class Fun { sin, cos, tan, exp, ln, sqrt, abs, arccot, pow2 };

struct Expr::Node {
    Op op;
    double value = 0.0;      // num
    Fun fun = Fun::sin;      // fun
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, std::vector<NodePtr> kids = {}) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->kids = std::move(kids);
    return n;
}

NodePtr make_num(double v) {
    auto n = std::make_shared<Expr::Node>();
    n->op = Op::num;
    n->value = v;
    return n;
}

NodePtr make_fun(Fun f, std::vector<NodePtr> kids) {
    auto n = std::make_shared<Expr::Node>();
    n->op = Op::fun;
    n->fun = f;
    n->kids = std::move(kids);
    return n;
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            pos++;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            throw parse_error(std::string("expected '") + c + "'", pos);
        }
    }

    NodePtr parse_expr() {
        NodePtr left = parse_term();
        for (;;) {
            if (accept('+')) {
                left = make(Op::add, {left, parse_term()});
            } else if (accept('-')) {
                left = make(Op::sub, {left, parse_term()});
            } else {
                return left;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr left = parse_unary();
        for (;;) {
            if (accept('*')) {
                left = make(Op::mul, {left, parse_unary()});
            } else if (accept('/')) {
                left = make(Op::div, {left, parse_unary()});
            } else {
                return left;
            }
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) {
            return make(Op::neg, {parse_unary()});
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) {
            // right-associative; exponent may carry a unary minus
            return make(Op::pow, {base, parse_unary()});
        }
        return base;
    }

    NodePtr parse_primary() {
        char c = peek();
        if (c == '(') {
            pos++;
            NodePtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_ident();
        }
        throw parse_error("unexpected character", pos);
    }

    NodePtr parse_number() {
        skip_ws();
        const char* begin = s.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(v)) {
            throw parse_error("malformed number", pos);
        }
        pos += static_cast<std::size_t>(end - begin);
        return make_num(v);
    }

    NodePtr parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            pos++;
        }
        std::string name = s.substr(start, pos - start);
        if (name == "t") return make(Op::var);
        if (name == "pi") return make_num(M_PI);
        if (name == "e") return make_num(M_E);

        static const std::pair<const char*, Fun> funs[] = {
            {"sin", Fun::sin},       {"cos", Fun::cos},   {"tan", Fun::tan},
            {"exp", Fun::exp},       {"ln", Fun::ln},     {"sqrt", Fun::sqrt},
            {"abs", Fun::abs},       {"arccot", Fun::arccot}, {"pow", Fun::pow2},
        };
        for (const auto& [fname, f] : funs) {
            if (name == fname) {
                expect('(');
                std::vector<NodePtr> args;
                args.push_back(parse_expr());
                if (f == Fun::pow2) {
                    expect(',');
                    args.push_back(parse_expr());
                }
                expect(')');
                return make_fun(f, std::move(args));
            }
        }
        throw parse_error("unknown identifier '" + name + "'", start);
    }
};

double checked(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw eval_error(std::string("non-finite result in ") + what);
    }
    return v;
}

bool is_integral(double x) {
    return std::isfinite(x) && x == std::nearbyint(x) && std::abs(x) < 9.0e15;
}

double eval_pow(double base, double exponent) {
    if (base < 0.0 && !is_integral(exponent)) {
        throw eval_error("negative base with non-integer exponent");
    }
    if (base == 0.0 && exponent < 0.0) {
        throw eval_error("zero base with negative exponent");
    }
    return checked(std::pow(base, exponent), "^");
}

double eval_node(const Expr::Node& n, double t) {
    switch (n.op) {
        case Op::num: return n.value;
        case Op::var: return t;
        case Op::add: return checked(eval_node(*n.kids[0], t) + eval_node(*n.kids[1], t), "+");
        case Op::sub: return checked(eval_node(*n.kids[0], t) - eval_node(*n.kids[1], t), "-");
        case Op::mul: return checked(eval_node(*n.kids[0], t) * eval_node(*n.kids[1], t), "*");
        case Op::div: {
            double num = eval_node(*n.kids[0], t);
            double den = eval_node(*n.kids[1], t);
            if (den == 0.0) throw eval_error("division by zero");
            return checked(num / den, "/");
        }
        case Op::pow:
            return eval_pow(eval_node(*n.kids[0], t), eval_node(*n.kids[1], t));
        case Op::neg: return -eval_node(*n.kids[0], t);
        case Op::fun: {
            double a = eval_node(*n.kids[0], t);
            switch (n.fun) {
                case Fun::sin: return checked(std::sin(a), "sin");
                case Fun::cos: return checked(std::cos(a), "cos");
                case Fun::tan: return checked(std::tan(a), "tan");
                case Fun::exp: return checked(std::exp(a), "exp");
                case Fun::ln:
                    if (a <= 0.0) throw eval_error("ln of non-positive value");
                    return checked(std::log(a), "ln");
                case Fun::sqrt:
                    if (a < 0.0) throw eval_error("sqrt of negative value");
                    return checked(std::sqrt(a), "sqrt");
                case Fun::abs: return std::abs(a);
                case Fun::arccot: return arccot(a);
                case Fun::pow2: return eval_pow(a, eval_node(*n.kids[1], t));
            }
        }
    }
    throw eval_error("corrupt expression tree");
}

const char* fun_name(Fun f) {
    switch (f) {
        case Fun::sin: return "sin";
        case Fun::cos: return "cos";
        case Fun::tan: return "tan";
        case Fun::exp: return "exp";
        case Fun::ln: return "ln";
        case Fun::sqrt: return "sqrt";
        case Fun::abs: return "abs";
        case Fun::arccot: return "arccot";
        case Fun::pow2: return "pow";
    }
    return "?";
}

void print_node(const Expr::Node& n, std::string& out) {
    switch (n.op) {
        case Op::num: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
            return;
        }
        case Op::var: out += 't'; return;
        case Op::add:
        case Op::sub:
        case Op::mul:
        case Op::div:
        case Op::pow: {
            char sym = n.op == Op::add ? '+'
                     : n.op == Op::sub ? '-'
                     : n.op == Op::mul ? '*'
                     : n.op == Op::div ? '/' : '^';
            out += '(';
            print_node(*n.kids[0], out);
            out += sym;
            print_node(*n.kids[1], out);
            out += ')';
            return;
        }
        case Op::neg:
            out += "(-";
            print_node(*n.kids[0], out);
            out += ')';
            return;
        case Op::fun:
            out += fun_name(n.fun);
            out += '(';
            print_node(*n.kids[0], out);
            if (n.kids.size() > 1) {
                out += ',';
                print_node(*n.kids[1], out);
            }
            out += ')';
            return;
    }
}

bool equal_nodes(const Expr::Node& a, const Expr::Node& b) {
    if (a.op != b.op) return false;
    if (a.op == Op::num) {
        // compare representations so that -0.0 vs 0.0 etc. stay distinct
        return std::memcmp(&a.value, &b.value, sizeof(double)) == 0;
    }
    if (a.op == Op::fun && a.fun != b.fun) return false;
    if (a.kids.size() != b.kids.size()) return false;
    for (std::size_t i = 0; i < a.kids.size(); i++) {
        if (!equal_nodes(*a.kids[i], *b.kids[i])) return false;
    }
    return true;
}

} // namespace

Expr Expr::parse(const std::string& text) {
    Parser p(text);
    if (p.peek() == '\0') throw parse_error("empty expression", 0);
    NodePtr root = p.parse_expr();
    if (p.peek() != '\0') throw parse_error("trailing input", p.pos);
    return Expr(std::move(root));
}

double Expr::eval(double t) const {
    return eval_node(*root_, t);
}

std::string Expr::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

bool Expr::operator==(const Expr& other) const {
    return equal_nodes(*root_, *other.root_);
}

} // namespace curveasym
