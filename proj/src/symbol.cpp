#include "fockbundle/symbol.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace fockbundle {

double sigma_for(double theta) { return 1e-12 * (1.0 + std::abs(theta)); }

enum class Kind {
    Const,
    Number,
    Count,
    Add,
    Mul,
    Neg,
    Div,
    Sqrt,
    Pow,
    Sin,
    Cos,
    Sinc,
    Conj,
    Shift,
    Compose,
};

struct Symbol::Node {
    Kind kind;
    cplx value{};
    int offset = 0;  // Number/Count offset, Shift/Compose degree
    double param = 0.0;  // sigma for Div/Sqrt/Pow
    double exponent = 0.0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Symbol::Node>;

NodePtr make_node(Symbol::Node node) { return std::make_shared<const Symbol::Node>(std::move(node)); }

NodePtr const_node(cplx v) { return make_node({Kind::Const, v}); }

bool is_const(const NodePtr& n) { return n->kind == Kind::Const; }

bool near_zero(cplx v, double sigma) { return std::abs(v) < sigma; }

bool is_real(cplx v, double sigma) { return std::abs(v.imag()) <= sigma; }

std::optional<cplx> eval_node(const Symbol::Node& node, long n) {
    switch (node.kind) {
        case Kind::Const:
            return node.value;
        case Kind::Number:
            return cplx(static_cast<double>(n + node.offset), 0.0);
        case Kind::Count: {
            long k = n + node.offset;
            if (k < 0) return std::nullopt;
            return cplx(static_cast<double>(k), 0.0);
        }
        case Kind::Add: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            auto b = eval_node(*node.rhs, n);
            if (!b) return std::nullopt;
            return *a + *b;
        }
        case Kind::Mul: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            auto b = eval_node(*node.rhs, n);
            if (!b) return std::nullopt;
            return *a * *b;
        }
        case Kind::Neg: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Kind::Div: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            auto b = eval_node(*node.rhs, n);
            if (!b || near_zero(*b, node.param)) return std::nullopt;
            return *a / *b;
        }
        case Kind::Sqrt: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            if (near_zero(*a, node.param)) return cplx(0.0, 0.0);
            if (is_real(*a, node.param)) {
                if (a->real() < 0.0) return std::nullopt;
                return cplx(std::sqrt(a->real()), 0.0);
            }
            return std::sqrt(*a);
        }
        case Kind::Pow: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            const double p = node.exponent;
            if (near_zero(*a, node.param)) {
                if (p < 0.0) return std::nullopt;
                return p == 0.0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            }
            if (is_real(*a, node.param)) {
                const double x = a->real();
                if (x < 0.0 && std::floor(p) != p) return std::nullopt;
                return cplx(std::pow(x, p), 0.0);
            }
            return std::pow(*a, p);
        }
        case Kind::Sin: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            return std::sin(*a);
        }
        case Kind::Cos: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            return std::cos(*a);
        }
        case Kind::Sinc: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            return sinc_value(*a);
        }
        case Kind::Conj: {
            auto a = eval_node(*node.lhs, n);
            if (!a) return std::nullopt;
            return std::conj(*a);
        }
        case Kind::Shift: {
            long m = n + node.offset;
            if (m < 0) return cplx(0.0, 0.0);
            return eval_node(*node.lhs, m);
        }
        case Kind::Compose: {
            auto inner = eval_node(*node.rhs, n);
            if (!inner) return std::nullopt;
            long m = n + node.offset;
            if (m < 0) return cplx(0.0, 0.0);
            auto outer = eval_node(*node.lhs, m);
            if (!outer) return std::nullopt;
            return *outer * *inner;
        }
    }
    return std::nullopt;
}

void print_node(std::ostream& os, const Symbol::Node& node) {
    auto unary = [&](const char* name) {
        os << name << '(';
        print_node(os, *node.lhs);
        os << ')';
    };
    auto binary = [&](const char* op) {
        os << '(';
        print_node(os, *node.lhs);
        os << op;
        print_node(os, *node.rhs);
        os << ')';
    };
    switch (node.kind) {
        case Kind::Const:
            if (node.value.imag() == 0.0)
                os << node.value.real();
            else
                os << '(' << node.value.real() << (node.value.imag() < 0 ? "-" : "+")
                   << std::abs(node.value.imag()) << "i)";
            break;
        case Kind::Number:
        case Kind::Count:
            os << 'N';
            if (node.offset > 0) os << '+' << node.offset;
            if (node.offset < 0) os << node.offset;
            break;
        case Kind::Add: binary("+"); break;
        case Kind::Mul: binary("*"); break;
        case Kind::Div: binary("/"); break;
        case Kind::Neg: unary("-"); break;
        case Kind::Sqrt: unary("sqrt"); break;
        case Kind::Sin: unary("sin"); break;
        case Kind::Cos: unary("cos"); break;
        case Kind::Sinc: unary("sinc"); break;
        case Kind::Conj: unary("conj"); break;
        case Kind::Pow:
            os << "pow(";
            print_node(os, *node.lhs);
            os << ',' << node.exponent << ')';
            break;
        case Kind::Shift:
            os << "shift" << node.offset << '[';
            print_node(os, *node.lhs);
            os << ']';
            break;
        case Kind::Compose:
            os << "shift" << node.offset << '[';
            print_node(os, *node.lhs);
            os << "]*";
            print_node(os, *node.rhs);
            break;
    }
}

}  // namespace

cplx sinc_value(cplx x) {
    if (std::abs(x) < 1e-2) {
        // sum_{k=0}^{6} (-1)^k x^{2k} / (2k+1)!
        const cplx x2 = x * x;
        cplx term(1.0, 0.0);
        cplx sum = term;
        for (int k = 1; k < 7; ++k) {
            term *= -x2 / static_cast<double>((2 * k) * (2 * k + 1));
            sum += term;
        }
        return sum;
    }
    return std::sin(x) / x;
}

Symbol::Symbol() : node_(const_node(0.0)) {}
Symbol::Symbol(double value) : node_(const_node(value)) {}
Symbol::Symbol(cplx value) : node_(const_node(value)) {}
Symbol::Symbol(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Symbol Symbol::constant(cplx value) { return Symbol(value); }

Symbol Symbol::number(int offset) { return Symbol(make_node({Kind::Number, {}, offset})); }

Symbol Symbol::count(int offset) { return Symbol(make_node({Kind::Count, {}, offset})); }

std::optional<cplx> Symbol::eval(long n) const { return eval_node(*node_, n); }

Symbol Symbol::shifted(int d) const {
    if (d == 0 || is_const(node_)) return *this;
    Node node{Kind::Shift, {}, d};
    node.lhs = node_;
    return Symbol(make_node(std::move(node)));
}

Symbol Symbol::composed(const Symbol& outer, int d, const Symbol& inner) {
    if (outer.is_zero() || inner.is_zero()) return Symbol();
    // sqrt(N+k) after sqrt(N+k) collapses to N+k so that a a^dagger and
    // a^dagger a carry exact integer coefficients. Only done where the
    // vanishing region n + d < 0 agrees with N + k = 0.
    const Node& o = *outer.node_;
    const Node& i = *inner.node_;
    if (o.kind == Kind::Sqrt && i.kind == Kind::Sqrt && o.lhs->kind == Kind::Number &&
        i.lhs->kind == Kind::Number && o.lhs->offset + d == i.lhs->offset && i.lhs->offset >= 0 &&
        (d >= 0 || (d == -1 && i.lhs->offset == 0)))
        return Symbol::number(i.lhs->offset);
    if (d == 0) return outer * inner;
    Node node{Kind::Compose, {}, d};
    node.lhs = outer.node_;
    node.rhs = inner.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol Symbol::conj() const {
    if (is_const(node_)) return Symbol(std::conj(node_->value));
    Node node{Kind::Conj};
    node.lhs = node_;
    return Symbol(make_node(std::move(node)));
}

bool Symbol::is_zero() const { return is_const(node_) && node_->value == cplx(0.0, 0.0); }

bool Symbol::is_constant() const { return is_const(node_); }

std::string Symbol::to_string() const {
    std::ostringstream os;
    print_node(os, *node_);
    return os.str();
}

Symbol operator+(const Symbol& a, const Symbol& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (is_const(a.node_) && is_const(b.node_)) return Symbol(a.node_->value + b.node_->value);
    Symbol::Node node{Kind::Add};
    node.lhs = a.node_;
    node.rhs = b.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol operator-(const Symbol& a) {
    if (is_const(a.node_)) return Symbol(-a.node_->value);
    Symbol::Node node{Kind::Neg};
    node.lhs = a.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol operator-(const Symbol& a, const Symbol& b) { return a + (-b); }

Symbol operator*(const Symbol& a, const Symbol& b) {
    if (a.is_zero() || b.is_zero()) return Symbol();
    if (is_const(a.node_) && a.node_->value == cplx(1.0, 0.0)) return b;
    if (is_const(b.node_) && b.node_->value == cplx(1.0, 0.0)) return a;
    if (is_const(a.node_) && is_const(b.node_)) return Symbol(a.node_->value * b.node_->value);
    Symbol::Node node{Kind::Mul};
    node.lhs = a.node_;
    node.rhs = b.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol divide(const Symbol& num, const Symbol& den, double sigma) {
    Symbol::Node node{Kind::Div};
    node.param = sigma;
    node.lhs = num.node_;
    node.rhs = den.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol operator/(const Symbol& a, const Symbol& b) { return divide(a, b, kDefaultSigma); }

Symbol sqrt(const Symbol& x, double sigma) {
    Symbol::Node node{Kind::Sqrt};
    node.param = sigma;
    node.lhs = x.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol pow(const Symbol& x, double exponent, double sigma) {
    Symbol::Node node{Kind::Pow};
    node.param = sigma;
    node.exponent = exponent;
    node.lhs = x.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol sin(const Symbol& x) {
    Symbol::Node node{Kind::Sin};
    node.lhs = x.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol cos(const Symbol& x) {
    Symbol::Node node{Kind::Cos};
    node.lhs = x.node_;
    return Symbol(make_node(std::move(node)));
}

Symbol sinc(const Symbol& x) {
    Symbol::Node node{Kind::Sinc};
    node.lhs = x.node_;
    return Symbol(make_node(std::move(node)));
}

}  // namespace fockbundle
