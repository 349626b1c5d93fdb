#include "cojac/expr.hpp"

#include <algorithm>
#include <cmath>

#include "cojac/error.hpp"

namespace cojac {

struct Expr::Node {
    ExprKind kind;
    Rational value;              // Constant
    int coord = 0;               // Coordinate
    std::vector<Expr> children;  // Add/Mul (n-ary), Neg/Call (1), Div (2), IntPow (1)
    long exponent = 0;           // IntPow
    Func func = Func::Sin;       // Call
};

std::string func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Exp: return "exp";
    }
    return "?";
}

Expr Expr::constant(Rational c) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Constant;
    n->value = std::move(c);
    return Expr(std::move(n));
}

Expr Expr::coordinate(int index) {
    if (index < 0) throw Error("negative coordinate index");
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Coordinate;
    n->coord = index;
    return Expr(std::move(n));
}

Expr Expr::add(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    for (auto& t : terms) {
        if (t.is_syntactic_zero()) continue;
        if (t.kind() == ExprKind::Add) {
            for (const auto& c : t.children()) flat.push_back(c);
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (flat.empty()) return constant(Rational(0));
    if (flat.size() == 1) return flat[0];
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Add;
    n->children = std::move(flat);
    return Expr(std::move(n));
}

Expr Expr::mul(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    for (auto& f : factors) {
        if (f.is_syntactic_zero()) return constant(Rational(0));
        if (f.is_syntactic_one()) continue;
        if (f.kind() == ExprKind::Mul) {
            for (const auto& c : f.children()) flat.push_back(c);
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (flat.empty()) return constant(Rational(1));
    if (flat.size() == 1) return flat[0];
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Mul;
    n->children = std::move(flat);
    return Expr(std::move(n));
}

Expr Expr::neg(Expr e) {
    if (e.kind() == ExprKind::Neg) return e.children()[0];
    if (e.is_syntactic_zero()) return e;
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Neg;
    n->children = {std::move(e)};
    return Expr(std::move(n));
}

Expr Expr::div(Expr num, Expr den) {
    if (den.is_syntactic_zero()) throw PoleError("division by the zero expression");
    if (den.is_syntactic_one()) return num;
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Div;
    n->children = {std::move(num), std::move(den)};
    return Expr(std::move(n));
}

Expr Expr::int_pow(Expr base, long exponent) {
    if (exponent == 1) return base;
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::IntPow;
    n->children = {std::move(base)};
    n->exponent = exponent;
    return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Call;
    n->func = f;
    n->children = {std::move(arg)};
    return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
int Expr::coord() const { return node_->coord; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
long Expr::exponent() const { return node_->exponent; }
Func Expr::func() const { return node_->func; }

bool Expr::is_rational_function() const {
    if (kind() == ExprKind::Call) return false;
    for (const auto& c : children())
        if (!c.is_rational_function()) return false;
    return true;
}

int Expr::max_coord_index() const {
    int m = -1;
    if (kind() == ExprKind::Coordinate) return coord();
    for (const auto& c : children()) m = std::max(m, c.max_coord_index());
    return m;
}

bool Expr::is_syntactic_zero() const {
    return kind() == ExprKind::Constant && value().is_zero();
}

bool Expr::is_syntactic_one() const {
    return kind() == ExprKind::Constant && value().is_one();
}

int expr_compare(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case ExprKind::Constant:
            if (a.value() == b.value()) return 0;
            return a.value() < b.value() ? -1 : 1;
        case ExprKind::Coordinate:
            return a.coord() == b.coord() ? 0 : (a.coord() < b.coord() ? -1 : 1);
        case ExprKind::IntPow:
            if (a.exponent() != b.exponent())
                return a.exponent() < b.exponent() ? -1 : 1;
            break;
        case ExprKind::Call:
            if (a.func() != b.func())
                return static_cast<int>(a.func()) < static_cast<int>(b.func()) ? -1 : 1;
            break;
        default:
            break;
    }
    const auto& ca = a.children();
    const auto& cb = b.children();
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        int c = expr_compare(ca[i], cb[i]);
        if (c != 0) return c;
    }
    return 0;
}

Expr differentiate(const Expr& e, int var) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return Expr::constant(Rational(0));
        case ExprKind::Coordinate:
            return Expr::constant(Rational(e.coord() == var ? 1 : 0));
        case ExprKind::Add: {
            std::vector<Expr> terms;
            for (const auto& c : e.children()) terms.push_back(differentiate(c, var));
            return Expr::add(std::move(terms));
        }
        case ExprKind::Mul: {
            std::vector<Expr> terms;
            const auto& f = e.children();
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<Expr> prod = f;
                prod[i] = differentiate(f[i], var);
                terms.push_back(Expr::mul(std::move(prod)));
            }
            return Expr::add(std::move(terms));
        }
        case ExprKind::Neg:
            return Expr::neg(differentiate(e.children()[0], var));
        case ExprKind::Div: {
            const Expr& a = e.children()[0];
            const Expr& b = e.children()[1];
            Expr num = differentiate(a, var) * b - a * differentiate(b, var);
            return Expr::div(num, Expr::int_pow(b, 2));
        }
        case ExprKind::IntPow: {
            long k = e.exponent();
            if (k == 0) return Expr::constant(Rational(0));
            const Expr& b = e.children()[0];
            return Expr::mul({Expr::constant(Rational(k)), Expr::int_pow(b, k - 1),
                              differentiate(b, var)});
        }
        case ExprKind::Call: {
            const Expr& arg = e.children()[0];
            Expr darg = differentiate(arg, var);
            switch (e.func()) {
                case Func::Sin: return Expr::call(Func::Cos, arg) * darg;
                case Func::Cos: return Expr::neg(Expr::call(Func::Sin, arg)) * darg;
                case Func::Exp: return Expr::call(Func::Exp, arg) * darg;
            }
            break;
        }
    }
    throw Error("unreachable expression kind");
}

Rational evaluate_exact(const Expr& e, const Point& p) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e.value();
        case ExprKind::Coordinate: {
            auto i = static_cast<std::size_t>(e.coord());
            if (i >= p.size()) throw Error("coordinate index out of range for point");
            return p[i];
        }
        case ExprKind::Add: {
            Rational acc(0);
            for (const auto& c : e.children()) acc += evaluate_exact(c, p);
            return acc;
        }
        case ExprKind::Mul: {
            Rational acc(1);
            for (const auto& c : e.children()) acc *= evaluate_exact(c, p);
            return acc;
        }
        case ExprKind::Neg:
            return -evaluate_exact(e.children()[0], p);
        case ExprKind::Div: {
            Rational den = evaluate_exact(e.children()[1], p);
            if (den.is_zero()) throw PoleError("pole at evaluation point");
            return evaluate_exact(e.children()[0], p) / den;
        }
        case ExprKind::IntPow: {
            Rational base = evaluate_exact(e.children()[0], p);
            if (base.is_zero() && e.exponent() < 0)
                throw PoleError("pole at evaluation point");
            return base.pow(e.exponent());
        }
        case ExprKind::Call:
            throw PolicyError("exact evaluation of a transcendental expression");
    }
    throw Error("unreachable expression kind");
}

double evaluate_numeric(const Expr& e, const NumericPoint& p) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e.value().to_double();
        case ExprKind::Coordinate: {
            auto i = static_cast<std::size_t>(e.coord());
            if (i >= p.size()) throw Error("coordinate index out of range for point");
            return p[i];
        }
        case ExprKind::Add: {
            double acc = 0;
            for (const auto& c : e.children()) acc += evaluate_numeric(c, p);
            return acc;
        }
        case ExprKind::Mul: {
            double acc = 1;
            for (const auto& c : e.children()) acc *= evaluate_numeric(c, p);
            return acc;
        }
        case ExprKind::Neg:
            return -evaluate_numeric(e.children()[0], p);
        case ExprKind::Div: {
            double den = evaluate_numeric(e.children()[1], p);
            if (den == 0.0) throw PoleError("pole at evaluation point");
            return evaluate_numeric(e.children()[0], p) / den;
        }
        case ExprKind::IntPow: {
            double base = evaluate_numeric(e.children()[0], p);
            if (base == 0.0 && e.exponent() < 0)
                throw PoleError("pole at evaluation point");
            return std::pow(base, static_cast<double>(e.exponent()));
        }
        case ExprKind::Call: {
            double arg = evaluate_numeric(e.children()[0], p);
            switch (e.func()) {
                case Func::Sin: return std::sin(arg);
                case Func::Cos: return std::cos(arg);
                case Func::Exp: return std::exp(arg);
            }
            break;
        }
    }
    throw Error("unreachable expression kind");
}

RatFunc to_ratfunc(const Expr& e, int nvars) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return RatFunc::constant(nvars, e.value());
        case ExprKind::Coordinate:
            if (e.coord() >= nvars) throw Error("coordinate index out of chart range");
            return RatFunc::variable(nvars, e.coord());
        case ExprKind::Add: {
            RatFunc acc = RatFunc::constant(nvars, Rational(0));
            for (const auto& c : e.children()) acc = acc + to_ratfunc(c, nvars);
            return acc;
        }
        case ExprKind::Mul: {
            RatFunc acc = RatFunc::constant(nvars, Rational(1));
            for (const auto& c : e.children()) acc = acc * to_ratfunc(c, nvars);
            return acc;
        }
        case ExprKind::Neg:
            return -to_ratfunc(e.children()[0], nvars);
        case ExprKind::Div: {
            RatFunc den = to_ratfunc(e.children()[1], nvars);
            if (den.is_zero())
                throw DivisionByZeroPolynomial("division by the zero polynomial");
            return to_ratfunc(e.children()[0], nvars) / den;
        }
        case ExprKind::IntPow: {
            RatFunc base = to_ratfunc(e.children()[0], nvars);
            if (base.is_zero() && e.exponent() < 0)
                throw DivisionByZeroPolynomial("division by the zero polynomial");
            return base.pow(e.exponent());
        }
        case ExprKind::Call:
            throw PolicyError("transcendental expression has no rational normal form");
    }
    throw Error("unreachable expression kind");
}

namespace {

// coeff * x^m as a canonical product chain (positive coeff expected)
Expr term_to_expr(const Rational& coeff, const Monomial& m) {
    std::vector<Expr> factors;
    bool any_var = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        any_var = true;
        factors.push_back(
            Expr::int_pow(Expr::coordinate(static_cast<int>(i)), m[i]));
    }
    if (!any_var || !coeff.is_one())
        factors.insert(factors.begin(), Expr::constant(coeff));
    return Expr::mul(std::move(factors));
}

Expr poly_to_expr(const Poly& p) {
    if (p.is_zero()) return Expr::constant(Rational(0));
    std::vector<Expr> terms;
    for (const auto& [m, c] : p.terms()) {
        bool pure_constant =
            std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        if (pure_constant)
            terms.push_back(Expr::constant(c));
        else if (c.sign() < 0)
            terms.push_back(Expr::neg(term_to_expr(-c, m)));
        else
            terms.push_back(term_to_expr(c, m));
    }
    return Expr::add(std::move(terms));
}

}  // namespace

Expr ratfunc_to_expr(const RatFunc& rf) {
    Expr num = poly_to_expr(rf.num());
    if (rf.den_is_one()) return num;
    return Expr::div(num, poly_to_expr(rf.den()));
}

namespace {

// partial result of the best-effort simplifier: rational subtrees carry their
// exact normal form, transcendental ones a flattened Expr
struct Simp {
    bool rational;
    RatFunc rf;
    Expr ex;

    Expr to_expr() const { return rational ? ratfunc_to_expr(rf) : ex; }
};

Simp simp_rational(RatFunc rf) { return Simp{true, std::move(rf), Expr()}; }
Simp simp_opaque(Expr e) { return Simp{false, RatFunc(), std::move(e)}; }

Simp simplify(const Expr& e, int nvars);

Simp simplify_sum(const std::vector<Expr>& children, int nvars) {
    RatFunc acc = RatFunc::constant(nvars, Rational(0));
    std::vector<Expr> opaque;
    for (const auto& c : children) {
        Simp s = simplify(c, nvars);
        if (s.rational)
            acc = acc + s.rf;
        else
            opaque.push_back(s.ex);
    }
    if (opaque.empty()) return simp_rational(acc);
    std::sort(opaque.begin(), opaque.end(),
              [](const Expr& a, const Expr& b) { return expr_compare(a, b) < 0; });
    std::vector<Expr> terms;
    if (!acc.is_zero()) terms.push_back(ratfunc_to_expr(acc));
    for (auto& o : opaque) terms.push_back(std::move(o));
    return simp_opaque(Expr::add(std::move(terms)));
}

Simp simplify_product(const std::vector<Expr>& children, int nvars) {
    RatFunc acc = RatFunc::constant(nvars, Rational(1));
    std::vector<Expr> opaque;
    for (const auto& c : children) {
        Simp s = simplify(c, nvars);
        if (s.rational)
            acc = acc * s.rf;
        else
            opaque.push_back(s.ex);
    }
    if (acc.is_zero()) return simp_rational(acc);
    if (opaque.empty()) return simp_rational(acc);
    std::sort(opaque.begin(), opaque.end(),
              [](const Expr& a, const Expr& b) { return expr_compare(a, b) < 0; });
    std::vector<Expr> factors;
    bool is_one = !acc.is_zero() && acc.den_is_one() && acc.num().is_constant() &&
                  acc.num().constant_value().is_one();
    if (!is_one) factors.push_back(ratfunc_to_expr(acc));
    for (auto& o : opaque) factors.push_back(std::move(o));
    return simp_opaque(Expr::mul(std::move(factors)));
}

Simp simplify(const Expr& e, int nvars) {
    if (e.is_rational_function()) return simp_rational(to_ratfunc(e, nvars));
    switch (e.kind()) {
        case ExprKind::Add:
            return simplify_sum(e.children(), nvars);
        case ExprKind::Mul:
            return simplify_product(e.children(), nvars);
        case ExprKind::Neg: {
            Simp s = simplify(e.children()[0], nvars);
            if (s.rational) return simp_rational(-s.rf);
            return simp_opaque(Expr::neg(s.ex));
        }
        case ExprKind::Div: {
            Simp a = simplify(e.children()[0], nvars);
            Simp b = simplify(e.children()[1], nvars);
            if (a.rational && b.rational) {
                if (b.rf.is_zero())
                    throw DivisionByZeroPolynomial("division by the zero polynomial");
                return simp_rational(a.rf / b.rf);
            }
            if (a.rational && a.rf.is_zero()) return simp_rational(a.rf);
            return simp_opaque(Expr::div(a.to_expr(), b.to_expr()));
        }
        case ExprKind::IntPow: {
            Simp b = simplify(e.children()[0], nvars);
            if (b.rational) return simp_rational(b.rf.pow(e.exponent()));
            if (e.exponent() == 0)
                return simp_rational(RatFunc::constant(nvars, Rational(1)));
            return simp_opaque(Expr::int_pow(b.ex, e.exponent()));
        }
        case ExprKind::Call: {
            Simp arg = simplify(e.children()[0], nvars);
            return simp_opaque(Expr::call(e.func(), arg.to_expr()));
        }
        default:
            // Constant/Coordinate are rational and handled above
            throw Error("unreachable expression kind");
    }
}

}  // namespace

Expr normalize(const Expr& e, int nvars) {
    if (e.is_rational_function()) return ratfunc_to_expr(to_ratfunc(e, nvars));
    return simplify(e, nvars).to_expr();
}

Expr substitute(const Expr& e, const std::vector<Expr>& images) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e;
        case ExprKind::Coordinate: {
            auto i = static_cast<std::size_t>(e.coord());
            if (i >= images.size()) throw Error("substitution image missing");
            return images[i];
        }
        case ExprKind::Add: {
            std::vector<Expr> c;
            for (const auto& ch : e.children()) c.push_back(substitute(ch, images));
            return Expr::add(std::move(c));
        }
        case ExprKind::Mul: {
            std::vector<Expr> c;
            for (const auto& ch : e.children()) c.push_back(substitute(ch, images));
            return Expr::mul(std::move(c));
        }
        case ExprKind::Neg:
            return Expr::neg(substitute(e.children()[0], images));
        case ExprKind::Div:
            return Expr::div(substitute(e.children()[0], images),
                             substitute(e.children()[1], images));
        case ExprKind::IntPow:
            return Expr::int_pow(substitute(e.children()[0], images), e.exponent());
        case ExprKind::Call:
            return Expr::call(e.func(), substitute(e.children()[0], images));
    }
    throw Error("unreachable expression kind");
}

namespace {

// precedence levels: Add 1, Mul/Div 2, Neg 3, IntPow 4, atoms 5
int precedence(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Add: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::IntPow: return 4;
        case ExprKind::Constant:
            return e.value().sign() < 0 ? 3 : 5;
        default: return 5;
    }
}

std::string render(const Expr& e, const Chart& chart, int min_prec) {
    std::string out;
    switch (e.kind()) {
        case ExprKind::Constant:
            out = e.value().to_string();
            break;
        case ExprKind::Coordinate:
            out = chart.name(e.coord());
            break;
        case ExprKind::Add: {
            const auto& c = e.children();
            out = render(c[0], chart, 1);
            for (std::size_t i = 1; i < c.size(); ++i) {
                if (c[i].kind() == ExprKind::Neg)
                    out += " - " + render(c[i].children()[0], chart, 3);
                else if (c[i].kind() == ExprKind::Constant && c[i].value().sign() < 0)
                    out += " - " + (-c[i].value()).to_string();
                else
                    out += " + " + render(c[i], chart, 2);
            }
            break;
        }
        case ExprKind::Mul: {
            const auto& c = e.children();
            out = render(c[0], chart, 2);
            for (std::size_t i = 1; i < c.size(); ++i)
                out += " * " + render(c[i], chart, 2);
            break;
        }
        case ExprKind::Div:
            out = render(e.children()[0], chart, 2) + " / " +
                  render(e.children()[1], chart, 3);
            break;
        case ExprKind::Neg:
            out = "-" + render(e.children()[0], chart, 3);
            break;
        case ExprKind::IntPow:
            out = render(e.children()[0], chart, 5) + "^" +
                  std::to_string(e.exponent());
            break;
        case ExprKind::Call:
            out = func_name(e.func()) + "(" + render(e.children()[0], chart, 1) + ")";
            break;
    }
    if (precedence(e) < min_prec) return "(" + out + ")";
    return out;
}

}  // namespace

std::string print_expr(const Expr& e, const Chart& chart) {
    return render(e, chart, 1);
}

}  // namespace cojac
