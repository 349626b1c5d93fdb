#ifndef COJAC_EXPR_HPP
#define COJAC_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "cojac/chart.hpp"
#include "cojac/poly.hpp"
#include "cojac/rational.hpp"

namespace cojac {

enum class ExprKind { Constant, Coordinate, Add, Mul, Neg, Div, IntPow, Call };
enum class Func { Sin, Cos, Exp };

std::string func_name(Func f);

/// Immutable symbolic scalar expression over chart coordinates with exact
/// rational coefficients. Values are shared; all operations are pure.
class Expr {
  public:
    Expr() : Expr(constant(Rational(0))) {}

    static Expr constant(Rational c);
    static Expr coordinate(int index);
    /// n-ary sum; drops syntactic zeros and flattens nested sums.
    static Expr add(std::vector<Expr> terms);
    /// n-ary product; syntactic zero annihilates, ones are dropped.
    static Expr mul(std::vector<Expr> factors);
    static Expr neg(Expr e);
    static Expr div(Expr num, Expr den);
    static Expr int_pow(Expr base, long exponent);
    static Expr call(Func f, Expr arg);

    ExprKind kind() const;
    const Rational& value() const;             // Constant
    int coord() const;                         // Coordinate
    const std::vector<Expr>& children() const; // Add, Mul; unary ops use children()[0]
    long exponent() const;                     // IntPow
    Func func() const;                         // Call

    /// rational-function class: no sin/cos/exp anywhere in the tree
    bool is_rational_function() const;
    int max_coord_index() const;
    bool is_syntactic_zero() const;
    bool is_syntactic_one() const;

    friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return add({a, neg(b)}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return div(a, b); }
    Expr operator-() const { return neg(*this); }

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Total structural order (kind, payload, children); used for deterministic output.
int expr_compare(const Expr& a, const Expr& b);

/// Partial derivative with respect to chart coordinate `var`.
Expr differentiate(const Expr& e, int var);

/// Exact evaluation; requires rational-function class (PolicyError otherwise)
/// and a pole-free point (PoleError otherwise).
Rational evaluate_exact(const Expr& e, const Point& p);

/// Floating evaluation; admits sin/cos/exp. PoleError on vanishing denominators.
double evaluate_numeric(const Expr& e, const NumericPoint& p);

/// Conversion to a canonical rational function; PolicyError on transcendental input,
/// DivisionByZeroPolynomial when a denominator reduces to the zero polynomial.
RatFunc to_ratfunc(const Expr& e, int nvars);

/// Canonical Expr for a reduced rational function (sorted monomials, monic
/// denominator rendered as a Div node).
Expr ratfunc_to_expr(const RatFunc& rf);

/// Canonical normal form for rational-function expressions; best-effort
/// flattening (exact on maximal rational subtrees) for transcendental ones.
Expr normalize(const Expr& e, int nvars);

/// Replace Coordinate(i) by images[i] everywhere.
Expr substitute(const Expr& e, const std::vector<Expr>& images);

/// Render in the DSL grammar; parse(print(e)) has the same normal form as e.
std::string print_expr(const Expr& e, const Chart& chart);

}  // namespace cojac

#endif
