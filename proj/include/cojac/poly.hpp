#ifndef COJAC_POLY_HPP
#define COJAC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "cojac/chart.hpp"
#include "cojac/rational.hpp"

namespace cojac {

/// Exponent vector; length = number of chart coordinates.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order, larger-first (begin() of the term map is the
/// leading term). Ties in total degree break lexicographically on exponents.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q with grlex-sorted terms.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    const TermMap& terms() const { return terms_; }

    unsigned total_degree() const;
    unsigned degree_in(int var) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    Poly derivative(int var) const;
    Rational evaluate(const Point& p) const;
    double evaluate(const NumericPoint& p) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string(const Chart& chart) const;  // debug aid

  private:
    int nvars_;
    TermMap terms_;
};

/// Exact quotient a / b; throws InternalConsistencyError if the division is not exact.
Poly exact_divide(const Poly& a, const Poly& b);

/// GCD over Q[x1..xn], defined up to units; the result is primitive over Z with a
/// positive leading coefficient (returns 1 for coprime/constant inputs).
Poly poly_gcd(Poly a, Poly b);

/// Canonical rational function num/den: gcd-reduced, den monic w.r.t. grlex.
class RatFunc {
  public:
    RatFunc() : num_(0), den_(0) {}
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);

    static RatFunc constant(int nvars, const Rational& c) {
        return RatFunc(Poly::constant(nvars, c));
    }
    static RatFunc variable(int nvars, int index) {
        return RatFunc(Poly::variable(nvars, index));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const;
    int nvars() const { return num_.nvars(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc pow(long e) const;
    RatFunc derivative(int var) const;

    /// Exact evaluation; throws PoleError when the denominator vanishes.
    Rational evaluate(const Point& p) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    void reduce();

    Poly num_, den_;
};

}  // namespace cojac

#endif
