#ifndef COJAC_TESTS_TESTUTIL_HPP
#define COJAC_TESTS_TESTUTIL_HPP

#include <string>
#include <vector>

#include "cojac/corpus.hpp"
#include "cojac/parser.hpp"
#include "cojac/policy.hpp"
#include "cojac/tensor.hpp"

namespace cojac::testutil {

inline Chart chart3() { return Chart({"q", "p", "z"}); }
inline Chart chart5() { return Chart({"q1", "q2", "p1", "p2", "z"}); }

inline Expr P(const std::string& text, const Chart& chart) {
    return parse_expr(text, chart);
}

inline Rational small_rational(Sampler& s) {
    long num = static_cast<long>(s.bounded(11)) - 5;
    long den = static_cast<long>(s.bounded(3)) + 1;
    return Rational(num, den);
}

/// Random polynomial in the given variable expressions: `terms` monomials of
/// total degree <= max_deg with small rational coefficients.
inline Expr random_poly(Sampler& s, const std::vector<Expr>& vars, int max_deg,
                        int terms) {
    std::vector<Expr> sum;
    sum.push_back(Expr::constant(small_rational(s)));
    for (int t = 0; t < terms; ++t) {
        std::vector<Expr> factors;
        factors.push_back(Expr::constant(small_rational(s)));
        int deg = static_cast<int>(s.bounded(static_cast<std::uint64_t>(max_deg) + 1));
        for (int k = 0; k < deg; ++k)
            factors.push_back(vars[s.bounded(vars.size())]);
        sum.push_back(Expr::mul(std::move(factors)));
    }
    return Expr::add(std::move(sum));
}

inline std::vector<Expr> coordinate_exprs(const Chart& chart) {
    std::vector<Expr> out;
    for (int i = 0; i < chart.dim(); ++i) out.push_back(Expr::coordinate(i));
    return out;
}

inline Expr random_chart_poly(Sampler& s, const Chart& chart, int max_deg = 2,
                              int terms = 3) {
    return random_poly(s, coordinate_exprs(chart), max_deg, terms);
}

inline DiffForm random_form(Sampler& s, const Chart& chart, int degree, int max_deg = 2,
                            int terms = 2) {
    DiffForm out(chart, degree);
    std::vector<int> idx(static_cast<std::size_t>(degree));
    // iterate strictly increasing index tuples
    std::vector<IndexTuple> tuples;
    IndexTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == degree) {
            tuples.push_back(cur);
            return;
        }
        for (int i = start; i < chart.dim(); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (const auto& t : tuples)
        out.set_component(t, random_chart_poly(s, chart, max_deg, terms));
    return out;
}

inline MultiVector random_multivector(Sampler& s, const Chart& chart, int degree,
                                      int max_deg = 1, int terms = 2) {
    MultiVector out(chart, degree);
    IndexTuple cur;
    std::vector<IndexTuple> tuples;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == degree) {
            tuples.push_back(cur);
            return;
        }
        for (int i = start; i < chart.dim(); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (const auto& t : tuples)
        out.set_component(t, random_chart_poly(s, chart, max_deg, terms));
    return out;
}

/// Central finite difference of e along coordinate `var` at a numeric point.
inline double finite_difference(const Expr& e, int var, NumericPoint x,
                                double step = 1e-6) {
    NumericPoint lo = x, hi = x;
    hi[static_cast<std::size_t>(var)] += step;
    lo[static_cast<std::size_t>(var)] -= step;
    return (evaluate_numeric(e, hi) - evaluate_numeric(e, lo)) / (2 * step);
}

}  // namespace cojac::testutil

#endif
