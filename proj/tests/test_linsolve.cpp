#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cojac/error.hpp"
#include "cojac/linsolve.hpp"
#include "testutil.hpp"

using namespace cojac;
using namespace cojac::testutil;

TEST_CASE("symbolic solve over the rational-function field") {
    Chart c = chart3();
    // [ 1   p ] [x]   [ 1 ]
    // [ p   1 ] [y] = [ p^2 ]   ->  x = (1 - p^3)/(1 - p^2), y = ...
    std::vector<std::vector<Expr>> a = {{P("1", c), P("p", c)},
                                        {P("p", c), P("1", c)}};
    std::vector<Expr> b = {P("1", c), P("p^2", c)};
    auto x = linear_solve_symbolic(a, b, 3);
    REQUIRE(x.size() == 2);
    // verify by substitution, exactly
    for (int i = 0; i < 2; ++i) {
        Expr residual = a[static_cast<std::size_t>(i)][0] * x[0] +
                        a[static_cast<std::size_t>(i)][1] * x[1] -
                        b[static_cast<std::size_t>(i)];
        CHECK(is_zero(residual, 3, Policy::exact()));
    }

    // overdetermined but consistent
    std::vector<std::vector<Expr>> a2 = {{P("1", c)}, {P("p", c)}};
    std::vector<Expr> b2 = {P("q", c), P("p * q", c)};
    auto x2 = linear_solve_symbolic(a2, b2, 3);
    CHECK(is_zero(x2[0] - P("q", c), 3, Policy::exact()));
}

TEST_CASE("symbolic solve error paths") {
    Chart c = chart3();
    // identically singular column
    std::vector<std::vector<Expr>> sing = {{P("0", c), P("1", c)},
                                           {P("0", c), P("p", c)}};
    std::vector<Expr> b = {P("1", c), P("0", c)};
    CHECK_THROWS_AS(linear_solve_symbolic(sing, b, 3), NeedsChartRestrictionError);

    // symbolically inconsistent overdetermined system
    std::vector<std::vector<Expr>> inc = {{P("1", c)}, {P("1", c)}};
    std::vector<Expr> b2 = {P("q", c), P("q + 1", c)};
    CHECK_THROWS_AS(linear_solve_symbolic(inc, b2, 3), InternalConsistencyError);
}

TEST_CASE("pointwise rational solve and rank") {
    std::vector<std::vector<Rational>> a = {{Rational(2), Rational(1)},
                                            {Rational(1), Rational(3)}};
    auto x = linear_solve_rational(a, {Rational(5), Rational(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(3));

    std::vector<std::vector<Rational>> sing = {{Rational(1), Rational(2)},
                                               {Rational(2), Rational(4)}};
    CHECK_FALSE(linear_solve_rational(sing, {Rational(1), Rational(2)}).has_value());
    CHECK(matrix_rank(sing) == 1);
    CHECK(matrix_rank(a) == 2);
}

TEST_CASE("wedge requires a common chart") {
    DiffForm a(chart3(), 1);
    a.set_component({0}, Expr::constant(Rational(1)));
    DiffForm b(chart5(), 1);
    b.set_component({0}, Expr::constant(Rational(1)));
    CHECK_THROWS_AS(wedge(a, b), ChartMismatchError);
}
