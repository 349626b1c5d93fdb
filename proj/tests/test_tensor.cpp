#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cojac/duality.hpp"
#include "cojac/error.hpp"
#include "testutil.hpp"

using namespace cojac;
using namespace cojac::testutil;

namespace {

const Policy kExact = Policy::exact();

DiffForm dq_wedge_dp(const Chart& c) {
    DiffForm f(c, 2);
    f.set_component({0, 1}, Expr::constant(Rational(1)));
    return f;
}

}  // namespace

TEST_CASE("wedge: antisymmetry, basis products, signs") {
    Chart c = chart3();
    DiffForm dq = basis_covector(c, 0), dp = basis_covector(c, 1);
    CHECK(wedge(dq, dq).is_syntactic_zero());
    CHECK(tensor_equal(wedge(dq, dp), dq_wedge_dp(c), kExact));
    CHECK(tensor_equal(wedge(dp, dq), -dq_wedge_dp(c), kExact));
    CHECK_THROWS_AS(wedge(dq_wedge_dp(c), dq_wedge_dp(c)), DegreeError);
}

TEST_CASE("exterior derivative: coordinate differentials and hand cases") {
    Chart c = chart3();
    // d(z) = dz
    DiffForm z0(c, 0);
    z0.set_component({}, P("z", c));
    CHECK(tensor_equal(exterior_derivative(z0), basis_covector(c, 2), kExact));

    // d(-p dq) = dq ^ dp
    DiffForm mpdq(c, 1);
    mpdq.set_component({0}, P("-p", c));
    CHECK(tensor_equal(exterior_derivative(mpdq), dq_wedge_dp(c), kExact));

    // d of a constant-coefficient 2-form vanishes
    CHECK(exterior_derivative(dq_wedge_dp(c)).is_syntactic_zero());

    DiffForm top(c, 3);
    top.set_component({0, 1, 2}, P("q", c));
    CHECK_THROWS_AS(exterior_derivative(top), DegreeError);
}

TEST_CASE("d after d is zero on seeded random polynomial forms of each degree") {
    for (const Chart& c : {chart3(), chart5()}) {
        Sampler s(7);
        for (int degree = 0; degree + 2 <= c.dim(); ++degree) {
            for (int i = 0; i < 200; ++i) {
                DiffForm a = random_form(s, c, degree);
                CHECK(exterior_derivative(exterior_derivative(a)).is_syntactic_zero());
            }
        }
    }
}

TEST_CASE("interior products: first-slot contraction and mirror") {
    Chart c = chart3();
    MultiVector dz_v = basis_vector(c, 2), dq_v = basis_vector(c, 0),
                dp_v = basis_vector(c, 1);

    DiffForm omega(c, 1);
    omega.set_component({2}, P("1", c));
    omega.set_component({0}, P("-p", c));
    DiffForm one = interior_form(dz_v, omega);
    CHECK(one.degree() == 0);
    CHECK(expr_compare(one.component({}), Expr::constant(Rational(1))) == 0);

    CHECK(tensor_equal(interior_form(dq_v, dq_wedge_dp(c)), basis_covector(c, 1), kExact));
    CHECK(tensor_equal(interior_form(dp_v, dq_wedge_dp(c)), -basis_covector(c, 0), kExact));

    MultiVector qp(c, 2);
    qp.set_component({0, 1}, P("1", c));
    CHECK(tensor_equal(interior_vector(basis_covector(c, 0), qp), dp_v, kExact));
    CHECK(interior_vector(basis_covector(c, 2), qp).is_syntactic_zero());
    CHECK(tensor_equal(interior_vector(basis_covector(c, 1), qp), -dq_v, kExact));

    CHECK_THROWS_AS(interior_form(dz_v, one), DegreeError);
}

TEST_CASE("interior product is an antiderivation") {
    Chart c = chart3();
    Sampler s(13);
    for (int i = 0; i < 10; ++i) {
        MultiVector x = random_multivector(s, c, 1);
        DiffForm a = random_form(s, c, 1);
        DiffForm b = random_form(s, c, 1, 1, 1);
        DiffForm lhs = interior_form(x, wedge(a, b));
        DiffForm rhs = wedge(interior_form(x, a), b) - wedge(a, interior_form(x, b));
        CHECK(tensor_equal(lhs, rhs, kExact));

        DiffForm b2 = random_form(s, c, 2, 1, 1);
        DiffForm lhs2 = interior_form(x, wedge(a, b2));
        DiffForm rhs2 = wedge(interior_form(x, a), b2) - wedge(a, interior_form(x, b2));
        CHECK(tensor_equal(lhs2, rhs2, kExact));
    }
}

TEST_CASE("pairing: evaluation and alternation") {
    Chart c = chart3();
    MultiVector dz_v = basis_vector(c, 2), dq_v = basis_vector(c, 0),
                dp_v = basis_vector(c, 1);
    DiffForm omega(c, 1);
    omega.set_component({2}, P("1", c));
    omega.set_component({0}, P("-p", c));
    CHECK(expr_compare(pairing(omega, {dz_v}), Expr::constant(Rational(1))) == 0);
    CHECK(expr_compare(pairing(dq_wedge_dp(c), {dq_v, dp_v}),
                       Expr::constant(Rational(1))) == 0);
    CHECK(expr_compare(pairing(dq_wedge_dp(c), {dp_v, dq_v}),
                       Expr::constant(Rational(-1))) == 0);
    CHECK_THROWS_AS(pairing(dq_wedge_dp(c), {dq_v}), DegreeError);

    Sampler s(19);
    for (int i = 0; i < 10; ++i) {
        DiffForm a = random_form(s, c, 2);
        MultiVector x = random_multivector(s, c, 1);
        MultiVector y = random_multivector(s, c, 1);
        CHECK(is_zero(pairing(a, {x, y}) + pairing(a, {y, x}), 3, kExact));
        CHECK(is_zero(pairing(a, {x, x}), 3, kExact));
    }
}

TEST_CASE("lie bracket on vector fields") {
    Chart c = chart3();
    MultiVector dq_v = basis_vector(c, 0), dp_v = basis_vector(c, 1);
    CHECK(lie_bracket(dq_v, dp_v).is_syntactic_zero());

    MultiVector q_dp(c, 1);
    q_dp.set_component({1}, P("q", c));
    CHECK(tensor_equal(lie_bracket(dq_v, q_dp), dp_v, kExact));

    Sampler s(23);
    MultiVector x = random_multivector(s, c, 1);
    CHECK(lie_bracket(x, x).is_syntactic_zero());
}

TEST_CASE("Lie derivative of forms: Cartan formula") {
    Chart c = chart3();
    MultiVector dz_v = basis_vector(c, 2), dq_v = basis_vector(c, 0);

    DiffForm omega(c, 1);
    omega.set_component({2}, P("1", c));
    omega.set_component({0}, P("-p", c));
    CHECK(lie_derivative_form(dz_v, omega).is_syntactic_zero());

    // L_X df = d(X.f) with f = q p, X = d/dq
    DiffForm df = differential(c, P("q * p", c));
    CHECK(tensor_equal(lie_derivative_form(dq_v, df), basis_covector(c, 1), kExact));

    MultiVector zero(c, 1);
    Sampler s(29);
    DiffForm a = random_form(s, c, 2);
    CHECK(lie_derivative_form(zero, a).is_syntactic_zero());
}

TEST_CASE("Lie derivative: product rule and commutator on forms") {
    Chart c = chart3();
    Sampler s(31);
    for (int i = 0; i < 8; ++i) {
        MultiVector x = random_multivector(s, c, 1);
        MultiVector y = random_multivector(s, c, 1);
        DiffForm a = random_form(s, c, 1, 1, 1);
        DiffForm b = random_form(s, c, 1, 1, 1);

        DiffForm lhs = lie_derivative_form(x, wedge(a, b));
        DiffForm rhs = wedge(lie_derivative_form(x, a), b) +
                       wedge(a, lie_derivative_form(x, b));
        CHECK(tensor_equal(lhs, rhs, kExact));

        DiffForm comm = lie_derivative_form(lie_bracket(x, y), a);
        DiffForm two = lie_derivative_form(x, lie_derivative_form(y, a)) -
                       lie_derivative_form(y, lie_derivative_form(x, a));
        CHECK(tensor_equal(comm, two, kExact));
    }
}

TEST_CASE("schouten: vector cases reduce to Lie calculus") {
    Chart c = chart3();
    MultiVector dq_v = basis_vector(c, 0), dp_v = basis_vector(c, 1),
                dz_v = basis_vector(c, 2);
    CHECK(schouten(dq_v, dp_v).is_syntactic_zero());

    MultiVector qp(c, 2);
    qp.set_component({0, 1}, P("1", c));
    CHECK(schouten(dz_v, qp).is_syntactic_zero());

    Sampler s(37);
    for (int i = 0; i < 10; ++i) {
        MultiVector x = random_multivector(s, c, 1);
        MultiVector y = random_multivector(s, c, 1);
        CHECK(tensor_equal(schouten(x, y), lie_bracket(x, y), kExact));
    }
}

TEST_CASE("schouten: graded antisymmetry and Jacobi on low degrees") {
    Chart c = chart3();
    Sampler s(41);
    auto sign = [](int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; };
    std::vector<std::array<int, 3>> degree_triples = {{1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    for (const auto& degs : degree_triples) {
        for (int i = 0; i < 6; ++i) {
            MultiVector p = random_multivector(s, c, degs[0], 1, 1);
            MultiVector q = random_multivector(s, c, degs[1], 1, 1);
            MultiVector r = random_multivector(s, c, degs[2], 1, 1);

            // [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]
            MultiVector pq = schouten(p, q);
            MultiVector qp = schouten(q, p);
            MultiVector expected =
                sign(degs[0] - 1, degs[1] - 1) > 0 ? -qp : qp;
            CHECK(tensor_equal(pq, expected, kExact));

            // graded Jacobi, cyclic prefactor form; skip when any nested
            // bracket would exceed the chart dimension
            int d1 = degs[0] + degs[1] + degs[2] - 2;
            if (d1 > c.dim()) continue;
            auto term = [&](const MultiVector& a, const MultiVector& b,
                            const MultiVector& cc, int sa, int sc) {
                MultiVector inner = schouten(b, cc);
                MultiVector outer = schouten(a, inner);
                return sign(sa - 1, sc - 1) > 0 ? outer : -outer;
            };
            MultiVector acc = term(p, q, r, degs[0], degs[2]) +
                              term(q, r, p, degs[1], degs[0]) +
                              term(r, p, q, degs[2], degs[1]);
            CHECK(tensor_is_zero(acc, kExact));
        }
    }
}

TEST_CASE("schouten: Leibniz rule in the calibrated convention") {
    Chart c = chart3();
    Sampler s(43);
    // [P, Q ^ R] = (-1)^{(p-1) r} [P,Q] ^ R + Q ^ [P,R]
    std::vector<std::array<int, 3>> degree_triples = {{1, 1, 1}, {2, 1, 1}, {1, 1, 2},
                                                      {1, 2, 1}};
    for (const auto& degs : degree_triples) {
        if (degs[0] + degs[1] + degs[2] - 1 > c.dim()) continue;
        for (int i = 0; i < 6; ++i) {
            MultiVector p = random_multivector(s, c, degs[0], 1, 1);
            MultiVector q = random_multivector(s, c, degs[1], 1, 1);
            MultiVector r = random_multivector(s, c, degs[2], 1, 1);
            MultiVector lhs = schouten(p, wedge(q, r));
            MultiVector first = wedge(schouten(p, q), r);
            int sgn = ((degs[0] - 1) * degs[2]) % 2 == 0 ? 1 : -1;
            MultiVector rhs = (sgn > 0 ? first : -first) + wedge(q, schouten(p, r));
            CHECK(tensor_equal(lhs, rhs, kExact));
        }
    }
}

TEST_CASE("schouten on M3: [Lambda,Lambda] equals twice the transported d(omega)") {
    const ExampleEntry& m3 = get_example("M3");
    ACPJStructure d = compute_dual(m3.structure);
    MultiVector lhs = schouten(d.Lambda, d.Lambda);
    MultiVector transported = lambda_sharp_transport(d.Lambda, d.d_omega);
    MultiVector rhs = Expr::constant(Rational(2)) * wedge(d.E, transported);
    CHECK(tensor_equal(lhs, rhs, kExact));
    // on M3 the transport of d(omega) reproduces Lambda itself
    CHECK(tensor_equal(transported, d.Lambda, kExact));
}

TEST_CASE("calibration: both displayed duality identities on every corpus dual") {
    for (const auto& entry : catalogue()) {
        ACPJStructure d = compute_dual(entry.structure);
        MultiVector el = schouten(d.E, d.Lambda);
        MultiVector el_rhs = -wedge(d.E, interior_vector(d.lie_E_omega, d.Lambda));
        CHECK(tensor_equal(el, el_rhs, kExact));

        MultiVector ll = schouten(d.Lambda, d.Lambda);
        MultiVector ll_rhs =
            Expr::constant(Rational(2)) *
            wedge(d.E, lambda_sharp_transport(d.Lambda, d.d_omega));
        CHECK(tensor_equal(ll, ll_rhs, kExact));
    }
}

TEST_CASE("lambda transport: degenerate inputs and the pointwise matrix oracle") {
    Chart c = chart3();
    const ExampleEntry& m3 = get_example("M3");
    ACPJStructure d = compute_dual(m3.structure);

    DiffForm zero2(c, 2);
    CHECK(lambda_sharp_transport(d.Lambda, zero2).is_syntactic_zero());
    MultiVector zero_l(c, 2);
    CHECK(lambda_sharp_transport(zero_l, d.d_omega).is_syntactic_zero());

    // oracle: W = L A L^T with L[i][j] = Lambda(dx^i, dx^j), A[i][j] = a(d_i, d_j)
    Sampler s(47);
    DiffForm a = random_form(s, c, 2);
    MultiVector w = lambda_sharp_transport(d.Lambda, a);
    for (int trial = 0; trial < 5; ++trial) {
        Point pt = s.point(3);
        auto lam = evaluate_components(d.Lambda, pt);
        auto av = evaluate_components(a, pt);
        auto at = [&](std::map<IndexTuple, Rational>& m, int i, int j) {
            if (i == j) return Rational(0);
            if (i < j) return m.count({i, j}) ? m[{i, j}] : Rational(0);
            return m.count({j, i}) ? -m[{j, i}] : Rational(0);
        };
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                Rational acc(0);
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n)
                        acc += at(lam, i, m) * at(av, m, n) * at(lam, j, n);
                CHECK(evaluate_exact(w.component({i, j}), pt) == acc);
            }
        }
    }
}

TEST_CASE("wedge powers and volume forms") {
    const ExampleEntry& c5 = get_example("C5");
    const Chart& c = c5.structure.chart();
    DiffForm vol = c5.structure.volume_candidate();
    CHECK(vol.degree() == c.dim());
    CHECK_FALSE(vol.is_syntactic_zero());
}
