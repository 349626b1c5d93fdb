#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cojac/suite.hpp"
#include "testutil.hpp"

using namespace cojac;
using namespace cojac::testutil;

namespace {
const Policy kExact = Policy::exact();
}

TEST_CASE("twisting form: defaults and validation") {
    Chart c = chart3();
    const auto& m3 = get_example("M3");
    // on M3, Omega = -d(omega), so the default twisting form vanishes
    CHECK(ClosedTwoForm::from_structure(m3.structure).form().is_syntactic_zero());

    DiffForm closed(c, 2);
    closed.set_component({0, 1}, P("3", c));
    closed.set_component({0, 2}, P("-1/2", c));
    CHECK_NOTHROW(ClosedTwoForm::validate(closed, kExact));

    DiffForm open(c, 2);
    open.set_component({0, 1}, P("z", c));
    CHECK_THROWS_AS(ClosedTwoForm::validate(open, kExact), NotClosedError);
}

TEST_CASE("algebroid bracket: degenerate cases") {
    Chart c = chart3();
    ACPJStructure m3 = compute_dual(get_example("M3").structure);
    ClosedTwoForm f = ClosedTwoForm::from_structure(m3);  // identically zero here

    Sampler s(501);
    AlgebroidSection sec{random_multivector(s, c, 1), random_chart_poly(s, c, 2, 3)};
    AlgebroidSection same = algebroid_bracket(f, sec, sec);
    CHECK(same.x.is_syntactic_zero());
    CHECK(is_zero(same.fbreve, 3, kExact));

    AlgebroidSection a{basis_vector(c, 0), P("0", c)};
    AlgebroidSection b{basis_vector(c, 1), P("0", c)};
    AlgebroidSection br = algebroid_bracket(f, a, b);
    CHECK(br.x.is_syntactic_zero());
    CHECK(is_zero(br.fbreve, 3, kExact));

    // constant fields with F = 0: only the function difference terms remain
    AlgebroidSection a2{basis_vector(c, 0), P("q * p", c)};
    AlgebroidSection b2{basis_vector(c, 1), P("z", c)};
    AlgebroidSection br2 = algebroid_bracket(f, a2, b2);
    CHECK(br2.x.is_syntactic_zero());
    CHECK(is_zero(br2.fbreve -
                      (directional_derivative(a2.x, b2.fbreve) -
                       directional_derivative(b2.x, a2.fbreve)),
                  3, kExact));
}

TEST_CASE("Leibniz formula for the section bracket") {
    Chart c = chart3();
    ACPJStructure m3b = compute_dual(get_example("M3b").structure);
    ClosedTwoForm f = ClosedTwoForm::from_structure(m3b);

    Sampler s(502);
    AlgebroidSection s1{random_multivector(s, c, 1), random_chart_poly(s, c, 2, 2)};
    AlgebroidSection s2{random_multivector(s, c, 1), random_chart_poly(s, c, 2, 2)};
    CHECK(check_leibniz(f, s1, s2, P("1", c), kExact));
    CHECK(check_leibniz(f, s1, s2, P("5/3", c), kExact));
    CHECK(check_leibniz(f, s1, s2, P("p", c), kExact));
    for (int i = 0; i < 5; ++i)
        CHECK(check_leibniz(f, s1, s2, random_chart_poly(s, c, 2, 2), kExact));
}

TEST_CASE("morphism s") {
    Chart c = chart3();
    ACPJStructure c3 = compute_dual(get_example("C3").structure);

    AlgebroidSection z = morphism_s(c3, {P("0", c), P("0", c)});
    CHECK(z.x.is_syntactic_zero());
    CHECK(is_zero(z.fbreve, 3, kExact));

    Sampler s(503);
    Expr f = random_chart_poly(s, c, 2, 3);
    AlgebroidSection diag = morphism_s(c3, {f, f});
    CHECK(is_zero(diag.fbreve, 3, kExact));

    AlgebroidSection sec = morphism_s(c3, {P("p", c), P("-p", c)});
    CHECK(tensor_equal(sec.x, basis_vector(c, 0), kExact));  // dp# - p E = d/dq on C3
    CHECK(is_zero(sec.fbreve - P("2 * p", c), 3, kExact));
}

TEST_CASE("morphism r and reconstruction") {
    Chart c = chart3();
    ACPJStructure c3 = compute_dual(get_example("C3").structure);

    Sampler s(504);
    Expr fb = random_chart_poly(s, c, 2, 3);
    MultiVector zero(c, 1);
    PairFH r0 = morphism_r(c3, {zero, fb});
    CHECK(is_zero(r0.f - fb, 3, kExact));
    CHECK(is_zero(r0.h, 3, kExact));

    PairFH re = morphism_r(c3, {c3.E, P("0", c)});
    CHECK(is_zero(re.f - P("1", c), 3, kExact));
    CHECK(is_zero(re.h - P("1", c), 3, kExact));
    CHECK(reconstruction_check(c3, {c3.E, P("0", c)}, kExact));

    // r after s is the identity on generator pairs
    PairFamilies fam = make_pair_families("C3", c);
    for (int i = 0; i < 6; ++i) {
        PairFH pair = fam.acc(s);
        CHECK(pair_equal(morphism_r(c3, morphism_s(c3, pair)), pair, 3, kExact));
        CHECK(reconstruction_check(c3, morphism_s(c3, pair), kExact));
    }
}

TEST_CASE("generic constant-coefficient closed form also gives a Lie algebroid") {
    Chart c = chart3();
    DiffForm f0(c, 2);
    f0.set_component({0, 1}, P("2", c));
    f0.set_component({0, 2}, P("-1", c));
    f0.set_component({1, 2}, P("1/3", c));
    ClosedTwoForm f = ClosedTwoForm::validate(f0, kExact);

    Sampler s(505);
    for (int i = 0; i < 6; ++i) {
        AlgebroidSection s1{random_multivector(s, c, 1), random_chart_poly(s, c, 1, 2)};
        AlgebroidSection s2{random_multivector(s, c, 1), random_chart_poly(s, c, 1, 2)};
        AlgebroidSection s3{random_multivector(s, c, 1), random_chart_poly(s, c, 1, 2)};
        AlgebroidSection a = algebroid_bracket(f, s1, algebroid_bracket(f, s2, s3));
        AlgebroidSection b = algebroid_bracket(f, s2, algebroid_bracket(f, s3, s1));
        AlgebroidSection cc = algebroid_bracket(f, s3, algebroid_bracket(f, s1, s2));
        CHECK(tensor_is_zero(a.x + b.x + cc.x, kExact));
        CHECK(is_zero(a.fbreve + b.fbreve + cc.fbreve, 3, kExact));
        CHECK(check_leibniz(f, s1, s2, random_chart_poly(s, c, 1, 2), kExact));
    }
}

TEST_CASE("sections must share a chart") {
    Chart c = chart3();
    Chart c5 = chart5();
    ACPJStructure m3 = compute_dual(get_example("M3").structure);
    ClosedTwoForm f = ClosedTwoForm::from_structure(m3);
    AlgebroidSection a{basis_vector(c, 0), P("0", c)};
    AlgebroidSection b{basis_vector(c5, 0), Expr::constant(Rational(0))};
    CHECK_THROWS_AS(algebroid_bracket(f, a, b), ChartMismatchError);
}
