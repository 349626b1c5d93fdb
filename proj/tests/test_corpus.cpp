#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace cojac;

namespace {
const Policy kExact = Policy::exact();
}

TEST_CASE("catalogue listing") {
    auto names = list_examples();
    CHECK(names.size() >= 6);
    CHECK(get_example("C3").name == "C3");
    CHECK(get_example("M3b").name == "M3b");
    CHECK(get_example("K3").expected_class == StructureClass::Cosymplectic);
    CHECK_THROWS_AS(get_example("nope"), UsageError);

    // deterministic order
    auto again = list_examples();
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(names[i] == again[i]);
}

TEST_CASE("every entry validates, classifies, and reproduces its expected dual") {
    for (const auto& entry : catalogue()) {
        CAPTURE(entry.name);
        CHECK(classify(entry.structure, kExact) == entry.expected_class);
        ACPJStructure d = compute_dual(entry.structure);
        if (entry.expected_E) CHECK(tensor_equal(d.E, *entry.expected_E, kExact));
        if (entry.expected_Lambda)
            CHECK(tensor_equal(d.Lambda, *entry.expected_Lambda, kExact));
    }
}

TEST_CASE("class-appropriate identity packages hold on every dual") {
    for (const auto& entry : catalogue()) {
        CAPTURE(entry.name);
        ACPJStructure d = compute_dual(entry.structure);
        auto checks = verify_dual_identities(d, kExact);
        for (const auto& c : checks) {
            if (c.name == "dual.jacobi_pair") {
                CHECK((c.status == CheckStatus::Pass) ==
                      (entry.expected_class == StructureClass::Contact));
            } else if (c.name == "dual.copoisson") {
                CHECK((c.status == CheckStatus::Pass) ==
                      (entry.expected_class == StructureClass::Cosymplectic));
            } else {
                CHECK(c.status == CheckStatus::Pass);
            }
        }
    }
}

TEST_CASE("M3 expected dual matches the worked linear solves") {
    const auto& m3 = get_example("M3");
    REQUIRE(m3.expected_E.has_value());
    REQUIRE(m3.expected_Lambda.has_value());
    Chart c = m3.structure.chart();
    CHECK(expr_compare(m3.expected_Lambda->component({0, 1}),
                       Expr::constant(Rational(1))) == 0);
    CHECK(is_zero(m3.expected_Lambda->component({1, 2}) + Expr::coordinate(1), 3,
                  kExact));
    CHECK(tensor_equal(*m3.expected_E, basis_vector(c, 2), kExact));
}

TEST_CASE("M3b witness avoids the irregular locus p = 1") {
    const auto& m3b = get_example("M3b");
    CHECK(m3b.structure.regularity_witness()[1] != Rational(1));
}
