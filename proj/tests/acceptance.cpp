// Acceptance gate: runs the full invariant suite via the suite command for
// every catalogued structure and grades the twelve acceptance criteria, one
// pass/fail line each. Exits nonzero when any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cojac/cli.hpp"

using namespace cojac;

namespace {

struct Results {
    // structure name -> check name -> status
    std::map<std::string, std::map<std::string, CheckStatus>> by_structure;

    CheckStatus at(const std::string& structure, const std::string& check) const {
        auto s = by_structure.find(structure);
        if (s == by_structure.end()) return CheckStatus::Fail;
        auto c = s->second.find(check);
        if (c == s->second.end()) return CheckStatus::Fail;
        return c->second;
    }

    bool pass(const std::string& structure, const std::string& check) const {
        return at(structure, check) == CheckStatus::Pass;
    }

    bool pass_everywhere(const std::string& check) const {
        for (const auto& [name, checks] : by_structure)
            if (!pass(name, check)) return false;
        return true;
    }
};

int failures = 0;

void grade(int number, const std::string& what, bool ok) {
    std::printf("criterion %2d: %s  %s\n", number, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

}  // namespace

int main() {
    const std::vector<std::string> names = {"C3", "C5", "K3", "M3", "M3b", "EM3"};
    Results r;
    for (const auto& name : names) {
        CliFlags flags;  // defaults: exact policy, seed 0, 50 samples, tol 1e-9
        Report report = cmd_suite(CliInput{"", name}, flags, std::nullopt);
        for (const auto& c : report.checks)
            r.by_structure[name][c.name] = c.status;
    }

    grade(1,
          "duality reconstruction: closed-form duals exact on C3/C5/K3/M3/EM3; "
          "M3b vs 20-point numeric oracle (exact agreement, within 1e-9)",
          r.pass("C3", "duality.reconstruction") && r.pass("C5", "duality.reconstruction") &&
              r.pass("K3", "duality.reconstruction") && r.pass("M3", "duality.reconstruction") &&
              r.pass("EM3", "duality.reconstruction") && r.pass("M3b", "duality.reconstruction") &&
              r.pass_everywhere("duality.pointwise_oracle"));

    grade(2,
          "displayed bracket identities exact everywhere; Jacobi-pair "
          "specialization on contact, coPoisson on cosymplectic",
          r.pass_everywhere("exterior.calibration_E_Lambda") &&
              r.pass_everywhere("exterior.calibration_Lambda_Lambda") &&
              r.pass_everywhere("duality.jacobi_pair_specialization") &&
              r.pass_everywhere("duality.copoisson_specialization") &&
              r.pass("C3", "duality.jacobi_pair_specialization") &&
              r.pass("K3", "duality.copoisson_specialization"));

    grade(3,
          "closed commutator formula equals the Lie bracket of lifts, 10 seeded "
          "pairs per structure, exact",
          r.pass_everywhere("symalg.commutator_formula"));

    grade(4,
          "bracket closure: omega-generator and conserved-pair brackets stay "
          "in-domain, 10 seeded cases each, conditions re-verified",
          r.pass_everywhere("symalg.closure_omega") &&
              r.pass_everywhere("symalg.closure_Omega"));

    grade(5, "Jacobi identity of the conserved-pair bracket on seeded triples, exact",
          r.pass_everywhere("symalg.jacobi_identity"));

    grade(6,
          "triple-form equality inside the full-pair bracket never fails across "
          "all suite invocations",
          r.pass_everywhere("symalg.triple_form_equality"));

    grade(7, "cosymplectic and contact bracket reductions reproduce on K3 and C3",
          r.pass("K3", "symalg.reduction_cosymplectic") &&
              r.pass("C3", "symalg.reduction_contact"));

    grade(8,
          "pair/dual-pair symmetry predicates agree with each other and with "
          "direct Lie-derivative vanishing, 20 seeded pairs per structure",
          r.pass_everywhere("symalg.symmetry_agreement"));

    grade(9,
          "multiplicative algebra laws, the product lift rule, and the bracket "
          "derivation rule, exact",
          r.pass_everywhere("symalg.product_algebra") &&
              r.pass_everywhere("symalg.product_lift") &&
              r.pass_everywhere("symalg.product_derivation"));

    grade(10,
          "Lie derivation: membership preservation, derivation over the "
          "full-pair bracket, and the half-difference identity, exact",
          r.pass_everywhere("symalg.lie_derive_membership") &&
              r.pass_everywhere("symalg.lie_derive_bracket") &&
              r.pass_everywhere("symalg.half_difference"));

    grade(11,
          "algebroid: Jacobi, Leibniz, morphism square, r-after-s identity, and "
          "bracket intertwining with F = Omega + d(omega), exact",
          r.pass_everywhere("algebroid.jacobi") && r.pass_everywhere("algebroid.leibniz") &&
              r.pass_everywhere("algebroid.morphism_square") &&
              r.pass_everywhere("algebroid.roundtrip") &&
              r.pass_everywhere("algebroid.intertwine"));

    grade(12,
          "fault injection: every single-component +1/100 tamper of Lambda or "
          "omega breaks at least one duality identity",
          r.pass_everywhere("duality.fault_injection"));

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
