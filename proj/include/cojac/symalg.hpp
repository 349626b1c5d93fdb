#ifndef COJAC_SYMALG_HPP
#define COJAC_SYMALG_HPP

#include <string>

#include "cojac/duality.hpp"

namespace cojac {

/// Pair of scalar functions (f, h) over one chart.
struct PairFH {
    Expr f;
    Expr h;
};

/// The three membership conditions for generator pairs:
///   cond1: E.f = 0
///   cond2: E.h + Lambda(L_E omega, df) = 0
///   cond3: the 1-form i_{df#} d(omega) + h i_E d(omega) + dh annihilates every
///          sharped covector (tested on the basis dx^i, enough by linearity)
/// Memberships: LGen(Omega) = 1; LGen(omega) = 2 and 3; LGen(Lambda) = 1 and 3;
/// LGen(E,Omega) = 1 and 2; LGen(omega,Omega) = all three.
struct GeneratorClass {
    bool cond1, cond2, cond3;

    bool lgen_Omega() const { return cond1; }
    bool lgen_omega() const { return cond2 && cond3; }
    bool lgen_Lambda() const { return cond1 && cond3; }
    bool lgen_E_Omega() const { return cond1 && cond2; }
    bool lgen_acc() const { return cond1 && cond2 && cond3; }
};

/// Which tensor (or pair of tensors) a lift is tested as a symmetry of.
enum class SymmetryTarget { Omega1, Omega2, Reeb, Lambda, Acc, Acpj };

/// {f, g} = Lambda(df, dg)
Expr poisson_bracket(const ACPJStructure& d, const Expr& f, const Expr& g);

/// [f, g] = {f, g} - f E.g + g E.f
Expr jacobi_bracket(const ACPJStructure& d, const Expr& f, const Expr& g);

/// X_f = df# - f E
MultiVector hamilton_jacobi_lift(const ACPJStructure& d, const Expr& f);

/// X_(f,h) = df# + h E; omega(X) = h
MultiVector pre_hamiltonian_lift(const ACPJStructure& d, const PairFH& pair);

/// E.f = 0 under the policy
bool is_conserved(const ACPJStructure& d, const Expr& f, const Policy& policy);

GeneratorClass classify_generator(const ACPJStructure& d, const PairFH& pair,
                                  const Policy& policy);

/// Symmetry predicates for the pre-Hamiltonian lift of the pair, expressed
/// through the generator conditions. Cross-check against the direct Lie
/// derivative with `lift_symmetry_direct`.
bool is_symmetry(SymmetryTarget which, const ACPJStructure& d, const PairFH& pair,
                 const Policy& policy);

/// Direct route: the Lie derivative of the named tensor along the lift vanishes.
bool lift_symmetry_direct(SymmetryTarget which, const ACPJStructure& d,
                          const PairFH& pair, const Policy& policy);

/// The commutator of two pre-Hamiltonian lifts, assembled term by term from the
/// closed formula (equal to lie_bracket of the lifts).
MultiVector pair_lift_commutator(const ACPJStructure& d, const PairFH& p1,
                                 const PairFH& p2);

/// Bracket on generators of symmetries of omega:
///   ({f1,f2} - h2 E.f1 + h1 E.f2 ;
///    {f1,h2} - {f2,h1} - d(omega)(df1#, df2#))
PairFH bracket_omega(const ACPJStructure& d, const PairFH& p1, const PairFH& p2);

/// Bracket on conserved-f pairs (membership enforced):
///   ({f1,f2} ; {f1,h2} - {f2,h1} - d(omega)(df1#, df2#)
///             + h1 (E.h2 + (L_E omega)#.f2) - h2 (E.h1 + (L_E omega)#.f1))
PairFH bracket_Omega(const ACPJStructure& d, const PairFH& p1, const PairFH& p2,
                     const Policy& policy);

/// Bracket on generators of symmetries of the full pair (membership enforced).
/// Evaluates the three equivalent closed forms, checks that their normal forms
/// agree (InternalConsistencyError otherwise), and returns the first.
PairFH bracket_acc(const ACPJStructure& d, const PairFH& p1, const PairFH& p2,
                   const Policy& policy);

/// (f1 f2, f1 h2 + f2 h1); commutative and associative with unit (1, 0).
PairFH pair_product(const PairFH& p1, const PairFH& p2);

/// X_(p1 p2) = f1 X_(p2) + f2 X_(p1), by normal forms.
bool lift_of_product_check(const ACPJStructure& d, const PairFH& p1, const PairFH& p2,
                           const Policy& policy);

/// L_X (f, h) = (X.f, X.h)
PairFH lie_derive_pair(const MultiVector& x, const PairFH& pair);

/// Normal-form equality of pairs.
bool pair_equal(const PairFH& a, const PairFH& b, int nvars, const Policy& policy);

/// Rejects pairs whose components have a pole at the regularity witness.
void require_pair_domain(const ACCStructure& s, const PairFH& pair);

std::string pair_to_string(const PairFH& pair, const Chart& chart);

}  // namespace cojac

#endif
