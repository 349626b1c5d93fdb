#include "cojac/symalg.hpp"

namespace cojac {

namespace {

Expr e_dot(const ACPJStructure& d, const Expr& f) {
    return directional_derivative(d.E, f);
}

DiffForm d_of(const ACPJStructure& d, const Expr& f) {
    return differential(d.chart, f);
}

MultiVector df_sharp(const ACPJStructure& d, const Expr& f) {
    return sharp(d, d_of(d, f));
}

// Lambda(L_E omega, df) = (L_E omega)# . f
Expr le_omega_sharp_dot(const ACPJStructure& d, const Expr& f) {
    return pairing_mv(d.Lambda, {d.lie_E_omega, d_of(d, f)});
}

Expr d_omega_of(const ACPJStructure& d, const MultiVector& x, const MultiVector& y) {
    return pairing(d.d_omega, {x, y});
}

// i_{df#} d(omega) + h i_E d(omega) + dh
DiffForm symmetry_one_form(const ACPJStructure& d, const PairFH& pair) {
    return interior_form(df_sharp(d, pair.f), d.d_omega) +
           pair.h * interior_form(d.E, d.d_omega) + d_of(d, pair.h);
}

}  // namespace

Expr poisson_bracket(const ACPJStructure& d, const Expr& f, const Expr& g) {
    return pairing_mv(d.Lambda, {d_of(d, f), d_of(d, g)});
}

Expr jacobi_bracket(const ACPJStructure& d, const Expr& f, const Expr& g) {
    Expr out = poisson_bracket(d, f, g) - f * e_dot(d, g) + g * e_dot(d, f);
    return normalize(out, d.chart.dim());
}

MultiVector hamilton_jacobi_lift(const ACPJStructure& d, const Expr& f) {
    return df_sharp(d, f) - f * d.E;
}

MultiVector pre_hamiltonian_lift(const ACPJStructure& d, const PairFH& pair) {
    return df_sharp(d, pair.f) + pair.h * d.E;
}

bool is_conserved(const ACPJStructure& d, const Expr& f, const Policy& policy) {
    return is_zero(e_dot(d, f), d.chart.dim(), policy);
}

GeneratorClass classify_generator(const ACPJStructure& d, const PairFH& pair,
                                  const Policy& policy) {
    int dim = d.chart.dim();
    GeneratorClass out{};
    out.cond1 = is_zero(e_dot(d, pair.f), dim, policy);
    out.cond2 =
        is_zero(e_dot(d, pair.h) + le_omega_sharp_dot(d, pair.f), dim, policy);
    DiffForm sigma = symmetry_one_form(d, pair);
    out.cond3 = true;
    for (int i = 0; i < dim && out.cond3; ++i) {
        MultiVector beta_sharp = sharp(d, basis_covector(d.chart, i));
        out.cond3 = is_zero(pairing(sigma, {beta_sharp}), dim, policy);
    }
    return out;
}

bool is_symmetry(SymmetryTarget which, const ACPJStructure& d, const PairFH& pair,
                 const Policy& policy) {
    int dim = d.chart.dim();
    switch (which) {
        case SymmetryTarget::Omega1:
            return tensor_is_zero(symmetry_one_form(d, pair), policy);
        case SymmetryTarget::Omega2:
            return classify_generator(d, pair, policy).cond1;
        case SymmetryTarget::Reeb: {
            Expr ef = e_dot(d, pair.f);
            DiffForm inner = d_of(d, ef) - ef * d.lie_E_omega;
            bool first = tensor_is_zero(sharp(d, inner), policy);
            bool second = is_zero(e_dot(d, pair.h) + le_omega_sharp_dot(d, pair.f),
                                  dim, policy);
            return first && second;
        }
        case SymmetryTarget::Lambda: {
            GeneratorClass g = classify_generator(d, pair, policy);
            return g.lgen_Lambda();
        }
        case SymmetryTarget::Acc:
        case SymmetryTarget::Acpj: {
            GeneratorClass g = classify_generator(d, pair, policy);
            return g.lgen_acc();
        }
    }
    throw Error("unreachable symmetry target");
}

bool lift_symmetry_direct(SymmetryTarget which, const ACPJStructure& d,
                          const PairFH& pair, const Policy& policy) {
    MultiVector x = pre_hamiltonian_lift(d, pair);
    switch (which) {
        case SymmetryTarget::Omega1:
            return tensor_is_zero(lie_derivative_form(x, d.omega), policy);
        case SymmetryTarget::Omega2:
            return tensor_is_zero(lie_derivative_form(x, d.Omega), policy);
        case SymmetryTarget::Reeb:
            return tensor_is_zero(lie_bracket(x, d.E), policy);
        case SymmetryTarget::Lambda:
            return tensor_is_zero(schouten(x, d.Lambda), policy);
        case SymmetryTarget::Acc:
            return tensor_is_zero(lie_derivative_form(x, d.omega), policy) &&
                   tensor_is_zero(lie_derivative_form(x, d.Omega), policy);
        case SymmetryTarget::Acpj:
            return tensor_is_zero(lie_bracket(x, d.E), policy) &&
                   tensor_is_zero(schouten(x, d.Lambda), policy);
    }
    throw Error("unreachable symmetry target");
}

MultiVector pair_lift_commutator(const ACPJStructure& d, const PairFH& p1,
                                 const PairFH& p2) {
    const Expr& f1 = p1.f;
    const Expr& h1 = p1.h;
    const Expr& f2 = p2.f;
    const Expr& h2 = p2.h;

    Expr ef1 = e_dot(d, f1);
    Expr ef2 = e_dot(d, f2);
    MultiVector sharp1 = df_sharp(d, f1);
    MultiVector sharp2 = df_sharp(d, f2);

    DiffForm alpha = d_of(d, poisson_bracket(d, f1, f2)) +
                     ef1 * (lie_derivative_form(sharp2, d.omega) + h2 * d.lie_E_omega) -
                     ef2 * (lie_derivative_form(sharp1, d.omega) + h1 * d.lie_E_omega) -
                     h2 * d_of(d, ef1) + h1 * d_of(d, ef2);

    Expr scalar = poisson_bracket(d, f1, h2) - poisson_bracket(d, f2, h1) -
                  d_omega_of(d, sharp1, sharp2) +
                  h1 * (e_dot(d, h2) + le_omega_sharp_dot(d, f2)) -
                  h2 * (e_dot(d, h1) + le_omega_sharp_dot(d, f1));

    return sharp(d, alpha) + scalar * d.E;
}

PairFH bracket_omega(const ACPJStructure& d, const PairFH& p1, const PairFH& p2) {
    int dim = d.chart.dim();
    Expr f = poisson_bracket(d, p1.f, p2.f) - p2.h * e_dot(d, p1.f) +
             p1.h * e_dot(d, p2.f);
    Expr h = poisson_bracket(d, p1.f, p2.h) - poisson_bracket(d, p2.f, p1.h) -
             d_omega_of(d, df_sharp(d, p1.f), df_sharp(d, p2.f));
    return PairFH{normalize(f, dim), normalize(h, dim)};
}

PairFH bracket_Omega(const ACPJStructure& d, const PairFH& p1, const PairFH& p2,
                     const Policy& policy) {
    int dim = d.chart.dim();
    if (!is_conserved(d, p1.f, policy))
        throw MembershipError("cond1 violated for pair 1: f is not conserved");
    if (!is_conserved(d, p2.f, policy))
        throw MembershipError("cond1 violated for pair 2: f is not conserved");
    Expr f = poisson_bracket(d, p1.f, p2.f);
    Expr h = poisson_bracket(d, p1.f, p2.h) - poisson_bracket(d, p2.f, p1.h) -
             d_omega_of(d, df_sharp(d, p1.f), df_sharp(d, p2.f)) +
             p1.h * (e_dot(d, p2.h) + le_omega_sharp_dot(d, p2.f)) -
             p2.h * (e_dot(d, p1.h) + le_omega_sharp_dot(d, p1.f));
    return PairFH{normalize(f, dim), normalize(h, dim)};
}

PairFH bracket_acc(const ACPJStructure& d, const PairFH& p1, const PairFH& p2,
                   const Policy& policy) {
    int dim = d.chart.dim();
    auto check = [&](const PairFH& p, const char* label) {
        GeneratorClass g = classify_generator(d, p, policy);
        if (!g.cond1)
            throw MembershipError(std::string("cond1 violated for ") + label);
        if (!g.cond2)
            throw MembershipError(std::string("cond2 violated for ") + label);
        if (!g.cond3)
            throw MembershipError(std::string("cond3 violated for ") + label);
    };
    check(p1, "pair 1");
    check(p2, "pair 2");

    Expr f = poisson_bracket(d, p1.f, p2.f);
    Expr dw = d_omega_of(d, df_sharp(d, p1.f), df_sharp(d, p2.f));

    Expr h1 = poisson_bracket(d, p1.f, p2.h) - poisson_bracket(d, p2.f, p1.h) - dw;
    Expr h2 = dw + p2.h * le_omega_sharp_dot(d, p1.f) -
              p1.h * le_omega_sharp_dot(d, p2.f);
    Expr h3 = dw + p1.h * e_dot(d, p2.h) - p2.h * e_dot(d, p1.h);

    if (!is_zero(h1 - h2, dim, policy) || !is_zero(h1 - h3, dim, policy))
        throw InternalConsistencyError(
            "the three equivalent bracket expressions disagree");

    return PairFH{normalize(f, dim), normalize(h1, dim)};
}

PairFH pair_product(const PairFH& p1, const PairFH& p2) {
    return PairFH{p1.f * p2.f, p1.f * p2.h + p2.f * p1.h};
}

bool lift_of_product_check(const ACPJStructure& d, const PairFH& p1, const PairFH& p2,
                           const Policy& policy) {
    MultiVector lhs = pre_hamiltonian_lift(d, pair_product(p1, p2));
    MultiVector rhs = p1.f * pre_hamiltonian_lift(d, p2) +
                      p2.f * pre_hamiltonian_lift(d, p1);
    return tensor_equal(lhs, rhs, policy);
}

PairFH lie_derive_pair(const MultiVector& x, const PairFH& pair) {
    return PairFH{directional_derivative(x, pair.f),
                  directional_derivative(x, pair.h)};
}

bool pair_equal(const PairFH& a, const PairFH& b, int nvars, const Policy& policy) {
    return is_zero(a.f - b.f, nvars, policy) && is_zero(a.h - b.h, nvars, policy);
}

void require_pair_domain(const ACCStructure& s, const PairFH& pair) {
    try {
        if (pair.f.is_rational_function() && pair.h.is_rational_function()) {
            evaluate_exact(pair.f, s.regularity_witness());
            evaluate_exact(pair.h, s.regularity_witness());
        }
    } catch (const PoleError&) {
        throw DomainMismatchError(
            "pair has a pole at the structure's regularity witness");
    }
}

std::string pair_to_string(const PairFH& pair, const Chart& chart) {
    return "(" + print_expr(pair.f, chart) + "; " + print_expr(pair.h, chart) + ")";
}

}  // namespace cojac
