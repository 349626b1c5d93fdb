#include "cojac/duality.hpp"

#include <cmath>

#include "cojac/linsolve.hpp"

namespace cojac {

std::string to_string(StructureClass c) {
    switch (c) {
        case StructureClass::Contact: return "contact";
        case StructureClass::Cosymplectic: return "cosymplectic";
        case StructureClass::Mixed: return "mixed";
    }
    return "?";
}

DiffForm ACCStructure::volume_candidate() const {
    return wedge(omega_, wedge_pow(Omega_, chart_.n()));
}

namespace {

std::vector<Expr> all_components(const DiffForm& a, const DiffForm& b) {
    std::vector<Expr> out;
    for (const auto& [idx, e] : a.components()) out.push_back(e);
    for (const auto& [idx, e] : b.components()) out.push_back(e);
    return out;
}

}  // namespace

ACCStructure ACCStructure::validate(const Chart& chart, const DiffForm& omega,
                                    const DiffForm& Omega, const Policy& policy) {
    if (omega.chart() != chart || Omega.chart() != chart)
        throw ChartMismatchError("structure tensors live on a different chart");
    if (omega.degree() != 1) throw DegreeError("omega must be a 1-form");
    if (Omega.degree() != 2) throw DegreeError("Omega must be a 2-form");

    if (!tensor_is_zero(exterior_derivative(Omega), policy))
        throw NotClosedError("Omega not closed");

    DiffForm top = wedge(omega, wedge_pow(Omega, chart.n()));
    IndexTuple full;
    for (int i = 0; i < chart.dim(); ++i) full.push_back(i);
    Expr t = top.component(full);
    if (is_zero(t, chart.dim(), policy))
        throw DegenerateStructureError("omega ^ Omega^n vanishes identically");

    // deterministic seeded witness search
    Sampler sampler(policy.seed);
    std::vector<Expr> exprs = all_components(omega, Omega);
    exprs.push_back(t);
    bool rational = true;
    for (const auto& e : exprs) rational = rational && e.is_rational_function();
    for (int k = 0; k < 1000; ++k) {
        Point p = sampler.point(chart.dim());
        try {
            if (rational) {
                if (!evaluate_exact(t, p).is_zero())
                    return ACCStructure(chart, omega, Omega, p);
            } else {
                double v = evaluate_numeric(t, to_numeric(p));
                bool finite_all = std::isfinite(v);
                for (const auto& e : exprs)
                    finite_all =
                        finite_all && std::isfinite(evaluate_numeric(e, to_numeric(p)));
                if (finite_all && std::fabs(v) > policy.tol)
                    return ACCStructure(chart, omega, Omega, p);
            }
        } catch (const PoleError&) {
            continue;
        }
    }
    throw WitnessSearchFailedError("witness search failed: no regular sample point");
}

StructureClass classify(const ACCStructure& s, const Policy& policy) {
    DiffForm d_omega = exterior_derivative(s.omega());
    if (tensor_is_zero(d_omega, policy)) return StructureClass::Cosymplectic;
    if (tensor_equal(s.Omega(), d_omega, policy)) return StructureClass::Contact;
    return StructureClass::Mixed;
}

namespace {

// Omega(d_i, d_j) as an Expr matrix
std::vector<std::vector<Expr>> omega2_matrix(const DiffForm& Omega) {
    int dim = Omega.chart().dim();
    std::vector<std::vector<Expr>> m(
        static_cast<std::size_t>(dim),
        std::vector<Expr>(static_cast<std::size_t>(dim), Expr::constant(Rational(0))));
    for (const auto& [idx, e] : Omega.components()) {
        auto i = static_cast<std::size_t>(idx[0]);
        auto j = static_cast<std::size_t>(idx[1]);
        m[i][j] = e;
        m[j][i] = Expr::neg(e);
    }
    return m;
}

// rows 0..dim-1: sum_i V^i Omega(d_i, d_j) = rhs_j ; row dim: omega(V) = rhs_dim
std::vector<std::vector<Expr>> dual_system_matrix(const ACCStructure& s) {
    int dim = s.chart().dim();
    auto m = omega2_matrix(s.Omega());
    std::vector<std::vector<Expr>> a(
        static_cast<std::size_t>(dim) + 1,
        std::vector<Expr>(static_cast<std::size_t>(dim), Expr::constant(Rational(0))));
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < dim; ++i)
        a[static_cast<std::size_t>(dim)][static_cast<std::size_t>(i)] =
            s.omega().component({i});
    return a;
}

}  // namespace

ACPJStructure compute_dual(const ACCStructure& s) {
    const Chart& chart = s.chart();
    int dim = chart.dim();
    for (const auto& [idx, e] : s.omega().components())
        if (!e.is_rational_function())
            throw PolicyError("symbolic dual needs rational-function components");
    for (const auto& [idx, e] : s.Omega().components())
        if (!e.is_rational_function())
            throw PolicyError("symbolic dual needs rational-function components");

    auto a = dual_system_matrix(s);

    // E: i_E Omega = 0, omega(E) = 1
    std::vector<Expr> rhs(static_cast<std::size_t>(dim) + 1, Expr::constant(Rational(0)));
    rhs[static_cast<std::size_t>(dim)] = Expr::constant(Rational(1));
    std::vector<Expr> e_comp = linear_solve_symbolic(a, rhs, dim);

    MultiVector e_field(chart, 1);
    for (int i = 0; i < dim; ++i) e_comp[static_cast<std::size_t>(i)] =
        normalize(e_comp[static_cast<std::size_t>(i)], dim);
    for (int i = 0; i < dim; ++i) e_field.set_component({i}, e_comp[static_cast<std::size_t>(i)]);

    // Lambda columnwise: Lambda#(dx^k) solves Omega_flat(V) = dx^k - dx^k(E) omega,
    // omega(V) = 0
    std::vector<std::vector<Expr>> columns;
    columns.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        std::vector<Expr> b(static_cast<std::size_t>(dim) + 1, Expr::constant(Rational(0)));
        for (int j = 0; j < dim; ++j) {
            Expr delta = Expr::constant(Rational(k == j ? 1 : 0));
            b[static_cast<std::size_t>(j)] =
                delta - e_comp[static_cast<std::size_t>(k)] * s.omega().component({j});
        }
        columns.push_back(linear_solve_symbolic(a, b, dim));
    }

    MultiVector lambda(chart, 2);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            lambda.set_component({i, j}, columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    ACPJStructure d{chart, s.omega(), s.Omega(), e_field, lambda,
                    exterior_derivative(s.omega()), DiffForm(chart, 1),
                    s.regularity_witness()};
    d.lie_E_omega = lie_derivative_form(d.E, d.omega);
    return d;
}

std::optional<PointwiseDual> dual_at_point(const ACCStructure& s, const Point& pt) {
    int dim = s.chart().dim();
    auto a_sym = dual_system_matrix(s);
    std::vector<std::vector<Rational>> a;
    try {
        for (const auto& row : a_sym) {
            std::vector<Rational> r;
            r.reserve(row.size());
            for (const auto& e : row) r.push_back(evaluate_exact(e, pt));
            a.push_back(std::move(r));
        }
    } catch (const PoleError&) {
        return std::nullopt;
    }

    std::vector<Rational> rhs(static_cast<std::size_t>(dim) + 1, Rational(0));
    rhs[static_cast<std::size_t>(dim)] = Rational(1);
    auto e = linear_solve_rational(a, rhs);
    if (!e) return std::nullopt;

    std::vector<Rational> omega_at(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& [idx, ex] : s.omega().components())
        omega_at[static_cast<std::size_t>(idx[0])] = evaluate_exact(ex, pt);

    std::vector<std::vector<Rational>> columns;
    for (int k = 0; k < dim; ++k) {
        std::vector<Rational> b(static_cast<std::size_t>(dim) + 1, Rational(0));
        for (int j = 0; j < dim; ++j)
            b[static_cast<std::size_t>(j)] =
                Rational(k == j ? 1 : 0) -
                (*e)[static_cast<std::size_t>(k)] * omega_at[static_cast<std::size_t>(j)];
        auto v = linear_solve_rational(a, b);
        if (!v) return std::nullopt;
        columns.push_back(*v);
    }

    PointwiseDual out;
    out.e = *e;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            out.lambda[{i, j}] =
                columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

MultiVector sharp(const ACPJStructure& d, const DiffForm& alpha) {
    return interior_vector(alpha, d.Lambda);
}

DiffForm flat(const ACCStructure& s, const MultiVector& x) {
    return interior_form(x, s.Omega());
}

MultiVector project(Projection which, const ACPJStructure& d, const MultiVector& x) {
    if (which != Projection::P1 && which != Projection::P2)
        throw Error("projection kind mismatch: vector fields take p1/p2");
    if (x.degree() != 1) throw DegreeError("projection expects a vector field");
    Expr c = pairing(d.omega, {x});
    MultiVector p2 = c * d.E;
    if (which == Projection::P2) return p2;
    return x - p2;
}

DiffForm project(Projection which, const ACPJStructure& d, const DiffForm& beta) {
    if (which != Projection::Q1 && which != Projection::Q2)
        throw Error("projection kind mismatch: 1-forms take q1/q2");
    if (beta.degree() != 1) throw DegreeError("projection expects a 1-form");
    Expr c = pairing(beta, {d.E});
    DiffForm q2 = c * d.omega;
    if (which == Projection::Q2) return q2;
    return beta - q2;
}

std::vector<CheckResult> verify_dual_identities(const ACPJStructure& d,
                                                const Policy& policy) {
    const Chart& chart = d.chart;
    int dim = chart.dim();
    std::vector<CheckResult> out;

    Expr pair_eo = pairing(d.omega, {d.E});
    out.push_back(CheckResult::of(
        "dual.i_E_omega_is_1",
        is_zero(pair_eo - Expr::constant(Rational(1)), dim, policy),
        "omega(E) = " + print_expr(pair_eo, chart)));

    DiffForm ieo = interior_form(d.E, d.Omega);
    out.push_back(CheckResult::of("dual.i_E_Omega_is_0", tensor_is_zero(ieo, policy)));

    MultiVector iol = interior_vector(d.omega, d.Lambda);
    out.push_back(CheckResult::of("dual.i_omega_Lambda_is_0",
                                  tensor_is_zero(iol, policy)));

    bool p1_ok = true;
    bool q1_ok = true;
    for (int i = 0; i < dim; ++i) {
        MultiVector v = basis_vector(chart, i);
        MultiVector lhs = interior_vector(interior_form(v, d.Omega), d.Lambda);
        if (!tensor_equal(lhs, project(Projection::P1, d, v), policy)) p1_ok = false;
        DiffForm cov = basis_covector(chart, i);
        DiffForm lhs2 = interior_form(interior_vector(cov, d.Lambda), d.Omega);
        if (!tensor_equal(lhs2, project(Projection::Q1, d, cov), policy)) q1_ok = false;
    }
    out.push_back(CheckResult::of("dual.sharp_after_flat_is_p1", p1_ok));
    out.push_back(CheckResult::of("dual.flat_after_sharp_is_q1", q1_ok));

    // [E, Lambda] = -E ^ Lambda#(L_E omega)
    MultiVector bracket_el = schouten(d.E, d.Lambda);
    MultiVector rhs_el = -wedge(d.E, interior_vector(d.lie_E_omega, d.Lambda));
    bool el_ok = tensor_equal(bracket_el, rhs_el, policy);
    out.push_back(CheckResult::of("dual.bracket_E_Lambda", el_ok));

    // [Lambda, Lambda] = 2 E ^ (Lambda# x Lambda#)(d omega)
    MultiVector bracket_ll = schouten(d.Lambda, d.Lambda);
    MultiVector transported = lambda_sharp_transport(d.Lambda, d.d_omega);
    MultiVector rhs_ll = Expr::constant(Rational(2)) * wedge(d.E, transported);
    bool ll_ok = tensor_equal(bracket_ll, rhs_ll, policy);
    out.push_back(CheckResult::of("dual.bracket_Lambda_Lambda", ll_ok));

    // Jacobi pair: [E, Lambda] = 0 and [Lambda, Lambda] = -2 E ^ Lambda
    bool jp = tensor_is_zero(bracket_el, policy) &&
              tensor_equal(bracket_ll,
                           Expr::constant(Rational(-2)) * wedge(d.E, d.Lambda), policy);
    out.push_back(CheckResult::of("dual.jacobi_pair", jp));

    // coPoisson: [E, Lambda] = 0 and [Lambda, Lambda] = 0
    bool cp = tensor_is_zero(bracket_el, policy) && tensor_is_zero(bracket_ll, policy);
    out.push_back(CheckResult::of("dual.copoisson", cp));

    return out;
}

DeformResult deform(const ACCStructure& s, const DiffForm& g, const Policy& policy) {
    if (g.degree() != 2) throw DegreeError("deformation must be a 2-form");
    if (!tensor_is_zero(exterior_derivative(g), policy))
        throw NotClosedError("deformation 2-form not closed");
    DiffForm new_Omega = s.Omega() + g;
    try {
        return DeformResult{
            ACCStructure::validate(s.chart(), s.omega(), new_Omega, policy), ""};
    } catch (const DegenerateStructureError& e) {
        return DeformResult{std::nullopt, e.what()};
    } catch (const WitnessSearchFailedError& e) {
        return DeformResult{std::nullopt, e.what()};
    }
}

ACPJStructure tamper_lambda(const ACPJStructure& d, const IndexTuple& idx,
                            const Rational& delta) {
    ACPJStructure out = d;
    out.Lambda.set_component(idx,
                             out.Lambda.component(idx) + Expr::constant(delta));
    return out;
}

ACPJStructure tamper_omega(const ACPJStructure& d, int coord, const Rational& delta) {
    ACPJStructure out = d;
    out.omega.set_component({coord},
                            out.omega.component({coord}) + Expr::constant(delta));
    out.d_omega = exterior_derivative(out.omega);
    out.lie_E_omega = lie_derivative_form(out.E, out.omega);
    return out;
}

}  // namespace cojac
