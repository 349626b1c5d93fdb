#include "cojac/algebroid.hpp"

namespace cojac {

ClosedTwoForm ClosedTwoForm::validate(const DiffForm& f, const Policy& policy) {
    if (f.degree() != 2) throw DegreeError("twisting form must be a 2-form");
    if (!tensor_is_zero(exterior_derivative(f), policy))
        throw NotClosedError("twisting 2-form not closed");
    return ClosedTwoForm(f);
}

ClosedTwoForm ClosedTwoForm::from_structure(const ACCStructure& s) {
    return ClosedTwoForm(s.Omega() + exterior_derivative(s.omega()));
}

ClosedTwoForm ClosedTwoForm::from_structure(const ACPJStructure& d) {
    return ClosedTwoForm(d.Omega + d.d_omega);
}

AlgebroidSection algebroid_bracket(const ClosedTwoForm& f, const AlgebroidSection& s1,
                                   const AlgebroidSection& s2) {
    if (s1.x.chart() != s2.x.chart()) throw ChartMismatchError("charts differ");
    int dim = s1.x.chart().dim();
    Expr scalar = directional_derivative(s1.x, s2.fbreve) -
                  directional_derivative(s2.x, s1.fbreve) +
                  pairing(f.form(), {s1.x, s2.x});
    return AlgebroidSection{lie_bracket(s1.x, s2.x), normalize(scalar, dim)};
}

bool check_leibniz(const ClosedTwoForm& f, const AlgebroidSection& s1,
                   const AlgebroidSection& s2, const Expr& h, const Policy& policy) {
    AlgebroidSection lhs = algebroid_bracket(f, s1, section_scale(h, s2));
    AlgebroidSection base = algebroid_bracket(f, s1, s2);
    Expr xh = directional_derivative(s1.x, h);
    AlgebroidSection rhs{section_scale(h, base).x + section_scale(xh, s2).x,
                         h * base.fbreve + xh * s2.fbreve};
    return section_equal(lhs, rhs, policy);
}

AlgebroidSection morphism_s(const ACPJStructure& d, const PairFH& pair) {
    return AlgebroidSection{pre_hamiltonian_lift(d, pair),
                            normalize(pair.f - pair.h, d.chart.dim())};
}

PairFH morphism_r(const ACPJStructure& d, const AlgebroidSection& sec) {
    int dim = d.chart.dim();
    Expr omega_x = pairing(d.omega, {sec.x});
    return PairFH{normalize(omega_x + sec.fbreve, dim), normalize(omega_x, dim)};
}

bool reconstruction_check(const ACPJStructure& d, const AlgebroidSection& sec,
                          const Policy& policy) {
    Expr omega_x = pairing(d.omega, {sec.x});
    MultiVector rebuilt =
        sharp(d, differential(d.chart, omega_x + sec.fbreve)) + omega_x * d.E;
    return tensor_equal(rebuilt, sec.x, policy);
}

AlgebroidSection section_scale(const Expr& h, const AlgebroidSection& sec) {
    return AlgebroidSection{h * sec.x, h * sec.fbreve};
}

bool section_equal(const AlgebroidSection& a, const AlgebroidSection& b,
                   const Policy& policy) {
    return tensor_equal(a.x, b.x, policy) &&
           is_zero(a.fbreve - b.fbreve, a.x.chart().dim(), policy);
}

std::string section_to_string(const AlgebroidSection& sec, const Chart& chart) {
    return "(X: [" + tensor_to_string(sec.x) + "]; f: " +
           print_expr(sec.fbreve, chart) + ")";
}

}  // namespace cojac
