#ifndef COJAC_ALGEBROID_HPP
#define COJAC_ALGEBROID_HPP

#include "cojac/symalg.hpp"

namespace cojac {

/// Section (X, f) of TM + R.
struct AlgebroidSection {
    MultiVector x;
    Expr fbreve;
};

/// Closed 2-form twisting the section bracket.
class ClosedTwoForm {
  public:
    /// Validates dF = 0 under the policy; NotClosedError otherwise.
    static ClosedTwoForm validate(const DiffForm& f, const Policy& policy);

    /// F = Omega + d(omega) of a validated structure (closed by construction).
    static ClosedTwoForm from_structure(const ACCStructure& s);
    static ClosedTwoForm from_structure(const ACPJStructure& d);

    const DiffForm& form() const { return f_; }

  private:
    explicit ClosedTwoForm(DiffForm f) : f_(std::move(f)) {}
    DiffForm f_;
};

/// [(X1,f1); (X2,f2)]_F = ([X1,X2] ; X1.f2 - X2.f1 + F(X1,X2))
AlgebroidSection algebroid_bracket(const ClosedTwoForm& f, const AlgebroidSection& s1,
                                   const AlgebroidSection& s2);

/// [(X1,f1); h (X2,f2)]_F = h [(X1,f1);(X2,f2)]_F + (X1.h) (X2,f2), by normal forms.
bool check_leibniz(const ClosedTwoForm& f, const AlgebroidSection& s1,
                   const AlgebroidSection& s2, const Expr& h, const Policy& policy);

/// s: (f, h) -> (X_(f,h), f - h)
AlgebroidSection morphism_s(const ACPJStructure& d, const PairFH& pair);

/// r: (X, f) -> (omega(X) + f, omega(X))
PairFH morphism_r(const ACPJStructure& d, const AlgebroidSection& sec);

/// Reconstruction X = d(omega(X) + f)# + omega(X) E, valid for sections whose X
/// is an acc-symmetry with E.f = -E.(omega(X)).
bool reconstruction_check(const ACPJStructure& d, const AlgebroidSection& sec,
                          const Policy& policy);

AlgebroidSection section_scale(const Expr& h, const AlgebroidSection& sec);
bool section_equal(const AlgebroidSection& a, const AlgebroidSection& b,
                   const Policy& policy);

std::string section_to_string(const AlgebroidSection& sec, const Chart& chart);

}  // namespace cojac

#endif
