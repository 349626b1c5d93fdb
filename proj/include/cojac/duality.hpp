#ifndef COJAC_DUALITY_HPP
#define COJAC_DUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cojac/checks.hpp"
#include "cojac/tensor.hpp"

namespace cojac {

enum class StructureClass { Contact, Cosymplectic, Mixed };

std::string to_string(StructureClass c);

/// A validated almost-cosymplectic-contact pair: d(Omega) = 0 and
/// omega ^ Omega^n not identically zero, witnessed at a sample point.
class ACCStructure {
  public:
    /// Validates and builds; errors: NotClosedError, DegenerateStructureError,
    /// WitnessSearchFailedError.
    static ACCStructure validate(const Chart& chart, const DiffForm& omega,
                                 const DiffForm& Omega, const Policy& policy);

    const Chart& chart() const { return chart_; }
    const DiffForm& omega() const { return omega_; }
    const DiffForm& Omega() const { return Omega_; }
    const Point& regularity_witness() const { return witness_; }

    /// omega ^ Omega^n (top-degree form).
    DiffForm volume_candidate() const;

  private:
    ACCStructure(Chart chart, DiffForm omega, DiffForm Omega, Point witness)
        : chart_(std::move(chart)), omega_(std::move(omega)),
          Omega_(std::move(Omega)), witness_(std::move(witness)) {}

    Chart chart_;
    DiffForm omega_;
    DiffForm Omega_;
    Point witness_;
};

/// The dual almost-coPoisson-Jacobi pair (E, Lambda) together with the source
/// pair and cached derived forms.
struct ACPJStructure {
    Chart chart;
    DiffForm omega;          // carried from the source structure
    DiffForm Omega;
    MultiVector E;
    MultiVector Lambda;
    DiffForm d_omega;        // cached d(omega)
    DiffForm lie_E_omega;    // cached L_E omega
    Point witness;           // regularity witness of the source structure
};

StructureClass classify(const ACCStructure& s, const Policy& policy);

/// Unique dual: E solves { i_E Omega = 0, omega(E) = 1 }; Lambda is assembled
/// columnwise from Lambda#(dx^i) solving { Omega_flat(V) = dx^i - dx^i(E) omega,
/// omega(V) = 0 }, all by fraction-free symbolic elimination. Requires
/// rational-function components (PolicyError otherwise).
ACPJStructure compute_dual(const ACCStructure& s);

/// Pointwise dual values at an exact point: (E components, Lambda components as
/// the strictly-increasing-pair map). Independent of the symbolic path; used as
/// a numeric oracle. nullopt when the linear systems are singular at the point.
struct PointwiseDual {
    std::vector<Rational> e;
    std::map<IndexTuple, Rational> lambda;
};
std::optional<PointwiseDual> dual_at_point(const ACCStructure& s, const Point& pt);

MultiVector sharp(const ACPJStructure& d, const DiffForm& alpha);
DiffForm flat(const ACCStructure& s, const MultiVector& x);

enum class Projection { P1, P2, Q1, Q2 };
/// P1/P2 act on vector fields; Q1/Q2 on 1-forms; kind mismatch throws.
MultiVector project(Projection which, const ACPJStructure& d, const MultiVector& x);
DiffForm project(Projection which, const ACPJStructure& d, const DiffForm& beta);

/// Per-identity report: the defining contractions, the splitting identities,
/// both displayed bracket identities, and the Jacobi-pair / coPoisson
/// specializations. Failures are entries, not errors. All tensors are read
/// from d (equal to the source pair when d = compute_dual(s)), so injected
/// faults are visible to the checks.
std::vector<CheckResult> verify_dual_identities(const ACPJStructure& d,
                                                const Policy& policy);

/// Attempted deformation (omega, Omega + G) for closed G. NotClosedError when
/// dG != 0; a degenerate or witness-less result is reported, not thrown.
struct DeformResult {
    std::optional<ACCStructure> structure;
    std::string failure;  // empty on success
};
DeformResult deform(const ACCStructure& s, const DiffForm& g, const Policy& policy);

/// Debug helpers for fault-injection: bump one component by delta, keeping the
/// rest of the dual fixed (caches recomputed where they depend on the change).
ACPJStructure tamper_lambda(const ACPJStructure& d, const IndexTuple& idx,
                            const Rational& delta);
ACPJStructure tamper_omega(const ACPJStructure& d, int coord, const Rational& delta);

}  // namespace cojac

#endif
