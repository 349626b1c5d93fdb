#ifndef COJAC_TENSOR_HPP
#define COJAC_TENSOR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cojac/chart.hpp"
#include "cojac/error.hpp"
#include "cojac/expr.hpp"
#include "cojac/policy.hpp"

namespace cojac {

/// Strictly increasing multi-index into the chart coordinates.
using IndexTuple = std::vector<int>;

/// Merge of two disjoint increasing tuples with the permutation sign of the
/// concatenation; nullopt when an index repeats.
std::optional<std::pair<IndexTuple, int>> merge_indices(const IndexTuple& a,
                                                        const IndexTuple& b);

namespace detail {

/// Sparse antisymmetric tensor with Expr components on strictly increasing
/// multi-indices (missing key = zero). Determinant convention: the component at
/// (i1 < ... < ik) is the full evaluation on the corresponding basis elements,
/// with no factorial prefactor. Components are kept in normal form.
class Alternating {
  public:
    Alternating() : degree_(0) {}
    Alternating(Chart chart, int degree);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_syntactic_zero() const { return components_.empty(); }
    const std::map<IndexTuple, Expr>& components() const { return components_; }

    Expr component(const IndexTuple& idx) const;  // zero Expr when absent
    void set_component(const IndexTuple& idx, const Expr& e);
    void add_component(const IndexTuple& idx, const Expr& e);

  protected:
    Chart chart_;
    int degree_;
    std::map<IndexTuple, Expr> components_;
};

}  // namespace detail

/// Differential k-form with Expr components.
class DiffForm : public detail::Alternating {
  public:
    DiffForm() = default;
    DiffForm(Chart chart, int degree) : Alternating(std::move(chart), degree) {}
};

/// k-vector field with Expr components.
class MultiVector : public detail::Alternating {
  public:
    MultiVector() = default;
    MultiVector(Chart chart, int degree) : Alternating(std::move(chart), degree) {}
};

DiffForm basis_covector(const Chart& chart, int i);   // dx^i
MultiVector basis_vector(const Chart& chart, int i);  // d/dx^i

DiffForm operator+(const DiffForm& a, const DiffForm& b);
DiffForm operator-(const DiffForm& a, const DiffForm& b);
DiffForm operator-(const DiffForm& a);
DiffForm operator*(const Expr& s, const DiffForm& a);
MultiVector operator+(const MultiVector& a, const MultiVector& b);
MultiVector operator-(const MultiVector& a, const MultiVector& b);
MultiVector operator-(const MultiVector& a);
MultiVector operator*(const Expr& s, const MultiVector& a);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Wedge power a^k (k >= 0; k = 0 gives the constant-1 scalar).
DiffForm wedge_pow(const DiffForm& a, int k);

/// d in coordinates; DegreeError on top-degree input.
DiffForm exterior_derivative(const DiffForm& a);

/// First-slot contraction (i_X a)(Y1..Y_{k-1}) = a(X, Y1, ...). DegreeError on
/// degree-0 input.
DiffForm interior_form(const MultiVector& x, const DiffForm& a);

/// Mirror contraction (i_alpha P)(b1..) = P(alpha, b1..).
MultiVector interior_vector(const DiffForm& alpha, const MultiVector& p);

/// Full evaluation a(X1,...,Xk) for degree-1 vector arguments.
Expr pairing(const DiffForm& a, const std::vector<MultiVector>& vectors);

/// Full evaluation P(a1,...,ak) for degree-1 form arguments.
Expr pairing_mv(const MultiVector& p, const std::vector<DiffForm>& forms);

/// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i, degree-1 fields.
MultiVector lie_bracket(const MultiVector& x, const MultiVector& y);

/// Directional derivative X.f.
Expr directional_derivative(const MultiVector& x, const Expr& f);

/// Cartan formula L_X = i_X d + d i_X (degree 0: X.f).
DiffForm lie_derivative_form(const MultiVector& x, const DiffForm& a);

/// Schouten-Nijenhuis bracket, odd-coordinate (antibracket) form
///   [P,Q] = (-1)^{(p-1)(q-1)} sum_k [ (d_R P/dtheta_k)(dQ/dx^k)
///                                     - (dP/dx^k)(d_L Q/dtheta_k) ]
/// with right/left theta-derivatives as marked; the global factor selects the
/// convention in which the displayed duality identities hold.
/// Restricts to the Lie bracket on vector fields and
/// to L_X on [X,Q]; graded antisymmetry [P,Q] = -(-1)^{(p-1)(q-1)}[Q,P]; and the
/// Leibniz rule [P, Q^R] = (-1)^{(p-1)r}[P,Q]^R + Q^[P,R]. For a scalar f,
/// [f,Q] = (-1)^q i_{df} Q. The sign calibration suite pins this convention.
MultiVector schouten(const MultiVector& p, const MultiVector& q);

/// L_X Q for a vector field X (the degree-(1,q) Schouten bracket).
MultiVector lie_derivative_multivector(const MultiVector& x, const MultiVector& q);

/// The bivector W with W(alpha, beta) = a(lambda#(alpha), lambda#(beta)).
MultiVector lambda_sharp_transport(const MultiVector& lambda, const DiffForm& a);

/// df as a 1-form.
DiffForm differential(const Chart& chart, const Expr& f);

/// All components zero under the policy.
bool tensor_is_zero(const DiffForm& a, const Policy& policy);
bool tensor_is_zero(const MultiVector& a, const Policy& policy);
bool tensor_equal(const DiffForm& a, const DiffForm& b, const Policy& policy);
bool tensor_equal(const MultiVector& a, const MultiVector& b, const Policy& policy);

/// Evaluation of every component at an exact point (rational components only).
std::map<IndexTuple, Rational> evaluate_components(const detail::Alternating& t,
                                                   const Point& pt);

/// "q^p: <expr>" lines in index order; "0" for the zero tensor.
std::string tensor_to_string(const detail::Alternating& t, const std::string& sep = ", ");

}  // namespace cojac

#endif
