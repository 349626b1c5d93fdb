#include "cojac/tensor.hpp"

#include <algorithm>

namespace cojac {

std::optional<std::pair<IndexTuple, int>> merge_indices(const IndexTuple& a,
                                                        const IndexTuple& b) {
    // inversions between two sorted tuples = pairs (i in a, j in b) with j < i
    int inversions = 0;
    for (int i : a) {
        for (int j : b) {
            if (i == j) return std::nullopt;
            if (j < i) ++inversions;
        }
    }
    IndexTuple merged;
    merged.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin());
    return std::make_pair(std::move(merged), inversions % 2 == 0 ? 1 : -1);
}

namespace detail {

Alternating::Alternating(Chart chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
    if (degree_ < 0 || degree_ > chart_.dim())
        throw DegreeError("tensor degree " + std::to_string(degree_) +
                          " out of range for dimension " + std::to_string(chart_.dim()));
}

Expr Alternating::component(const IndexTuple& idx) const {
    auto it = components_.find(idx);
    if (it == components_.end()) return Expr::constant(Rational(0));
    return it->second;
}

void Alternating::set_component(const IndexTuple& idx, const Expr& e) {
    if (static_cast<int>(idx.size()) != degree_)
        throw DegreeError("component multi-index length does not match degree");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= chart_.dim())
            throw Error("multi-index out of chart range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw Error("multi-index must be strictly increasing");
    }
    if (e.max_coord_index() >= chart_.dim())
        throw Error("component expression uses a coordinate outside the chart");
    Expr n = normalize(e, chart_.dim());
    if (n.is_syntactic_zero())
        components_.erase(idx);
    else
        components_[idx] = n;
}

void Alternating::add_component(const IndexTuple& idx, const Expr& e) {
    set_component(idx, component(idx) + e);
}

}  // namespace detail

DiffForm basis_covector(const Chart& chart, int i) {
    DiffForm f(chart, 1);
    f.set_component({i}, Expr::constant(Rational(1)));
    return f;
}

MultiVector basis_vector(const Chart& chart, int i) {
    MultiVector v(chart, 1);
    v.set_component({i}, Expr::constant(Rational(1)));
    return v;
}

namespace {

void require_same_chart(const detail::Alternating& a, const detail::Alternating& b) {
    if (a.chart() != b.chart()) throw ChartMismatchError("charts differ");
}

template <typename T>
T tensor_add(const T& a, const T& b) {
    require_same_chart(a, b);
    if (a.degree() != b.degree()) throw DegreeError("degrees differ in sum");
    T out(a.chart(), a.degree());
    for (const auto& [idx, e] : a.components()) out.add_component(idx, e);
    for (const auto& [idx, e] : b.components()) out.add_component(idx, e);
    return out;
}

template <typename T>
T tensor_scale(const Expr& s, const T& a) {
    T out(a.chart(), a.degree());
    for (const auto& [idx, e] : a.components()) out.set_component(idx, s * e);
    return out;
}

template <typename T>
T tensor_neg(const T& a) {
    T out(a.chart(), a.degree());
    for (const auto& [idx, e] : a.components()) out.set_component(idx, Expr::neg(e));
    return out;
}

template <typename T>
T wedge_impl(const T& a, const T& b) {
    require_same_chart(a, b);
    int deg = a.degree() + b.degree();
    if (deg > a.chart().dim())
        throw DegreeError("wedge degree exceeds chart dimension");
    T out(a.chart(), deg);
    for (const auto& [ia, ea] : a.components()) {
        for (const auto& [ib, eb] : b.components()) {
            auto merged = merge_indices(ia, ib);
            if (!merged) continue;
            Expr term = ea * eb;
            if (merged->second < 0) term = Expr::neg(term);
            out.add_component(merged->first, term);
        }
    }
    return out;
}

// contraction of the first slot against basis element k with its sign
template <typename T>
T contract_first(const T& t, const std::vector<Expr>& coeffs) {
    T out(t.chart(), t.degree() - 1);
    for (const auto& [idx, e] : t.components()) {
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            const Expr& c = coeffs[static_cast<std::size_t>(idx[pos])];
            if (c.is_syntactic_zero()) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t i = 0; i < idx.size(); ++i)
                if (i != pos) rest.push_back(idx[i]);
            Expr term = c * e;
            if (pos % 2 == 1) term = Expr::neg(term);
            out.add_component(rest, term);
        }
    }
    return out;
}

std::vector<Expr> degree1_coefficients(const detail::Alternating& t) {
    std::vector<Expr> out(static_cast<std::size_t>(t.chart().dim()),
                          Expr::constant(Rational(0)));
    for (const auto& [idx, e] : t.components())
        out[static_cast<std::size_t>(idx[0])] = e;
    return out;
}

}  // namespace

DiffForm operator+(const DiffForm& a, const DiffForm& b) { return tensor_add(a, b); }
DiffForm operator-(const DiffForm& a, const DiffForm& b) { return tensor_add(a, tensor_neg(b)); }
DiffForm operator-(const DiffForm& a) { return tensor_neg(a); }
DiffForm operator*(const Expr& s, const DiffForm& a) { return tensor_scale(s, a); }
MultiVector operator+(const MultiVector& a, const MultiVector& b) { return tensor_add(a, b); }
MultiVector operator-(const MultiVector& a, const MultiVector& b) { return tensor_add(a, tensor_neg(b)); }
MultiVector operator-(const MultiVector& a) { return tensor_neg(a); }
MultiVector operator*(const Expr& s, const MultiVector& a) { return tensor_scale(s, a); }

DiffForm wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }
MultiVector wedge(const MultiVector& a, const MultiVector& b) { return wedge_impl(a, b); }

DiffForm wedge_pow(const DiffForm& a, int k) {
    DiffForm acc(a.chart(), 0);
    acc.set_component({}, Expr::constant(Rational(1)));
    for (int i = 0; i < k; ++i) acc = wedge(acc, a);
    return acc;
}

DiffForm exterior_derivative(const DiffForm& a) {
    if (a.degree() >= a.chart().dim())
        throw DegreeError("exterior derivative of a top-degree form");
    DiffForm out(a.chart(), a.degree() + 1);
    for (const auto& [idx, e] : a.components()) {
        for (int k = 0; k < a.chart().dim(); ++k) {
            Expr de = differentiate(e, k);
            if (de.is_syntactic_zero()) continue;
            auto merged = merge_indices({k}, idx);
            if (!merged) continue;
            Expr term = de;
            if (merged->second < 0) term = Expr::neg(term);
            out.add_component(merged->first, term);
        }
    }
    return out;
}

DiffForm interior_form(const MultiVector& x, const DiffForm& a) {
    require_same_chart(x, a);
    if (x.degree() != 1) throw DegreeError("interior product expects a vector field");
    if (a.degree() < 1) throw DegreeError("interior product of a degree-0 form");
    return contract_first(a, degree1_coefficients(x));
}

MultiVector interior_vector(const DiffForm& alpha, const MultiVector& p) {
    require_same_chart(alpha, p);
    if (alpha.degree() != 1) throw DegreeError("interior product expects a 1-form");
    if (p.degree() < 1) throw DegreeError("interior product of a degree-0 multivector");
    return contract_first(p, degree1_coefficients(alpha));
}

Expr pairing(const DiffForm& a, const std::vector<MultiVector>& vectors) {
    if (static_cast<int>(vectors.size()) != a.degree())
        throw DegreeError("pairing arity does not match form degree");
    if (a.degree() == 0) return a.component({});
    DiffForm rest = interior_form(vectors.front(), a);
    return pairing(rest, {vectors.begin() + 1, vectors.end()});
}

Expr pairing_mv(const MultiVector& p, const std::vector<DiffForm>& forms) {
    if (static_cast<int>(forms.size()) != p.degree())
        throw DegreeError("pairing arity does not match multivector degree");
    if (p.degree() == 0) return p.component({});
    MultiVector rest = interior_vector(forms.front(), p);
    return pairing_mv(rest, {forms.begin() + 1, forms.end()});
}

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y) {
    require_same_chart(x, y);
    if (x.degree() != 1 || y.degree() != 1)
        throw DegreeError("lie_bracket expects vector fields");
    MultiVector out(x.chart(), 1);
    for (int i = 0; i < x.chart().dim(); ++i) {
        Expr acc = Expr::constant(Rational(0));
        for (int j = 0; j < x.chart().dim(); ++j) {
            acc = acc + x.component({j}) * differentiate(y.component({i}), j) -
                  y.component({j}) * differentiate(x.component({i}), j);
        }
        out.set_component({i}, acc);
    }
    return out;
}

Expr directional_derivative(const MultiVector& x, const Expr& f) {
    if (x.degree() != 1) throw DegreeError("directional derivative expects a vector field");
    Expr acc = Expr::constant(Rational(0));
    for (const auto& [idx, e] : x.components())
        acc = acc + e * differentiate(f, idx[0]);
    return normalize(acc, x.chart().dim());
}

DiffForm lie_derivative_form(const MultiVector& x, const DiffForm& a) {
    require_same_chart(x, a);
    if (x.degree() != 1) throw DegreeError("Lie derivative expects a vector field");
    if (a.degree() == 0) {
        DiffForm out(a.chart(), 0);
        out.set_component({}, directional_derivative(x, a.component({})));
        return out;
    }
    DiffForm d_ix = exterior_derivative(interior_form(x, a));
    if (a.degree() == a.chart().dim()) return d_ix;  // da vanishes in top degree
    return interior_form(x, exterior_derivative(a)) + d_ix;
}

namespace {

// odd-coordinate derivatives d/dtheta_k: drop k from the multi-index with the
// position sign counted from the left or from the right
MultiVector theta_derivative_left(const MultiVector& p, int k) {
    MultiVector out(p.chart(), p.degree() - 1);
    for (const auto& [idx, e] : p.components()) {
        auto it = std::find(idx.begin(), idx.end(), k);
        if (it == idx.end()) continue;
        auto pos = static_cast<std::size_t>(it - idx.begin());
        IndexTuple rest;
        rest.reserve(idx.size() - 1);
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (i != pos) rest.push_back(idx[i]);
        out.add_component(rest, pos % 2 == 0 ? e : Expr::neg(e));
    }
    return out;
}

MultiVector theta_derivative_right(const MultiVector& p, int k) {
    MultiVector out(p.chart(), p.degree() - 1);
    for (const auto& [idx, e] : p.components()) {
        auto it = std::find(idx.begin(), idx.end(), k);
        if (it == idx.end()) continue;
        auto pos = static_cast<std::size_t>(it - idx.begin());
        std::size_t from_right = idx.size() - 1 - pos;
        IndexTuple rest;
        rest.reserve(idx.size() - 1);
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (i != pos) rest.push_back(idx[i]);
        out.add_component(rest, from_right % 2 == 0 ? e : Expr::neg(e));
    }
    return out;
}

MultiVector coordinate_derivative(const MultiVector& p, int k) {
    MultiVector out(p.chart(), p.degree());
    for (const auto& [idx, e] : p.components())
        out.add_component(idx, differentiate(e, k));
    return out;
}

}  // namespace

MultiVector schouten(const MultiVector& p, const MultiVector& q) {
    require_same_chart(p, q);
    int dp = p.degree(), dq = q.degree();
    int deg = dp + dq - 1;
    if (deg > p.chart().dim()) throw DegreeError("Schouten bracket degree overflow");
    MultiVector out(p.chart(), std::max(deg, 0));
    if (deg < 0) return out;  // bracket of two scalars
    // antibracket sum_k (d_R P/dtheta_k)(dQ/dx^k) - (dP/dx^k)(d_L Q/dtheta_k),
    // rescaled by (-1)^{(p-1)(q-1)} to the calibrated convention
    for (int k = 0; k < p.chart().dim(); ++k) {
        if (dp >= 1)
            out = out + wedge_impl(theta_derivative_right(p, k),
                                   coordinate_derivative(q, k));
        if (dq >= 1)
            out = out - wedge_impl(coordinate_derivative(p, k),
                                   theta_derivative_left(q, k));
    }
    if (((dp - 1) * (dq - 1)) % 2 != 0) out = tensor_neg(out);
    return out;
}

MultiVector lie_derivative_multivector(const MultiVector& x, const MultiVector& q) {
    if (x.degree() != 1) throw DegreeError("Lie derivative expects a vector field");
    return schouten(x, q);
}

MultiVector lambda_sharp_transport(const MultiVector& lambda, const DiffForm& a) {
    require_same_chart(lambda, a);
    if (lambda.degree() != 2 || a.degree() != 2)
        throw DegreeError("transport expects a bivector and a 2-form");
    const Chart& chart = lambda.chart();
    std::vector<MultiVector> sharped;
    sharped.reserve(static_cast<std::size_t>(chart.dim()));
    for (int i = 0; i < chart.dim(); ++i)
        sharped.push_back(interior_vector(basis_covector(chart, i), lambda));
    MultiVector out(chart, 2);
    for (int i = 0; i < chart.dim(); ++i)
        for (int j = i + 1; j < chart.dim(); ++j)
            out.set_component({i, j}, pairing(a, {sharped[static_cast<std::size_t>(i)],
                                                  sharped[static_cast<std::size_t>(j)]}));
    return out;
}

DiffForm differential(const Chart& chart, const Expr& f) {
    DiffForm out(chart, 1);
    for (int i = 0; i < chart.dim(); ++i) out.set_component({i}, differentiate(f, i));
    return out;
}

namespace {

bool is_zero_impl(const detail::Alternating& a, const Policy& policy) {
    for (const auto& [idx, e] : a.components())
        if (!is_zero(e, a.chart().dim(), policy)) return false;
    return true;
}

}  // namespace

bool tensor_is_zero(const DiffForm& a, const Policy& policy) { return is_zero_impl(a, policy); }
bool tensor_is_zero(const MultiVector& a, const Policy& policy) { return is_zero_impl(a, policy); }

bool tensor_equal(const DiffForm& a, const DiffForm& b, const Policy& policy) {
    return tensor_is_zero(a - b, policy);
}

bool tensor_equal(const MultiVector& a, const MultiVector& b, const Policy& policy) {
    return tensor_is_zero(a - b, policy);
}

std::map<IndexTuple, Rational> evaluate_components(const detail::Alternating& t,
                                                   const Point& pt) {
    std::map<IndexTuple, Rational> out;
    for (const auto& [idx, e] : t.components()) out[idx] = evaluate_exact(e, pt);
    return out;
}

std::string tensor_to_string(const detail::Alternating& t, const std::string& sep) {
    if (t.components().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, e] : t.components()) {
        if (!first) out += sep;
        first = false;
        if (idx.empty()) {
            out += "(): ";
        } else {
            std::string key;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i) key += "^";
                key += t.chart().name(idx[i]);
            }
            out += key + ": ";
        }
        out += print_expr(e, t.chart());
    }
    return out;
}

}  // namespace cojac
