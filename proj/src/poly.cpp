#include "cojac/poly.hpp"

#include <algorithm>
#include <numeric>

#include "cojac/error.hpp"

namespace cojac {

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors, earlier variable dominates
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m.at(static_cast<std::size_t>(index)) = 1;
    p.terms_[m] = Rational(1);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
}

unsigned Poly::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
    return d;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(nvars_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Monomial dm(m);
        dm[v] -= 1;
        r.add_term(dm, c * Rational(static_cast<long>(m[v])));
    }
    return r;
}

Rational Poly::evaluate(const Point& p) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t *= p[i].pow(static_cast<long>(m[i]));
        acc += t;
    }
    return acc;
}

double Poly::evaluate(const NumericPoint& p) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= p[i];
        acc += t;
    }
    return acc;
}

std::string Poly::to_string(const Chart& chart) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.to_string();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out += "*" + chart.name(static_cast<int>(i));
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

Poly exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroPolynomial("polynomial division by zero");
    Poly rem = a;
    Poly q(a.nvars());
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        const Monomial& lb = b.leading_monomial();
        Monomial qm(lm);
        for (std::size_t i = 0; i < qm.size(); ++i) {
            if (lm[i] < lb[i])
                throw InternalConsistencyError("inexact polynomial division");
            qm[i] = lm[i] - lb[i];
        }
        Rational qc = rem.leading_coefficient() / b.leading_coefficient();
        Poly t(a.nvars());
        t.add_term(qm, qc);
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

namespace {

// integer content of a polynomial with integer coefficients (den == 1 terms)
mpz_class int_content(const Poly& p) {
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class num = c.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    return g;
}

// scale so all coefficients are integers, content 1, positive leading coefficient
Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_class den = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Poly q = p.scaled(Rational(mpq_class(l)));
    mpz_class g = int_content(q);
    q = q.scaled(Rational(mpq_class(mpz_class(1), g)));
    if (q.leading_coefficient().sign() < 0) q = -q;
    return q;
}

// view of p as a univariate polynomial in `var` with Poly coefficients
std::map<unsigned, Poly> collect_in(const Poly& p, int var) {
    std::map<unsigned, Poly> out;
    auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : p.terms()) {
        Monomial rest(m);
        unsigned d = rest[v];
        rest[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(p.nvars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

unsigned degree_in_var(const std::map<unsigned, Poly>& coeffs) {
    return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

// content of p w.r.t. var: gcd of the univariate coefficients
Poly content_in(const Poly& p, int var) {
    auto coeffs = collect_in(p, var);
    Poly g(p.nvars());
    for (const auto& [d, c] : coeffs) g = poly_gcd(g, c);
    return g;
}

// pseudo-remainder of a by b, both univariate in var with Poly coefficients
Poly pseudo_remainder(Poly a, const Poly& b, int var) {
    auto bc = collect_in(b, var);
    unsigned db = degree_in_var(bc);
    Poly lb = bc.rbegin()->second;
    while (true) {
        if (a.is_zero()) return a;
        auto ac = collect_in(a, var);
        unsigned da = degree_in_var(ac);
        if (da < db) return a;
        Poly la = ac.rbegin()->second;
        // a <- lb*a - la*x^(da-db)*b
        Poly shift(a.nvars());
        Monomial m(static_cast<std::size_t>(a.nvars()), 0);
        m[static_cast<std::size_t>(var)] = da - db;
        shift.add_term(m, Rational(1));
        a = lb * a - la * shift * b;
    }
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    a = make_primitive(a);
    b = make_primitive(b);
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.nvars(), Rational(1));

    // main variable: highest index occurring in either polynomial
    int var = -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // one of them is free of the main variable: gcd divides its content
        const Poly& flat = (a.degree_in(var) == 0) ? a : b;
        const Poly& other = (a.degree_in(var) == 0) ? b : a;
        return poly_gcd(flat, content_in(other, var));
    }

    Poly ca = content_in(a, var);
    Poly cb = content_in(b, var);
    Poly cont = poly_gcd(ca, cb);
    Poly pa = exact_divide(a, ca);
    Poly pb = exact_divide(b, cb);

    // primitive Euclidean sequence in the main variable
    if (collect_in(pa, var).rbegin()->first < collect_in(pb, var).rbegin()->first)
        std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_remainder(pa, pb, var);
        pa = pb;
        pb = r.is_zero() ? r : exact_divide(r, content_in(r, var));
        pb = make_primitive(pb);
    }
    if (pa.degree_in(var) == 0) return make_primitive(cont);
    return make_primitive(cont * pa);
}

RatFunc::RatFunc(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.nvars(), Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZeroPolynomial("rational function with zero denominator");
    reduce();
}

bool RatFunc::den_is_one() const {
    return den_.is_constant() && den_.constant_value().is_one();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero())
        throw DivisionByZeroPolynomial("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc::constant(nvars(), Rational(1));
    if (e < 0) {
        if (num_.is_zero())
            throw DivisionByZeroPolynomial("zero rational function to a negative power");
        return RatFunc(den_.pow(static_cast<unsigned>(-e)),
                       num_.pow(static_cast<unsigned>(-e)));
    }
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::derivative(int var) const {
    // (n/d)' = (n'd - n d') / d^2
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                   den_ * den_);
}

Rational RatFunc::evaluate(const Point& p) const {
    Rational d = den_.evaluate(p);
    if (d.is_zero()) throw PoleError("pole: denominator vanishes at evaluation point");
    return num_.evaluate(p) / d;
}

}  // namespace cojac
