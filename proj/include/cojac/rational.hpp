#ifndef COJAC_RATIONAL_HPP
#define COJAC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cojac/error.hpp"

namespace cojac {

/// Exact rational number. Always stored canonically: gcd(|num|, den) = 1, den > 0.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw PoleError("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n" or "n/d" (d > 0). Used by the DSL lexer and fixtures.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
        if (q.get_den() == 0) throw PoleError("rational with zero denominator: " + s);
        q.canonicalize();
        return Rational(q);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PoleError("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw PoleError("zero raised to a negative power");
        mpq_class r;
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), ae);
        mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), ae);
        if (e < 0) r = 1 / r;
        r.canonicalize();
        return Rational(r);
    }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

}  // namespace cojac

#endif
