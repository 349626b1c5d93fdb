#ifndef COJAC_POLICY_HPP
#define COJAC_POLICY_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cojac/chart.hpp"
#include "cojac/expr.hpp"

namespace cojac {

/// Decides every "= 0" predicate. Exact mode requires rational-function class;
/// sampled mode tests |value| <= tol at seeded random rational points.
struct Policy {
    enum class Mode { Exact, Sampled };
    Mode mode = Mode::Exact;
    int samples = 50;
    std::uint64_t seed = 0;
    double tol = 1e-9;

    static Policy exact() { return Policy{}; }
    static Policy sampled(int samples, std::uint64_t seed, double tol) {
        return Policy{Mode::Sampled, samples, seed, tol};
    }
};

/// Deterministic sampler over the chart box: numerators in [-100,100],
/// denominators in [1,10]. Draws do not depend on the platform's distribution
/// implementations, only on mt19937_64.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t bounded(std::uint64_t n) { return rng_() % n; }

    Rational rational() {
        long num = static_cast<long>(bounded(201)) - 100;
        long den = static_cast<long>(bounded(10)) + 1;
        return Rational(num, den);
    }

    Point point(int dim) {
        Point p;
        p.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) p.push_back(rational());
        return p;
    }

    /// First point (in draw order) where every expression evaluates pole-free;
    /// up to `attempts` redraws.
    Point pole_free_point(int dim, const std::vector<Expr>& exprs, int attempts = 1000);

  private:
    std::mt19937_64 rng_;
};

/// The decidable zero test. Exact: the rational normal form's numerator is the
/// zero polynomial (PolicyError on transcendental input). Sampled: magnitude at
/// most tol at policy.samples pole-free seeded points.
bool is_zero(const Expr& e, int nvars, const Policy& policy);

/// Zero test for a difference, convenience for equality checks.
bool equal_under(const Expr& a, const Expr& b, int nvars, const Policy& policy);

}  // namespace cojac

#endif
