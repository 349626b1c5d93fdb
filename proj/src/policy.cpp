#include "cojac/policy.hpp"

#include <cmath>

#include "cojac/error.hpp"

namespace cojac {

Point Sampler::pole_free_point(int dim, const std::vector<Expr>& exprs, int attempts) {
    for (int k = 0; k < attempts; ++k) {
        Point p = point(dim);
        bool ok = true;
        for (const auto& e : exprs) {
            try {
                if (e.is_rational_function()) {
                    evaluate_exact(e, p);
                } else {
                    double v = evaluate_numeric(e, to_numeric(p));
                    if (!std::isfinite(v)) ok = false;
                }
            } catch (const PoleError&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) return p;
    }
    throw Error("no pole-free sample point found in " + std::to_string(attempts) +
                " attempts");
}

bool is_zero(const Expr& e, int nvars, const Policy& policy) {
    if (policy.mode == Policy::Mode::Exact) {
        if (!e.is_rational_function())
            throw PolicyError("exact zero test requested on a transcendental expression");
        return to_ratfunc(e, nvars).is_zero();
    }
    Sampler sampler(policy.seed);
    std::vector<Expr> exprs = {e};
    for (int i = 0; i < policy.samples; ++i) {
        Point p = sampler.pole_free_point(nvars, exprs);
        double v;
        if (e.is_rational_function())
            v = evaluate_exact(e, p).to_double();
        else
            v = evaluate_numeric(e, to_numeric(p));
        if (std::fabs(v) > policy.tol) return false;
    }
    return true;
}

bool equal_under(const Expr& a, const Expr& b, int nvars, const Policy& policy) {
    return is_zero(a - b, nvars, policy);
}

}  // namespace cojac
