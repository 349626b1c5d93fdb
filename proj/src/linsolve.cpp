#include "cojac/linsolve.hpp"

#include "cojac/error.hpp"
#include "cojac/poly.hpp"

namespace cojac {

std::vector<Expr> linear_solve_symbolic(const std::vector<std::vector<Expr>>& a,
                                        const std::vector<Expr>& b, int nvars) {
    std::size_t m = a.size();
    if (m == 0 || b.size() != m) throw Error("bad linear system shape");
    std::size_t n = a[0].size();
    if (n == 0 || n > m) throw Error("bad linear system shape");

    // augmented polynomial matrix: clear each row's denominators
    std::vector<std::vector<Poly>> mat(m, std::vector<Poly>(n + 1, Poly(nvars)));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<RatFunc> row;
        row.reserve(n + 1);
        for (std::size_t j = 0; j < n; ++j) row.push_back(to_ratfunc(a[i][j], nvars));
        row.push_back(to_ratfunc(b[i], nvars));
        Poly common = Poly::constant(nvars, Rational(1));
        for (const auto& r : row) {
            Poly g = poly_gcd(common, r.den());
            common = common * exact_divide(r.den(), g);
        }
        for (std::size_t j = 0; j <= n; ++j)
            mat[i][j] = row[j].num() * exact_divide(common, row[j].den());
    }

    // fraction-free forward elimination
    Poly prev = Poly::constant(nvars, Rational(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < m && mat[pivot][col].is_zero()) ++pivot;
        if (pivot == m)
            throw NeedsChartRestrictionError(
                "symbolic pivot vanishes identically; needs chart restriction");
        if (pivot != col) std::swap(mat[pivot], mat[col]);
        for (std::size_t i = col + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j <= n; ++j)
                mat[i][j] = exact_divide(
                    mat[col][col] * mat[i][j] - mat[i][col] * mat[col][j], prev);
            mat[i][col] = Poly(nvars);
        }
        prev = mat[col][col];
    }

    // leftover rows must reduce to 0 = 0
    for (std::size_t i = n; i < m; ++i) {
        if (!mat[i][n].is_zero())
            throw InternalConsistencyError("inconsistent symbolic linear system");
    }

    // back substitution over the fraction field
    std::vector<RatFunc> x(n);
    for (std::size_t jj = n; jj-- > 0;) {
        RatFunc acc(mat[jj][n]);
        for (std::size_t k = jj + 1; k < n; ++k)
            acc = acc - RatFunc(mat[jj][k]) * x[k];
        x[jj] = acc / RatFunc(mat[jj][jj]);
    }

    std::vector<Expr> out;
    out.reserve(n);
    for (const auto& xi : x) out.push_back(ratfunc_to_expr(xi));
    return out;
}

std::optional<std::vector<Rational>> linear_solve_rational(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t m = a.size();
    if (m == 0 || b.size() != m) return std::nullopt;
    std::size_t n = a[0].size();
    if (n > m) return std::nullopt;

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) return std::nullopt;  // singular
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) return std::nullopt;  // inconsistent

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t col = 0; col < n; ++col) x[col] = b[col];
    return x;
}

int matrix_rank(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    std::size_t m = a.size(), n = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t i = row + 1; i < m; ++i) {
            if (a[i][col].is_zero()) continue;
            Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace cojac
