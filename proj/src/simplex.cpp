#include "bernlax/simplex.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bernlax/errors.hpp"

namespace bernlax {

SimplexResult simplex_max(const std::vector<std::vector<double>>& A,
                          const std::vector<double>& b,
                          const std::vector<double>& c, double eps) {
    const size_t m = A.size();
    const size_t n = c.size();
    if (b.size() != m) throw ContractError("simplex_max: row count mismatch");
    for (size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) {
            throw ContractError("simplex_max: column count mismatch");
        }
        if (b[i] < 0.0) {
            throw ContractError("simplex_max: rhs must be nonnegative");
        }
    }

    // Tableau: m constraint rows over n structural + m slack columns plus
    // rhs; the final row carries reduced costs and the objective value.
    const size_t cols = n + m + 1;
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1.0;
        t[i][cols - 1] = b[i];
    }
    for (size_t j = 0; j < n; ++j) t[m][j] = -c[j];

    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Entering choice is steepest reduced cost with largest-pivot ties,
    // falling back to Bland's smallest-index rule after a degenerate
    // stall (which cannot cycle). A column whose ratio test would either
    // pivot on a near-zero entry or drive a skipped tiny-positive row
    // negative is rejected for this iteration: such pivots are how dense
    // tableaus lose feasibility. If no column can be pivoted safely the
    // current (feasible) vertex is returned and the caller's convergence
    // check reports the shortfall.
    SimplexResult result;
    const long pivot_cap = 400L * static_cast<long>(m + n) + 100000L;
    double last_objective = 0.0;
    int stalled = 0;
    std::vector<bool> rejected(cols - 1, false);
    for (long iter = 0;; ++iter) {
        if (iter > pivot_cap) {
            throw InternalConsistencyError(
                "simplex_max: pivot cap exceeded (" +
                std::to_string(pivot_cap) + ")");
        }
        const bool bland = stalled > 50;

        size_t enter = cols;
        if (bland) {
            for (size_t j = 0; j + 1 < cols; ++j) {
                if (!rejected[j] && t[m][j] < -eps) {
                    enter = j;
                    break;
                }
            }
        } else {
            double best_cost = -eps;
            for (size_t j = 0; j + 1 < cols; ++j) {
                if (!rejected[j] && t[m][j] < best_cost) {
                    best_cost = t[m][j];
                    enter = j;
                }
            }
        }
        if (enter == cols) break;  // optimal, or nothing safely pivotable

        size_t leave = m;
        double best_ratio = 0.0;
        double tiny_peak = 0.0;  // largest positive entry below eps
        for (size_t i = 0; i < m; ++i) {
            const double a = t[i][enter];
            if (a <= eps) {
                if (a > tiny_peak) tiny_peak = a;
                continue;
            }
            const double ratio = t[i][cols - 1] / a;
            if (leave == m) {
                leave = i;
                best_ratio = ratio;
                continue;
            }
            const double tie_band = eps * (1.0 + std::abs(best_ratio));
            if (ratio < best_ratio - tie_band) {
                leave = i;
                best_ratio = ratio;
            } else if (ratio <= best_ratio + tie_band) {
                const bool take =
                    bland ? basis[i] < basis[leave]
                          : std::abs(a) > std::abs(t[leave][enter]);
                if (take) {
                    leave = i;
                    best_ratio = std::min(best_ratio, ratio);
                }
            }
        }
        if (leave == m) {
            // Entries at rounding-residue level are true zeros of a ray
            // direction; anything larger is borderline numerics and the
            // column is merely unsafe to pivot on.
            if (tiny_peak > 1e-11) {
                rejected[enter] = true;
                continue;
            }
            result.status = SimplexResult::Status::unbounded;
            result.pivots = static_cast<int>(iter);
            return result;
        }

        double drift = 0.0;
        for (size_t i = 0; i < m; ++i) {
            const double a = t[i][enter];
            if (a <= 0.0 || a > eps) continue;
            drift = std::max(drift, a * best_ratio - t[i][cols - 1]);
        }
        if (drift > eps) {
            rejected[enter] = true;
            continue;
        }

        const double inv = 1.0 / t[leave][enter];
        for (double& v : t[leave]) v *= inv;
        t[leave][enter] = 1.0;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double factor = t[i][enter];
            if (factor == 0.0) continue;
            for (size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
            t[i][enter] = 0.0;
        }
        basis[leave] = enter;
        result.pivots += 1;
        std::fill(rejected.begin(), rejected.end(), false);

        const double objective = t[m][cols - 1];
        if (objective > last_objective + 1e-12 * (1.0 + std::abs(objective))) {
            stalled = 0;
        } else {
            ++stalled;
        }
        last_objective = objective;
    }

    result.x.assign(n, 0.0);
    result.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        result.basis[i] = static_cast<int>(basis[i]);
        if (basis[i] < n) result.x[basis[i]] = t[i][cols - 1];
    }
    result.objective = t[m][cols - 1];
    return result;
}

}  // namespace bernlax
