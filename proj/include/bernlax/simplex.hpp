#ifndef BERNLAX_SIMPLEX_HPP
#define BERNLAX_SIMPLEX_HPP

#include <vector>

namespace bernlax {

// Basis feasibility tolerance for pivot eligibility and optimality tests.
inline constexpr double kLpTol = 1e-9;

/// Outcome of a dense simplex solve. basis[i] is the column (structural
/// j < n, else slack n + i) basic in row i at termination; callers can
/// re-solve the basic system to shed accumulated pivot roundoff.
struct SimplexResult {
    enum class Status { optimal, unbounded };
    Status status = Status::optimal;
    double objective = 0.0;
    std::vector<double> x;
    std::vector<int> basis;
    int pivots = 0;
};

/// Maximize c.x subject to A x <= b, x >= 0, with every b_i >= 0 so the
/// all-slack basis is feasible. Dense tableau with Bland's rule throughout
/// (smallest-index entering column, smallest basic label on ratio ties),
/// which cannot cycle on the degenerate zero-rhs rows these problems carry.
SimplexResult simplex_max(const std::vector<std::vector<double>>& A,
                          const std::vector<double>& b,
                          const std::vector<double>& c, double eps = kLpTol);

}  // namespace bernlax

#endif
