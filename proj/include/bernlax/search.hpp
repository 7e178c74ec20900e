#ifndef BERNLAX_SEARCH_HPP
#define BERNLAX_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bernlax/complex_poly.hpp"

namespace bernlax {

/// Configuration of the semi-infinite LP searches. The working grid should
/// carry more points than free coefficients (initial_grid >= 2n + 2);
/// grids too coarse to pin the growth direction surface as UnboundedError.
struct SearchConfig {
    int n = 1;
    int initial_grid = 0;  // 0 selects max(2n + 2, 64)
    int max_exchange_rounds = 200;
    double violation_tol = 1e-8;
    int phase_count = 32;  // half-plane cuts per abscissa (complex case)
    int fine_grid = 16384;
    // Even n: keep the top coefficient c_{n-1} as a variable instead of
    // imposing the parity degree cap, to watch the optimizer drop it.
    bool full_degree_cap = false;
    std::uint64_t seed = 12345;  // perturbation seed (uniqueness probe)
};

/// One binding constraint at the final working set.
struct ActiveConstraint {
    std::string family;  // "growth", "nonneg", or "modulus"
    double s = 0.0;
    double phi = 0.0;  // phase of the half-plane cut; 0 for real families
    double slack = 0.0;
};

/// Per-round exchange trace entry.
struct ExchangeRound {
    int round = 0;
    int constraints = 0;
    double objective = 0.0;
    double worst_violation = 0.0;
};

struct SearchResult {
    double optimal_value = 0.0;
    ComplexPoly optimizer;
    std::vector<double> active_points;  // abscissas of binding constraints
    int iterations = 0;                 // exchange rounds executed
    bool converged = false;
    double final_violation = 0.0;
    std::vector<ExchangeRound> trace;
    std::vector<ActiveConstraint> active_detail;
};

/// Maximize p(0) over real polynomials under the growth bound
/// s p(s) <= (1+s)^n and positivity p(s) >= 0, both discretized on
/// s = tan^2(theta/2) grids and refined by constraint exchange against a
/// fine scan. The supremum of the continuum problem is n^2.
SearchResult extremal_lp(const SearchConfig& cfg);

/// The complex-case variant without positivity: modulus constraints
/// |p(s)| <= s^{-1}(1+s)^n outer-approximated by phase_count half-plane
/// cuts, phase-fixed so p(0) is real. The value upper-approximates the
/// true complex constant and decreases as phase_count grows.
SearchResult extremal_complex_lp(const SearchConfig& cfg);

/// Re-runs extremal_lp under tiny random objective perturbations and
/// shuffled column orders, collecting every optimizer that still attains
/// the optimum; evidence (not proof) on whether the extremal is unique.
struct UniquenessReport {
    std::vector<ComplexPoly> optimizers;
    double max_pairwise_distance = 0.0;
    bool matches_extremal = false;
    bool all_converged = false;
};

UniquenessReport uniqueness_probe(const SearchConfig& cfg, int perturbations);

}  // namespace bernlax

#endif
