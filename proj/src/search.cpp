#include "bernlax/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "bernlax/chebyshev.hpp"
#include "bernlax/errors.hpp"
#include "bernlax/simplex.hpp"

namespace bernlax {

namespace {

constexpr double kPi = std::numbers::pi;

struct GridPoint {
    double theta = 0.0;
    double s = 0.0;
    std::vector<double> sin_pow;  // sin^{2i}(theta/2), i = 0..n
    std::vector<double> cos_pow;  // cos^{2i}(theta/2), i = 0..n
};

GridPoint make_grid_point(double theta, int n) {
    GridPoint g;
    g.theta = theta;
    const double sh = std::sin(theta / 2.0);
    const double ch = std::cos(theta / 2.0);
    g.s = (sh * sh) / std::max(ch * ch, 1e-300);
    g.sin_pow.resize(n + 1);
    g.cos_pow.resize(n + 1);
    g.sin_pow[0] = 1.0;
    g.cos_pow[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        g.sin_pow[i] = g.sin_pow[i - 1] * (sh * sh);
        g.cos_pow[i] = g.cos_pow[i - 1] * (ch * ch);
    }
    return g;
}

// Growth weight w_k = s^{k+1}/(1+s)^n and positivity weight
// v_k = s^k/(1+s)^{n-1}, in the singularity-free half-angle form.
double growth_weight(const GridPoint& g, int n, int k) {
    return g.sin_pow[k + 1] * g.cos_pow[n - 1 - k];
}

double nonneg_weight(const GridPoint& g, int n, int k) {
    return g.sin_pow[k] * g.cos_pow[n - 1 - k];
}

int degree_cap(const SearchConfig& cfg) {
    if (cfg.n % 2 == 1 || cfg.full_degree_cap) return cfg.n - 1;
    return cfg.n - 2;
}

int default_grid(const SearchConfig& cfg, bool per_phase_rows = false) {
    if (cfg.initial_grid > 0) return cfg.initial_grid;
    // Conditioning of the monomial-basis rows worsens like 4^n; larger n
    // needs a denser starting grid for the exchange to take hold. The
    // complex case multiplies every abscissa by phase_count rows, so it
    // keeps the flat default and relies on the exchange instead.
    const int dense = (!per_phase_rows && cfg.n >= 10) ? 48 * cfg.n : 0;
    return std::max({2 * cfg.n + 2, 64, dense});
}

void validate(const SearchConfig& cfg) {
    if (cfg.n < 1) throw ContractError("search: n must be >= 1");
    if (default_grid(cfg) < 2) {
        throw ContractError("search: initial grid must have >= 2 points");
    }
    if (cfg.fine_grid < 2) throw ContractError("search: fine grid too small");
    if (cfg.max_exchange_rounds < 0) {
        throw ContractError("search: negative round cap");
    }
}

// Gaussian elimination with partial pivoting; a and b are consumed.
bool gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& x) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-280) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            if (factor == 0.0) continue;
            for (size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    x.assign(n, 0.0);
    for (size_t row = n; row-- > 0;) {
        double v = b[row];
        for (size_t j = row + 1; j < n; ++j) v -= a[row][j] * x[j];
        x[row] = v / a[row][row];
    }
    return true;
}

// A constraint row over the unsplit decision variables. Rows are stored
// normalized to unit max entry; the half-angle weights decay like 4^-n,
// and unnormalized rows starve the simplex pivot tolerance at larger n.
struct Row {
    std::string family;
    double s = 0.0;
    double phi = 0.0;
    std::vector<double> coef;
    double rhs = 0.0;

    void normalize() {
        double peak = 0.0;
        for (const double c : coef) peak = std::max(peak, std::abs(c));
        if (peak <= 0.0) return;
        for (double& c : coef) c /= peak;
        rhs /= peak;
    }
};

// Exchange-driven LP over free variables, solved via the u - v split.
class ExchangeLp {
  public:
    ExchangeLp(int vars, std::vector<double> objective,
               std::vector<size_t> column_order)
        : vars_(vars),
          objective_(std::move(objective)),
          order_(std::move(column_order)) {}

    void add_row(Row row) {
        row.normalize();
        rows_.push_back(std::move(row));
    }
    const std::vector<Row>& rows() const { return rows_; }

    // Solve the current working set; returns unsplit variable values.
    std::vector<double> solve(double& objective_value) {
        const size_t split = 2 * static_cast<size_t>(vars_);
        std::vector<std::vector<double>> A(rows_.size(),
                                           std::vector<double>(split, 0.0));
        std::vector<double> b(rows_.size(), 0.0);
        std::vector<double> c(split, 0.0);
        for (size_t i = 0; i < rows_.size(); ++i) {
            for (int k = 0; k < vars_; ++k) {
                const double a = rows_[i].coef[k];
                A[i][order_[k]] = a;
                A[i][order_[vars_ + k]] = -a;
            }
            b[i] = rows_[i].rhs;
        }
        for (int k = 0; k < vars_; ++k) {
            c[order_[k]] = objective_[k];
            c[order_[vars_ + k]] = -objective_[k];
        }
        const SimplexResult lp = simplex_max(A, b, c);
        if (lp.status == SimplexResult::Status::unbounded) {
            throw UnboundedError(
                "search: LP unbounded; the working grid is too coarse to pin "
                "the growth direction (increase initial_grid)");
        }

        // Hundreds of dense pivots leave ~1e-7 of drift in the tableau
        // solution; re-solving the final basic system restores the vertex
        // to working accuracy (one refinement pass on the residual). With
        // an ill-conditioned basis the re-solve can come out worse, so it
        // is accepted only when it reduces the working-set violation.
        const auto unsplit = [&](const std::vector<double>& sx) {
            std::vector<double> x(vars_, 0.0);
            for (int k = 0; k < vars_; ++k) {
                x[k] = sx[order_[k]] - sx[order_[vars_ + k]];
            }
            return x;
        };
        const auto working_violation = [&](const std::vector<double>& x) {
            double worst = 0.0;
            for (const Row& row : rows_) {
                double lhs = 0.0;
                for (int k = 0; k < vars_; ++k) lhs += row.coef[k] * x[k];
                worst = std::max(worst, lhs - row.rhs);
            }
            return worst;
        };

        std::vector<double> x = unsplit(lp.x);
        const size_t m = rows_.size();
        std::vector<std::vector<double>> basis_matrix(
            m, std::vector<double>(m, 0.0));
        for (size_t i = 0; i < m; ++i) {
            for (size_t row = 0; row < m; ++row) {
                const int j = lp.basis[row];
                basis_matrix[i][row] = j < static_cast<int>(split)
                                           ? A[i][static_cast<size_t>(j)]
                                           : (static_cast<size_t>(j) - split ==
                                                      i
                                                  ? 1.0
                                                  : 0.0);
            }
        }
        std::vector<double> xb;
        if (gauss_solve(basis_matrix, b, xb)) {
            std::vector<double> residual(m, 0.0);
            for (size_t i = 0; i < m; ++i) {
                double acc = b[i];
                for (size_t row = 0; row < m; ++row) {
                    acc -= basis_matrix[i][row] * xb[row];
                }
                residual[i] = acc;
            }
            std::vector<double> correction;
            if (gauss_solve(basis_matrix, residual, correction)) {
                for (size_t row = 0; row < m; ++row) {
                    xb[row] += correction[row];
                }
            }
            std::vector<double> refined_split(split, 0.0);
            for (size_t row = 0; row < m; ++row) {
                const int j = lp.basis[row];
                if (j < static_cast<int>(split)) {
                    refined_split[static_cast<size_t>(j)] = xb[row];
                }
            }
            const std::vector<double> refined = unsplit(refined_split);
            if (working_violation(refined) <= working_violation(x)) {
                x = refined;
            }
        }

        objective_value = 0.0;
        for (int k = 0; k < vars_; ++k) {
            objective_value += objective_[k] * x[k];
        }
        return x;
    }

    std::vector<ActiveConstraint> active_constraints(
        const std::vector<double>& x) const {
        std::vector<ActiveConstraint> active;
        for (const Row& row : rows_) {
            double lhs = 0.0;
            for (int k = 0; k < vars_; ++k) lhs += row.coef[k] * x[k];
            const double slack = row.rhs - lhs;
            if (slack <= 1e-7 * (1.0 + std::abs(row.rhs))) {
                active.push_back({row.family, row.s, row.phi, slack});
            }
        }
        std::sort(active.begin(), active.end(),
                  [](const ActiveConstraint& a, const ActiveConstraint& b) {
                      return a.s < b.s;
                  });
        return active;
    }

  private:
    int vars_;
    std::vector<double> objective_;
    std::vector<size_t> order_;
    std::vector<Row> rows_;
};

std::vector<size_t> identity_order(int vars) {
    std::vector<size_t> order(2 * static_cast<size_t>(vars));
    std::iota(order.begin(), order.end(), 0u);
    return order;
}

SearchResult run_real_exchange(const SearchConfig& cfg,
                               const std::vector<double>& objective,
                               const std::vector<size_t>& order) {
    const int n = cfg.n;
    const int vars = degree_cap(cfg) + 1;

    ExchangeLp lp(vars, objective, order);

    const int grid = default_grid(cfg);
    for (int i = 0; i < grid; ++i) {
        const double theta = kPi * (i + 1) / (grid + 1);
        const GridPoint g = make_grid_point(theta, n);
        Row growth{"growth", g.s, 0.0, std::vector<double>(vars, 0.0), 1.0};
        Row nonneg{"nonneg", g.s, 0.0, std::vector<double>(vars, 0.0), 0.0};
        for (int k = 0; k < vars; ++k) {
            growth.coef[k] = growth_weight(g, n, k);
            nonneg.coef[k] = -nonneg_weight(g, n, k);
        }
        lp.add_row(std::move(growth));
        lp.add_row(std::move(nonneg));
    }

    SearchResult result;
    std::vector<double> x;
    for (int round = 0;; ++round) {
        double objective_value = 0.0;
        x = lp.solve(objective_value);

        // Most violated constraint of either family on the fine grid.
        double worst = 0.0;
        Row worst_row;
        for (int j = 0; j < cfg.fine_grid; ++j) {
            const double theta = kPi * (j + 1) / (cfg.fine_grid + 1);
            const GridPoint g = make_grid_point(theta, n);
            double growth_lhs = 0.0;
            double value = 0.0;  // p(s) scaled by (1+s)^{-(n-1)}
            for (int k = 0; k < vars; ++k) {
                growth_lhs += growth_weight(g, n, k) * x[k];
                value += nonneg_weight(g, n, k) * x[k];
            }
            if (growth_lhs - 1.0 > worst) {
                worst = growth_lhs - 1.0;
                worst_row = Row{"growth", g.s, 0.0, {}, 1.0};
                worst_row.coef.resize(vars);
                for (int k = 0; k < vars; ++k) {
                    worst_row.coef[k] = growth_weight(g, n, k);
                }
            }
            if (-value > worst) {
                worst = -value;
                worst_row = Row{"nonneg", g.s, 0.0, {}, 0.0};
                worst_row.coef.resize(vars);
                for (int k = 0; k < vars; ++k) {
                    worst_row.coef[k] = -nonneg_weight(g, n, k);
                }
            }
        }

        result.trace.push_back({round, static_cast<int>(lp.rows().size()),
                                objective_value, worst});
        result.iterations = round + 1;
        result.final_violation = worst;
        if (worst <= cfg.violation_tol) {
            result.converged = true;
            break;
        }
        if (round >= cfg.max_exchange_rounds) {
            result.converged = false;
            break;
        }
        lp.add_row(std::move(worst_row));
    }

    std::vector<Complex> coeffs(vars);
    for (int k = 0; k < vars; ++k) coeffs[k] = Complex{x[k], 0.0};
    result.optimizer = ComplexPoly(std::move(coeffs));
    result.optimal_value = x[0];
    result.active_detail = lp.active_constraints(x);
    for (const ActiveConstraint& a : result.active_detail) {
        result.active_points.push_back(a.s);
    }
    return result;
}

}  // namespace

SearchResult extremal_lp(const SearchConfig& cfg) {
    validate(cfg);
    const int vars = degree_cap(cfg) + 1;
    std::vector<double> objective(vars, 0.0);
    objective[0] = 1.0;
    return run_real_exchange(cfg, objective, identity_order(vars));
}

SearchResult extremal_complex_lp(const SearchConfig& cfg) {
    validate(cfg);
    if (cfg.phase_count < 8) {
        throw ContractError("extremal_complex_lp: phase_count must be >= 8");
    }
    const int n = cfg.n;
    const int d = degree_cap(cfg);
    // Decision variables: Re c_0..c_d then Im c_1..c_d (Im c_0 = 0 fixes
    // the free rotation so the objective Re p(0) is |p(0)| at optimum).
    const int vars = 2 * d + 1;
    std::vector<double> objective(vars, 0.0);
    objective[0] = 1.0;

    ExchangeLp lp(vars, objective, identity_order(vars));
    const int J = cfg.phase_count;

    const auto modulus_row = [&](const GridPoint& g, double phi) {
        Row row{"modulus", g.s, phi, std::vector<double>(vars, 0.0), 1.0};
        for (int k = 0; k <= d; ++k) {
            const double w = growth_weight(g, n, k);
            row.coef[k] = w * std::cos(phi);
            if (k >= 1) row.coef[d + k] = -w * std::sin(phi);
        }
        return row;
    };

    const int grid = default_grid(cfg, /*per_phase_rows=*/true);
    for (int i = 0; i < grid; ++i) {
        const double theta = kPi * (i + 1) / (grid + 1);
        const GridPoint g = make_grid_point(theta, n);
        for (int j = 0; j < J; ++j) {
            lp.add_row(modulus_row(g, 2.0 * kPi * j / J));
        }
    }

    SearchResult result;
    std::vector<double> x;
    for (int round = 0;; ++round) {
        double objective_value = 0.0;
        x = lp.solve(objective_value);

        double worst = 0.0;
        double worst_theta = 0.0;
        double worst_phi = 0.0;
        for (int jj = 0; jj < cfg.fine_grid; ++jj) {
            const double theta = kPi * (jj + 1) / (cfg.fine_grid + 1);
            const GridPoint g = make_grid_point(theta, n);
            Complex w{0.0, 0.0};
            for (int k = 0; k <= d; ++k) {
                const double wk = growth_weight(g, n, k);
                const double im = k >= 1 ? x[d + k] : 0.0;
                w += wk * Complex{x[k], im};
            }
            // Best available cut: the phase closest to -arg(w).
            const double target = -std::arg(w);
            const int j0 = static_cast<int>(std::lround(target * J / (2.0 * kPi)));
            for (int dj = -1; dj <= 1; ++dj) {
                const int j = ((j0 + dj) % J + J) % J;
                const double phi = 2.0 * kPi * j / J;
                const double lhs = (w * std::polar(1.0, phi)).real();
                if (lhs - 1.0 > worst) {
                    worst = lhs - 1.0;
                    worst_theta = theta;
                    worst_phi = phi;
                }
            }
        }

        result.trace.push_back({round, static_cast<int>(lp.rows().size()),
                                objective_value, worst});
        result.iterations = round + 1;
        result.final_violation = worst;
        if (worst <= cfg.violation_tol) {
            result.converged = true;
            break;
        }
        if (round >= cfg.max_exchange_rounds) {
            result.converged = false;
            break;
        }
        lp.add_row(modulus_row(make_grid_point(worst_theta, n), worst_phi));
    }

    std::vector<Complex> coeffs(d + 1);
    coeffs[0] = Complex{x[0], 0.0};
    for (int k = 1; k <= d; ++k) coeffs[k] = Complex{x[k], x[d + k]};
    result.optimizer = ComplexPoly(std::move(coeffs));
    result.optimal_value = x[0];
    result.active_detail = lp.active_constraints(x);
    for (const ActiveConstraint& a : result.active_detail) {
        result.active_points.push_back(a.s);
    }
    return result;
}

UniquenessReport uniqueness_probe(const SearchConfig& cfg, int perturbations) {
    validate(cfg);
    if (perturbations < 2) {
        throw ContractError("uniqueness_probe: perturbations must be >= 2");
    }
    const int vars = degree_cap(cfg) + 1;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> tiny(-1e-7, 1e-7);

    std::vector<SearchResult> runs;
    runs.push_back(extremal_lp(cfg));
    for (int t = 0; t < perturbations; ++t) {
        std::vector<double> objective(vars, 0.0);
        objective[0] = 1.0;
        for (int k = 1; k < vars; ++k) objective[k] = tiny(rng);
        std::vector<size_t> order = identity_order(vars);
        std::shuffle(order.begin(), order.end(), rng);
        runs.push_back(run_real_exchange(cfg, objective, order));
    }

    double best = 0.0;
    for (const SearchResult& r : runs) best = std::max(best, r.optimal_value);
    const double keep_tol = 1e-6 * static_cast<double>(cfg.n) * cfg.n;

    UniquenessReport report;
    report.all_converged = true;
    for (const SearchResult& r : runs) {
        if (!r.converged) report.all_converged = false;
    }
    for (const SearchResult& r : runs) {
        if (r.optimal_value >= best - keep_tol) {
            report.optimizers.push_back(r.optimizer);
        }
    }

    const auto coeff_distance = [](const ComplexPoly& a, const ComplexPoly& b) {
        const int top = std::max(a.degree(), b.degree());
        double dist = 0.0;
        for (int k = 0; k <= top; ++k) {
            dist = std::max(dist, std::abs(a.coeff(k) - b.coeff(k)));
        }
        return dist;
    };

    for (size_t i = 0; i < report.optimizers.size(); ++i) {
        for (size_t j = i + 1; j < report.optimizers.size(); ++j) {
            report.max_pairwise_distance =
                std::max(report.max_pairwise_distance,
                         coeff_distance(report.optimizers[i],
                                        report.optimizers[j]));
        }
    }

    const ComplexPoly reference = extremal_polynomial(cfg.n).to_complex_poly();
    report.matches_extremal = true;
    for (const ComplexPoly& opt : report.optimizers) {
        if (coeff_distance(opt, reference) > 1e-4) {
            report.matches_extremal = false;
        }
    }
    return report;
}

}  // namespace bernlax
