#include "bernlax/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bernlax/circle_scan.hpp"
#include "bernlax/errors.hpp"
#include "bernlax/roots.hpp"

namespace bernlax {

namespace {

// Newton on F' sharpens the center of a double circle root: it is a
// simple, linearly conditioned root of F'.
Complex polish_cluster_center(const ComplexPoly& dF, const ComplexPoly& ddF,
                              Complex center) {
    Complex z = center;
    for (int it = 0; it < 8; ++it) {
        const Complex num = dF(z);
        const Complex den = ddF(z);
        if (std::abs(den) < 1e-300) break;
        const Complex step = num / den;
        if (std::abs(step) > 1e-2) break;  // left the basin, keep centroid
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    return std::abs(z - center) <= 1e-4 ? z : center;
}

std::vector<Complex> expand_from_roots(const std::vector<Complex>& rs) {
    std::vector<Complex> coeffs = {Complex{1.0, 0.0}};
    for (const Complex& r : rs) {
        coeffs.push_back(Complex{0.0, 0.0});
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
            coeffs[static_cast<size_t>(k)] =
                coeffs[static_cast<size_t>(k - 1)] -
                r * coeffs[static_cast<size_t>(k)];
        }
        coeffs[0] *= -r;
    }
    return coeffs;
}

// Dense Gaussian elimination with partial pivoting; solves in place.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            if (factor == 0.0) continue;
            for (size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    for (size_t col = n; col-- > 0;) {
        for (size_t j = col + 1; j < n; ++j) b[col] -= a[col][j] * b[j];
        b[col] /= a[col][col];
    }
    return true;
}

double max_coeff_residual(const std::vector<Complex>& p,
                          const LaurentPoly& f) {
    const int m = static_cast<int>(p.size()) - 1;
    double worst = 0.0;
    for (int k = 0; k <= m; ++k) {
        Complex sum{0.0, 0.0};
        for (int t = 0; t + k <= m; ++t) {
            sum += p[static_cast<size_t>(t + k)] *
                   std::conj(p[static_cast<size_t>(t)]);
        }
        worst = std::max(worst, std::abs(sum - f.coeff(k)));
    }
    return worst;
}

// Newton iteration on the coefficient identity reconstruct(P) = f. The
// root products pin the zero assignment but inherit the root finder's
// conditioning; the convolution system is the well-conditioned direction
// and polishes the coefficients to near machine accuracy. Unknowns are
// the real and imaginary parts of P with Im(lead) frozen (the phase
// normalization); steps are accepted while the residual decreases.
void refine_factor(std::vector<Complex>& p, const LaurentPoly& f) {
    const int m = static_cast<int>(p.size()) - 1;
    if (m < 1) return;
    const size_t unknowns = 2 * static_cast<size_t>(m) + 1;
    double best = max_coeff_residual(p, f);

    for (int pass = 0; pass < 20; ++pass) {
        // Unknown layout: Re p_0..p_m, then Im p_0..p_{m-1}.
        std::vector<std::vector<double>> jac(
            unknowns, std::vector<double>(unknowns, 0.0));
        std::vector<double> rhs(unknowns, 0.0);
        const auto re_col = [](int j) { return static_cast<size_t>(j); };
        const auto im_col = [m](int j) {
            return static_cast<size_t>(m + 1 + j);
        };

        for (int k = 0; k <= m; ++k) {
            Complex sum{0.0, 0.0};
            for (int t = 0; t + k <= m; ++t) {
                sum += p[static_cast<size_t>(t + k)] *
                       std::conj(p[static_cast<size_t>(t)]);
            }
            const Complex residual = f.coeff(k) - sum;
            const size_t row_re = static_cast<size_t>(k == 0 ? 0 : 2 * k - 1);
            const size_t row_im = static_cast<size_t>(2 * k);
            rhs[row_re] = residual.real();
            if (k > 0) rhs[row_im] = residual.imag();

            for (int j = 0; j <= m; ++j) {
                // d a_k / d p_j pieces: conj(p_{j-k}) from the left slot,
                // p_{j+k} from the conjugated slot.
                Complex dre{0.0, 0.0};
                if (j - k >= 0) dre += std::conj(p[static_cast<size_t>(j - k)]);
                if (j + k <= m) dre += p[static_cast<size_t>(j + k)];
                Complex dim{0.0, 0.0};
                if (j - k >= 0) {
                    dim += Complex{0.0, 1.0} *
                           std::conj(p[static_cast<size_t>(j - k)]);
                }
                if (j + k <= m) {
                    dim -= Complex{0.0, 1.0} * p[static_cast<size_t>(j + k)];
                }
                jac[row_re][re_col(j)] = dre.real();
                if (k > 0) jac[row_im][re_col(j)] = dre.imag();
                if (j < m) {
                    jac[row_re][im_col(j)] = dim.real();
                    if (k > 0) jac[row_im][im_col(j)] = dim.imag();
                }
            }
        }

        if (!solve_dense(jac, rhs)) return;
        bool accepted = false;
        double damping = 1.0;
        for (int attempt = 0; attempt < 4; ++attempt, damping *= 0.5) {
            std::vector<Complex> candidate = p;
            for (int j = 0; j <= m; ++j) {
                candidate[static_cast<size_t>(j)] +=
                    damping *
                    Complex{rhs[re_col(j)], j < m ? rhs[im_col(j)] : 0.0};
            }
            const double next = max_coeff_residual(candidate, f);
            if (next < best) {
                p = std::move(candidate);
                best = next;
                accepted = true;
                break;
            }
        }
        if (!accepted) return;
    }
}

// Synthetic division of c (ascending) by (z - point); returns the
// quotient through `quotient` and the remainder as value.
Complex divide_linear(const std::vector<Complex>& c, Complex point,
                      std::vector<Complex>& quotient) {
    const size_t d = c.size() - 1;
    quotient.assign(d, Complex{0.0, 0.0});
    Complex carry = c[d];
    for (size_t k = d; k >= 1; --k) {
        quotient[k - 1] = carry;
        carry = c[k - 1] + carry * point;
    }
    return carry;
}

// Removes factors (z - point)^2 while both synthetic-division remainders
// stay at coefficient-noise level. Structural high-multiplicity zeros at
// +-1 (padding factors of the conjugation transform) would otherwise
// stall the simultaneous root iteration on a wide noise ring.
int deflate_even_at(std::vector<Complex>& c, Complex point, double noise) {
    int removed = 0;
    while (c.size() >= 3) {
        std::vector<Complex> once;
        if (std::abs(divide_linear(c, point, once)) > noise) break;
        std::vector<Complex> twice;
        if (std::abs(divide_linear(once, point, twice)) > noise) break;
        c = std::move(twice);
        removed += 2;
    }
    return removed;
}

}  // namespace

LaurentPoly reconstruct(const ComplexPoly& P) {
    if (P.is_zero()) return LaurentPoly();
    const int m = P.degree();
    std::vector<Complex> a(2 * static_cast<size_t>(m) + 1, Complex{0.0, 0.0});
    for (int shift = 0; shift <= m; ++shift) {
        Complex sum{0.0, 0.0};
        for (int k = 0; k + shift <= m; ++k) {
            sum += P.coeff(k + shift) * std::conj(P.coeff(k));
        }
        a[static_cast<size_t>(m + shift)] = sum;
        a[static_cast<size_t>(m - shift)] = std::conj(sum);
    }
    return LaurentPoly(m, std::move(a));
}

SpectralFactor fejer_riesz(const LaurentPoly& f_in, double tol) {
    if (!f_in.is_hermitian()) {
        throw ContractError("fejer_riesz: input is not Hermitian");
    }
    if (f_in.is_zero()) {
        throw ContractError("fejer_riesz: input is identically zero");
    }
    const CircleExtremum min_real = min_real_on_circle(f_in);
    if (min_real.value < -tol) {
        throw NotNonnegativeError(
            "fejer_riesz: input is negative on the unit circle",
            min_real.argument);
    }

    const LaurentPoly f = f_in.trimmed();
    const int m = f.center_degree();
    const double a0 = f.coeff(0).real();

    if (m == 0) {
        if (a0 <= 0.0) {
            throw NotNonnegativeError(
                "fejer_riesz: constant input is not positive", 0.0);
        }
        SpectralFactor out;
        out.P = ComplexPoly({Complex{std::sqrt(a0), 0.0}});
        out.residual = 0.0;
        out.min_root_modulus = std::numeric_limits<double>::infinity();
        return out;
    }

    // F(z) = z^m f(z), ordinary polynomial of degree 2m with F(0) != 0.
    std::vector<Complex> coeffs(f.coeffs().begin(), f.coeffs().end());
    double coeff_scale = 0.0;
    for (const Complex& c : coeffs) {
        coeff_scale = std::max(coeff_scale, std::abs(c));
    }
    const double deflate_noise = 1e-10 * coeff_scale *
                                 static_cast<double>(coeffs.size());

    // Circle zeros are certified and frozen; only the outer factor gets
    // coefficient polishing later.
    std::vector<Complex> circle_roots;
    for (int count =
             deflate_even_at(coeffs, Complex{1.0, 0.0}, deflate_noise) / 2;
         count > 0; --count) {
        circle_roots.emplace_back(1.0, 0.0);
    }
    for (int count =
             deflate_even_at(coeffs, Complex{-1.0, 0.0}, deflate_noise) / 2;
         count > 0; --count) {
        circle_roots.emplace_back(-1.0, 0.0);
    }

    std::vector<Complex> remaining;
    if (coeffs.size() > 1) {
        const ComplexPoly F{coeffs};
        remaining = roots(F);
    }

    // Cluster the remaining roots; split multiple roots land within the
    // square-root-of-noise radius of each other.
    const double cluster_gap = 1e-4;
    std::vector<std::vector<Complex>> clusters;
    std::vector<bool> taken(remaining.size(), false);
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (taken[i]) continue;
        std::vector<Complex> cluster = {remaining[i]};
        taken[i] = true;
        for (size_t j = i + 1; j < remaining.size(); ++j) {
            if (taken[j]) continue;
            if (std::abs(remaining[j] - cluster.front()) <= cluster_gap) {
                cluster.push_back(remaining[j]);
                taken[j] = true;
            }
        }
        clusters.push_back(std::move(cluster));
    }

    const ComplexPoly F_reduced{coeffs};
    const ComplexPoly dF = F_reduced.is_zero() ? ComplexPoly()
                                               : F_reduced.derivative();
    const ComplexPoly ddF = dF.is_zero() ? ComplexPoly() : dF.derivative();

    std::vector<Complex> outside;
    std::vector<Complex> inside;
    for (const auto& cluster : clusters) {
        Complex centroid{0.0, 0.0};
        for (const Complex& r : cluster) centroid += r;
        centroid /= static_cast<double>(cluster.size());
        const bool near_circle = std::abs(std::abs(centroid) - 1.0) <=
                                 (cluster.size() == 1 ? kCircleClassTol
                                                      : 1e-5);
        if (near_circle) {
            if (cluster.size() % 2 != 0) {
                throw NotNonnegativeError(
                    "fejer_riesz: circle root with odd multiplicity",
                    std::arg(centroid));
            }
            if (cluster.size() == 2) {
                centroid = polish_cluster_center(dF, ddF, centroid);
            }
            centroid /= std::abs(centroid);  // project onto the circle
            for (size_t copy = 0; copy < cluster.size() / 2; ++copy) {
                circle_roots.push_back(centroid);
            }
        } else {
            for (const Complex& r : cluster) {
                (std::abs(r) > 1.0 ? outside : inside).push_back(r);
            }
        }
    }

    // Pair every outside root with its reflection 1/conj(r) inside. The
    // acceptance band widens with the root's conditioning: at degree ~24
    // a well-separated root is still only determined to
    // eps * sum|c_k||r|^k / |F'(r)|, which can exceed a fixed 1e-6.
    const auto root_uncertainty = [&](Complex r) {
        if (dF.is_zero()) return 0.0;
        double scale = 0.0;
        double rk = 1.0;
        for (const Complex& c : coeffs) {
            scale += std::abs(c) * rk;
            rk *= std::abs(r);
        }
        const double slope = std::abs(dF(r));
        if (slope < 1e-300) return 1.0;
        return 2.22e-16 * scale / slope;
    };
    const double pair_tol = std::max(kRootPairTol, tol);
    std::vector<bool> used(inside.size(), false);
    for (const Complex& r : outside) {
        const Complex mirror = 1.0 / std::conj(r);
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < inside.size(); ++i) {
            if (used[i]) continue;
            const double dist = std::abs(inside[i] - mirror);
            if (dist < best_dist) {
                best_dist = dist;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) {
            throw NotNonnegativeError(
                "fejer_riesz: unpaired root off the circle", std::arg(r));
        }
        const Complex partner = inside[static_cast<size_t>(best)];
        const double slack =
            std::max(pair_tol,
                     10.0 * (root_uncertainty(r) + root_uncertainty(partner)));
        if (std::abs(r * std::conj(partner) - 1.0) > slack) {
            throw NotNonnegativeError(
                "fejer_riesz: unpaired root off the circle", std::arg(r));
        }
        used[static_cast<size_t>(best)] = true;
    }
    for (size_t i = 0; i < inside.size(); ++i) {
        if (!used[i]) {
            throw NotNonnegativeError(
                "fejer_riesz: interior root without an exterior partner",
                std::arg(inside[i]));
        }
    }

    if (circle_roots.size() + outside.size() != static_cast<size_t>(m)) {
        throw InternalConsistencyError(
            "fejer_riesz: factor root count does not match the degree");
    }
    if (!(a0 > 0.0)) {
        throw NotNonnegativeError("fejer_riesz: degenerate mean coefficient",
                                  0.0);
    }

    // Deconvolve the certified circle zeros out of F; what remains is the
    // self-convolution of the outer factor alone, which is the
    // well-conditioned subproblem for coefficient polishing. (Polishing P
    // as a whole would relocate the circle zeros, which downstream
    // derivative identities depend on.) Each removed pair (z-c)^2 stands
    // for z * reconstruct(z-c) = -conj(c) (z-c)^2, so the residue keeps a
    // phase of -conj(c) per circle zero that must be divided out.
    Complex circle_phase{1.0, 0.0};
    for (const Complex& c : circle_roots) {
        circle_phase *= -std::conj(c);
        if (c == Complex{1.0, 0.0} || c == Complex{-1.0, 0.0}) continue;
        std::vector<Complex> once;
        divide_linear(coeffs, c, once);
        std::vector<Complex> twice;
        divide_linear(once, c, twice);
        coeffs = std::move(twice);
    }
    for (Complex& v : coeffs) v /= circle_phase;
    const size_t outer_count = outside.size();
    if (coeffs.size() != 2 * outer_count + 1) {
        throw InternalConsistencyError(
            "fejer_riesz: outer residue degree mismatch");
    }

    std::vector<Complex> outer;  // coefficients of the outer factor Q
    double min_modulus = std::numeric_limits<double>::infinity();
    if (outer_count == 0) {
        // magnitude is fixed by the final rescale against a_0
        outer = {Complex{1.0, 0.0}};
    } else {
        // Hermitian Laurent residue h with reconstruct(Q) = h.
        std::vector<Complex> h_coeffs(coeffs.size());
        const int mo = static_cast<int>(outer_count);
        for (int k = -mo; k <= mo; ++k) {
            const Complex up = coeffs[static_cast<size_t>(k + mo)];
            const Complex down =
                std::conj(coeffs[static_cast<size_t>(mo - k)]);
            h_coeffs[static_cast<size_t>(k + mo)] = 0.5 * (up + down);
        }
        const LaurentPoly h(mo, std::move(h_coeffs));

        const std::vector<Complex> monic = expand_from_roots(outside);
        double norm_sq = 0.0;
        for (const Complex& c : monic) norm_sq += std::norm(c);
        const double h0 = h.coeff(0).real();
        if (h0 <= 0.0 || norm_sq <= 0.0) {
            throw NotNonnegativeError(
                "fejer_riesz: degenerate outer residue", 0.0);
        }
        const double q_scale = std::sqrt(h0 / norm_sq);
        outer.resize(monic.size());
        for (size_t k = 0; k < monic.size(); ++k) {
            outer[k] = q_scale * monic[k];
        }
        refine_factor(outer, h);

        // The polish can slide a near-circle zero onto its reflected
        // branch (same modulus on the circle, zero inside the disk).
        // Flip offenders back and re-polish; when the polish insists on
        // the wrong branch, keep the unpolished outside-branch rebuild
        // (the zero-free certificate outranks the last digits).
        const auto rebuild = [&](const std::vector<Complex>& rts) {
            const std::vector<Complex> rebuilt = expand_from_roots(rts);
            double norm = 0.0;
            for (const Complex& c : rebuilt) norm += std::norm(c);
            outer.assign(rebuilt.size(), Complex{});
            const double s = std::sqrt(h0 / norm);
            for (size_t k = 0; k < rebuilt.size(); ++k) {
                outer[k] = s * rebuilt[k];
            }
        };
        for (int pass = 0; pass < 3; ++pass) {
            min_modulus = std::numeric_limits<double>::infinity();
            std::vector<Complex> outer_roots = roots(ComplexPoly{outer});
            bool flipped = false;
            for (Complex& r : outer_roots) {
                if (std::abs(r) < 1.0 - 1e-9) {
                    r = 1.0 / std::conj(r);
                    flipped = true;
                }
                min_modulus = std::min(min_modulus, std::abs(r));
            }
            if (!flipped) break;
            rebuild(outer_roots);
            if (pass < 2) {
                refine_factor(outer, h);
            }
        }
    }
    if (!circle_roots.empty()) min_modulus = std::min(min_modulus, 1.0);

    // P = (circle factor) * (outer factor), rescaled so the mean
    // coefficient of the reconstruction matches a_0 exactly.
    std::vector<Complex> p_coeffs = expand_from_roots(circle_roots);
    {
        std::vector<Complex> full(p_coeffs.size() + outer.size() - 1,
                                  Complex{0.0, 0.0});
        for (size_t i = 0; i < p_coeffs.size(); ++i) {
            for (size_t j = 0; j < outer.size(); ++j) {
                full[i + j] += p_coeffs[i] * outer[j];
            }
        }
        p_coeffs = std::move(full);
    }
    double total_norm = 0.0;
    for (const Complex& c : p_coeffs) total_norm += std::norm(c);
    if (total_norm <= 0.0) {
        throw NotNonnegativeError("fejer_riesz: degenerate factor", 0.0);
    }
    const double rescale = std::sqrt(a0 / total_norm);
    for (Complex& c : p_coeffs) c *= rescale;

    SpectralFactor out;
    out.P = ComplexPoly(std::move(p_coeffs));
    out.min_root_modulus = min_modulus;

    const LaurentPoly rebuilt = reconstruct(out.P);
    double residual = 0.0;
    const int span = std::max(f_in.center_degree(), rebuilt.center_degree());
    for (int k = -span; k <= span; ++k) {
        residual = std::max(residual,
                            std::abs(rebuilt.coeff(k) - f_in.coeff(k)));
    }
    out.residual = residual;
    return out;
}

}  // namespace bernlax
