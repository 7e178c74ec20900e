#ifndef BERNLAX_ROOTS_HPP
#define BERNLAX_ROOTS_HPP

#include <vector>

#include "bernlax/complex_poly.hpp"

namespace bernlax {

inline constexpr double kDefaultRootTol = 1e-9;
inline constexpr int kRootSweepCap = 200;

/// All degree() roots of p with multiplicity, via Aberth-Ehrlich
/// simultaneous iteration. Each returned root r satisfies the residual
/// contract |p(r)| <= tol * max_k |c_k| * max(1, |r|)^k. Exact zero
/// constant coefficients are deflated as roots at the origin first.
///
/// Requires degree >= 1. Throws RootConvergenceError (carrying the best
/// iterate) if the contract is not met within kRootSweepCap sweeps.
std::vector<Complex> roots(const ComplexPoly& p, double tol = kDefaultRootTol);

}  // namespace bernlax

#endif
