#include "bernlax/circle_scan.hpp"

#include <cmath>

#include "bernlax/errors.hpp"

namespace bernlax {

namespace {

void check_oversample(int oversample) {
    if (oversample < 4) {
        throw ContractError("circle scan: oversample must be >= 4");
    }
}

}  // namespace

CircleExtremum sup_modulus_on_circle(const ComplexPoly& p, int oversample) {
    check_oversample(oversample);
    const int base = 2 * std::max(0, p.degree()) + 1;
    return detail::scan_circle_max(
        [&p](double theta) { return std::abs(p(std::polar(1.0, theta))); },
        base, oversample);
}

CircleExtremum sup_modulus_on_circle(const LaurentPoly& f, int oversample) {
    check_oversample(oversample);
    const int base = 2 * f.center_degree() + 1;
    return detail::scan_circle_max(
        [&f](double theta) { return std::abs(f(std::polar(1.0, theta))); },
        base, oversample);
}

CircleExtremum min_real_on_circle(const LaurentPoly& f, int oversample) {
    check_oversample(oversample);
    if (!f.is_hermitian()) {
        throw ContractError("min_real_on_circle: input is not Hermitian");
    }
    const int base = 2 * f.center_degree() + 1;
    CircleExtremum ext = detail::scan_circle_max(
        [&f](double theta) { return -f(std::polar(1.0, theta)).real(); },
        base, oversample);
    ext.value = -ext.value;
    return ext;
}

}  // namespace bernlax
