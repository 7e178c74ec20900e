#ifndef BERNLAX_IO_HPP
#define BERNLAX_IO_HPP

#include <json.hpp>
#include <string>
#include <variant>

#include "bernlax/complex_poly.hpp"
#include "bernlax/laurent_poly.hpp"

namespace bernlax {

inline constexpr int kFileFormatVersion = 1;

/// Contents of a polynomial file: either an ordinary polynomial or a
/// Laurent polynomial (coefficients listed a_{-n} first).
using PolynomialFileValue = std::variant<ComplexPoly, LaurentPoly>;

nlohmann::json polynomial_to_json(const ComplexPoly& p);
nlohmann::json laurent_to_json(const LaurentPoly& f);

/// Parse and validate a polynomial file object. Throws ParseError with a
/// diagnostic on malformed input.
PolynomialFileValue polynomial_file_from_json(const nlohmann::json& j);

void save_json_file(const std::string& path, const nlohmann::json& j);
PolynomialFileValue load_polynomial_file(const std::string& path);

/// Envelope for machine-readable command output: the inputs echo and the
/// tolerances in effect make certified runs reproducible.
nlohmann::json make_run_report(const std::string& command,
                               nlohmann::json inputs, nlohmann::json outputs,
                               nlohmann::json tolerances);

/// JSON value for a double that may be infinite (serialized as a string,
/// since JSON numbers cannot carry infinities).
nlohmann::json json_real(double v);

/// Complex number as a [re, im] pair.
nlohmann::json json_complex(Complex z);

}  // namespace bernlax

#endif
