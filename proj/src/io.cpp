#include "bernlax/io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "bernlax/errors.hpp"

namespace bernlax {

using nlohmann::json;

json json_real(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

json json_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json polynomial_to_json(const ComplexPoly& p) {
    json coeffs = json::array();
    // The zero polynomial is stored with a single zero coefficient.
    for (const Complex& c : p.coeffs()) coeffs.push_back(json_complex(c));
    return json{{"format_version", kFileFormatVersion},
                {"kind", "polynomial"},
                {"degree", std::max(0, p.degree())},
                {"coeffs", coeffs}};
}

json laurent_to_json(const LaurentPoly& f) {
    json coeffs = json::array();
    for (const Complex& c : f.coeffs()) coeffs.push_back(json_complex(c));
    return json{{"format_version", kFileFormatVersion},
                {"kind", "laurent"},
                {"center_degree", f.center_degree()},
                {"coeffs", coeffs}};
}

namespace {

std::vector<Complex> parse_coeffs(const json& j) {
    if (!j.is_array()) throw ParseError("coeffs must be an array");
    std::vector<Complex> out;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number()) {
            throw ParseError("each coefficient must be a [re, im] pair");
        }
        const double re = entry[0].get<double>();
        const double im = entry[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw ParseError("coefficients must be finite");
        }
        out.emplace_back(re, im);
    }
    return out;
}

}  // namespace

PolynomialFileValue polynomial_file_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("polynomial file must be an object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != kFileFormatVersion) {
        throw ParseError("unsupported or missing format_version (expected 1)");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("missing kind");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (!j.contains("coeffs")) throw ParseError("missing coeffs");
    std::vector<Complex> coeffs = parse_coeffs(j["coeffs"]);

    if (kind == "polynomial") {
        if (!j.contains("degree") || !j["degree"].is_number_integer()) {
            throw ParseError("missing degree");
        }
        const int degree = j["degree"].get<int>();
        if (degree < 0 ||
            coeffs.size() != static_cast<size_t>(degree) + 1) {
            throw ParseError("coeffs length must equal degree + 1");
        }
        return ComplexPoly(std::move(coeffs));
    }
    if (kind == "laurent") {
        if (!j.contains("center_degree") ||
            !j["center_degree"].is_number_integer()) {
            throw ParseError("missing center_degree");
        }
        const int n = j["center_degree"].get<int>();
        if (n < 0 || coeffs.size() != 2 * static_cast<size_t>(n) + 1) {
            throw ParseError("coeffs length must equal 2*center_degree + 1");
        }
        return LaurentPoly(n, std::move(coeffs));
    }
    throw ParseError("kind must be \"polynomial\" or \"laurent\"");
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

PolynomialFileValue load_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return polynomial_file_from_json(j);
}

json make_run_report(const std::string& command, json inputs, json outputs,
                     json tolerances) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"tolerances", std::move(tolerances)},
                {"timestamp", stamp}};
}

}  // namespace bernlax
