#pragma once

/**
 * @file parse.hpp
 * @brief Parsing of command-line parameter forms: decimals, fractions p/q,
 *        and the exact surd forms sqrt(k) and sqrt(k)/d.
 */

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcalc/extended.hpp"

namespace defcalc {

/// Accepts "2", "-0.5", "3/4", "sqrt(33)/2", "sqrt(2)".
inline double parse_real_parameter(const std::string& text) {
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty numeric parameter");
    if (t.rfind("sqrt(", 0) == 0) {
        const auto close = t.find(')');
        if (close == std::string::npos)
            throw std::invalid_argument("malformed surd '" + text + "'");
        const double k = std::stod(t.substr(5, close - 5));
        if (k < 0) throw std::invalid_argument("negative radicand in '" + text + "'");
        double denom = 1.0;
        const std::string rest = trim(t.substr(close + 1));
        if (!rest.empty()) {
            if (rest[0] != '/')
                throw std::invalid_argument("malformed surd '" + text + "'");
            denom = std::stod(rest.substr(1));
            if (denom == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return std::sqrt(k) / denom;
    }
    const auto slash = t.find('/');
    if (slash != std::string::npos) {
        const double num = std::stod(t.substr(0, slash));
        const double den = std::stod(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return num / den;
    }
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("malformed number '" + text + "'");
    return v;
}

/// Comma-separated list of parse_real_parameter forms.
inline std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(parse_real_parameter(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// "3", "inf" -> extended count.
inline ExtendedCount parse_extended(const std::string& text) {
    if (text == "inf" || text == "INF" || text == "infinity")
        return ExtendedCount::infinity();
    const long long v = std::stoll(text);
    if (v < 0) throw std::invalid_argument("counts must be nonnegative");
    return ExtendedCount(static_cast<std::uint64_t>(v));
}

/// "a,b" -> defect pair (components may be "inf").
inline DefectPair parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected a pair 'n+,n-', got '" + text + "'");
    return {parse_extended(text.substr(0, comma)), parse_extended(text.substr(comma + 1))};
}

}  // namespace defcalc
