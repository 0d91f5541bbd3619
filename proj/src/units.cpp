#include "fluxring/units.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "fluxring/errors.hpp"

namespace fluxring {

namespace {

const std::vector<std::pair<std::string, double>>& suffixes(Dimension dim) {
    static const std::vector<std::pair<std::string, double>> none{};
    static const std::vector<std::pair<std::string, double>> henry{{"pH", 1e-12}};
    static const std::vector<std::pair<std::string, double>> farad{{"fF", 1e-15}};
    static const std::vector<std::pair<std::string, double>> ampere{{"uA", 1e-6}};
    static const std::vector<std::pair<std::string, double>> metre{{"um", 1e-6}};
    static const std::vector<std::pair<std::string, double>> second{{"ns", 1e-9},
                                                                    {"ps", 1e-12}};
    static const std::vector<std::pair<std::string, double>> ohm{{"ohm", 1.0}};
    switch (dim) {
        case Dimension::inductance: return henry;
        case Dimension::capacitance: return farad;
        case Dimension::current: return ampere;
        case Dimension::length: return metre;
        case Dimension::time: return second;
        case Dimension::resistance: return ohm;
        default: return none;
    }
}

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

double parse_quantity(const std::string& text, Dimension dim) {
    const std::string t = trimmed(text);
    if (t.empty()) throw InvalidArgument("empty quantity");

    const char* begin = t.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin)
        throw InvalidArgument("not a number: '" + text + "'");
    if (!std::isfinite(value))
        throw InvalidArgument("quantity must be finite: '" + text + "'");

    const std::string rest(end);
    if (rest.empty()) return value;

    for (const auto& [name, scale] : suffixes(dim))
        if (rest == name) return value * scale;

    throw InvalidArgument("unknown unit suffix '" + rest + "' in '" + text + "'");
}

}  // namespace fluxring
