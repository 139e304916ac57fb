#include "eformat.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace rec {

std::optional<std::string> format_e(double v) {
    if (!std::isfinite(v)) return std::nullopt;
    if (v == 0.0) return std::string(" 0.00000E 00");

    // snprintf %.5e rounds the binary value correctly to 6 significant
    // decimal digits (nearest, ties resolved by the exact binary value).
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5e", v);

    const char* p = buf;
    bool neg = false;
    if (*p == '-') {
        neg = true;
        ++p;
    }
    // p now looks like "d.ddddd" 'e' sign digits
    const char* e = std::strchr(p, 'e');
    if (!e || e - p != 7) return std::nullopt;
    long exp = std::strtol(e + 1, nullptr, 10);
    if (exp > 99 || exp < -99) return std::nullopt;

    std::string out;
    out.reserve(kFieldWidth);
    out.push_back(neg ? '-' : ' ');
    out.append(p, 7);
    out.push_back('E');
    out.push_back(exp < 0 ? '-' : ' ');
    char two[3];
    std::snprintf(two, sizeof two, "%02ld", exp < 0 ? -exp : exp);
    out.append(two);
    return out;
}

std::optional<double> parse_e(std::string_view field) {
    size_t b = field.find_first_not_of(' ');
    if (b == std::string_view::npos) return std::nullopt;
    size_t last = field.find_last_not_of(' ');
    std::string s(field.substr(b, last - b + 1));

    // Normalize "E 01" / "E-01" / "E+01" into strtod-friendly form.
    std::string norm;
    norm.reserve(s.size() + 1);
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == 'E' || c == 'e') {
            norm.push_back('e');
            if (i + 1 < s.size() && s[i + 1] == ' ') {
                norm.push_back('+');
                ++i;
            }
            continue;
        }
        if (c == ' ') return std::nullopt;  // interior blank outside exponent
        norm.push_back(c);
    }
    const char* cs = norm.c_str();
    char* end = nullptr;
    double v = std::strtod(cs, &end);
    if (end == cs || *end != '\0' || !std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace rec
