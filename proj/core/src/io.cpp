#include "varreg/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace varreg {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

double parse_full_double(const std::string& s) {
    if (s.empty())
        throw InvalidInput("bad_argument", "empty number");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + s.size())
        throw InvalidInput("bad_argument", "malformed number: '" + s + "'");
    return value;
}

// "", "+", "-" stand for +/-1 in front of i
double parse_imag_body(const std::string& s) {
    if (s.empty() || s == "+")
        return 1.0;
    if (s == "-")
        return -1.0;
    return parse_full_double(s);
}

Complex parse_pair_form(const std::string& s) {
    if (s.size() < 2 || s.back() != ']')
        throw InvalidInput("bad_argument", "malformed [re,im] pair: '" + s + "'");
    const std::string body = s.substr(1, s.size() - 2);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
        throw InvalidInput("bad_argument", "[re,im] pair needs exactly two components");
    return {parse_full_double(body.substr(0, comma)), parse_full_double(body.substr(comma + 1))};
}

} // namespace

Complex parse_complex(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty())
        throw InvalidInput("bad_argument", "empty complex literal");
    if (s.front() == '[')
        return parse_pair_form(s);
    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        // split at the last sign that is not an exponent sign and not leading
        std::size_t split = std::string::npos;
        for (std::size_t idx = body.size(); idx-- > 1;) {
            const char c = body[idx];
            if ((c == '+' || c == '-') && body[idx - 1] != 'e' && body[idx - 1] != 'E') {
                split = idx;
                break;
            }
        }
        if (split == std::string::npos)
            return {0.0, parse_imag_body(body)};
        return {parse_full_double(body.substr(0, split)), parse_imag_body(body.substr(split))};
    }
    return {parse_full_double(s), 0.0};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    const std::string s = strip_spaces(text);
    if (s.empty())
        return out;
    std::string current;
    int depth = 0;
    for (char c : s) {
        if (c == '[')
            ++depth;
        else if (c == ']')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_complex(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(parse_complex(current));
    return out;
}

std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

} // namespace varreg
