// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <istream>
#include <string>
#include <vector>

namespace rfprop {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// At most `sig` significant digits, printf %g style (trailing zeros dropped).
std::string format_sig(double v, int sig);

// Fixed-point with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

// Strict numeric parsing; the whole token must be consumed. ParseError otherwise.
double parse_double(const std::string& s);
long parse_long(const std::string& s);

std::string to_lower(const std::string& s);
std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

struct KvEntry {
    std::string key;
    std::string value;
    int line = 0;
};

// key=value lines; blank lines and lines starting with '#' are skipped.
std::vector<KvEntry> parse_kv(std::istream& in);

} // namespace rfprop
