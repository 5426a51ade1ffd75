#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wilf/formal_series.hpp"
#include "wilf/pi_linear.hpp"
#include "wilf/rational.hpp"

namespace wilf::io {

enum class Format { json, csv, plain };

Format parse_format(const std::string& name); // UsageError on anything else

nlohmann::json to_json(const Rational& x);   // "p/q"
nlohmann::json to_json(const PiLinear& x);   // {"rat": "p/q", "pi": "p/q"}
Rational rational_from_json(const nlohmann::json& j);
PiLinear pi_linear_from_json(const nlohmann::json& j);

// One indexed value of an exported sequence.
template <class V>
struct Entry {
    std::int64_t n;
    V value;
};

// json: [{"n": 0, "value": ...}, ...]; csv: header + n,numerator,denominator
// (PiLinear: n,rat_numerator,rat_denominator,pi_numerator,pi_denominator);
// plain: "n value" per line.
std::string render(const std::vector<Entry<Rational>>& rows, Format f);
std::string render(const std::vector<Entry<PiLinear>>& rows, Format f);

// {"order": N, "ring": "rational"|"pi-linear", "coeffs": [...]}
nlohmann::json series_to_json(const series::RationalSeries& s);
nlohmann::json series_to_json(const series::PiSeries& s);
std::string render_series(const series::RationalSeries& s, Format f);
std::string render_series(const series::PiSeries& s, Format f);

} // namespace wilf::io
