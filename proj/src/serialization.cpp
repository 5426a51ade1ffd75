#include "wilf/serialization.hpp"

#include <sstream>

#include "wilf/errors.hpp"

namespace wilf::io {

using nlohmann::json;

Format parse_format(const std::string& name)
{
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "plain") return Format::plain;
    throw UsageError("unknown format '" + name + "' (json, csv, plain)");
}

json to_json(const Rational& x) { return x.str(); }

json to_json(const PiLinear& x) { return json{{"rat", x.rat.str()}, {"pi", x.pi.str()}}; }

Rational rational_from_json(const json& j)
{
    if (!j.is_string()) throw UsageError("expected a rational string");
    return Rational::parse(j.get<std::string>());
}

PiLinear pi_linear_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("rat") || !j.contains("pi")) throw UsageError("expected {\"rat\", \"pi\"}");
    return {rational_from_json(j.at("rat")), rational_from_json(j.at("pi"))};
}

namespace {

std::string csv_pair(const Rational& x) { return to_string(x.numerator()) + "," + to_string(x.denominator()); }

template <class V>
std::string render_rows(const std::vector<Entry<V>>& rows, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(json{{"n", r.n}, {"value", to_json(r.value)}});
        out << arr.dump() << "\n";
        break;
    }
    case Format::csv:
        if constexpr (std::is_same_v<V, PiLinear>) {
            out << "n,rat_numerator,rat_denominator,pi_numerator,pi_denominator\n";
            for (const auto& r : rows) out << r.n << "," << csv_pair(r.value.rat) << "," << csv_pair(r.value.pi) << "\n";
        } else {
            out << "n,numerator,denominator\n";
            for (const auto& r : rows) out << r.n << "," << csv_pair(r.value) << "\n";
        }
        break;
    case Format::plain:
        for (const auto& r : rows) out << r.n << " " << r.value << "\n";
        break;
    }
    return out.str();
}

template <class Ring>
json series_json(const series::FormalSeries<Ring>& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return json{{"order", s.order()}, {"ring", series::ring_name<Ring>()}, {"coeffs", coeffs}};
}

template <class Ring>
std::string series_text(const series::FormalSeries<Ring>& s, Format f)
{
    if (f == Format::json) return series_json(s).dump() + "\n";
    std::vector<Entry<Ring>> rows;
    for (std::size_t n = 0; n <= s.order(); ++n) rows.push_back({static_cast<std::int64_t>(n), s[n]});
    return render_rows(rows, f);
}

} // namespace

std::string render(const std::vector<Entry<Rational>>& rows, Format f) { return render_rows(rows, f); }
std::string render(const std::vector<Entry<PiLinear>>& rows, Format f) { return render_rows(rows, f); }

json series_to_json(const series::RationalSeries& s) { return series_json(s); }
json series_to_json(const series::PiSeries& s) { return series_json(s); }
std::string render_series(const series::RationalSeries& s, Format f) { return series_text(s, f); }
std::string render_series(const series::PiSeries& s, Format f) { return series_text(s, f); }

} // namespace wilf::io
