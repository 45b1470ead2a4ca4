#ifndef QFORMS_SERIALIZE_HPP
#define QFORMS_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <qforms/eisenstein.hpp>
#include <qforms/mu_solver.hpp>
#include <qforms/report.hpp>

namespace qforms
{

using json = nlohmann::json;

/// [{"n": 0, "coeff": "..."}, ...] with ExtScalar string encoding.
json series_to_json(const ESeries &a);
/// Inverse of series_to_json; the order is the largest n present, missing n are zero.
ESeries series_from_json(const json &j);

/// Header "n,value", then one row per exponent with the value quoted.
std::string series_to_csv(const ESeries &a);
ESeries series_from_csv(std::string_view text);

json mu_to_json(const MuTable &t);
std::string mu_to_csv(const MuTable &t);
std::string mu_to_pretty(const MuTable &t);

json report_to_json(const VerificationReport &r, bool with_timing = false);
std::string report_to_pretty(const VerificationReport &r);

/// CSV field with embedded quotes doubled.
std::string csv_quote(std::string_view field);

} // namespace qforms

#endif
