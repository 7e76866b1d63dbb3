#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fran/rational.hpp"

namespace fran::cli {

/// Fixed 12-digit decimal; "inf" for infinities.
std::string decimal(double x);

/// {"value": "p/q", "decimal": "..."} for exact quantities.
nlohmann::json exact_json(const Rational& q);

/// "~d.dddddddddddd" for quantities that may involve radicals.
std::string approx(double x);

/// Comma-separated rationals, e.g. "0,1/4,0.5".
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace fran::cli
