#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "fran/model.hpp"

namespace fran::cli {

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

}  // namespace

std::string decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

nlohmann::json exact_json(const Rational& q) {
  return {{"value", to_fraction_string(q)}, {"decimal", decimal(to_double(q))}};
}

std::string approx(double x) { return "~" + decimal(x); }

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(parse_rational(s));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ConfigError("not an integer: '" + s + "'");
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text)) out.push_back(to_double(parse_rational(s)));
  return out;
}

}  // namespace fran::cli
