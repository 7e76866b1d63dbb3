#include "fran/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace fran {

Rational ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  q.canonicalize();
  return q;
}

namespace {

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    auto exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");

  mpz_class num(digits, 10);
  mpz_class den = 1;
  long shift = exponent - fraction_digits;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift < 0) {
    den = power;
  } else {
    num *= power;
  }
  Rational q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

std::int64_t floor_to_int(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!out.fits_slong_p()) throw std::overflow_error("rational floor out of range");
  return out.get_si();
}

std::int64_t ceil_to_int(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!out.fits_slong_p()) throw std::overflow_error("rational ceiling out of range");
  return out.get_si();
}

}  // namespace fran
