#include "deltagames/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "deltagames/error.hpp"

namespace deltagames {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SYNTAX";
    case ErrorCode::kShape: return "SHAPE";
    case ErrorCode::kDeltaRange: return "DELTA_RANGE";
    case ErrorCode::kDuplicateLabel: return "DUPLICATE_LABEL";
    case ErrorCode::kUnknownKey: return "UNKNOWN_KEY";
    case ErrorCode::kMissingKey: return "MISSING_KEY";
    case ErrorCode::kBadNumber: return "BAD_NUMBER";
    case ErrorCode::kUnknownParameter: return "UNKNOWN_PARAMETER";
    case ErrorCode::kSchemaVersion: return "SCHEMA_VERSION";
    case ErrorCode::kDimension: return "DIMENSION";
    case ErrorCode::kProbability: return "PROBABILITY";
    case ErrorCode::kIndex: return "INDEX";
    case ErrorCode::kDistribution: return "DISTRIBUTION";
    case ErrorCode::kStaleEquilibria: return "STALE_EQUILIBRIA";
    case ErrorCode::kDomain: return "DOMAIN";
    case ErrorCode::kUsage: return "USAGE";
  }
  return "UNKNOWN";
}

namespace {

constexpr long kMaxExponent = 4096;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::kBadNumber,
              "not an exact number: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const mpz_class numerator{std::string(num), 10};
    const mpz_class denominator{std::string(den), 10};
    if (denominator == 0) bad_number(text);
    Rational value{numerator, denominator};
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }

  std::string_view exponent_part;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    exponent_part = body.substr(e + 1);
    body = body.substr(0, e);
    if (exponent_part.empty()) bad_number(text);
  }
  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
    if (frac_part.empty() && int_part.empty()) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
  }
  if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
  if (int_part.empty() && frac_part.empty()) bad_number(text);

  long exponent = 0;
  if (!exponent_part.empty()) {
    bool exp_negative = false;
    if (exponent_part.front() == '-' || exponent_part.front() == '+') {
      exp_negative = exponent_part.front() == '-';
      exponent_part.remove_prefix(1);
    }
    if (!all_digits(exponent_part) || exponent_part.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exponent_part));
    if (exponent > kMaxExponent) bad_number(text);
    if (exp_negative) exponent = -exponent;
  }

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits, 10);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rational value;
  if (scale >= 0) {
    value = Rational(mantissa, pow10(static_cast<unsigned long>(scale)));
  } else {
    value = Rational(mantissa * pow10(static_cast<unsigned long>(-scale)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational snap_to_dyadic(double value) {
  const double scaled = std::nearbyint(std::ldexp(value, 32));
  mpz_class numerator;
  mpz_set_d(numerator.get_mpz_t(), scaled);
  mpz_class denominator = mpz_class(1) << 32;
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

}  // namespace deltagames
