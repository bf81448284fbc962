#ifndef DELTAGAMES_RATIONAL_HPP
#define DELTAGAMES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace deltagames {

using Rational = mpq_class;

// Parses "-3", "0.8", "1.5e-2" or "a/b" into an exact, canonical rational.
// Decimals are converted exactly (0.8 -> 4/5). Throws Error(kBadNumber).
Rational parse_rational(std::string_view text);

// "a/b" or "a" when the denominator is 1.
std::string to_string(const Rational& value);

// Nearest multiple of 2^-32; used to bring sampled floats onto the exact path.
Rational snap_to_dyadic(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

// Conversion used by the scalar-generic evaluation routines.
template <class T>
T scalar_cast(const Rational& value);

template <>
inline Rational scalar_cast<Rational>(const Rational& value) {
  return value;
}

template <>
inline double scalar_cast<double>(const Rational& value) {
  return value.get_d();
}

}  // namespace deltagames

#endif  // DELTAGAMES_RATIONAL_HPP
