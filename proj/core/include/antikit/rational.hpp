#pragma once

#include <boost/rational.hpp>
#include <string>

namespace antikit {

/// Exact weight arithmetic. Decimal inputs such as "-1.9" are parsed without
/// rounding, so equality cases in the optimization bounds are bit-exact.
using Rational = boost::rational<long long>;

/// Accepts integers ("3", "-12"), decimals ("0.1", "-1.9", ".5") and
/// explicit fractions ("7/10"). Throws ErrorKind::Parse on anything else.
Rational parse_rational(const std::string& token);

/// Canonical text form: an integer or finite decimal when the denominator is
/// of the form 2^a*5^b, otherwise "p/q".
std::string format_rational(const Rational& value);

Rational rational_abs(const Rational& value);

}  // namespace antikit
