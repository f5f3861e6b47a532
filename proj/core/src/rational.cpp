#include "antikit/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "antikit/errors.hpp"

namespace antikit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long long to_ll(const std::string& digits, const std::string& token) {
  if (!all_digits(digits)) fail(ErrorKind::Parse, "bad number '" + token + "'");
  errno = 0;
  long long v = std::strtoll(digits.c_str(), nullptr, 10);
  if (errno != 0) fail(ErrorKind::Parse, "number out of range '" + token + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  std::string s = token;
  long long sign = 1;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = -1;
    s.erase(0, 1);
  }
  if (s.empty()) fail(ErrorKind::Parse, "bad number '" + token + "'");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    long long num = to_ll(s.substr(0, slash), token);
    long long den = to_ll(s.substr(slash + 1), token);
    if (den == 0) fail(ErrorKind::Parse, "zero denominator '" + token + "'");
    return Rational(sign * num, den);
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail(ErrorKind::Parse, "bad number '" + token + "'");
    if (whole.empty()) whole = "0";
    if (frac.size() > 15) fail(ErrorKind::Parse, "too many decimal places '" + token + "'");
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long num = to_ll(whole, token) * den + (frac.empty() ? 0 : to_ll(frac, token));
    return Rational(sign * num, den);
  }

  return Rational(sign * to_ll(s, token), 1);
}

std::string format_rational(const Rational& value) {
  long long num = value.numerator();
  long long den = value.denominator();
  if (den == 1) return std::to_string(num);

  // Finite decimal expansion exists exactly when den = 2^a * 5^b.
  long long d = den;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num) + "/" + std::to_string(den);

  int places = twos > fives ? twos : fives;
  long long scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  long long scaled = num * (scale / den);
  bool negative = scaled < 0;
  unsigned long long mag = negative ? -static_cast<unsigned long long>(scaled) : scaled;
  std::string digits = std::to_string(mag);
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (negative ? "-" : "") + digits;
}

Rational rational_abs(const Rational& value) { return value < Rational(0) ? -value : value; }

}  // namespace antikit
