#include "apollonian/scalar.hpp"

#include <charconv>
#include <system_error>

#include "apollonian/error.hpp"

namespace apollonian {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroRadius: return "ZeroRadius";
    case ErrorKind::ZeroCurvature: return "ZeroCurvature";
    case ErrorKind::NotUnitSpacelike: return "NotUnitSpacelike";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::NotExactSquare: return "NotExactSquare";
    case ErrorKind::NotPythagorean: return "NotPythagorean";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::InvalidRoot: return "InvalidRoot";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::ReflectionInvariant: return "ReflectionInvariant";
    case ErrorKind::CurlViolation: return "CurlViolation";
    case ErrorKind::DivViolation: return "DivViolation";
    case ErrorKind::NoMatchingDisk: return "NoMatchingDisk";
    case ErrorKind::NotAConfiguration: return "NotAConfiguration";
    case ErrorKind::NoClosedChain: return "NoClosedChain";
    case ErrorKind::UnknownDisk: return "UnknownDisk";
    case ErrorKind::EmptyPacking: return "EmptyPacking";
    case ErrorKind::DegenerateViewport: return "DegenerateViewport";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

namespace {

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Decimal digits only; the string constructor would read a leading 0 as octal.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer{std::string(digits.substr(first))};
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer value = decimal_integer(s);
  return negative ? Integer(-value) : value;
}

// Exact value of a plain decimal literal such as "-12.375" (no exponent).
std::optional<Rational> parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  auto digits = [](std::string_view d) {
    return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(whole) || !digits(frac)) return std::nullopt;
  Integer num = decimal_integer(std::string(whole) + std::string(frac));
  Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  auto num = integer_sqrt(boost::multiprecision::numerator(x));
  auto den = integer_sqrt(boost::multiprecision::denominator(x));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<double> exact_sqrt(double x) {
  if (x < 0) return std::nullopt;
  return std::sqrt(x);
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!is_integer_token(num) || !is_integer_token(den))
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
  }
  if (is_integer_token(text)) return Rational(parse_integer(text));
  if (auto dec = parse_decimal(text)) return *dec;
  throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
}

template <>
double parse_scalar<double>(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational q = parse_scalar<Rational>(text);
    return to_double(q);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
    throw Error(ErrorKind::ParseError, "malformed number '" + std::string(text) + "'");
  return value;
}

std::string format_scalar(const Rational& x) {
  if (is_integer(x)) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

std::string format_scalar(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace apollonian
