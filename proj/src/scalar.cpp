#include "ncdr/scalar.hpp"

#include <cctype>
#include <cmath>

#include "ncdr/error.hpp"

namespace ncdr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Scalar parse_unsigned_decimal(std::string_view s, std::string_view whole) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
    return Scalar(mpz_class(std::string(s)));
  }
  const auto int_part = s.substr(0, dot);
  const auto frac_part = s.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
  mpz_class num(int_part.empty() ? std::string("0") : std::string(int_part));
  mpz_class den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  Scalar value;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    value = parse_unsigned_decimal(s, text);
  } else {
    const Scalar num = parse_unsigned_decimal(s.substr(0, slash), text);
    const Scalar den = parse_unsigned_decimal(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = num / den;
  }
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::ParseError, "non-finite double");
  return Scalar(value);
}

Scalar best_rational(double value, std::int64_t max_den) {
  if (!std::isfinite(value)) throw Error(ErrorCode::ParseError, "non-finite double");
  // Convergents h/k of the continued fraction of |value|.
  const bool negative = value < 0;
  double x = std::fabs(value);
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15) {
    x = 1.0 / frac;
    const double a_d = std::floor(x);
    if (a_d > 1e15) break;
    const auto a = static_cast<std::int64_t>(a_d);
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) break;
    const std::int64_t h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = x - a_d;
  }
  Scalar out(mpz_class(static_cast<long>(h)), mpz_class(static_cast<long>(k)));
  out.canonicalize();
  return negative ? Scalar(-out) : out;
}

std::optional<Scalar> snap_rational(double value, std::int64_t max_den, double tolerance) {
  Scalar candidate = best_rational(value, max_den);
  if (std::fabs(candidate.get_d() - value) <= tolerance) return candidate;
  return std::nullopt;
}

Scalar factorial(unsigned n) {
  mpz_class out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return Scalar(out);
}

}  // namespace ncdr
