#include "eos/number.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "eos/error.hpp"

namespace eos {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw Error(ErrorCode::SyntaxError, "malformed number '" + std::string(token) + "'");
}

// [+-]digits[.digits][(e|E)[+-]digits] parsed into an exact rational.
Rational parse_decimal_exact(std::string_view token) {
  std::string_view s = token;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view mantissa = s;
  long exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mantissa = s.substr(0, epos);
    std::string_view exp = s.substr(epos + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_token(token);
    exponent = std::strtol(std::string(exp).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(mantissa)) bad_token(token);
    digits = std::string(mantissa);
  } else {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_token(token);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      bad_token(token);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }
  if (std::labs(exponent) > 4000) bad_token(token);
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

double Number::value() const {
  if (exact()) return rational().get_d();
  return std::get<double>(value_);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string Number::str() const {
  if (exact()) return rational().get_str(10);
  return format_double(std::get<double>(value_));
}

Number Number::parse(std::string_view token, bool force_exact) {
  if (token.empty() || token.size() > 4096) bad_token(token);
  auto slash = token.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = token.substr(0, slash);
    std::string_view den = token.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) bad_token(token);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_token(token);
    mpz_class n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return Number(q);
  }
  std::string_view unsigned_part = token;
  if (unsigned_part.front() == '-' || unsigned_part.front() == '+') unsigned_part.remove_prefix(1);
  if (all_digits(unsigned_part)) return Number(parse_decimal_exact(token));
  if (force_exact) return Number(parse_decimal_exact(token));
  // Validate the grammar before handing the token to strtod, which would
  // otherwise accept hex floats and "infinity".
  parse_decimal_exact(token);
  std::string copy(token);
  char* end = nullptr;
  double x = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || !std::isfinite(x)) bad_token(token);
  return Number(x);
}

bool operator==(const Number& a, const Number& b) {
  if (a.exact() != b.exact()) return false;
  if (a.exact()) return a.rational() == b.rational();
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

bool rationalize(double x, long max_den, double abs_tol, Rational& out) {
  if (!std::isfinite(x)) return false;
  // Convergents h/k of the continued fraction of x.
  long double h_prev = 1, h = std::floor(static_cast<long double>(x));
  long double k_prev = 0, k = 1;
  long double rem = static_cast<long double>(x) - h;
  for (int iter = 0; iter < 64; ++iter) {
    if (std::fabs(static_cast<double>(h / k) - x) <= abs_tol) {
      out = Rational(mpz_class(static_cast<long>(h)), mpz_class(static_cast<long>(k)));
      out.canonicalize();
      return true;
    }
    if (rem == 0) break;
    long double inv = 1.0L / rem;
    long double a = std::floor(inv);
    rem = inv - a;
    long double h_next = a * h + h_prev;
    long double k_next = a * k + k_prev;
    if (k_next > max_den || std::fabs(h_next) > 9.0e15L) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return false;
}

bool all_exact(const std::vector<Number>& xs) {
  for (const auto& x : xs) {
    if (!x.exact()) return false;
  }
  return true;
}

}  // namespace eos
