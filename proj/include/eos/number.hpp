#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace eos {

using Rational = mpq_class;

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.get_d(); }

// Scalar conversion used by the templated algorithms. Converting a double to
// a Rational is exact (binary expansion), never a decimal approximation.
template <typename T>
T scalar_from(double x);
template <>
inline double scalar_from<double>(double x) { return x; }
template <>
inline Rational scalar_from<Rational>(double x) { return Rational(x); }

template <typename T>
T scalar_from(const Rational& q);
template <>
inline double scalar_from<double>(const Rational& q) { return q.get_d(); }
template <>
inline Rational scalar_from<Rational>(const Rational& q) { return q; }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// A real value as it appears at the library boundary: either an exact
// rational or a binary double. Arithmetic happens in the templated code,
// this type only carries values in and out.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Number(double x) : value_(x) {}           // NOLINT(google-explicit-constructor)
  Number(int x) : value_(Rational(x)) {}    // NOLINT(google-explicit-constructor)
  Number(long x) : value_(Rational(x)) {}   // NOLINT(google-explicit-constructor)

  bool exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double value() const;

  template <typename T>
  T as() const {
    if (exact()) return scalar_from<T>(rational());
    return scalar_from<T>(std::get<double>(value_));
  }

  // Canonical text: "num/den" (or "num") for exact values, 17 significant
  // digits for doubles. A double always carries '.', 'e', "inf" or "nan" so
  // that parsing the text restores the same alternative.
  std::string str() const;

  // Integer and "num/den" tokens are exact; decimal or scientific tokens are
  // doubles unless force_exact is set, in which case the decimal expansion
  // is converted exactly. Throws Error(SyntaxError) on malformed tokens.
  static Number parse(std::string_view token, bool force_exact = false);

  friend bool operator==(const Number& a, const Number& b);

 private:
  std::variant<Rational, double> value_;
};

std::string format_double(double x);

// Continued-fraction search for a rational p/q with q <= max_den within
// abs_tol of x; returns false if none is found.
bool rationalize(double x, long max_den, double abs_tol, Rational& out);

template <typename T>
std::vector<Number> to_numbers(const std::vector<T>& xs) {
  return std::vector<Number>(xs.begin(), xs.end());
}

template <typename T>
std::vector<T> from_numbers(const std::vector<Number>& xs) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.as<T>());
  return out;
}

bool all_exact(const std::vector<Number>& xs);

}  // namespace eos
