#ifndef PENALTY_COST_HPP
#define PENALTY_COST_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace penalty {

using Rational = mpq_class;

/// Exact conversion of "12", "2.5", ".75" or "3/4". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" for integers.
std::string format_rational(const Rational& r);

/// Nonnegative exact cost or +infinity. Sums of penalties live here; the empty
/// sum is zero.
class Cost {
 public:
  Cost() = default;

  static Cost zero() { return Cost(); }
  static Cost finite(Rational value);
  static Cost infinite();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }
  /// +HUGE_VAL when infinite.
  double to_double() const;

  Cost& operator+=(const Cost& other);
  friend Cost operator+(Cost a, const Cost& b) { return a += b; }

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

  /// "inf" or format_rational(value).
  std::string to_string() const;

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Cost& c);

/// Strictly positive exact penalty or +infinity.
class Penalty {
 public:
  /// Throws std::invalid_argument unless value > 0.
  explicit Penalty(Rational value);
  explicit Penalty(long value) : Penalty(Rational(value)) {}

  static Penalty infinite();
  /// A positive decimal, "p/q", or "inf". Throws ParseError.
  static Penalty parse(std::string_view text);

  bool is_infinite() const { return cost_.is_infinite(); }
  const Rational& value() const { return cost_.value(); }
  const Cost& cost() const { return cost_; }
  double to_double() const { return cost_.to_double(); }
  std::string to_string() const { return cost_.to_string(); }

  friend bool operator==(const Penalty& a, const Penalty& b) { return a.cost_ == b.cost_; }
  friend std::strong_ordering operator<=>(const Penalty& a, const Penalty& b) {
    return a.cost_ <=> b.cost_;
  }

 private:
  explicit Penalty(Cost c) : cost_(std::move(c)) {}
  Cost cost_;
};

std::ostream& operator<<(std::ostream& os, const Penalty& p);

}  // namespace penalty

#endif  // PENALTY_COST_HPP
