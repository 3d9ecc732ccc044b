#include "penalty/cost.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "penalty/error.hpp"

namespace penalty {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("malformed number '" + std::string(text) + "'", 0, 0);
  };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d{std::string(den), 10};
    if (d == 0) return fail();
    Rational r{mpz_class{std::string(num), 10}, d};
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return fail();
  if (!whole.empty() && !all_digits(whole)) return fail();
  if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) return fail();
  if (dot != std::string_view::npos && frac.empty() && whole.empty()) return fail();
  mpz_class num{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Cost Cost::finite(Rational value) {
  if (sgn(value) < 0) throw std::invalid_argument("cost must be nonnegative");
  Cost c;
  c.value_ = std::move(value);
  return c;
}

Cost Cost::infinite() {
  Cost c;
  c.infinite_ = true;
  return c;
}

double Cost::to_double() const { return infinite_ ? HUGE_VAL : value_.get_d(); }

Cost& Cost::operator+=(const Cost& other) {
  if (infinite_) return *this;
  if (other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return cmp(a.value_, b.value_) <=> 0;
}

std::string Cost::to_string() const { return infinite_ ? "inf" : format_rational(value_); }

std::ostream& operator<<(std::ostream& os, const Cost& c) { return os << c.to_string(); }

Penalty::Penalty(Rational value) : cost_() {
  if (sgn(value) <= 0) {
    throw std::invalid_argument("penalty must be strictly positive, got " + format_rational(value));
  }
  cost_ = Cost::finite(std::move(value));
}

Penalty Penalty::infinite() { return Penalty(Cost::infinite()); }

Penalty Penalty::parse(std::string_view text) {
  if (text == "inf") return infinite();
  Rational r = parse_rational(text);
  if (sgn(r) <= 0) throw ParseError("penalty must be strictly positive", 0, 0);
  return Penalty(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Penalty& p) { return os << p.to_string(); }

}  // namespace penalty
