#include "monge/core/rational.hpp"

#include <algorithm>
#include <cctype>

namespace monge {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Boost reads a leading zero as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  Integer value = decimal_integer(s);
  return negative ? Integer(-value) : value;
}

Integer pow10(int k) {
  Integer p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    if (!is_digits(den_text)) throw ParseError("malformed denominator in '" + std::string(text) + "'");
    Integer den = decimal_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_digits(whole)) ||
        (!frac.empty() && !is_digits(frac))) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    Integer num = digits.empty() ? Integer(0) : decimal_integer(digits);
    Rational q(num, pow10(static_cast<int>(frac.size())));
    return negative ? Rational(-q) : q;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  bool negative = q < 0;
  Integer num = numerator(q);
  if (negative) num = -num;
  Integer den = denominator(q);

  // Find e with 10^(digits-1) <= |q| * 10^e < 10^digits.
  int e = 0;
  Integer lo = pow10(digits - 1);
  Integer hi = pow10(digits);
  auto scaled_floor = [&](int exp) {
    if (exp >= 0) return Integer((num * pow10(exp)) / den);
    return Integer(num / (den * pow10(-exp)));
  };
  Integer s = scaled_floor(e);
  while (s >= hi) s = scaled_floor(--e);
  while (s < lo) s = scaled_floor(++e);

  // Round half away from zero on the digit after the last kept one.
  Integer s10 = scaled_floor(e + 1);
  Integer kept = s;
  if (s10 % 10 >= 5) kept += 1;
  if (kept >= hi) {
    kept /= 10;
    --e;
  }

  std::string mantissa = kept.str();
  // value = kept * 10^(-e)
  std::string out;
  int point = static_cast<int>(mantissa.size()) - e;  // digits before the decimal point
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mantissa;
  } else if (point >= static_cast<int>(mantissa.size())) {
    out = mantissa + std::string(static_cast<std::size_t>(point - static_cast<int>(mantissa.size())), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(point)) + "." + mantissa.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

Vector parse_point(const std::vector<std::string>& coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_rational(coords[i]);
  return v;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v(i));
  }
  return out + ")";
}

std::strong_ordering lex_compare(const Vector& a, const Vector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return std::strong_ordering::less;
    if (b(i) < a(i)) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Vector primitive(const Vector& v) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(v(i))));
  }
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer k = numerator(v(i)) * (lcm_den / denominator(v(i)));
    g = boost::multiprecision::gcd(g, k);
  }
  if (g == 0) return v;
  if (g < 0) g = -g;
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = Rational(Integer(numerator(v(i)) * (lcm_den / denominator(v(i))) / g));
  }
  return out;
}

Rational factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace monge
