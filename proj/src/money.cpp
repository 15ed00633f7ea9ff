#include "envyic/money.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace envyic {
namespace {

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// floor(a / b) for b > 0.
mpz_class floor_div(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class ceil_div(const mpq_class& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

Money parse_money(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed amount: '" + std::string(text) + "'"); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den)) throw fail();
    mpz_class n(std::string(num_digits), 10), d(std::string(den), 10);
    if (d == 0) throw fail();
    Money out(n, d);
    out.canonicalize();
    return num.front() == '-' ? Money(-out) : out;
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text, frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw fail();
  if (!int_part.empty() && !all_digits(int_part)) throw fail();
  if (!frac_part.empty() && !all_digits(frac_part)) throw fail();

  mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Money out;
  if (scale >= 0) {
    out = Money(digits, pow10(static_cast<unsigned long>(scale)));
  } else {
    out = Money(digits * pow10(static_cast<unsigned long>(-scale)));
  }
  out.canonicalize();
  return negative ? Money(-out) : out;
}

std::string to_string(const Money& value) {
  mpz_class den = value.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return value.get_str();
  if (value.get_den() == 1) return value.get_num().get_str();

  unsigned long places = std::max(twos, fives);
  mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

std::string to_fixed(const Money& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class scale = pow10(static_cast<unsigned long>(digits));
  Money scaled = abs(value) * scale;
  // half away from zero
  mpz_class rounded = floor_div(scaled + Money(1, 2));
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits - body.size() + 1, '0');
    body.insert(body.size() - digits, ".");
  }
  return (value < 0 && rounded != 0) ? "-" + body : body;
}

double to_double(const Money& value) { return value.get_d(); }

Money round_to_multiple(const Money& value, const Money& step) {
  if (step <= 0) throw std::invalid_argument("rounding step must be positive");
  Money ratio = value / step - Money(1, 2);
  return Money(ceil_div(ratio)) * step;
}

Money floor_to_multiple(const Money& value, const Money& step) {
  if (step <= 0) throw std::invalid_argument("rounding step must be positive");
  return Money(floor_div(Money(value / step))) * step;
}

Money ceil_to_multiple(const Money& value, const Money& step) {
  if (step <= 0) throw std::invalid_argument("rounding step must be positive");
  return Money(ceil_div(Money(value / step))) * step;
}

Money quantize(double x, const Money& step) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot quantize a non-finite value");
  double units = std::nearbyint(x / step.get_d());
  return Money(mpz_class(units)) * step;
}

Money rational_gcd(std::span<const Money> values) {
  mpz_class den_lcm = 1;
  for (const Money& v : values) {
    if (v != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const Money& v : values) {
    if (v == 0) continue;
    mpz_class scaled = abs(v.get_num()) * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return Money(1);
  Money out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Money max_of(std::span<const Money> values) {
  Money best = 0;
  bool first = true;
  for (const Money& v : values) {
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

Money sum_of(std::span<const Money> values) {
  Money total = 0;
  for (const Money& v : values) total += v;
  return total;
}

}  // namespace envyic
