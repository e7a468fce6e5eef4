#include "cayley/scalar.hpp"
#include "cayley/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace cayley {

namespace {

using mpz_int = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

std::optional<mpz_int> exact_isqrt(const mpz_int& n) {
  if (n < 0) return std::nullopt;
  mpz_int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const auto num = exact_isqrt(boost::multiprecision::numerator(x));
  const auto den = exact_isqrt(boost::multiprecision::denominator(x));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::string original(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = s.substr(0, slash);
    const auto q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw InputError("malformed rational: '" + original + "'");
    const mpz_int den{std::string(q)};
    if (den == 0) throw InputError("zero denominator in '" + original + "'");
    value = Rational(mpz_int{std::string(p)}, den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot);
    const auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw InputError("malformed decimal: '" + original + "'");
    }
    const mpz_int whole(ip.empty() ? std::string("0") : std::string(ip));
    const mpz_int frac(fp.empty() ? std::string("0") : std::string(fp));
    mpz_int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    value = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) throw InputError("malformed rational: '" + original + "'");
    value = Rational(mpz_int{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cayley
