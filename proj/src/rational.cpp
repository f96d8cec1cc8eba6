#include "cliquebound/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace cliquebound {

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(const Integer &z) { return z.get_str(); }

std::string to_decimal(const Rational &q, int digits) {
  if (q == 0) return "0";
  mpf_class f(q, 512);
  int len = gmp_snprintf(nullptr, 0, "%.*Fg", digits, f.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

namespace {

bool all_digits(const std::string &s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string &text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational: " + text);
    Integer d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    out = Rational(Integer(num, 10), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw std::invalid_argument("bad rational: " + text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rational(Integer(whole + frac, 10), scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad rational: " + text);
    out = Rational(Integer(s, 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational clique_density_weight(unsigned long c, unsigned long t) {
  if (c < t || c == 0) return 0;
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), c, t);
  return ratio(binomial(c, t), power);
}

} // namespace cliquebound
