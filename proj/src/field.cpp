#include "jjalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jjalg {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p == 3)
    throw std::domain_error("characteristic 2 and 3 are not supported");
  if (!is_prime(p))
    throw std::domain_error("field characteristic " + std::to_string(p) +
                            " is not a prime");
  return Field(p);
}

Field Field::parse(const std::string &text) {
  std::string t;
  for (char ch : text)
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "q" || t == "0")
    return rationals();
  if (t.rfind("fp:", 0) == 0)
    t = t.substr(3);
  if (t.empty() || !std::all_of(t.begin(), t.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad field descriptor '" + text + "'");
  return prime(std::stoull(t));
}

Scalar Field::from(const Scalar &value) const {
  if (p_ == 0) {
    Scalar r = value;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class den = value.get_den() % p;
  if (den == 0)
    throw std::domain_error("denominator of " + value.get_str() +
                            " is not invertible mod " + std::to_string(p_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = value.get_num() * inv % p;
  if (r < 0)
    r += p;
  return Scalar(r);
}

void Field::reduce(Scalar &value) const {
  if (p_ == 0)
    return;
  value = from(value);
}

Scalar Field::inv(const Scalar &value) const {
  if (is_zero(value))
    throw std::domain_error("division by zero");
  if (p_ == 0)
    return 1 / value;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class inv;
  mpz_class v = value.get_num();
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("division by zero");
  return Scalar(inv);
}

Scalar Field::div(const Scalar &a, const Scalar &b) const {
  Scalar r = a * inv(b);
  reduce(r);
  return r;
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("q") : "fp:" + std::to_string(p_);
}

Scalar parse_rational(const std::string &text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t.push_back(ch);
  if (t.empty())
    throw std::invalid_argument("empty rational");
  auto valid = [](const std::string &s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
      ++i;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("bad rational '" + text + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

std::string format_scalar(const Scalar &value) { return value.get_str(); }

bool is_zero(const Vector &v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return is_zero(s); });
}

} // namespace jjalg
