#include "jjalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace jjalg::poly {

std::string Ring::format(const Monomial &m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += variables[i];
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(std::vector<std::string> variables) {
  std::set<std::string> seen;
  for (const auto &v : variables)
    if (v.empty() || !seen.insert(v).second)
      throw std::invalid_argument("variable names must be nonempty and distinct");
  return std::make_shared<const Ring>(Ring{std::move(variables)});
}

bool divides(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial quotient(const Monomial &num, const Monomial &den) {
  Monomial out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    out[i] = num[i] - den[i];
  return out;
}

Monomial product(const Monomial &a, const Monomial &b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

unsigned degree(const Monomial &m) {
  unsigned d = 0;
  for (auto e : m)
    d += e;
  return d;
}

bool coprime(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i])
      return false;
  return true;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, const Scalar &c) {
  return term(ring, Monomial(ring->size()), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->size());
  m.at(index) = 1;
  return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Scalar &c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0)
    p.terms_.push_back({std::move(m), c});
  return p;
}

void Polynomial::check_ring(const Polynomial &o) const {
  if (ring_ != o.ring_ && ring_->variables != o.ring_->variables)
    throw std::invalid_argument("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
  check_ring(o);
  Polynomial out(ring_);
  auto &t = out.terms_;
  t.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].monomial > o.terms_[j].monomial)) {
      t.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].monomial > terms_[i].monomial) {
      t.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(c) != 0)
        t.push_back({terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto &t : out.terms_)
    t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial &o) const { return *this + (-o); }

Polynomial Polynomial::times(const Monomial &m, const Scalar &c) const {
  Polynomial out(ring_);
  if (sgn(c) == 0)
    return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto &t : terms_)
    out.terms_.push_back({product(t.monomial, m), t.coeff * c});
  return out;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
  check_ring(o);
  Polynomial out(ring_);
  for (const auto &t : o.terms_)
    out = out + times(t.monomial, t.coeff);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(ring_, 1);
  for (unsigned i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return *this;
  Scalar inv = 1 / leading().coeff;
  return times(Monomial(ring_->size()), inv);
}

std::string Polynomial::to_string() const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto &t = terms_[i];
    Scalar c = t.coeff;
    if (i == 0) {
      if (sgn(c) < 0)
        out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = degree(t.monomial) == 0;
    if (unit)
      out += c.get_str();
    else if (c != 1)
      out += c.get_str() + "*" + ring_->format(t.monomial);
    else
      out += ring_->format(t.monomial);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
  Parser(const std::string &text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial polynomial() {
    skip();
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = sign < 0 ? acc - t : acc + t;
      first = false;
      skip();
      if (peek() != '+' && peek() != '-')
        break;
    }
    return acc;
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size())
      fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, 0, pos_ + 1); }

  unsigned integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    unsigned long v = std::stoul(s_.substr(start, pos_ - start));
    if (v > 1000)
      fail("exponent too large");
    return static_cast<unsigned>(v);
  }

  std::size_t position() const { return pos_; }

private:
  bool starts_factor() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '_';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip();
    char c = peek();
    Polynomial base(ring_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      std::string den = "1";
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t ds = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
        if (ds == pos_)
          fail("expected a denominator");
        den = s_.substr(ds, pos_ - ds);
        if (mpz_class(den) == 0)
          fail("zero denominator");
      }
      Scalar q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (c == '(') {
      ++pos_;
      base = polynomial();
      expect(')');
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      base = variable();
    } else if (c == '\0') {
      fail("unexpected end of input");
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return base;
  }

  Polynomial variable() {
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      const auto &name = ring_->variables[i];
      if (name.size() > best_len && s_.compare(pos_, name.size(), name) == 0) {
        best = i;
        best_len = name.size();
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
        ++end;
      fail("unknown variable '" + s_.substr(pos_, end - pos_) + "'");
    }
    pos_ += best_len;
    return Polynomial::variable(ring_, best);
  }

  const std::string &s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string &text, const RingPtr &ring) {
  Parser p(text, ring);
  Polynomial out = p.polynomial();
  p.expect_end();
  return out;
}

std::vector<std::string> infer_variables(const std::string &text) {
  static const std::string preferred = "xyzwv";
  std::set<char> letters;
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c)))
      letters.insert(c);
  std::vector<std::string> out;
  for (char c : preferred)
    if (letters.erase(c))
      out.emplace_back(1, c);
  for (char c : letters)
    out.emplace_back(1, c);
  return out;
}

Ideal parse_ideal(const std::string &text, std::vector<std::string> variables) {
  if (variables.empty())
    variables = infer_variables(text);
  Ideal ideal{make_ring(std::move(variables)), {}};

  // Split the top-level parenthesized list by commas.
  std::size_t open = text.find_first_not_of(" \t\r\n");
  if (open == std::string::npos || text[open] != '(')
    throw ParseError("ideal must start with '('", 0, open == std::string::npos ? 1 : open + 1);
  int depth = 0;
  std::size_t close = std::string::npos;
  std::vector<std::pair<std::size_t, std::size_t>> pieces;
  std::size_t start = open + 1;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '(')
      ++depth;
    else if (text[i] == ')') {
      if (--depth == 0) {
        pieces.emplace_back(start, i);
        close = i;
        break;
      }
    } else if (text[i] == ',' && depth == 1) {
      pieces.emplace_back(start, i);
      start = i + 1;
    }
  }
  if (close == std::string::npos)
    throw ParseError("missing ')'", 0, text.size() + 1);

  for (const auto &[b, e] : pieces) {
    std::string piece = text.substr(b, e - b);
    try {
      ideal.generators.push_back(parse_polynomial(piece, ideal.ring));
    } catch (const ParseError &err) {
      throw ParseError(err.message(), 0, b + err.column());
    }
  }

  // Optional power shorthand.
  std::size_t rest = text.find_first_not_of(" \t\r\n", close + 1);
  if (rest != std::string::npos) {
    if (text[rest] != '^')
      throw ParseError(std::string("unexpected '") + text[rest] + "' after ideal", 0, rest + 1);
    std::string exp = text.substr(rest + 1);
    exp.erase(std::remove_if(exp.begin(), exp.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
              exp.end());
    if (exp.empty() || !std::all_of(exp.begin(), exp.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("ideal power must be a positive integer", 0, rest + 2);
    const unsigned m = static_cast<unsigned>(std::stoul(exp));
    if (m == 0)
      throw ParseError("ideal power must be a positive integer", 0, rest + 2);

    const auto &gens = ideal.generators;
    std::vector<Polynomial> expanded;
    std::vector<std::size_t> pick(m, 0);
    // Non-decreasing index tuples enumerate the products of m generators.
    while (true) {
      Polynomial prod = Polynomial::constant(ideal.ring, 1);
      for (auto i : pick)
        prod = prod * gens[i];
      if (!prod.is_zero() && std::find(expanded.begin(), expanded.end(), prod) == expanded.end())
        expanded.push_back(std::move(prod));
      std::size_t pos = m;
      while (pos > 0 && pick[pos - 1] + 1 == gens.size())
        --pos;
      if (pos == 0)
        break;
      ++pick[pos - 1];
      for (std::size_t k = pos; k < m; ++k)
        pick[k] = pick[pos - 1];
    }
    ideal.generators = std::move(expanded);
  }
  return ideal;
}

} // namespace jjalg::poly
