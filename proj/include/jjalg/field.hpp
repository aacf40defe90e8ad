#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jjalg {

/// Exact scalar. Over Q this is a canonical rational; over F_p it holds the
/// integer representative in [0, p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Coefficient field descriptor: either Q (characteristic 0) or F_p with
/// p prime and p >= 5. Containers own a Field; scalars do not.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::domain_error unless p is a prime >= 5.
  static Field prime(std::uint64_t p);
  /// Parses "q", "0", "fp:<p>" or a bare prime.
  static Field parse(const std::string &text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  /// Maps an arbitrary rational into this field. Over F_p the denominator must
  /// be invertible (std::domain_error otherwise).
  Scalar from(const Scalar &value) const;
  Scalar from_int(long value) const { return from(Scalar(value)); }

  /// In-place canonicalization after ring operations (+, -, *).
  void reduce(Scalar &value) const;

  Scalar inv(const Scalar &value) const;
  Scalar div(const Scalar &a, const Scalar &b) const;

  /// True iff this field can divide by every integer in [1, d], which is what
  /// multilinearizing a degree-d identity needs.
  bool supports_degree(std::size_t d) const { return p_ == 0 || p_ > d; }

  std::string to_string() const;

  friend bool operator==(const Field &, const Field &) = default;

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Parses "a/b", "a", "-a/b" exactly (no field reduction).
Scalar parse_rational(const std::string &text);
std::string format_scalar(const Scalar &value);

inline bool is_zero(const Scalar &value) { return sgn(value) == 0; }
bool is_zero(const Vector &v);

} // namespace jjalg
