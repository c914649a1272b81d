#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hcpair {

/// Thrown on violated preconditions (mixed contexts, division by zero, ...).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base field descriptor: the rationals, or a prime field F_p with p an odd
/// prime. Characteristic 2 is rejected at construction.
struct Field {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(std::uint64_t p);

  bool operator==(const Field&) const = default;
  bool is_prime_field() const { return kind == Kind::prime; }
  std::string str() const;
};

/// Exact field element. Immutable value type; all arithmetic is exact.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), q_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  /// Integer n mapped into the field.
  static Scalar of(long n, const Field& f);
  /// Rational n/d mapped into the field (d inverted mod p over F_p).
  static Scalar ratio(long n, long d, const Field& f);
  static Scalar from_mpq(mpq_class q);
  static Scalar residue(std::uint64_t k, const Field& f);

  /// Parses "n", "n/d" or "k mod p"; the field must agree.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Ordering for use as a map key; compares within one field only.
  bool operator<(const Scalar& o) const;

  std::string str() const;

  /// The rational value; only valid over the rationals.
  const mpq_class& rational() const;
  /// The canonical residue; only valid over a prime field.
  std::uint64_t residue_value() const;

 private:
  Scalar(Field f, mpq_class q) : field_(f), q_(std::move(q)) {}
  Scalar(Field f, std::uint64_t r) : field_(f), r_(r) {}
  void require_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

/// Square root of -1 in the field: a residue i with i^2 = -1 when
/// p = 1 (mod 4); nullopt for other primes and for the rationals.
std::optional<Scalar> sqrt_minus_one(const Field& f);

}  // namespace hcpair
