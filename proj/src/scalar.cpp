#include "hcpair/scalar.hpp"

namespace hcpair {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw error("division by zero");
  return mod_pow(a, p - 2, p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw error("characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw error("not a prime: " + std::to_string(p));
  if (p >= (1ull << 31)) throw error("prime too large");
  return Field{Kind::prime, p};
}

std::string Field::str() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const Field& f) { return of(0, f); }
Scalar Scalar::one(const Field& f) { return of(1, f); }

Scalar Scalar::of(long n, const Field& f) {
  if (f.kind == Field::Kind::rationals) return Scalar(f, mpq_class(n));
  long r = n % static_cast<long>(f.p);
  if (r < 0) r += static_cast<long>(f.p);
  return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::ratio(long n, long d, const Field& f) {
  if (d == 0) throw error("division by zero");
  if (f.kind == Field::Kind::rationals) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(f, q);
  }
  return of(n, f) / of(d, f);
}

Scalar Scalar::from_mpq(mpq_class q) {
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::residue(std::uint64_t k, const Field& f) {
  if (f.kind != Field::Kind::prime) throw error("residue needs a prime field");
  return Scalar(f, k % f.p);
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  auto mod_pos = text.find(" mod ");
  if (mod_pos != std::string::npos) {
    std::uint64_t p = std::stoull(text.substr(mod_pos + 5));
    if (f.kind != Field::Kind::prime || f.p != p)
      throw error("field mismatch parsing '" + text + "'");
    long k = std::stol(text.substr(0, mod_pos));
    return of(k, f);
  }
  auto slash = text.find('/');
  if (f.kind == Field::Kind::rationals) {
    mpq_class q(text);
    q.canonicalize();
    return Scalar(f, q);
  }
  if (slash == std::string::npos) return of(std::stol(text), f);
  return of(std::stol(text.substr(0, slash)), f) /
         of(std::stol(text.substr(slash + 1)), f);
}

bool Scalar::is_zero() const {
  return field_.kind == Field::Kind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == Field::Kind::rationals ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw error("mixed fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == Field::Kind::rationals) return Scalar(field_, q_ + o.q_);
  return Scalar(field_, (r_ + o.r_) % field_.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == Field::Kind::rationals) return Scalar(field_, q_ - o.q_);
  return Scalar(field_, (r_ + field_.p - o.r_) % field_.p);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind == Field::Kind::rationals) return Scalar(field_, q_ * o.q_);
  return Scalar(field_, mod_mul(r_, o.r_, field_.p));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  if (o.is_zero()) throw error("division by zero");
  if (field_.kind == Field::Kind::rationals) return Scalar(field_, q_ / o.q_);
  return Scalar(field_, mod_mul(r_, mod_inv(o.r_, field_.p), field_.p));
}

Scalar Scalar::operator-() const {
  if (field_.kind == Field::Kind::rationals) return Scalar(field_, -q_);
  return Scalar(field_, r_ == 0 ? 0 : field_.p - r_);
}

Scalar Scalar::inverse() const { return one(field_) / *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == Field::Kind::rationals ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
  require_same_field(o);
  return field_.kind == Field::Kind::rationals ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::str() const {
  if (field_.kind == Field::Kind::rationals) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(field_.p);
}

const mpq_class& Scalar::rational() const {
  if (field_.kind != Field::Kind::rationals) throw error("not a rational");
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (field_.kind != Field::Kind::prime) throw error("not a prime-field value");
  return r_;
}

std::optional<Scalar> sqrt_minus_one(const Field& f) {
  if (f.kind != Field::Kind::prime) return std::nullopt;
  if (f.p % 4 != 1) return std::nullopt;
  // i = g^((p-1)/4) for any quadratic non-residue g.
  for (std::uint64_t g = 2; g < f.p; ++g) {
    if (mod_pow(g, (f.p - 1) / 2, f.p) == f.p - 1)
      return Scalar::residue(mod_pow(g, (f.p - 1) / 4, f.p), f);
  }
  return std::nullopt;
}

}  // namespace hcpair
