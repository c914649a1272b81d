#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hcpair/grassmann.hpp"

namespace hcpair {

/// Sparse multivariate polynomial over the base field; exponents >= 0.
class Poly {
 public:
  Poly() = default;
  Poly(std::uint32_t nvars, Field f) : nvars_(nvars), field_(f) {}

  static Poly constant(std::uint32_t nvars, const Scalar& c);
  static Poly variable(std::uint32_t nvars, const Field& f, std::uint32_t i);

  std::uint32_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::map<std::vector<std::uint32_t>, Scalar>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void insert_term(std::vector<std::uint32_t> exps, const Scalar& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Scalar& c) const;
  bool operator==(const Poly& o) const;

  Poly derivative(std::uint32_t var) const;

  Scalar eval_scalar(const std::vector<Scalar>& point) const;
  /// Evaluation over the even Grassmann subalgebra; every point entry must
  /// be even.
  GrassmannElement eval_grassmann(const std::vector<GrassmannElement>& point,
                                  const GrassmannAlgebra& a) const;

 private:
  std::uint32_t nvars_ = 0;
  Field field_;
  std::map<std::vector<std::uint32_t>, Scalar> terms_;
};

/// Laurent polynomial in parameters; negative exponents are allowed only on
/// parameters marked invertible by the caller.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::uint32_t nvars, Field f) : nvars_(nvars), field_(f) {}

  static Laurent constant(std::uint32_t nvars, const Scalar& c);
  static Laurent monomial(std::uint32_t nvars, const Field& f,
                          std::vector<std::int32_t> exps, const Scalar& c);

  std::uint32_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::map<std::vector<std::int32_t>, Scalar>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  void insert_term(std::vector<std::int32_t> exps, const Scalar& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent scale(const Scalar& c) const;
  bool operator==(const Laurent& o) const;

  /// Evaluation at field values; entries hit by negative exponents must be
  /// nonzero.
  Scalar eval_scalar(const std::vector<Scalar>& point) const;

 private:
  std::uint32_t nvars_ = 0;
  Field field_;
  std::map<std::vector<std::int32_t>, Scalar> terms_;
};

/// Evaluates a Poly coordinate-wise over Laurent values (e.g. substituting a
/// parametrization into defining or coaction polynomials).
Laurent poly_eval_laurent(const Poly& p, const std::vector<Laurent>& point);

/// Determinant of a square polynomial matrix by cofactor expansion.
Poly poly_det(const std::vector<std::vector<Poly>>& m);

/// Adjugate of a square polynomial matrix.
std::vector<std::vector<Poly>> poly_adjugate(
    const std::vector<std::vector<Poly>>& m);

}  // namespace hcpair
