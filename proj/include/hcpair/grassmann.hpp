#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcpair/scalar.hpp"

namespace hcpair {

/// Grassmann algebra on n odd generators t1..tn over a base field.
/// Generators are odd and square to zero; subsets of generators, kept as
/// bitmasks with canonically ascending order, form a basis.
struct GrassmannAlgebra {
  std::uint32_t n = 0;
  Field field;

  GrassmannAlgebra() = default;
  GrassmannAlgebra(std::uint32_t n_, Field f);
  bool operator==(const GrassmannAlgebra&) const = default;
};

/// Sparse element of a Grassmann algebra: generator-subset bitmask -> scalar.
/// Zero coefficients are never stored. Term parity = popcount(mask) mod 2.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  explicit GrassmannElement(const GrassmannAlgebra& a) : alg_(a) {}

  static GrassmannElement zero(const GrassmannAlgebra& a);
  static GrassmannElement one(const GrassmannAlgebra& a);
  static GrassmannElement constant(const GrassmannAlgebra& a, const Scalar& c);
  static GrassmannElement generator(const GrassmannAlgebra& a, std::uint32_t i);
  static GrassmannElement term(const GrassmannAlgebra& a, std::uint64_t mask,
                               const Scalar& c);

  const GrassmannAlgebra& algebra() const { return alg_; }
  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// All stored terms even / odd. The zero element is both.
  bool is_even() const;
  bool is_odd() const;
  /// 0 or 1 when homogeneous; throws for mixed elements.
  int parity() const;

  Scalar coefficient(std::uint64_t mask) const;
  GrassmannElement even_part() const;
  GrassmannElement odd_part() const;

  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator-() const;
  GrassmannElement operator*(const GrassmannElement& o) const;
  GrassmannElement scale(const Scalar& c) const;
  GrassmannElement& operator+=(const GrassmannElement& o);

  bool operator==(const GrassmannElement& o) const;
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

  /// Multiplicative inverse; requires an invertible scalar part.
  GrassmannElement inverse() const;

  std::string str() const;
  /// Parses sums of terms like "3/2*t1t3"; any generator order is accepted
  /// and normalized with the Koszul sign.
  static GrassmannElement parse(const std::string& text,
                                const GrassmannAlgebra& a);

  void insert_term(std::uint64_t mask, const Scalar& c);

 private:
  void require_same(const GrassmannElement& o) const;

  GrassmannAlgebra alg_;
  std::map<std::uint64_t, Scalar> terms_;
};

/// Sign (+1/-1 exponent parity) of merging disjoint ascending subsets S, T
/// into one ascending list; counts inversions. The single source of Koszul
/// signs for subset keys.
int merge_sign(std::uint64_t s, std::uint64_t t);

/// (even part, odd part) of x.
std::pair<GrassmannElement, GrassmannElement> gr_decompose(
    const GrassmannElement& x);

/// The unique superalgebra map A -> A' with t_i -> images[i], applied to x.
/// Every image must be odd.
GrassmannElement gr_hom_apply(const std::vector<GrassmannElement>& images,
                              const GrassmannAlgebra& target,
                              const GrassmannElement& x);

/// Writes x = a + tau_T b with a and b free of the generators in t_mask and
/// tau_T in front; returns b.
GrassmannElement gr_extract_factor(const GrassmannElement& x,
                                   std::uint64_t t_mask);

}  // namespace hcpair
