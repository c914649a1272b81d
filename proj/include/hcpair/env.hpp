#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcpair/liesuper.hpp"

namespace hcpair {

/// PBW monomial x1^e1 ... xm^em v_{i1} ... v_{ir}: an exponent vector over
/// the ordered even basis and a strictly increasing odd subset (bitmask).
struct PBWMonomial {
  std::vector<std::uint32_t> even_exp;
  std::uint64_t odd_mask = 0;

  int parity() const { return __builtin_popcountll(odd_mask) & 1; }
  std::size_t degree() const;
  bool is_unit() const;
  bool is_even_only() const { return odd_mask == 0; }

  auto operator<=>(const PBWMonomial&) const = default;
};

/// A word of basis letters: 0..m-1 are the even basis, m..m+n-1 the odd.
using Word = std::vector<std::uint32_t>;

/// Normal form with field coefficients.
using ScalarNF = std::map<PBWMonomial, Scalar>;

/// Shared context for U(g)_A computations: the Lie superalgebra, the
/// coefficient Grassmann algebra, and the straightening memo table
/// (idempotent inserts behind a lock).
class UEnvContext {
 public:
  UEnvContext(const LieSuperAlgebra* lie, GrassmannAlgebra a);

  const LieSuperAlgebra& lie() const { return *lie_; }
  const GrassmannAlgebra& grassmann() const { return gr_; }
  const Field& field() const { return gr_.field; }
  std::size_t even_dim() const { return lie_->even_dim(); }
  std::size_t odd_dim() const { return lie_->odd_dim(); }
  bool letter_odd(std::uint32_t l) const { return l >= lie_->even_dim(); }

  PBWMonomial unit_monomial() const;
  PBWMonomial letter_monomial(std::uint32_t l) const;
  Word monomial_word(const PBWMonomial& mono) const;

  /// PBW normal form of a word; the rewriting rules strictly decrease the
  /// (degree, word) order, see normalize_word_strategy for the rule set.
  ScalarNF normalize_word(const Word& w) const;
  /// Same rules, resolving either the first (0) or last (1) violation first;
  /// used by confluence tests. Not memoized.
  ScalarNF normalize_word_strategy(const Word& w, int strategy) const;

 private:
  ScalarNF normalize_impl(const Word& w, int strategy, bool memoize) const;

  const LieSuperAlgebra* lie_;
  GrassmannAlgebra gr_;
  mutable std::map<Word, ScalarNF> memo_;
  mutable std::mutex memo_lock_;
};

class TensorUEnv;

/// Element of U(g)_A = A (x) U(g) in PBW normal form: sparse map from
/// monomials to Grassmann coefficients, coefficients kept on the left.
class UEnvElement {
 public:
  UEnvElement() = default;
  explicit UEnvElement(const UEnvContext* ctx) : ctx_(ctx) {}

  static UEnvElement zero(const UEnvContext* ctx);
  static UEnvElement one(const UEnvContext* ctx);
  /// coeff (x) normal form of the word.
  static UEnvElement from_word(const UEnvContext* ctx, const Word& w,
                               const GrassmannElement& coeff);

  const UEnvContext* context() const { return ctx_; }
  const std::map<PBWMonomial, GrassmannElement>& terms() const {
    return terms_;
  }
  void insert_term(const PBWMonomial& mono, const GrassmannElement& c);

  bool is_zero() const { return terms_.empty(); }
  GrassmannElement coefficient(const PBWMonomial& mono) const;
  /// Every stored pair (coefficient term, monomial) has the given total
  /// parity.
  bool has_total_parity(int p) const;
  /// Projection onto the total-parity-p part.
  UEnvElement parity_part(int p) const;
  /// Terms supported on even-only monomials (the U(g_0)_A block).
  UEnvElement even_block() const;
  /// Coefficient block at the single odd letter i, as a U(g_0)_A element.
  UEnvElement odd_singleton_block(std::size_t odd_index) const;
  /// True when only even-only monomials occur.
  bool is_even_only() const;

  UEnvElement operator+(const UEnvElement& o) const;
  UEnvElement operator-(const UEnvElement& o) const;
  UEnvElement operator-() const;
  /// Left multiplication by a coefficient; no crossing sign.
  UEnvElement scale(const GrassmannElement& c) const;
  UEnvElement scale(const Scalar& c) const;

  bool operator==(const UEnvElement& o) const;
  bool operator!=(const UEnvElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void require_same(const UEnvElement& o) const;
  friend UEnvElement ue_mul(const UEnvElement&, const UEnvElement&);

  const UEnvContext* ctx_ = nullptr;
  std::map<PBWMonomial, GrassmannElement> terms_;
};

/// Product in U(g)_A: the right coefficient crosses the left monomial with
/// the Koszul sign, words concatenate, then straighten.
UEnvElement ue_mul(const UEnvElement& u, const UEnvElement& w);
UEnvElement ue_mul(const UEnvElement& a, const UEnvElement& b,
                   const UEnvElement& c);

/// Element of U(g)_A (x)_A U(g)_A with coefficients collected at the front:
/// (a (x) u) (x)_A (b (x) w) = (-1)^{|b||u|} ab (x) (u (x) w).
class TensorUEnv {
 public:
  TensorUEnv() = default;
  explicit TensorUEnv(const UEnvContext* ctx) : ctx_(ctx) {}

  const std::map<std::pair<PBWMonomial, PBWMonomial>, GrassmannElement>&
  terms() const {
    return terms_;
  }
  void insert_term(const PBWMonomial& a, const PBWMonomial& b,
                   const GrassmannElement& c);
  bool operator==(const TensorUEnv& o) const;

 private:
  const UEnvContext* ctx_ = nullptr;
  std::map<std::pair<PBWMonomial, PBWMonomial>, GrassmannElement> terms_;
};

/// Coproduct: the algebra map with Delta(z) = z (x) 1 + 1 (x) z on g.
TensorUEnv ue_coproduct(const UEnvElement& u);
/// Counit: kills g; the coefficient of the unit monomial.
GrassmannElement ue_counit(const UEnvElement& u);
/// Antipode: the super-anti-algebra map with S(z) = -z.
UEnvElement ue_antipode(const UEnvElement& u);
/// u (x)_A w under the front-collection convention.
TensorUEnv ue_tensor(const UEnvElement& u, const UEnvElement& w);

/// True iff u is even, counit(u) = 1 and Delta(u) = u (x)_A u.
bool is_grouplike(const UEnvElement& u);

/// e(a, v_i) = 1 + a (x) v_i with a odd.
UEnvElement factor_e(const UEnvContext* ctx, const GrassmannElement& a,
                     std::size_t odd_index);
/// e(a, v) for v given by odd-basis coordinates.
UEnvElement factor_e_coords(const UEnvContext* ctx, const GrassmannElement& a,
                            const Vec& odd_coords);
/// f(eps, x_j) = 1 + eps (x) x_j with eps even and eps^2 = 0.
UEnvElement factor_f(const UEnvContext* ctx, const GrassmannElement& eps,
                     std::size_t even_index);
/// f(eps, x) for x given by even-basis coordinates.
UEnvElement factor_f_coords(const UEnvContext* ctx,
                            const GrassmannElement& eps,
                            const Vec& even_coords);

enum class Relation { i, ii, iii, iv };

/// The four grouplike-factor relations, both sides expanded by ue_mul:
///   (i)   e(a,u) e(b,v) = f(-ab,[u,v]) e(b,v) e(a,u)
///   (ii)  e(a,v) e(b,v) = f(-ab,v^<2>) e(a+b,v)
///   (iii) e(a,v) f(eps,x) = f(eps,x) e(a,v) e(eps a,[v,x])
///   (iv)  f(eps,x) f(eta,y) = f(eta,y) f(eps,x) f(eps eta,[x,y])
bool verify_relation_i(const UEnvContext* ctx, const GrassmannElement& a,
                       const GrassmannElement& b, std::size_t u_idx,
                       std::size_t v_idx);
bool verify_relation_ii(const UEnvContext* ctx, const GrassmannElement& a,
                        const GrassmannElement& b, std::size_t v_idx);
bool verify_relation_iii(const UEnvContext* ctx, const GrassmannElement& a,
                         const GrassmannElement& eps, std::size_t v_idx,
                         std::size_t x_idx);
bool verify_relation_iv(const UEnvContext* ctx, const GrassmannElement& eps,
                        const GrassmannElement& eta, std::size_t x_idx,
                        std::size_t y_idx);

/// Multiplicative extension of a basis action to U(g)_A: each basis letter
/// is replaced by its image (a parity-preserving g_{A_0} element) and the
/// result is straightened.
UEnvElement hopf_automorphism_apply(const std::vector<LieSuperElementA>& images,
                                    const UEnvElement& u);

}  // namespace hcpair
