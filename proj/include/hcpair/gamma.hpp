#pragma once

#include "hcpair/pair.hpp"

namespace hcpair {

/// Normal-form functor point of Gamma(A): a group point g in G(A_0) and
/// ordered odd coefficients (a_1,...,a_n) aligned with the odd basis.
/// Equality of normal forms is componentwise equality.
struct GammaElement {
  GroupPoint g;
  std::vector<GrassmannElement> odd;

  bool operator==(const GammaElement& o) const {
    return g == o.g && odd == o.odd;
  }
  bool operator!=(const GammaElement& o) const { return !(*this == o); }
};

/// Word letters for Gamma(A): group points, e(a, v) and f(eps, x) factors
/// with coordinate vectors over the odd/even basis.
struct GammaGenerator {
  enum class Kind { point, e, f };
  Kind kind = Kind::point;
  GroupPoint point;
  GrassmannElement coeff;
  Vec coords;

  static GammaGenerator of_point(GroupPoint p);
  static GammaGenerator of_e(GrassmannElement a, Vec odd_coords);
  static GammaGenerator of_f(GrassmannElement eps, Vec even_coords);
};

/// Shared state for Gamma(A) computations over one pair and one Grassmann
/// algebra: the assembled Lie superalgebra, the U(g)_A context and the
/// adjoint rows.
class GammaContext {
 public:
  GammaContext(const HCPair* pair, GrassmannAlgebra a);

  const HCPair& pair() const { return *pair_; }
  const MatrixGroup& group() const { return pair_->group; }
  const LieSuperAlgebra& lie() const { return lie_; }
  const UEnvContext* env() const { return &env_; }
  const AdjointData& adjoint() const { return adjoint_; }
  const GrassmannAlgebra& grassmann() const { return gr_; }
  std::size_t odd_dim() const { return pair_->odd_dim(); }

  GammaElement identity() const;
  GammaElement element(GroupPoint g, std::vector<GrassmannElement> odd) const;
  /// The defining word g e(a_1,v_1) ... e(a_n,v_n) of a normal form.
  std::vector<GammaGenerator> word_of(const GammaElement& p) const;

 private:
  const HCPair* pair_;
  GrassmannAlgebra gr_;
  LieSuperAlgebra lie_;
  UEnvContext env_;
  AdjointData adjoint_;
};

/// Rewrites a word of generators to the unique normal form: group points
/// are pushed left through e-factors via the coaction, e-factors are sorted
/// and merged via the grouplike-factor relations, and the f-factors these
/// steps emit bubble left and are absorbed into the group component.
GammaElement gamma_from_word(const GammaContext& ctx,
                             const std::vector<GammaGenerator>& word);

GammaElement gamma_mul(const GammaContext& ctx, const GammaElement& p,
                       const GammaElement& q);
GammaElement gamma_inv(const GammaContext& ctx, const GammaElement& p);

/// Σ(A)-word in the semidirect-product model: a group point and a grouplike
/// element of U(g)_A. The brute-force oracle for the rewriting path.
struct PairModelElement {
  GroupPoint g;
  UEnvElement u;
};

PairModelElement pair_model_identity(const GammaContext& ctx);
PairModelElement pair_model_generator(const GammaContext& ctx,
                                      const GammaGenerator& gen);
/// (g,u)(h,w) = (gh, u^h w).
PairModelElement pair_model_mul(const GammaContext& ctx,
                                const PairModelElement& p,
                                const PairModelElement& q);
/// Reads the normal form off the PBW coefficients: f from the even block,
/// a_i = f^{-1} (block at v_i), G-part g i(f).
GammaElement pair_model_normalize(const GammaContext& ctx,
                                  const PairModelElement& p);

/// Lemma (sub-pair) membership: the G-component satisfies H and the odd
/// coefficient vector lies in W (x) A_1.
bool gamma_membership(const GammaContext& ctx, const SubPair& sub,
                      const GammaElement& p);

/// Commutator probes of e- and first-order G-points recover the assembled
/// brackets and 2-operations; failures are reported.
Report extract_lie(const GammaContext& ctx);

/// The quasi-inverse roundtrip: G sits inside Gamma as the even part, the
/// coaction is recovered by conjugation probes, extract_lie reproduces the
/// structure constants, and the free-product presentation relations hold.
Report roundtrip_check(const GammaContext& ctx, std::mt19937_64& rng);

/// Conditions (A1)-(A3) of the base-extension quintuple, verified in the
/// pair model on sampled factors and points.
Report check_quintuple(const GammaContext& ctx, std::mt19937_64& rng);

/// The superalgebra map of a point evaluated on c (x) (wedge of the w_i):
/// c -> c(g), w_i -> a_i, extended multiplicatively.
GrassmannElement point_as_map(const GammaContext& ctx, const GammaElement& p,
                              const Poly& c, std::uint64_t wedge_mask);

/// Pushforward along a superalgebra map A -> A' given by generator images.
GammaElement gamma_push(const GammaContext& target,
                        const std::vector<GrassmannElement>& images,
                        const GammaElement& p);

/// Seeded random elements for the group-law suites.
GammaElement random_gamma(const GammaContext& ctx, std::mt19937_64& rng);

}  // namespace hcpair
