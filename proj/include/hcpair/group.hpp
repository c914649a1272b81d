#pragma once

#include <cstdint>
#include <mutex>
#include <random>

#include "hcpair/env.hpp"
#include "hcpair/linalg.hpp"
#include "hcpair/poly.hpp"

namespace hcpair {

/// Polynomial chart onto a closed subgroup (or the group itself), in named
/// parameters; invertible parameters admit negative exponents. Dominance
/// onto the target is a trusted fixture assertion.
struct Parametrization {
  std::vector<std::string> param_names;
  std::vector<bool> invertible;
  std::vector<std::vector<Laurent>> matrix;  // m x m entries
  Laurent d;

  bool empty() const { return matrix.empty(); }
  std::size_t nparams() const { return invertible.size(); }
};

/// Affine algebraic group embedded as a matrix group: polynomial equations
/// in the entries g_rc and the inverted determinant d (relation d det = 1
/// is always among the equations). Coordinates are indexed g_rc -> r*m+c,
/// d -> m*m.
class MatrixGroup {
 public:
  MatrixGroup() = default;
  // caches are per-instance and do not travel with copies
  MatrixGroup(const MatrixGroup& o)
      : m(o.m), field(o.field), equations(o.equations),
        lie_basis(o.lie_basis), param(o.param),
        supplied_adjoint_even(o.supplied_adjoint_even) {}
  MatrixGroup& operator=(const MatrixGroup& o) {
    m = o.m;
    field = o.field;
    equations = o.equations;
    lie_basis = o.lie_basis;
    param = o.param;
    supplied_adjoint_even = o.supplied_adjoint_even;
    adjoint_even_.clear();
    pairing_cache_.clear();
    return *this;
  }

  std::uint32_t m = 0;
  Field field;
  std::vector<Poly> equations;
  std::vector<Mat> lie_basis;
  Parametrization param;
  /// Fixture-supplied conjugation rows; validated at sampled points. When
  /// empty the rows are derived symbolically from d adj(g) X_j g, which
  /// works when conjugation stays in the Lie span identically and not just
  /// modulo the defining ideal.
  std::vector<std::vector<Poly>> supplied_adjoint_even;

  std::uint32_t var_count() const { return m * m + 1; }
  std::uint32_t var_entry(std::uint32_t r, std::uint32_t c) const {
    return r * m + c;
  }
  std::uint32_t var_d() const { return m * m; }
  Poly coordinate(std::uint32_t var) const {
    return Poly::variable(var_count(), field, var);
  }
  std::size_t lie_dim() const { return lie_basis.size(); }

  /// Conjugation action on the Lie basis as polynomial rows:
  /// x_j^g = sum_k P[j][k](g,d) x_k with P from d adj(g) X_j g.
  const std::vector<std::vector<Poly>>& adjoint_even() const;

  /// Straightening cache for distribution pairings against coordinates.
  Scalar cached_coordinate_pairing(const std::vector<std::uint32_t>& word,
                                   std::uint32_t coord) const;

 private:
  mutable std::vector<std::vector<Poly>> adjoint_even_;
  mutable std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, Scalar>
      pairing_cache_;
  mutable std::mutex lock_;
};

/// A_0-point of the group: even Grassmann matrix entries plus the d-value.
struct GroupPoint {
  const MatrixGroup* group = nullptr;
  GrassmannAlgebra alg;
  std::vector<GrassmannElement> entries;  // m*m, row-major
  GrassmannElement dval;

  const GrassmannElement& at(std::uint32_t r, std::uint32_t c) const {
    return entries[r * group->m + c];
  }
  GrassmannElement& at(std::uint32_t r, std::uint32_t c) {
    return entries[r * group->m + c];
  }
  bool operator==(const GroupPoint& o) const {
    return entries == o.entries && dval == o.dval;
  }
};

GroupPoint identity_point(const MatrixGroup& g, const GrassmannAlgebra& a);
/// Embeds a scalar matrix; d is computed from the determinant.
GroupPoint point_from_matrix(const MatrixGroup& g, const GrassmannAlgebra& a,
                             const Mat& values);
GroupPoint point_mul(const GroupPoint& p, const GroupPoint& q);
/// Adjugate-times-d inverse.
GroupPoint point_inverse(const GroupPoint& p);
/// All defining equations vanish at the point and d det = 1.
Report point_membership(const GroupPoint& p);
/// Evaluates a coordinate-ring polynomial at the point.
GrassmannElement point_eval(const GroupPoint& p, const Poly& c);

/// Nullspace of the Jacobian of the defining equations at the identity:
/// matrices X with I + tX satisfying all equations mod t^2.
std::vector<Mat> lie_algebra_of(const MatrixGroup& g);

/// The fixture basis must span exactly the computed Lie algebra.
Report check_lie_basis(const MatrixGroup& g);

/// Coefficient of t in c evaluated at I + tX over dual numbers.
Scalar tangent_pairing(const MatrixGroup& g, const Mat& x, const Poly& c);

/// Hopf pairing <x_{k_1}...x_{k_r}, c>: the coefficient of t_1...t_r in c
/// evaluated at prod_l (I + t_l X_{k_l}) over a multi-dual-number ring.
Scalar distribution_pairing_word(const MatrixGroup& g,
                                 const std::vector<std::uint32_t>& word,
                                 const Poly& c);

/// Linear extension to even-only U(g_0) elements with constant coefficients.
Scalar distribution_pairing(const MatrixGroup& g, const UEnvElement& u,
                            const Poly& c);

/// A_0-points from grouplikes of U(g_0)_{A_0}: entries <f, g_rc>_{A_0}.
/// Multiplicative; i(f(eps,x)) = I + eps X.
GroupPoint grouplike_to_point(const MatrixGroup& g, const UEnvElement& f);

/// Values P[j][k](g) of the even adjoint rows at a point.
std::vector<std::vector<GrassmannElement>> adjoint_even_at(
    const MatrixGroup& g, const GroupPoint& p);

/// Full adjoint data over an assembled Lie superalgebra basis: even rows
/// from the group, odd rows supplied by the pair (parity-preserving).
using AdjointData = std::vector<std::vector<Poly>>;

/// Adjoint action z -> z^g = sum P[j][k](g) z_k, extended A-linearly.
LieSuperElementA adjoint_apply(const MatrixGroup& g, const AdjointData& adj,
                               const GroupPoint& p, const LieSuperElementA& z);

/// Point sampler: parametrization values at random field points times
/// nilpotent perturbations along the Lie algebra (exponentials over the
/// rationals, square-zero first-order factors over prime fields). When
/// usable_generators is nonzero the perturbations only touch that many
/// leading Grassmann generators, reserving the rest for probes.
std::vector<GroupPoint> sample_points(const MatrixGroup& g,
                                      const GrassmannAlgebra& a,
                                      std::mt19937_64& rng, std::size_t count,
                                      std::uint32_t usable_generators = 0);

/// Group-level sanity: identity membership, closure under products and
/// inverses at sampled points, anti-morphism law of the adjoint rows.
Report check_group(const MatrixGroup& g, const AdjointData& adj,
                   const LieSuperAlgebra& lie, std::mt19937_64& rng);

/// (D1) on all basis pairs, (D2) on sampled polynomial pairs, (D3) at
/// sampled points over dual numbers.
Report check_d_conditions(const MatrixGroup& g, const LieSuperAlgebra& lie,
                          const AdjointData& adj, std::mt19937_64& rng);

/// Coordinates of a matrix over the group's Lie basis; throws when the
/// matrix is outside the span.
Vec expand_over_lie(const MatrixGroup& g, const Mat& x);

/// exp of a nilpotent even element (finite series; needs invertible
/// factorials, so prime-field use is bounded by the characteristic).
GrassmannElement gr_exp(const GrassmannElement& x);

}  // namespace hcpair
