#pragma once

#include "hcpair/group.hpp"

namespace hcpair {

/// Closed super-subgroup data at the pair level: extra defining equations
/// for H inside G, a dominant polynomial parametrization (or a finite point
/// list), a Lie(H) basis, and a subspace W of V as rows of coordinates.
struct SubPair {
  std::string name;
  std::vector<Poly> extra_equations;
  Parametrization param;
  std::vector<Mat> point_list;  // finite H alternative to the chart
  std::vector<Mat> lie_h;
  std::vector<Vec> w_basis;
};

/// Harish-Chandra pair: a matrix group G, an odd module V with coaction
/// polynomials c_{jk}(g,d), and a symmetric bracket V (x) V -> Lie(G).
class HCPair {
 public:
  MatrixGroup group;
  std::vector<std::string> odd_names;
  /// rho[j][k]: v_j^g = sum_k g(c_{jk}) v_k
  std::vector<std::vector<Poly>> rho;
  /// odd_bracket[i][j]: coordinates of [v_i, v_j] over the Lie basis
  std::vector<std::vector<Vec>> odd_bracket;
  std::vector<SubPair> subpairs;
  /// concrete generator points for word-based suites
  std::vector<Mat> word_generators;

  std::size_t odd_dim() const { return odd_names.size(); }

  /// v_j <| x: the tangent derivative of the coaction row along x.
  Vec triangle_basis(std::size_t j, const Mat& x) const;

  /// Adjoint rows over the assembled basis: even rows from conjugation,
  /// odd rows from the coaction.
  AdjointData adjoint_full() const;

  /// The sub-pair describing the whole pair (H = G, W = V).
  SubPair whole_subpair() const;
};

/// g := Lie(G) (+) V with the bracket assembled from matrix commutators,
/// the coaction tangents and the pair's symmetric bracket; 2-operation
/// [v,v]/2. Throws when the assembled constants fail (B1)-(B7) unless
/// check is false.
LieSuperAlgebra assemble_lie(const HCPair& pair, bool check = true);

/// (G1) symmetry on basis pairs, (G2) via cubic polarizations, and
/// G-equivariance of the bracket at sampled points.
Report check_pair(const HCPair& pair, std::mt19937_64& rng);

/// (H1) W-stability at subgroup samples, (H2) [W,W] inside Lie(H), and
/// consistency of the Lie(H) basis with the subgroup equations.
Report check_subpair(const HCPair& pair, const SubPair& sub,
                     std::mt19937_64& rng);

/// Morphism data: polynomial images of the matrix entries and of d.
struct GroupMorphism {
  const MatrixGroup* source = nullptr;
  const MatrixGroup* target = nullptr;
  std::vector<std::vector<Poly>> matrix;  // entries in source coordinates
  Poly d_image;
};

GroupPoint morphism_apply(const GroupMorphism& phi, const GroupPoint& p);
/// Lie(phi): the tangent map along X at the identity.
Mat morphism_tangent(const GroupMorphism& phi, const Mat& x);

/// (G3) equivariance at sampled points and (G4) bracket compatibility on
/// basis pairs for (phi, psi) between pairs.
Report check_morphism(const HCPair& src, const HCPair& dst,
                      const GroupMorphism& phi, const Mat& psi,
                      std::mt19937_64& rng);

/// The matrix group cut out by G's equations plus the sub-pair's; used for
/// subgroup sampling and Lie(H) validation.
MatrixGroup subgroup_as_group(const HCPair& pair, const SubPair& sub);

/// Sample points of the sub-subgroup (parametrization chart or point list).
std::vector<GroupPoint> subgroup_samples(const HCPair& pair, const SubPair& sub,
                                         const GrassmannAlgebra& a,
                                         std::mt19937_64& rng,
                                         std::size_t count,
                                         std::uint32_t usable_generators = 0);

/// Largest subspace U of V containing W with rho_H(u) - 1 (x) u supported
/// in O(H) (x) W: exact polynomial-coefficient linear algebra over the
/// parametrization (or the point list).
std::vector<Vec> inv_submodule(const HCPair& pair, const SubPair& sub,
                               const std::vector<Vec>& w);

/// (L : W) = { v : [v, W] subset span(L) }; pass the Lie(H) matrices or an
/// empty list for L = 0.
std::vector<Vec> transporter(const HCPair& pair, const std::vector<Mat>& l,
                             const std::vector<Vec>& w);

/// Pair-level normalizer/centralizer output: the odd subspace and the
/// Lie-algebra-level cutout of the group part (membership predicates are
/// separate functions).
struct TheoremOutput {
  std::vector<Vec> odd_part;
  std::vector<Vec> lie_part;
};

TheoremOutput normalizer_pair(const HCPair& pair, const SubPair& sub);
TheoremOutput centralizer_pair(const HCPair& pair, const SubPair& sub);
TheoremOutput center_pair(const HCPair& pair);

/// True when the point satisfies the sub-subgroup's equations (or matches a
/// listed point for finite H).
bool subgroup_point_member(const HCPair& pair, const SubPair& sub,
                           const GroupPoint& p);

/// Membership predicates at sampled subgroup points: conjugation preserves
/// the H-equations and the W-action (normalizer), or the point commutes
/// with the samples and fixes W (centralizer).
bool normalizer_member(const HCPair& pair, const SubPair& sub,
                       const GroupPoint& g, std::mt19937_64& rng);
bool centralizer_member(const HCPair& pair, const SubPair& sub,
                        const GroupPoint& g, std::mt19937_64& rng);

enum class PairTransform { negate_bracket, sigma };

/// (G, V, -[,]) or the sigma deformation of the assembled algebra with the
/// V-action unchanged; at the pair level both negate the symmetric bracket.
/// Involutive.
HCPair hcp_transform(const HCPair& pair, PairTransform kind);

}  // namespace hcpair
