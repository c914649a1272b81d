#pragma once

#include <cstdint>
#include <tuple>

#include "hcpair/grassmann.hpp"
#include "hcpair/linalg.hpp"
#include "hcpair/liesuper.hpp"

namespace hcpair {

/// Exactly two tensor/duality conventions exist: the deformed one carries
/// the (-1)^{|m'||n|} crossing sign (and the (-1)^{C(n,2)} det sign on the
/// exterior pairing), the ordinary one carries neither.
enum class PairingConvention { deformed, ordinary };

/// Wedge elements share the sparse subset representation of Grassmann
/// elements: subset-of-basis -> scalar, odd generators squaring to zero.
using ExteriorElement = GrassmannElement;

/// Finite-dimensional Hopf (super)algebra as explicit structure-constant
/// tables over a graded basis. Conventions and deformations act on these
/// tables as first-class values.
struct HopfData {
  Field field;
  std::vector<std::string> names;
  std::vector<int> parities;
  /// product[i][j] = coordinates of b_i b_j
  std::vector<std::vector<Vec>> product;
  /// coproduct[i] = list of (j, k, c): Delta(b_i) = sum c b_j (x) b_k
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>>
      coproduct;
  Vec unit;     // coordinates of 1
  Vec counit;   // counit per basis element
  std::vector<Vec> antipode;

  std::size_t dim() const { return names.size(); }
  bool operator==(const HopfData&) const = default;
};

/// The exterior Hopf superalgebra on dim odd primitive generators; basis
/// indexed by subset masks.
HopfData exterior_hopf(std::uint32_t dim, const Field& f);

/// Wedge-determinant pairing between /\(W*) and /\(W) in dual bases:
/// <basis wedge S, basis wedge T> = delta_{S,T} times (-1)^{C(|S|,2)} for
/// the deformed convention, +1 for the ordinary one. Bilinear extension.
Scalar ext_pairing(const ExteriorElement& xi, const ExteriorElement& omega,
                   PairingConvention conv);

/// The tensor product of two pairings evaluated on (m (x) mp, n (x) np),
/// termwise over basis terms with the convention's crossing sign.
template <class P1, class P2>
Scalar tensor_pairing(P1&& p1, P2&& p2, const ExteriorElement& m,
                      const ExteriorElement& mp, const ExteriorElement& n,
                      const ExteriorElement& np, PairingConvention conv) {
  Scalar total = Scalar::zero(m.algebra().field);
  for (auto& [sm, cm] : m.terms())
    for (auto& [smp, cmp] : mp.terms())
      for (auto& [sn, cn] : n.terms())
        for (auto& [snp, cnp] : np.terms()) {
          Scalar v = p1(sm, sn) * p2(smp, snp) * cm * cmp * cn * cnp;
          if (conv == PairingConvention::deformed &&
              (__builtin_popcountll(smp) & 1) && (__builtin_popcountll(sn) & 1))
            v = -v;
          total += v;
        }
  return total;
}

/// Verifies the Hopf-pairing axioms and the antipode compatibility on all
/// basis pairs/triples: <x, hk> = <Delta x, h (x) k>, <xy, h> = <x (x) y,
/// Delta h>, <x,1> = eps(x), <1,h> = eps(h), <S(x), h> = <x, S(h)>. The
/// tensor products of the pairing are taken in the given convention.
Report check_hopf_pairing(const HopfData& l, const HopfData& h,
                          const Mat& pairing, PairingConvention conv);

/// Verifies the Hopf-superalgebra axioms of the table data itself.
Report check_hopf_axioms(const HopfData& h);

/// Cocycle deformation by sigma(i,j) = (-1)^{ij}: product and coproduct
/// constants twisted on crossing parities; unit, counit and antipode tables
/// unchanged. Involutive.
HopfData sigma_deform_hopf(const HopfData& h);

/// Dual Hopf data through the canonical pairing, under either convention.
HopfData dual_hopf(const HopfData& h, PairingConvention conv);

/// Checks that v -> nu(|v|) v with nu(1) = sqrt(-1) is a Hopf isomorphism
/// from the sigma deformation of h to h. Requires sqrt(-1) in the field.
Report nu_isomorphism(const HopfData& h);

/// Gram matrix of the exterior pairing over the full wedge bases.
Mat ext_gram_matrix(std::uint32_t dim, const Field& f, PairingConvention conv);

/// Element of /\(W*)_A: subset of the dual basis -> Grassmann coefficient.
using ExtAElement = std::map<std::uint64_t, GrassmannElement>;

/// Product in /\(W*)_A; the right coefficient crosses the left wedge.
ExtAElement ext_a_mul(const ExtAElement& x, const ExtAElement& y,
                      const GrassmannAlgebra& a);

/// Base-extended pairing of g against the basis wedge of /\(W).
GrassmannElement ext_a_pair_basis(const ExtAElement& g, std::uint64_t wedge,
                                  PairingConvention conv,
                                  const GrassmannAlgebra& a);

}  // namespace hcpair
