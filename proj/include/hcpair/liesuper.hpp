#pragma once

#include <string>
#include <vector>

#include "hcpair/grassmann.hpp"
#include "hcpair/linalg.hpp"

namespace hcpair {

/// A list of failed checks; empty means pass.
struct Report {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const Report& o) {
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  std::string str() const;
};

/// Finite-dimensional Lie superalgebra with a 2-operation, as structure
/// constants. Basis order: even vectors first, then odd; bracket values are
/// coordinate vectors over the full basis, the 2-operation table maps each
/// odd basis vector to coordinates over the even basis.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra() = default;
  LieSuperAlgebra(Field f, std::vector<std::string> even_names,
                  std::vector<std::string> odd_names);

  const Field& field() const { return field_; }
  std::size_t even_dim() const { return even_names_.size(); }
  std::size_t odd_dim() const { return odd_names_.size(); }
  std::size_t dim() const { return even_dim() + odd_dim(); }
  int parity(std::size_t i) const { return i >= even_dim() ? 1 : 0; }
  const std::vector<std::string>& even_names() const { return even_names_; }
  const std::vector<std::string>& odd_names() const { return odd_names_; }
  std::string basis_name(std::size_t i) const;

  void set_bracket(std::size_t i, std::size_t j, Vec value);
  void set_two_op(std::size_t odd_index, Vec even_coords);

  /// [z_i, z_j] as coordinates over the full basis.
  const Vec& bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coordinate vectors with scalar entries.
  Vec bracket_coords(const Vec& u, const Vec& w) const;
  /// 2-operation of the odd basis vector, over the even basis.
  const Vec& two_op_basis(std::size_t odd_index) const;
  /// 2-operation of a scalar odd coordinate vector, via the (B6) expansion.
  Vec two_op_coords(const Vec& odd_coords) const;
  bool has_two_op() const { return !two_op_.empty(); }

  bool operator==(const LieSuperAlgebra& o) const;

 private:
  Field field_;
  std::vector<std::string> even_names_, odd_names_;
  std::vector<std::vector<Vec>> bracket_;
  std::vector<Vec> two_op_;
};

/// Evaluates (B1)-(B7) on basis tuples (with the polarizations that
/// multilinearity requires); failures are report entries.
Report check_lie_axioms(const LieSuperAlgebra& g);

/// The 2-operation table forced over char != 2: v^<2> = [v,v]/2.
std::vector<Vec> two_op_half_bracket(const LieSuperAlgebra& g);

/// Cocycle deformation: bracket negated exactly on odd-odd pairs, the
/// 2-operation negated. Involutive.
LieSuperAlgebra sigma_deform_lie(const LieSuperAlgebra& g);

/// Element of the base extension g_A: one Grassmann coefficient per basis
/// vector, kept on the left of the basis vector.
class LieSuperElementA {
 public:
  LieSuperElementA() = default;
  LieSuperElementA(const LieSuperAlgebra* lie, const GrassmannAlgebra& a);

  static LieSuperElementA basis(const LieSuperAlgebra* lie,
                                const GrassmannAlgebra& a, std::size_t i);

  const LieSuperAlgebra* lie() const { return lie_; }
  const GrassmannAlgebra& coeff_algebra() const { return gr_; }
  const std::vector<GrassmannElement>& coords() const { return coords_; }
  GrassmannElement& coord(std::size_t i) { return coords_[i]; }
  const GrassmannElement& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// Uniform total parity (coefficient parity + basis parity), if any.
  std::optional<int> total_parity() const;

  LieSuperElementA operator+(const LieSuperElementA& o) const;
  LieSuperElementA operator-(const LieSuperElementA& o) const;
  LieSuperElementA scale(const GrassmannElement& c) const;
  bool operator==(const LieSuperElementA& o) const;

 private:
  const LieSuperAlgebra* lie_ = nullptr;
  GrassmannAlgebra gr_;
  std::vector<GrassmannElement> coords_;
};

/// A-bilinear bracket with the Koszul sign for coefficients passing basis
/// vectors.
LieSuperElementA bracket(const LieSuperElementA& z, const LieSuperElementA& w);

/// Base-extended 2-operation: sum c_i^2 (x) v_i^<2> + sum_{i<j} c_i c_j (x)
/// [v_i, v_j] for u = sum c_i (x) v_i supported on the odd basis with
/// parity-uniform coefficients. Result lives over the even basis.
LieSuperElementA base_extend_two_op(const LieSuperElementA& u);

}  // namespace hcpair
