#include "hcpair/liesuper.hpp"

#include <array>

namespace hcpair {

std::string Report::str() const {
  if (ok()) return "pass";
  std::string out;
  for (auto& f : failures) out += f + "\n";
  return out;
}

LieSuperAlgebra::LieSuperAlgebra(Field f, std::vector<std::string> even_names,
                                 std::vector<std::string> odd_names)
    : field_(f),
      even_names_(std::move(even_names)),
      odd_names_(std::move(odd_names)) {
  bracket_.assign(dim(), std::vector<Vec>(dim(), vec_zero(dim(), field_)));
  two_op_.assign(odd_dim(), vec_zero(even_dim(), field_));
}

std::string LieSuperAlgebra::basis_name(std::size_t i) const {
  return i < even_dim() ? even_names_[i] : odd_names_[i - even_dim()];
}

void LieSuperAlgebra::set_bracket(std::size_t i, std::size_t j, Vec value) {
  if (value.size() != dim()) throw error("bracket value has wrong length");
  int target = (parity(i) + parity(j)) & 1;
  for (std::size_t k = 0; k < dim(); ++k)
    if (!value[k].is_zero() && parity(k) != target)
      throw error("bracket violates parity");
  bracket_[i][j] = std::move(value);
}

void LieSuperAlgebra::set_two_op(std::size_t odd_index, Vec even_coords) {
  if (even_coords.size() != even_dim()) throw error("2-op value wrong length");
  two_op_[odd_index] = std::move(even_coords);
}

const Vec& LieSuperAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return bracket_[i][j];
}

Vec LieSuperAlgebra::bracket_coords(const Vec& u, const Vec& w) const {
  Vec r = vec_zero(dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (w[j].is_zero()) continue;
      Scalar c = u[i] * w[j];
      const Vec& b = bracket_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!b[k].is_zero()) r[k] += c * b[k];
    }
  }
  return r;
}

const Vec& LieSuperAlgebra::two_op_basis(std::size_t odd_index) const {
  return two_op_[odd_index];
}

Vec LieSuperAlgebra::two_op_coords(const Vec& odd_coords) const {
  std::size_t m = even_dim(), n = odd_dim();
  if (odd_coords.size() != n) throw error("odd coordinate vector wrong length");
  Vec r = vec_zero(m, field_);
  for (std::size_t i = 0; i < n; ++i) {
    if (odd_coords[i].is_zero()) continue;
    Scalar sq = odd_coords[i] * odd_coords[i];
    for (std::size_t k = 0; k < m; ++k) r[k] += sq * two_op_[i][k];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (odd_coords[j].is_zero()) continue;
      Scalar c = odd_coords[i] * odd_coords[j];
      const Vec& b = bracket_[m + i][m + j];
      for (std::size_t k = 0; k < m; ++k) r[k] += c * b[k];
    }
  }
  return r;
}

bool LieSuperAlgebra::operator==(const LieSuperAlgebra& o) const {
  return field_ == o.field_ && even_names_ == o.even_names_ &&
         odd_names_ == o.odd_names_ && bracket_ == o.bracket_ &&
         two_op_ == o.two_op_;
}

namespace {

bool vec_is_zero(const Vec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec vec_scale(Vec a, const Scalar& c) {
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace

Report check_lie_axioms(const LieSuperAlgebra& g) {
  Report report;
  const Field& f = g.field();
  std::size_t m = g.even_dim(), n = g.odd_dim(), dim = g.dim();

  auto name2 = [&](std::size_t i, std::size_t j) {
    return "[" + g.basis_name(i) + "," + g.basis_name(j) + "]";
  };

  // (B1) on the even part: [x,x] = 0 together with its polarization.
  for (std::size_t i = 0; i < m; ++i)
    if (!vec_is_zero(g.bracket_basis(i, i)))
      report.fail("(B1) " + name2(i, i) + " != 0");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!vec_is_zero(vec_add(g.bracket_basis(i, j), g.bracket_basis(j, i))))
        report.fail("(B1) polarization fails for " + name2(i, j));

  // (B3) super-antisymmetry: [z,w] + (-1)^{|z||w|}[w,z] = 0
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec sum = g.bracket_basis(i, j);
      Scalar sign = (g.parity(i) && g.parity(j)) ? -Scalar::one(f)
                                                 : Scalar::one(f);
      sum = vec_add(sum, vec_scale(g.bracket_basis(j, i), sign));
      if (!vec_is_zero(sum))
        report.fail("(B3) fails for " + name2(i, j));
    }

  // (B2) [[v,v],v] = 0 for odd v, via all cubic polarizations.
  auto dbl_bracket = [&](std::size_t a, std::size_t b, std::size_t c) {
    Vec ec = vec_zero(dim, f);
    ec[c] = Scalar::one(f);
    return g.bracket_coords(g.bracket_basis(a, b), ec);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        std::size_t a = m + i, b = m + j, c = m + k;
        Vec total = vec_zero(dim, f);
        std::vector<std::array<std::size_t, 3>> tuples;
        if (i == j && j == k) {
          tuples = {{a, a, a}};
        } else if (i == j) {
          tuples = {{a, a, c}, {a, c, a}, {c, a, a}};
        } else if (j == k) {
          tuples = {{b, b, a}, {b, a, b}, {a, b, b}};
        } else {
          tuples = {{a, b, c}, {a, c, b}, {b, a, c},
                    {b, c, a}, {c, a, b}, {c, b, a}};
        }
        for (auto& t : tuples) total = vec_add(total, dbl_bracket(t[0], t[1], t[2]));
        if (!vec_is_zero(total))
          report.fail("(B2) polarization fails for odd triple (" +
                      g.basis_name(a) + "," + g.basis_name(b) + "," +
                      g.basis_name(c) + ")");
      }

  // (B4) super Jacobi on all basis triples.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        int pi = g.parity(i), pj = g.parity(j), pk = g.parity(k);
        Vec ek = vec_zero(dim, f), ei = vec_zero(dim, f), ej = vec_zero(dim, f);
        ek[k] = ei[i] = ej[j] = Scalar::one(f);
        Vec t1 = g.bracket_coords(g.bracket_basis(i, j), ek);
        Vec t2 = g.bracket_coords(g.bracket_basis(j, k), ei);
        Vec t3 = g.bracket_coords(g.bracket_basis(k, i), ej);
        Scalar s2 = (pi & ((pj + pk) & 1)) ? -Scalar::one(f) : Scalar::one(f);
        Scalar s3 = (pk & ((pi + pj) & 1)) ? -Scalar::one(f) : Scalar::one(f);
        Vec total = vec_add(t1, vec_add(vec_scale(t2, s2), vec_scale(t3, s3)));
        if (!vec_is_zero(total))
          report.fail("(B4) fails for (" + g.basis_name(i) + "," +
                      g.basis_name(j) + "," + g.basis_name(k) + ")");
      }

  if (g.has_two_op() && n > 0) {
    // (B5) via the coordinate extension with lambda = 2.
    for (std::size_t i = 0; i < n; ++i) {
      Vec lam = vec_zero(n, f);
      lam[i] = Scalar::of(2, f);
      Vec lhs = g.two_op_coords(lam);
      Vec rhs = vec_scale(g.two_op_basis(i), Scalar::of(4, f));
      if (lhs != rhs) report.fail("(B5) fails for " + g.basis_name(m + i));
    }
    // (B6) forces [v,v] = 2 v^<2> on the basis.
    for (std::size_t i = 0; i < n; ++i) {
      Vec bb = g.bracket_basis(m + i, m + i);
      Vec expect = vec_scale(g.two_op_basis(i), Scalar::of(2, f));
      for (std::size_t k = 0; k < m; ++k)
        if (bb[k] != expect[k])
          report.fail("(B6) [v,v] != 2*v^<2> for " + g.basis_name(m + i));
    }
    // (B7) [v^<2>, z] = [v, [v, z]] on basis v and on sums v_i + v_j.
    auto check_b7 = [&](const Vec& odd_coords, const std::string& label) {
      Vec sq = g.two_op_coords(odd_coords);
      Vec sq_full = vec_zero(dim, f);
      for (std::size_t k = 0; k < m; ++k) sq_full[k] = sq[k];
      Vec v_full = vec_zero(dim, f);
      for (std::size_t k = 0; k < n; ++k) v_full[m + k] = odd_coords[k];
      for (std::size_t z = 0; z < dim; ++z) {
        Vec ez = vec_zero(dim, f);
        ez[z] = Scalar::one(f);
        Vec lhs = g.bracket_coords(sq_full, ez);
        Vec rhs = g.bracket_coords(v_full, g.bracket_coords(v_full, ez));
        if (lhs != rhs)
          report.fail("(B7) fails for " + label + " against " +
                      g.basis_name(z));
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      Vec lam = vec_zero(n, f);
      lam[i] = Scalar::one(f);
      check_b7(lam, g.basis_name(m + i));
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec lam2 = lam;
        lam2[j] = Scalar::one(f);
        check_b7(lam2, g.basis_name(m + i) + "+" + g.basis_name(m + j));
      }
    }
  }
  return report;
}

std::vector<Vec> two_op_half_bracket(const LieSuperAlgebra& g) {
  std::vector<Vec> table;
  Scalar half = Scalar::ratio(1, 2, g.field());
  for (std::size_t i = 0; i < g.odd_dim(); ++i) {
    const Vec& vv = g.bracket_basis(g.even_dim() + i, g.even_dim() + i);
    Vec row = vec_zero(g.even_dim(), g.field());
    for (std::size_t k = 0; k < g.even_dim(); ++k) row[k] = vv[k] * half;
    table.push_back(std::move(row));
  }
  return table;
}

LieSuperAlgebra sigma_deform_lie(const LieSuperAlgebra& g) {
  LieSuperAlgebra r(g.field(), g.even_names(), g.odd_names());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vec v = g.bracket_basis(i, j);
      if (g.parity(i) && g.parity(j)) v = vec_scale(v, -Scalar::one(g.field()));
      r.set_bracket(i, j, std::move(v));
    }
  for (std::size_t i = 0; i < g.odd_dim(); ++i)
    r.set_two_op(i, vec_scale(g.two_op_basis(i), -Scalar::one(g.field())));
  return r;
}

LieSuperElementA::LieSuperElementA(const LieSuperAlgebra* lie,
                                   const GrassmannAlgebra& a)
    : lie_(lie), gr_(a),
      coords_(lie->dim(), GrassmannElement::zero(a)) {}

LieSuperElementA LieSuperElementA::basis(const LieSuperAlgebra* lie,
                                         const GrassmannAlgebra& a,
                                         std::size_t i) {
  LieSuperElementA r(lie, a);
  r.coords_[i] = GrassmannElement::one(a);
  return r;
}

bool LieSuperElementA::is_zero() const {
  for (auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<int> LieSuperElementA::total_parity() const {
  std::optional<int> result;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    int total = (coords_[i].parity() + lie_->parity(i)) & 1;
    if (result && *result != total) return std::nullopt;
    result = total;
  }
  return result ? result : std::optional<int>(0);
}

LieSuperElementA LieSuperElementA::operator+(const LieSuperElementA& o) const {
  LieSuperElementA r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] += o.coords_[i];
  return r;
}

LieSuperElementA LieSuperElementA::operator-(const LieSuperElementA& o) const {
  LieSuperElementA r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = r.coords_[i] - o.coords_[i];
  return r;
}

LieSuperElementA LieSuperElementA::scale(const GrassmannElement& c) const {
  LieSuperElementA r = *this;
  for (auto& x : r.coords_) x = c * x;
  return r;
}

bool LieSuperElementA::operator==(const LieSuperElementA& o) const {
  return lie_ == o.lie_ && gr_ == o.gr_ && coords_ == o.coords_;
}

LieSuperElementA bracket(const LieSuperElementA& z, const LieSuperElementA& w) {
  if (z.lie() != w.lie() || !(z.coeff_algebra() == w.coeff_algebra()))
    throw error("mismatched bracket contexts");
  const LieSuperAlgebra& g = *z.lie();
  LieSuperElementA r(z.lie(), z.coeff_algebra());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (z.coord(i).is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (w.coord(j).is_zero()) continue;
      // d_j passes z_i: its odd part picks up (-1)^{|z_i|}
      GrassmannElement c = w.coord(j);
      GrassmannElement crossed =
          g.parity(i) ? c.even_part() - c.odd_part() : c;
      GrassmannElement coeff = z.coord(i) * crossed;
      const Vec& b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!b[k].is_zero()) r.coord(k) += coeff.scale(b[k]);
    }
  }
  return r;
}

LieSuperElementA base_extend_two_op(const LieSuperElementA& u) {
  const LieSuperAlgebra& g = *u.lie();
  std::size_t m = g.even_dim(), n = g.odd_dim();
  for (std::size_t i = 0; i < m; ++i)
    if (!u.coord(i).is_zero())
      throw error("2-operation input must be supported on the odd basis");
  if (!u.total_parity())
    throw error("2-operation input must be parity-homogeneous");
  LieSuperElementA r(u.lie(), u.coeff_algebra());
  for (std::size_t i = 0; i < n; ++i) {
    const GrassmannElement& ci = u.coord(m + i);
    if (ci.is_zero()) continue;
    GrassmannElement sq = ci * ci;
    if (!sq.is_zero()) {
      const Vec& t = g.two_op_basis(i);
      for (std::size_t k = 0; k < m; ++k)
        if (!t[k].is_zero()) r.coord(k) += sq.scale(t[k]);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const GrassmannElement& cj = u.coord(m + j);
      if (cj.is_zero()) continue;
      GrassmannElement prod = ci * cj;
      if (prod.is_zero()) continue;
      const Vec& b = g.bracket_basis(m + i, m + j);
      for (std::size_t k = 0; k < m; ++k)
        if (!b[k].is_zero()) r.coord(k) += prod.scale(b[k]);
    }
  }
  return r;
}

}  // namespace hcpair
