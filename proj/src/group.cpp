#include "hcpair/group.hpp"

#include <bit>

namespace hcpair {

namespace {

std::vector<std::vector<Poly>> symbolic_matrix(const MatrixGroup& g) {
  std::vector<std::vector<Poly>> s(g.m, std::vector<Poly>(g.m));
  for (std::uint32_t r = 0; r < g.m; ++r)
    for (std::uint32_t c = 0; c < g.m; ++c)
      s[r][c] = g.coordinate(g.var_entry(r, c));
  return s;
}

std::vector<std::vector<Poly>> poly_mat_mul(
    const std::vector<std::vector<Poly>>& a,
    const std::vector<std::vector<Poly>>& b) {
  std::size_t n = a.size();
  const Field& f = a[0][0].field();
  std::uint32_t nv = a[0][0].nvars();
  std::vector<std::vector<Poly>> r(n, std::vector<Poly>(n, Poly(nv, f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

std::vector<std::vector<Poly>> constant_matrix(const MatrixGroup& g,
                                               const Mat& x) {
  std::vector<std::vector<Poly>> r(g.m, std::vector<Poly>(g.m));
  for (std::uint32_t i = 0; i < g.m; ++i)
    for (std::uint32_t j = 0; j < g.m; ++j)
      r[i][j] = Poly::constant(g.var_count(), x[i][j]);
  return r;
}

Scalar trace(const Mat& x) {
  Scalar t = x[0][0];
  for (std::size_t i = 1; i < x.size(); ++i) t += x[i][i];
  return t;
}

std::vector<Scalar> identity_coords(const MatrixGroup& g) {
  std::vector<Scalar> v(g.var_count(), Scalar::zero(g.field));
  for (std::uint32_t i = 0; i < g.m; ++i)
    v[g.var_entry(i, i)] = Scalar::one(g.field);
  v[g.var_d()] = Scalar::one(g.field);
  return v;
}

}  // namespace

const std::vector<std::vector<Poly>>& MatrixGroup::adjoint_even() const {
  std::lock_guard<std::mutex> guard(lock_);
  if (!adjoint_even_.empty()) return adjoint_even_;
  if (!supplied_adjoint_even.empty()) {
    adjoint_even_ = supplied_adjoint_even;
    return adjoint_even_;
  }
  // x_j^g = g^{-1} X_j g = d adj(g) X_j g, re-expanded over the Lie basis
  auto sym = symbolic_matrix(*this);
  auto adj_g = poly_adjugate(sym);
  Poly dpoly = coordinate(var_d());
  std::size_t dim = lie_basis.size();

  // left inverse of the basis-as-columns matrix
  Mat bt = mat_zero(dim, m * m, field);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::uint32_t r = 0; r < m; ++r)
      for (std::uint32_t c = 0; c < m; ++c)
        bt[k][r * m + c] = lie_basis[k][r][c];
  // solve bt^T y = e_k  (bt^T is (m*m) x dim)
  Mat btt = mat_transpose(bt);
  std::vector<Vec> left_inv;
  for (std::size_t k = 0; k < dim; ++k) {
    Vec ek = vec_zero(dim, field);
    ek[k] = Scalar::one(field);
    auto y = solve(mat_transpose(btt), ek);
    if (!y) throw error("lie basis is not linearly independent");
    left_inv.push_back(std::move(*y));
  }

  adjoint_even_.assign(dim, std::vector<Poly>(dim, Poly(var_count(), field)));
  for (std::size_t j = 0; j < dim; ++j) {
    auto mj = poly_mat_mul(poly_mat_mul(adj_g, constant_matrix(*this, lie_basis[j])), sym);
    for (auto& row : mj)
      for (auto& e : row) e = e * dpoly;
    for (std::size_t k = 0; k < dim; ++k) {
      Poly pk(var_count(), field);
      for (std::uint32_t r = 0; r < m; ++r)
        for (std::uint32_t c = 0; c < m; ++c)
          pk = pk + mj[r][c].scale(left_inv[k][r * m + c]);
      adjoint_even_[j][k] = std::move(pk);
    }
    // the expansion must reproduce the matrix: conjugation stays in the span
    std::vector<std::vector<Poly>> recon(m, std::vector<Poly>(m, Poly(var_count(), field)));
    for (std::size_t k = 0; k < dim; ++k)
      for (std::uint32_t r = 0; r < m; ++r)
        for (std::uint32_t c = 0; c < m; ++c)
          recon[r][c] = recon[r][c] + adjoint_even_[j][k].scale(lie_basis[k][r][c]);
    for (std::uint32_t r = 0; r < m; ++r)
      for (std::uint32_t c = 0; c < m; ++c)
        if (!(recon[r][c] == mj[r][c]))
          throw error("conjugation leaves the Lie span; bad fixture");
  }
  return adjoint_even_;
}

Scalar MatrixGroup::cached_coordinate_pairing(
    const std::vector<std::uint32_t>& word, std::uint32_t coord) const {
  {
    std::lock_guard<std::mutex> guard(lock_);
    auto it = pairing_cache_.find({word, coord});
    if (it != pairing_cache_.end()) return it->second;
  }
  Scalar v = distribution_pairing_word(*this, word, coordinate(coord));
  std::lock_guard<std::mutex> guard(lock_);
  pairing_cache_.emplace(std::make_pair(word, coord), v);
  return v;
}

GroupPoint identity_point(const MatrixGroup& g, const GrassmannAlgebra& a) {
  GroupPoint p{&g, a, {}, GrassmannElement::one(a)};
  p.entries.assign(g.m * g.m, GrassmannElement::zero(a));
  for (std::uint32_t i = 0; i < g.m; ++i)
    p.at(i, i) = GrassmannElement::one(a);
  return p;
}

GroupPoint point_from_matrix(const MatrixGroup& g, const GrassmannAlgebra& a,
                             const Mat& values) {
  GroupPoint p{&g, a, {}, GrassmannElement::zero(a)};
  p.entries.reserve(g.m * g.m);
  for (std::uint32_t r = 0; r < g.m; ++r)
    for (std::uint32_t c = 0; c < g.m; ++c)
      p.entries.push_back(GrassmannElement::constant(a, values[r][c]));
  Scalar dv = det(values);
  if (dv.is_zero()) throw error("matrix is singular");
  p.dval = GrassmannElement::constant(a, dv.inverse());
  return p;
}

GroupPoint point_mul(const GroupPoint& p, const GroupPoint& q) {
  if (p.group != q.group || !(p.alg == q.alg))
    throw error("mismatched group points");
  const MatrixGroup& g = *p.group;
  GroupPoint r{&g, p.alg, {}, p.dval * q.dval};
  r.entries.assign(g.m * g.m, GrassmannElement::zero(p.alg));
  for (std::uint32_t i = 0; i < g.m; ++i)
    for (std::uint32_t k = 0; k < g.m; ++k) {
      if (p.at(i, k).is_zero()) continue;
      for (std::uint32_t j = 0; j < g.m; ++j)
        r.at(i, j) += p.at(i, k) * q.at(k, j);
    }
  return r;
}

GroupPoint point_inverse(const GroupPoint& p) {
  const MatrixGroup& g = *p.group;
  GroupPoint r{&g, p.alg, {}, GrassmannElement::zero(p.alg)};
  r.entries.assign(g.m * g.m, GrassmannElement::zero(p.alg));
  // adjugate times d
  if (g.m == 1) {
    r.at(0, 0) = p.dval;
  } else {
    for (std::uint32_t i = 0; i < g.m; ++i)
      for (std::uint32_t j = 0; j < g.m; ++j) {
        // cofactor C_ji
        std::vector<std::vector<GrassmannElement>> minor;
        for (std::uint32_t rr = 0; rr < g.m; ++rr) {
          if (rr == j) continue;
          std::vector<GrassmannElement> row;
          for (std::uint32_t cc = 0; cc < g.m; ++cc)
            if (cc != i) row.push_back(p.at(rr, cc));
          minor.push_back(std::move(row));
        }
        // determinant of the Grassmann minor by cofactor expansion
        std::function<GrassmannElement(
            const std::vector<std::vector<GrassmannElement>>&)>
            gdet = [&](const std::vector<std::vector<GrassmannElement>>& mm)
            -> GrassmannElement {
          if (mm.size() == 1) return mm[0][0];
          GrassmannElement total(p.alg);
          for (std::size_t c = 0; c < mm.size(); ++c) {
            if (mm[0][c].is_zero()) continue;
            std::vector<std::vector<GrassmannElement>> sub;
            for (std::size_t rr = 1; rr < mm.size(); ++rr) {
              std::vector<GrassmannElement> row;
              for (std::size_t cc = 0; cc < mm.size(); ++cc)
                if (cc != c) row.push_back(mm[rr][cc]);
              sub.push_back(std::move(row));
            }
            GrassmannElement term = mm[0][c] * gdet(sub);
            total += (c % 2) ? -term : term;
          }
          return total;
        };
        GrassmannElement cof = gdet(minor);
        if ((i + j) % 2) cof = -cof;
        r.at(i, j) = cof * p.dval;
      }
  }
  // d of the inverse is det(p) = 1/d(p); recover it from d p_det = 1
  // via the adjugate identity: det = sum_j p(0,j) cof(0,j); cheaper: invert d
  r.dval = p.dval.inverse();
  return r;
}

Report point_membership(const GroupPoint& p) {
  Report report;
  std::vector<GrassmannElement> coords = p.entries;
  coords.push_back(p.dval);
  for (std::size_t i = 0; i < p.group->equations.size(); ++i) {
    GrassmannElement v = p.group->equations[i].eval_grassmann(coords, p.alg);
    if (!v.is_zero())
      report.fail("defining equation " + std::to_string(i) +
                  " does not vanish at the point");
  }
  return report;
}

GrassmannElement point_eval(const GroupPoint& p, const Poly& c) {
  std::vector<GrassmannElement> coords = p.entries;
  coords.push_back(p.dval);
  return c.eval_grassmann(coords, p.alg);
}

std::vector<Mat> lie_algebra_of(const MatrixGroup& g) {
  auto id = identity_coords(g);
  std::size_t nv = g.var_count();
  Mat jac;
  for (auto& eq : g.equations) {
    Vec row = vec_zero(nv, g.field);
    for (std::uint32_t v = 0; v < nv; ++v)
      row[v] = eq.derivative(v).eval_scalar(id);
    jac.push_back(std::move(row));
  }
  std::vector<Mat> basis;
  for (auto& sol : nullspace(jac)) {
    Mat x = mat_zero(g.m, g.m, g.field);
    for (std::uint32_t r = 0; r < g.m; ++r)
      for (std::uint32_t c = 0; c < g.m; ++c)
        x[r][c] = sol[g.var_entry(r, c)];
    basis.push_back(std::move(x));
  }
  return basis;
}

Report check_lie_basis(const MatrixGroup& g) {
  Report report;
  auto computed = lie_algebra_of(g);
  std::vector<Vec> crows, frows;
  for (auto& x : computed) {
    Vec v;
    for (auto& row : x)
      for (auto& e : row) v.push_back(e);
    crows.push_back(std::move(v));
  }
  for (auto& x : g.lie_basis) {
    Vec v;
    for (auto& row : x)
      for (auto& e : row) v.push_back(e);
    frows.push_back(std::move(v));
  }
  auto cbasis = row_basis(crows, g.m * g.m, g.field);
  auto fbasis = row_basis(frows, g.m * g.m, g.field);
  if (fbasis.size() != g.lie_basis.size())
    report.fail("fixture Lie basis is linearly dependent");
  if (cbasis != fbasis)
    report.fail("fixture Lie basis does not match the computed Lie algebra");
  return report;
}

Scalar tangent_pairing(const MatrixGroup& g, const Mat& x, const Poly& c) {
  GrassmannAlgebra probe(2, g.field);
  GrassmannElement t = GrassmannElement::term(probe, 0b11, Scalar::one(g.field));
  std::vector<GrassmannElement> coords;
  coords.reserve(g.var_count());
  for (std::uint32_t r = 0; r < g.m; ++r)
    for (std::uint32_t cc = 0; cc < g.m; ++cc) {
      GrassmannElement e = t.scale(x[r][cc]);
      if (r == cc) e += GrassmannElement::one(probe);
      coords.push_back(e);
    }
  coords.push_back(GrassmannElement::one(probe) - t.scale(trace(x)));
  GrassmannElement v = c.eval_grassmann(coords, probe);
  return v.coefficient(0b11);
}

Scalar distribution_pairing_word(const MatrixGroup& g,
                                 const std::vector<std::uint32_t>& word,
                                 const Poly& c) {
  std::size_t r = word.size();
  if (r == 0) return c.eval_scalar(identity_coords(g));
  if (2 * r > 40) throw error("distribution pairing word too long");
  GrassmannAlgebra probe(static_cast<std::uint32_t>(2 * r), g.field);
  GroupPoint acc = identity_point(g, probe);
  for (std::size_t l = 0; l < r; ++l) {
    if (word[l] >= g.lie_dim()) throw error("unknown even basis letter");
    const Mat& x = g.lie_basis[word[l]];
    GrassmannElement t =
        GrassmannElement::term(probe, 0b11ull << (2 * l), Scalar::one(g.field));
    GroupPoint factor = identity_point(g, probe);
    for (std::uint32_t rr = 0; rr < g.m; ++rr)
      for (std::uint32_t cc = 0; cc < g.m; ++cc)
        factor.at(rr, cc) += t.scale(x[rr][cc]);
    factor.dval = GrassmannElement::one(probe) - t.scale(trace(x));
    acc = point_mul(acc, factor);
  }
  GrassmannElement v = point_eval(acc, c);
  return v.coefficient((1ull << (2 * r)) - 1);
}

Scalar distribution_pairing(const MatrixGroup& g, const UEnvElement& u,
                            const Poly& c) {
  Scalar total = Scalar::zero(g.field);
  for (auto& [mono, coeff] : u.terms()) {
    if (mono.odd_mask) throw error("odd content in a distribution pairing");
    if (coeff.terms().size() > 1 ||
        (coeff.terms().size() == 1 && coeff.terms().begin()->first != 0))
      throw error("distribution pairing needs scalar coefficients");
    std::vector<std::uint32_t> word;
    for (std::uint32_t i = 0; i < mono.even_exp.size(); ++i)
      for (std::uint32_t k = 0; k < mono.even_exp[i]; ++k) word.push_back(i);
    total += coeff.coefficient(0) * distribution_pairing_word(g, word, c);
  }
  return total;
}

GroupPoint grouplike_to_point(const MatrixGroup& g, const UEnvElement& f) {
  if (!f.is_even_only()) throw error("grouplike_to_point needs a U(g_0) element");
  if (!is_grouplike(f)) throw error("element is not grouplike");
  const GrassmannAlgebra& a = f.context()->grassmann();
  GroupPoint p{&g, a, {}, GrassmannElement::zero(a)};
  p.entries.assign(g.m * g.m, GrassmannElement::zero(a));
  for (std::uint32_t coord = 0; coord < g.var_count(); ++coord) {
    GrassmannElement value(a);
    for (auto& [mono, coeff] : f.terms()) {
      std::vector<std::uint32_t> word;
      for (std::uint32_t i = 0; i < mono.even_exp.size(); ++i)
        for (std::uint32_t k = 0; k < mono.even_exp[i]; ++k) word.push_back(i);
      Scalar pairing = g.cached_coordinate_pairing(word, coord);
      if (!pairing.is_zero()) value += coeff.scale(pairing);
    }
    if (coord == g.var_d())
      p.dval = value;
    else
      p.entries[coord] = value;
  }
  Report membership = point_membership(p);
  if (!membership.ok())
    throw error("grouplike does not map to a group point:\n" + membership.str());
  return p;
}

std::vector<std::vector<GrassmannElement>> adjoint_even_at(
    const MatrixGroup& g, const GroupPoint& p) {
  const auto& adj = g.adjoint_even();
  std::size_t dim = g.lie_dim();
  std::vector<std::vector<GrassmannElement>> values(
      dim, std::vector<GrassmannElement>(dim, GrassmannElement::zero(p.alg)));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      values[j][k] = point_eval(p, adj[j][k]);
  return values;
}

LieSuperElementA adjoint_apply(const MatrixGroup& g, const AdjointData& adj,
                               const GroupPoint& p, const LieSuperElementA& z) {
  const LieSuperAlgebra& lie = *z.lie();
  LieSuperElementA result(z.lie(), z.coeff_algebra());
  for (std::size_t j = 0; j < lie.dim(); ++j) {
    if (z.coord(j).is_zero()) continue;
    for (std::size_t k = 0; k < lie.dim(); ++k) {
      if (adj[j][k].is_zero()) continue;
      GrassmannElement value = point_eval(p, adj[j][k]);
      if (!value.is_zero()) result.coord(k) += z.coord(j) * value;
    }
  }
  return result;
}

Vec expand_over_lie(const MatrixGroup& g, const Mat& x) {
  Mat system = mat_zero(g.m * g.m, g.lie_dim(), g.field);
  Vec target = vec_zero(g.m * g.m, g.field);
  for (std::uint32_t r = 0; r < g.m; ++r)
    for (std::uint32_t c = 0; c < g.m; ++c) {
      for (std::size_t k = 0; k < g.lie_dim(); ++k)
        system[r * g.m + c][k] = g.lie_basis[k][r][c];
      target[r * g.m + c] = x[r][c];
    }
  auto coords = solve(system, target);
  if (!coords) throw error("matrix lies outside the Lie algebra span");
  return *coords;
}

GrassmannElement gr_exp(const GrassmannElement& x) {
  if (!x.is_even() || !x.coefficient(0).is_zero())
    throw error("exp needs a nilpotent even element");
  const Field& f = x.algebra().field;
  GrassmannElement result = GrassmannElement::one(x.algebra());
  GrassmannElement power = GrassmannElement::one(x.algebra());
  Scalar factorial = Scalar::one(f);
  for (std::uint32_t k = 1; k <= x.algebra().n + 1; ++k) {
    if (f.is_prime_field() && k >= f.p)
      throw error("exp needs k! invertible");
    power = power * x;
    if (power.is_zero()) break;
    factorial *= Scalar::of(static_cast<long>(k), f);
    result += power.scale(factorial.inverse());
  }
  return result;
}

namespace {

GroupPoint nilpotent_factor(const MatrixGroup& g, const GrassmannAlgebra& a,
                            const GrassmannElement& n, const Mat& x) {
  // exp(n X) with n nilpotent even; over prime fields callers pass n^2 = 0
  GroupPoint p = identity_point(g, a);
  GrassmannElement power = GrassmannElement::one(a);
  Mat xk = mat_identity(g.m, g.field);
  Scalar factorial = Scalar::one(g.field);
  for (std::uint32_t k = 1; k <= a.n + 1; ++k) {
    if (g.field.is_prime_field() && k >= g.field.p)
      throw error("exp needs k! invertible");
    power = power * n;
    if (power.is_zero()) break;
    xk = mat_mul(xk, x);
    factorial *= Scalar::of(static_cast<long>(k), g.field);
    Scalar inv_fact = factorial.inverse();
    for (std::uint32_t r = 0; r < g.m; ++r)
      for (std::uint32_t c = 0; c < g.m; ++c)
        if (!xk[r][c].is_zero())
          p.at(r, c) += power.scale(xk[r][c] * inv_fact);
  }
  p.dval = gr_exp(-n.scale(trace(x)));
  return p;
}

}  // namespace

std::vector<GroupPoint> sample_points(const MatrixGroup& g,
                                      const GrassmannAlgebra& a,
                                      std::mt19937_64& rng, std::size_t count,
                                      std::uint32_t usable_generators) {
  std::uint32_t usable = usable_generators ? usable_generators : a.n;
  if (usable > a.n) throw error("usable generators exceed the algebra");
  std::vector<GroupPoint> samples;
  samples.push_back(identity_point(g, a));
  auto random_value = [&](bool nonzero) {
    if (g.field.is_prime_field()) {
      long v = static_cast<long>(rng() % (g.field.p - (nonzero ? 1 : 0)));
      return Scalar::of(nonzero ? v + 1 : v, g.field);
    }
    long v = static_cast<long>(rng() % 7) - 3;
    if (nonzero && v == 0) v = 2;
    return Scalar::of(v, g.field);
  };
  while (samples.size() < count) {
    GroupPoint p = identity_point(g, a);
    if (!g.param.empty()) {
      std::vector<Scalar> values;
      for (std::size_t i = 0; i < g.param.nparams(); ++i)
        values.push_back(random_value(g.param.invertible[i]));
      Mat mval = mat_zero(g.m, g.m, g.field);
      for (std::uint32_t r = 0; r < g.m; ++r)
        for (std::uint32_t c = 0; c < g.m; ++c)
          mval[r][c] = g.param.matrix[r][c].eval_scalar(values);
      GroupPoint chart{&g, a, {}, GrassmannElement::constant(
                                      a, g.param.d.eval_scalar(values))};
      for (std::uint32_t r = 0; r < g.m; ++r)
        for (std::uint32_t c = 0; c < g.m; ++c)
          chart.entries.push_back(GrassmannElement::constant(a, mval[r][c]));
      p = point_mul(p, chart);
    }
    if (!g.lie_basis.empty() && usable >= 2) {
      const Mat& x = g.lie_basis[rng() % g.lie_dim()];
      GrassmannElement n(a);
      if (g.field.is_prime_field()) {
        std::uint32_t i = rng() % usable, j = rng() % usable;
        if (i != j)
          n = GrassmannElement::term(a, (1ull << i) | (1ull << j),
                                     random_value(false));
      } else {
        for (int t = 0; t < 2; ++t) {
          std::uint32_t i = rng() % usable, j = rng() % usable;
          if (i == j) continue;
          n += GrassmannElement::term(a, (1ull << i) | (1ull << j),
                                      random_value(false));
        }
        n = n.even_part();
      }
      if (!n.is_zero()) p = point_mul(p, nilpotent_factor(g, a, n, x));
    }
    Report membership = point_membership(p);
    if (!membership.ok())
      throw error("sampler produced a non-member point; bad fixture:\n" +
                  membership.str());
    samples.push_back(std::move(p));
  }
  return samples;
}

Report check_group(const MatrixGroup& g, const AdjointData& adj,
                   const LieSuperAlgebra& lie, std::mt19937_64& rng) {
  Report report;
  GrassmannAlgebra a(4, g.field);
  if (!point_membership(identity_point(g, a)).ok())
    report.fail("identity does not satisfy the defining equations");
  auto samples = sample_points(g, a, rng, 5);
  for (auto& p : samples) {
    if (!point_membership(point_inverse(p)).ok())
      report.fail("inverse leaves the group at a sampled point");
    if (!(point_mul(p, point_inverse(p)) == identity_point(g, a)))
      report.fail("p * p^{-1} differs from the identity at a sampled point");
  }
  for (auto& p : samples)
    for (auto& q : samples)
      if (!point_membership(point_mul(p, q)).ok())
        report.fail("product leaves the group at sampled points");
  // the adjoint rows reproduce conjugation at sampled points
  {
    const auto& even = g.adjoint_even();
    for (auto& p : samples) {
      GroupPoint pinv = point_inverse(p);
      for (std::size_t j = 0; j < g.lie_dim(); ++j) {
        // sum_k P[j][k](p) X_k vs p^{-1} X_j p
        std::vector<std::vector<GrassmannElement>> lhs(
            g.m, std::vector<GrassmannElement>(g.m, GrassmannElement::zero(a)));
        for (std::size_t k = 0; k < g.lie_dim(); ++k) {
          GrassmannElement c = point_eval(p, even[j][k]);
          if (c.is_zero()) continue;
          for (std::uint32_t r = 0; r < g.m; ++r)
            for (std::uint32_t cc = 0; cc < g.m; ++cc)
              if (!g.lie_basis[k][r][cc].is_zero())
                lhs[r][cc] += c.scale(g.lie_basis[k][r][cc]);
        }
        GroupPoint xj = identity_point(g, a);
        for (std::uint32_t r = 0; r < g.m; ++r)
          for (std::uint32_t cc = 0; cc < g.m; ++cc)
            xj.at(r, cc) = GrassmannElement::constant(a, g.lie_basis[j][r][cc]);
        xj.dval = GrassmannElement::one(a);  // entries only; not a group point
        GroupPoint conj = point_mul(point_mul(pinv, xj), p);
        bool same = true;
        for (std::uint32_t r = 0; r < g.m; ++r)
          for (std::uint32_t cc = 0; cc < g.m; ++cc)
            if (!(lhs[r][cc] == conj.at(r, cc))) same = false;
        if (!same) {
          report.fail("adjoint rows disagree with conjugation at a sample");
          break;
        }
      }
    }
  }
  // anti-morphism: z^{gh} = (z^g)^h on sampled pairs
  for (std::size_t zi = 0; zi < lie.dim(); ++zi) {
    auto z = LieSuperElementA::basis(&lie, a, zi);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const GroupPoint& p = samples[i];
      const GroupPoint& q = samples[i + 1];
      auto lhs = adjoint_apply(g, adj, point_mul(p, q), z);
      auto rhs = adjoint_apply(g, adj, q, adjoint_apply(g, adj, p, z));
      if (!(lhs == rhs)) {
        report.fail("adjoint anti-morphism law fails at sampled points");
        break;
      }
    }
  }
  return report;
}

Report check_d_conditions(const MatrixGroup& g, const LieSuperAlgebra& lie,
                          const AdjointData& adj, std::mt19937_64& rng) {
  Report report;
  std::size_t me = lie.even_dim();
  if (me != g.lie_dim()) {
    report.fail("even basis does not match the group Lie algebra");
    return report;
  }

  // (D1): the tangent of the adjoint rows reproduces the bracket
  for (std::size_t j = 0; j < lie.dim(); ++j)
    for (std::size_t a = 0; a < me; ++a) {
      const Vec& expect = lie.bracket_basis(j, a);
      for (std::size_t k = 0; k < lie.dim(); ++k) {
        Scalar got = adj[j][k].is_zero()
                         ? Scalar::zero(g.field)
                         : tangent_pairing(g, g.lie_basis[a], adj[j][k]);
        if (got != expect[k]) {
          report.fail("(D1) fails at [" + lie.basis_name(j) + "," +
                      lie.basis_name(a) + "]");
          break;
        }
      }
    }

  // (D2): Leibniz rule on sampled polynomial pairs
  auto random_poly = [&]() {
    Poly p(g.var_count(), g.field);
    for (int t = 0; t < 2; ++t) {
      Poly term = Poly::constant(
          g.var_count(), Scalar::of(static_cast<long>(rng() % 5) - 2, g.field));
      for (int u = 0; u < 2; ++u)
        term = term * g.coordinate(rng() % g.var_count());
      p = p + term;
    }
    return p;
  };
  auto eps = [&](const Poly& c) { return c.eval_scalar(identity_coords(g)); };
  for (int it = 0; it < 10; ++it) {
    Poly c = random_poly(), d = random_poly();
    for (std::size_t a = 0; a < me; ++a) {
      Scalar lhs = tangent_pairing(g, g.lie_basis[a], c * d);
      Scalar rhs = tangent_pairing(g, g.lie_basis[a], c) * eps(d) +
                   eps(c) * tangent_pairing(g, g.lie_basis[a], d);
      if (lhs != rhs) {
        report.fail("(D2) Leibniz rule fails on a sampled pair");
        break;
      }
    }
  }

  // (D3): <x^g, c> = <x, {}^g c> at sampled points over dual numbers
  GrassmannAlgebra big(6, g.field);
  auto samples = sample_points(g, big, rng, 4, 4);
  std::uint64_t tmask = (1ull << 4) | (1ull << 5);
  GrassmannElement t = GrassmannElement::term(big, tmask, Scalar::one(g.field));
  for (auto& p : samples) {
    GroupPoint pinv = point_inverse(p);
    for (std::size_t a = 0; a < me; ++a) {
      // I + t X_a as a point, conjugated by p
      GroupPoint xt = identity_point(g, big);
      for (std::uint32_t r = 0; r < g.m; ++r)
        for (std::uint32_t c = 0; c < g.m; ++c)
          xt.at(r, c) += t.scale(g.lie_basis[a][r][c]);
      xt.dval = GrassmannElement::one(big) - t.scale(trace(g.lie_basis[a]));
      GroupPoint conj = point_mul(point_mul(pinv, xt), p);
      for (std::uint32_t coord = 0; coord < g.var_count(); ++coord) {
        Poly c = g.coordinate(coord);
        // lhs: <x^g, c> with x^g expanded over the even basis at p
        GrassmannElement lhs(big);
        for (std::size_t k = 0; k < me; ++k) {
          if (adj[a][k].is_zero()) continue;
          GrassmannElement coeff = point_eval(p, adj[a][k]);
          Scalar pair = tangent_pairing(g, g.lie_basis[k], c);
          if (!pair.is_zero()) lhs += coeff.scale(pair);
        }
        GrassmannElement rhs = gr_extract_factor(point_eval(conj, c), tmask);
        if (!(lhs == rhs)) {
          report.fail("(D3) fails at a sampled point, coordinate " +
                      std::to_string(coord));
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace hcpair
