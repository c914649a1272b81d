#include "hcpair/pair.hpp"

#include <set>

namespace hcpair {

namespace {

Mat matrix_commutator(const Mat& a, const Mat& b) {
  return mat_add(mat_mul(a, b), mat_scale(mat_mul(b, a),
                                          Scalar::of(-1, a[0][0].field())));
}

std::vector<Vec> annihilator(const std::vector<Vec>& rows, std::size_t n,
                             const Field& f) {
  if (rows.empty()) {
    // annihilator of the zero space is everything
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = vec_zero(n, f);
      e[i] = Scalar::one(f);
      all.push_back(std::move(e));
    }
    return all;
  }
  return nullspace(rows);
}

}  // namespace

Vec HCPair::triangle_basis(std::size_t j, const Mat& x) const {
  Vec r = vec_zero(odd_dim(), group.field);
  for (std::size_t k = 0; k < odd_dim(); ++k)
    r[k] = tangent_pairing(group, x, rho[j][k]);
  return r;
}

AdjointData HCPair::adjoint_full() const {
  std::size_t me = group.lie_dim(), n = odd_dim();
  std::size_t dim = me + n;
  Poly zero(group.var_count(), group.field);
  AdjointData adj(dim, std::vector<Poly>(dim, zero));
  const auto& even = group.adjoint_even();
  for (std::size_t j = 0; j < me; ++j)
    for (std::size_t k = 0; k < me; ++k) adj[j][k] = even[j][k];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) adj[me + j][me + k] = rho[j][k];
  return adj;
}

SubPair HCPair::whole_subpair() const {
  SubPair sub;
  sub.name = "whole";
  sub.param = group.param;
  sub.lie_h = group.lie_basis;
  for (std::size_t i = 0; i < odd_dim(); ++i) {
    Vec e = vec_zero(odd_dim(), group.field);
    e[i] = Scalar::one(group.field);
    sub.w_basis.push_back(std::move(e));
  }
  return sub;
}

LieSuperAlgebra assemble_lie(const HCPair& pair, bool check) {
  const MatrixGroup& g = pair.group;
  std::size_t me = g.lie_dim(), n = pair.odd_dim();
  std::vector<std::string> even_names;
  for (std::size_t i = 0; i < me; ++i)
    even_names.push_back("x" + std::to_string(i + 1));
  LieSuperAlgebra lie(g.field, even_names, pair.odd_names);

  // even-even: matrix commutators over the Lie basis
  for (std::size_t a = 0; a < me; ++a)
    for (std::size_t b = 0; b < me; ++b) {
      Vec coords = expand_over_lie(g, matrix_commutator(g.lie_basis[a],
                                                        g.lie_basis[b]));
      Vec full = vec_zero(me + n, g.field);
      for (std::size_t k = 0; k < me; ++k) full[k] = coords[k];
      lie.set_bracket(a, b, std::move(full));
    }
  // odd-even: [v, x] = v <| x, and [x, v] = -[v, x]
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < me; ++a) {
      Vec tri = pair.triangle_basis(j, g.lie_basis[a]);
      Vec full = vec_zero(me + n, g.field);
      for (std::size_t k = 0; k < n; ++k) full[me + k] = tri[k];
      Vec neg = full;
      for (auto& x : neg) x = -x;
      lie.set_bracket(me + j, a, full);
      lie.set_bracket(a, me + j, neg);
    }
  // odd-odd from the pair's symmetric bracket
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec full = vec_zero(me + n, g.field);
      for (std::size_t k = 0; k < me; ++k)
        full[k] = pair.odd_bracket[i][j][k];
      lie.set_bracket(me + i, me + j, std::move(full));
    }
  for (std::size_t i = 0; i < n; ++i) {
    Vec half = vec_zero(me, g.field);
    Scalar h = Scalar::ratio(1, 2, g.field);
    for (std::size_t k = 0; k < me; ++k)
      half[k] = pair.odd_bracket[i][i][k] * h;
    lie.set_two_op(i, std::move(half));
  }

  if (check) {
    Report report = check_lie_axioms(lie);
    if (!report.ok())
      throw error("assembled pair data is not a Lie superalgebra:\n" +
                  report.str());
  }
  return lie;
}

Report check_pair(const HCPair& pair, std::mt19937_64& rng) {
  Report report;
  const MatrixGroup& g = pair.group;
  std::size_t n = pair.odd_dim(), me = g.lie_dim();
  const Field& f = g.field;

  // (G1) symmetry
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pair.odd_bracket[i][j] != pair.odd_bracket[j][i])
        report.fail("(G1) fails at (" + pair.odd_names[i] + "," +
                    pair.odd_names[j] + ")");

  // (G2) v <| [v,v] = 0, through all cubic polarizations
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    // v_a <| [v_b, v_c]
    Mat x = mat_zero(g.m, g.m, f);
    for (std::size_t k = 0; k < me; ++k)
      x = mat_add(x, mat_scale(g.lie_basis[k], pair.odd_bracket[b][c][k]));
    return pair.triangle_basis(a, x);
  };
  auto vec_is_zero = [](const Vec& v) {
    for (auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Vec total = vec_zero(n, f);
        auto add = [&](const Vec& v) {
          for (std::size_t t = 0; t < n; ++t) total[t] += v[t];
        };
        if (i == j && j == k) {
          add(term(i, i, i));
        } else if (i == j) {
          Vec t1 = term(i, i, k);
          add(t1);
          add(t1);
          add(term(k, i, i));
        } else if (j == k) {
          Vec t1 = term(j, j, i);
          add(t1);
          add(t1);
          add(term(i, j, j));
        } else {
          add(term(i, j, k));
          add(term(j, i, k));
          add(term(k, i, j));
        }
        if (!vec_is_zero(total))
          report.fail("(G2) polarization fails at (" + pair.odd_names[i] +
                      "," + pair.odd_names[j] + "," + pair.odd_names[k] + ")");
      }

  // G-equivariance of the bracket at sampled points: [v^g, w^g] = [v,w]^g
  GrassmannAlgebra a(4, f);
  auto samples = sample_points(g, a, rng, 4);
  const auto& adj_even = g.adjoint_even();
  for (auto& p : samples) {
    // action matrix R[j][k] = c_{jk}(p) and even action E[a][b]
    std::vector<std::vector<GrassmannElement>> r(
        n, std::vector<GrassmannElement>(n, GrassmannElement::zero(a)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        r[j][k] = point_eval(p, pair.rho[j][k]);
    std::vector<std::vector<GrassmannElement>> e(
        me, std::vector<GrassmannElement>(me, GrassmannElement::zero(a)));
    for (std::size_t s = 0; s < me; ++s)
      for (std::size_t t = 0; t < me; ++t)
        e[s][t] = point_eval(p, adj_even[s][t]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // lhs: sum_{k,l} r[i][k] r[j][l] [v_k, v_l]
        std::vector<GrassmannElement> lhs(me, GrassmannElement::zero(a));
        for (std::size_t k = 0; k < n; ++k) {
          if (r[i][k].is_zero()) continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (r[j][l].is_zero()) continue;
            GrassmannElement c = r[i][k] * r[j][l];
            for (std::size_t t = 0; t < me; ++t)
              lhs[t] += c.scale(pair.odd_bracket[k][l][t]);
          }
        }
        // rhs: [v_i, v_j]^g over the even action
        std::vector<GrassmannElement> rhs(me, GrassmannElement::zero(a));
        for (std::size_t s = 0; s < me; ++s) {
          Scalar c = pair.odd_bracket[i][j][s];
          if (c.is_zero()) continue;
          for (std::size_t t = 0; t < me; ++t)
            rhs[t] += e[s][t].scale(c);
        }
        if (lhs != rhs) {
          report.fail("bracket is not G-equivariant at a sampled point");
          goto equivariance_done;
        }
      }
  }
equivariance_done:
  return report;
}

MatrixGroup subgroup_as_group(const HCPair& pair, const SubPair& sub) {
  MatrixGroup h;
  h.m = pair.group.m;
  h.field = pair.group.field;
  h.equations = pair.group.equations;
  for (auto& eq : sub.extra_equations) h.equations.push_back(eq);
  h.lie_basis = sub.lie_h;
  h.param = sub.param;
  return h;
}

std::vector<GroupPoint> subgroup_samples(const HCPair& pair, const SubPair& sub,
                                         const GrassmannAlgebra& a,
                                         std::mt19937_64& rng,
                                         std::size_t count,
                                         std::uint32_t usable_generators) {
  if (!sub.point_list.empty()) {
    std::vector<GroupPoint> samples;
    for (auto& m : sub.point_list)
      samples.push_back(point_from_matrix(pair.group, a, m));
    return samples;
  }
  MatrixGroup h = subgroup_as_group(pair, sub);
  auto samples = sample_points(h, a, rng, count, usable_generators);
  // rebind the points to the ambient group
  std::vector<GroupPoint> result;
  for (auto& p : samples)
    result.push_back(GroupPoint{&pair.group, a, p.entries, p.dval});
  return result;
}

Report check_subpair(const HCPair& pair, const SubPair& sub,
                     std::mt19937_64& rng) {
  Report report;
  const Field& f = pair.group.field;
  std::size_t n = pair.odd_dim();

  // Lie(H) basis consistency with the subgroup equations
  if (sub.point_list.empty()) {
    MatrixGroup h = subgroup_as_group(pair, sub);
    Report lie_check = check_lie_basis(h);
    report.merge(lie_check);
  } else if (!sub.lie_h.empty()) {
    report.fail("finite point lists must come with an empty Lie(H) basis");
  }

  // (H1): rho maps W into W (x) coefficients at subgroup samples
  GrassmannAlgebra a(4, f);
  auto samples = subgroup_samples(pair, sub, a, rng, 4);
  auto ann = annihilator(sub.w_basis, n, f);
  for (auto& h : samples) {
    for (auto& w : sub.w_basis) {
      std::vector<GrassmannElement> image(n, GrassmannElement::zero(a));
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          image[k] += point_eval(h, pair.rho[j][k]).scale(w[j]);
      }
      for (auto& row : ann) {
        GrassmannElement dot(a);
        for (std::size_t k = 0; k < n; ++k) dot += image[k].scale(row[k]);
        if (!dot.is_zero()) {
          report.fail("(H1) fails: W is not H-stable at a sampled point");
          goto h1_done;
        }
      }
    }
  }
h1_done:

  // (H2): [W, W] inside span(Lie(H))
  {
    std::vector<Vec> lie_h_rows;
    for (auto& x : sub.lie_h) lie_h_rows.push_back(expand_over_lie(pair.group, x));
    for (auto& w1 : sub.w_basis)
      for (auto& w2 : sub.w_basis) {
        Vec br = vec_zero(pair.group.lie_dim(), f);
        for (std::size_t i = 0; i < n; ++i) {
          if (w1[i].is_zero()) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (w2[j].is_zero()) continue;
            Scalar c = w1[i] * w2[j];
            for (std::size_t k = 0; k < pair.group.lie_dim(); ++k)
              br[k] += c * pair.odd_bracket[i][j][k];
          }
        }
        if (!in_span(lie_h_rows, br)) {
          report.fail("(H2) fails: [W,W] escapes Lie(H)");
          break;
        }
      }
  }
  return report;
}

GroupPoint morphism_apply(const GroupMorphism& phi, const GroupPoint& p) {
  const MatrixGroup& tgt = *phi.target;
  GroupPoint r{&tgt, p.alg, {}, GrassmannElement::zero(p.alg)};
  std::vector<GrassmannElement> coords = p.entries;
  coords.push_back(p.dval);
  for (std::uint32_t i = 0; i < tgt.m; ++i)
    for (std::uint32_t j = 0; j < tgt.m; ++j)
      r.entries.push_back(phi.matrix[i][j].eval_grassmann(coords, p.alg));
  r.dval = phi.d_image.eval_grassmann(coords, p.alg);
  return r;
}

Mat morphism_tangent(const GroupMorphism& phi, const Mat& x) {
  const MatrixGroup& src = *phi.source;
  const MatrixGroup& tgt = *phi.target;
  GrassmannAlgebra probe(2, src.field);
  GrassmannElement t =
      GrassmannElement::term(probe, 0b11, Scalar::one(src.field));
  std::vector<GrassmannElement> coords;
  for (std::uint32_t r = 0; r < src.m; ++r)
    for (std::uint32_t c = 0; c < src.m; ++c) {
      GrassmannElement e = t.scale(x[r][c]);
      if (r == c) e += GrassmannElement::one(probe);
      coords.push_back(e);
    }
  Scalar tr = x[0][0];
  for (std::uint32_t i = 1; i < src.m; ++i) tr += x[i][i];
  coords.push_back(GrassmannElement::one(probe) - t.scale(tr));
  Mat result = mat_zero(tgt.m, tgt.m, src.field);
  for (std::uint32_t i = 0; i < tgt.m; ++i)
    for (std::uint32_t j = 0; j < tgt.m; ++j)
      result[i][j] =
          phi.matrix[i][j].eval_grassmann(coords, probe).coefficient(0b11);
  return result;
}

Report check_morphism(const HCPair& src, const HCPair& dst,
                      const GroupMorphism& phi, const Mat& psi,
                      std::mt19937_64& rng) {
  Report report;
  const Field& f = src.group.field;
  std::size_t n1 = src.odd_dim(), n2 = dst.odd_dim();

  // (G3): psi(v^g) = psi(v)^{phi(g)} at sampled points
  GrassmannAlgebra a(4, f);
  auto samples = sample_points(src.group, a, rng, 4);
  for (auto& p : samples) {
    GroupPoint q = morphism_apply(phi, p);
    if (!point_membership(q).ok()) {
      report.fail("morphism image leaves the target group");
      break;
    }
    for (std::size_t j = 0; j < n1; ++j) {
      // lhs: psi applied to v_j^p
      std::vector<GrassmannElement> lhs(n2, GrassmannElement::zero(a));
      for (std::size_t k = 0; k < n1; ++k) {
        GrassmannElement c = point_eval(p, src.rho[j][k]);
        if (c.is_zero()) continue;
        for (std::size_t l = 0; l < n2; ++l)
          if (!psi[k][l].is_zero()) lhs[l] += c.scale(psi[k][l]);
      }
      // rhs: (psi v_j)^q
      std::vector<GrassmannElement> rhs(n2, GrassmannElement::zero(a));
      for (std::size_t k = 0; k < n2; ++k) {
        if (psi[j][k].is_zero()) continue;
        for (std::size_t l = 0; l < n2; ++l)
          rhs[l] += point_eval(q, dst.rho[k][l]).scale(psi[j][k]);
      }
      if (lhs != rhs) {
        report.fail("(G3) fails at a sampled point");
        break;
      }
    }
  }

  // (G4): [psi v, psi v'] = Lie(phi)([v, v']) on basis pairs
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec lhs = vec_zero(dst.group.lie_dim(), f);
      for (std::size_t k = 0; k < n2; ++k) {
        if (psi[i][k].is_zero()) continue;
        for (std::size_t l = 0; l < n2; ++l) {
          if (psi[j][l].is_zero()) continue;
          Scalar c = psi[i][k] * psi[j][l];
          for (std::size_t t = 0; t < dst.group.lie_dim(); ++t)
            lhs[t] += c * dst.odd_bracket[k][l][t];
        }
      }
      Mat bracket_mat = mat_zero(src.group.m, src.group.m, f);
      for (std::size_t t = 0; t < src.group.lie_dim(); ++t)
        bracket_mat = mat_add(
            bracket_mat,
            mat_scale(src.group.lie_basis[t], src.odd_bracket[i][j][t]));
      Vec rhs = expand_over_lie(dst.group, morphism_tangent(phi, bracket_mat));
      if (lhs != rhs)
        report.fail("(G4) fails at (" + src.odd_names[i] + "," +
                    src.odd_names[j] + ")");
    }
  return report;
}

std::vector<Vec> inv_submodule(const HCPair& pair, const SubPair& sub,
                               const std::vector<Vec>& w) {
  const Field& f = pair.group.field;
  std::size_t n = pair.odd_dim();
  // adapted complement: standard basis vectors outside the pivot set of W
  std::vector<Vec> wrows = row_basis(w, n, f);
  Mat wmat = wrows;
  auto pivots = rref(wmat);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) comp.push_back(i);
  std::size_t q = comp.size();
  if (q == 0) return wrows;  // W = V: the condition is vacuous

  // complement-coordinate projection: solve [W; comp] coordinates
  // basis change matrix T: rows = wrows then unit vectors on comp
  Mat tmat;
  for (auto& r : wrows) tmat.push_back(r);
  for (auto c : comp) {
    Vec e = vec_zero(n, f);
    e[c] = Scalar::one(f);
    tmat.push_back(std::move(e));
  }
  auto tinv = mat_inverse(mat_transpose(tmat));
  if (!tinv) throw error("adapted basis is degenerate");
  // complement coordinates of x are rows wrows.size().. of T^{-T} x
  auto comp_coords = [&](const std::vector<Scalar>& x) {
    Vec out;
    for (std::size_t s = 0; s < q; ++s) {
      Scalar v = Scalar::zero(f);
      for (std::size_t k = 0; k < n; ++k)
        v += (*tinv)[wrows.size() + s][k] * x[k];
      out.push_back(v);
    }
    return out;
  };

  // rows of the linear system over the lambda unknowns (length q)
  std::vector<Vec> system;
  auto add_action_rows = [&](const std::vector<std::vector<Scalar>>& action,
                             bool subtract_identity) {
    // action[t][k]: image coordinates of the complement vector u_t
    for (std::size_t s = 0; s < q; ++s) {
      Vec row = vec_zero(q, f);
      for (std::size_t t = 0; t < q; ++t) {
        row[t] = comp_coords(action[t])[s];
        if (subtract_identity && t == s) row[t] -= Scalar::one(f);
      }
      bool zero = true;
      for (auto& x : row)
        if (!x.is_zero()) zero = false;
      if (!zero) system.push_back(std::move(row));
    }
  };

  if (!sub.point_list.empty()) {
    for (auto& m : sub.point_list) {
      std::vector<Scalar> coords;
      for (auto& r : m)
        for (auto& e : r) coords.push_back(e);
      coords.push_back(det(m).inverse());
      std::vector<std::vector<Scalar>> action(q, std::vector<Scalar>(n));
      for (std::size_t t = 0; t < q; ++t)
        for (std::size_t k = 0; k < n; ++k)
          action[t][k] = pair.rho[comp[t]][k].eval_scalar(coords);
      add_action_rows(action, true);
    }
  } else {
    if (sub.param.empty())
      throw error("sub-pair has neither a parametrization nor a point list");
    // substitute the chart into the coaction polynomials
    std::size_t np = sub.param.nparams();
    std::vector<Laurent> coords;
    for (auto& r : sub.param.matrix)
      for (auto& e : r) coords.push_back(e);
    coords.push_back(sub.param.d);
    std::vector<std::vector<Laurent>> rows(
        q, std::vector<Laurent>(n, Laurent(static_cast<std::uint32_t>(np), f)));
    std::set<std::vector<std::int32_t>> monomials;
    for (std::size_t t = 0; t < q; ++t)
      for (std::size_t k = 0; k < n; ++k) {
        rows[t][k] = poly_eval_laurent(pair.rho[comp[t]][k], coords);
        for (auto& [e, c] : rows[t][k].terms()) monomials.insert(e);
      }
    std::vector<std::int32_t> unit(np, 0);
    monomials.insert(unit);
    for (auto& mono : monomials) {
      std::vector<std::vector<Scalar>> action(q, std::vector<Scalar>(n));
      for (std::size_t t = 0; t < q; ++t)
        for (std::size_t k = 0; k < n; ++k) {
          auto it = rows[t][k].terms().find(mono);
          action[t][k] = it == rows[t][k].terms().end() ? Scalar::zero(f)
                                                        : it->second;
        }
      add_action_rows(action, mono == unit);
    }
  }

  std::vector<Vec> result = wrows;
  if (system.empty()) {
    for (std::size_t t = 0; t < q; ++t) {
      Vec e = vec_zero(n, f);
      e[comp[t]] = Scalar::one(f);
      result.push_back(std::move(e));
    }
  } else {
    for (auto& lambda : nullspace(system)) {
      Vec v = vec_zero(n, f);
      for (std::size_t t = 0; t < q; ++t) v[comp[t]] = lambda[t];
      result.push_back(std::move(v));
    }
  }
  return row_basis(std::move(result), n, f);
}

std::vector<Vec> transporter(const HCPair& pair, const std::vector<Mat>& l,
                             const std::vector<Vec>& w) {
  const Field& f = pair.group.field;
  std::size_t n = pair.odd_dim(), me = pair.group.lie_dim();
  std::vector<Vec> lrows;
  for (auto& x : l) lrows.push_back(expand_over_lie(pair.group, x));
  auto ann = annihilator(row_basis(lrows, me, f), me, f);
  std::vector<Vec> system;
  for (auto& wrow : w)
    for (auto& a : ann) {
      Vec row = vec_zero(n, f);
      for (std::size_t j = 0; j < n; ++j) {
        Scalar v = Scalar::zero(f);
        for (std::size_t k = 0; k < n; ++k) {
          if (wrow[k].is_zero()) continue;
          for (std::size_t t = 0; t < me; ++t)
            v += wrow[k] * pair.odd_bracket[j][k][t] * a[t];
        }
        row[j] = v;
      }
      bool zero = true;
      for (auto& x : row)
        if (!x.is_zero()) zero = false;
      if (!zero) system.push_back(std::move(row));
    }
  if (system.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = vec_zero(n, f);
      e[i] = Scalar::one(f);
      all.push_back(std::move(e));
    }
    return all;
  }
  return nullspace(system);
}

namespace {

std::vector<Vec> lie_cutout(const HCPair& pair, const SubPair& sub,
                            bool centralize) {
  const MatrixGroup& g = pair.group;
  const Field& f = g.field;
  std::size_t me = g.lie_dim(), n = pair.odd_dim();
  std::vector<Vec> lh_rows;
  for (auto& x : sub.lie_h) lh_rows.push_back(expand_over_lie(g, x));
  auto lie_ann = centralize
                     ? annihilator({}, me, f)  // conditions [x, Y] = 0
                     : annihilator(row_basis(lh_rows, me, f), me, f);
  auto w_ann = centralize ? annihilator({}, n, f)
                          : annihilator(row_basis(sub.w_basis, n, f), n, f);

  std::vector<Vec> system;
  // [x, Lie(H)] constraints
  for (auto& y : sub.lie_h) {
    for (auto& a : lie_ann) {
      Vec row = vec_zero(me, f);
      for (std::size_t s = 0; s < me; ++s) {
        Vec comm = expand_over_lie(g, matrix_commutator(g.lie_basis[s], y));
        Scalar v = Scalar::zero(f);
        for (std::size_t t = 0; t < me; ++t) v += comm[t] * a[t];
        row[s] = v;
      }
      bool zero = true;
      for (auto& x : row)
        if (!x.is_zero()) zero = false;
      if (!zero) system.push_back(std::move(row));
    }
  }
  // W <| x constraints
  for (auto& wrow : sub.w_basis) {
    for (auto& a : w_ann) {
      Vec row = vec_zero(me, f);
      for (std::size_t s = 0; s < me; ++s) {
        // (w <| x_s) paired against the annihilator row
        Scalar v = Scalar::zero(f);
        for (std::size_t j = 0; j < n; ++j) {
          if (wrow[j].is_zero()) continue;
          Vec tri = pair.triangle_basis(j, g.lie_basis[s]);
          for (std::size_t k = 0; k < n; ++k)
            v += wrow[j] * tri[k] * a[k];
        }
        row[s] = v;
      }
      bool zero = true;
      for (auto& x : row)
        if (!x.is_zero()) zero = false;
      if (!zero) system.push_back(std::move(row));
    }
  }
  if (system.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < me; ++i) {
      Vec e = vec_zero(me, f);
      e[i] = Scalar::one(f);
      all.push_back(std::move(e));
    }
    return all;
  }
  return nullspace(system);
}

}  // namespace

TheoremOutput normalizer_pair(const HCPair& pair, const SubPair& sub) {
  TheoremOutput out;
  auto inv = inv_submodule(pair, sub, sub.w_basis);
  auto trans = transporter(pair, sub.lie_h, sub.w_basis);
  out.odd_part = span_intersection(inv, trans, pair.odd_dim(),
                                   pair.group.field);
  out.lie_part = lie_cutout(pair, sub, false);
  return out;
}

TheoremOutput centralizer_pair(const HCPair& pair, const SubPair& sub) {
  TheoremOutput out;
  auto inv = inv_submodule(pair, sub, {});
  auto trans = transporter(pair, {}, sub.w_basis);
  out.odd_part = span_intersection(inv, trans, pair.odd_dim(),
                                   pair.group.field);
  out.lie_part = lie_cutout(pair, sub, true);
  return out;
}

TheoremOutput center_pair(const HCPair& pair) {
  return centralizer_pair(pair, pair.whole_subpair());
}

bool subgroup_point_member(const HCPair& pair, const SubPair& sub,
                           const GroupPoint& p) {
  if (!point_membership(p).ok()) return false;
  std::vector<GrassmannElement> coords = p.entries;
  coords.push_back(p.dval);
  for (auto& eq : sub.extra_equations)
    if (!eq.eval_grassmann(coords, p.alg).is_zero()) return false;
  if (!sub.point_list.empty()) {
    // finite subgroup: the point must equal one of the listed points
    for (auto& m : sub.point_list)
      if (point_from_matrix(pair.group, p.alg, m) == p) return true;
    return false;
  }
  return true;
}

bool normalizer_member(const HCPair& pair, const SubPair& sub,
                       const GroupPoint& g, std::mt19937_64& rng) {
  GroupPoint ginv = point_inverse(g);
  auto samples = subgroup_samples(pair, sub, g.alg, rng, 4);
  for (auto& h : samples) {
    if (!subgroup_point_member(pair, sub, point_mul(point_mul(ginv, h), g)))
      return false;
    if (!subgroup_point_member(pair, sub, point_mul(point_mul(g, h), ginv)))
      return false;
  }
  // the rho-action of g maps W into W
  std::size_t n = pair.odd_dim();
  auto ann = annihilator(row_basis(sub.w_basis, n, pair.group.field), n,
                         pair.group.field);
  for (auto& w : sub.w_basis) {
    std::vector<GrassmannElement> image(n, GrassmannElement::zero(g.alg));
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        image[k] += point_eval(g, pair.rho[j][k]).scale(w[j]);
    }
    for (auto& a : ann) {
      GrassmannElement dot(g.alg);
      for (std::size_t k = 0; k < n; ++k) dot += image[k].scale(a[k]);
      if (!dot.is_zero()) return false;
    }
  }
  return true;
}

bool centralizer_member(const HCPair& pair, const SubPair& sub,
                        const GroupPoint& g, std::mt19937_64& rng) {
  auto samples = subgroup_samples(pair, sub, g.alg, rng, 4);
  for (auto& h : samples)
    if (!(point_mul(g, h) == point_mul(h, g))) return false;
  // g acts as the identity on W
  std::size_t n = pair.odd_dim();
  for (auto& w : sub.w_basis) {
    for (std::size_t k = 0; k < n; ++k) {
      GrassmannElement image(g.alg);
      for (std::size_t j = 0; j < n; ++j)
        if (!w[j].is_zero())
          image += point_eval(g, pair.rho[j][k]).scale(w[j]);
      GrassmannElement expect =
          GrassmannElement::constant(g.alg, w[k]);
      if (!(image == expect)) return false;
    }
  }
  return true;
}

HCPair hcp_transform(const HCPair& pair, PairTransform kind) {
  HCPair r = pair;
  // both transforms negate the symmetric bracket at the pair level: the
  // sigma deformation touches only odd-odd brackets and the 2-operation
  (void)kind;
  for (auto& row : r.odd_bracket)
    for (auto& v : row)
      for (auto& x : v) x = -x;
  return r;
}

}  // namespace hcpair
